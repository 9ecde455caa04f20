#include "enumseq/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace enumseq {

namespace {

Rational pow10_rational(long exponent) {
    Integer p = int_pow(Integer(10), exponent >= 0 ? static_cast<unsigned long>(exponent)
                                                   : static_cast<unsigned long>(-exponent));
    return exponent >= 0 ? rat(p) : rat(Integer(1), p);
}

void append_term(std::string& out, const Rational& coeff, const char* basis) {
    if (coeff == 0) {
        return;
    }
    Rational c = coeff;
    if (out.empty()) {
        if (c < 0) {
            out += "-";
            c = -c;
        }
    } else {
        out += c < 0 ? " - " : " + ";
        if (c < 0) {
            c = -c;
        }
    }
    if (basis == nullptr) {
        out += to_string(c);
        return;
    }
    if (c != 1) {
        out += to_string(c);
        out += "*";
    }
    out += basis;
}

}  // namespace

BigDecimal SymbolicConstant::evaluate(int precision) const {
    const int w = precision + 5;
    BigDecimal acc = BigDecimal::from_rational(unit, w);
    if (log2 != 0) {
        acc = acc + BigDecimal::from_rational(log2, w) * decimal_ln2(w);
    }
    if (log3 != 0) {
        acc = acc + BigDecimal::from_rational(log3, w) * decimal_ln3(w);
    }
    if (logpi != 0) {
        acc = acc + BigDecimal::from_rational(logpi, w) * decimal_lnpi(w);
    }
    return acc.with_precision(precision);
}

std::string SymbolicConstant::to_string() const {
    std::string out;
    append_term(out, unit, nullptr);
    append_term(out, log2, "log(2)");
    append_term(out, log3, "log(3)");
    append_term(out, logpi, "log(pi)");
    return out.empty() ? "0" : out;
}

std::optional<Rational> recognize_rational(const BigDecimal& x, const Integer& max_denominator) {
    if (max_denominator < 1) {
        return std::nullopt;
    }
    const Rational target = x.to_rational();
    if (Integer(target.get_den()) <= max_denominator) {
        return target;
    }
    const Rational tolerance = pow10_rational(-(x.precision() - 5));

    Integer num = target.get_num();
    Integer den = target.get_den();
    Integer p_prev = 1, p_prev2 = 0;
    Integer q_prev = 0, q_prev2 = 1;
    Rational best;
    bool have = false;
    Integer a, r;
    while (den != 0) {
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Integer p = a * p_prev + p_prev2;
        Integer q = a * q_prev + q_prev2;
        if (q > max_denominator) {
            break;
        }
        best = rat(p, q);
        have = true;
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
        num = den;
        den = r;
    }
    if (!have) {
        return std::nullopt;
    }
    Rational err = abs(best - target);
    if (err < tolerance) {
        return best;
    }
    return std::nullopt;
}

namespace {

// Quick double-precision screen: is v within `slack` of some fraction with
// denominator <= max_den? Runs a short continued fraction on the double.
bool near_small_fraction(double v, long max_den, double slack) {
    double rem = v;
    double p_prev = 1.0, p_prev2 = 0.0;
    double q_prev = 0.0, q_prev2 = 1.0;
    for (int step = 0; step < 30; ++step) {
        double a = std::floor(rem);
        double p = a * p_prev + p_prev2;
        double q = a * q_prev + q_prev2;
        if (q > static_cast<double>(max_den)) {
            return false;
        }
        if (std::abs(v - p / q) < slack) {
            return true;
        }
        double frac = rem - a;
        if (frac < 1e-13) {
            return false;
        }
        rem = 1.0 / frac;
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
    }
    return false;
}

}  // namespace

std::optional<SymbolicConstant> recognize_symbolic(const BigDecimal& x,
                                                   long max_coeff_denominator) {
    constexpr long kMaxNumerator = 16;
    constexpr long kMaxLogDenominator = 16;
    constexpr long kMaxUnitDenominator = 10000;

    const int precision = x.precision();
    const Rational tolerance = pow10_rational(-(precision - 8));
    const BigDecimal ln2 = decimal_ln2(precision);
    const BigDecimal ln3 = decimal_ln3(precision);
    const BigDecimal lnpi = decimal_lnpi(precision);
    const double xd = x.to_double();
    const double l2d = ln2.to_double();
    const double l3d = ln3.to_double();
    const double lpd = lnpi.to_double();

    // Log-coefficient candidates n/q in lowest terms. The exhaustive search is
    // cubic in the candidate count, so the denominators are capped low; the
    // unit part is free to have denominators up to 10^4 via recognize_rational.
    const long den_bound = std::min(std::max(max_coeff_denominator, 1L), kMaxLogDenominator);
    std::vector<std::pair<Rational, double>> coeffs;
    for (long q = 1; q <= den_bound; ++q) {
        for (long n = -kMaxNumerator; n <= kMaxNumerator; ++n) {
            if (q > 1 && (n == 0 || std::gcd(std::abs(n), q) != 1)) {
                continue;
            }
            coeffs.emplace_back(rat(Integer(n), Integer(q)),
                                static_cast<double>(n) / static_cast<double>(q));
        }
    }
    std::vector<double> c_lpi(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c_lpi[i] = coeffs[i].second * lpd;

    struct Hit {
        Integer height;
        SymbolicConstant value;
    };
    std::optional<Hit> best;
    auto height_of = [](const SymbolicConstant& s) {
        Integer h = 0;
        for (const Rational* part : {&s.unit, &s.log2, &s.log3, &s.logpi}) {
            h += abs(Integer(part->get_num())) + Integer(part->get_den());
        }
        return h;
    };

    for (const auto& [a, ad] : coeffs) {
        const double after_a = xd - ad * l2d;
        for (const auto& [b, bd] : coeffs) {
            const double partial = after_a - bd * l3d;
            for (std::size_t ci = 0; ci < coeffs.size(); ++ci) {
                const double rem_d = partial - c_lpi[ci];
                if (!near_small_fraction(rem_d, kMaxUnitDenominator, 1e-12)) {
                    continue;
                }
                const Rational& c = coeffs[ci].first;
                BigDecimal rem = x;
                if (a != 0) rem = rem - BigDecimal::from_rational(a, precision) * ln2;
                if (b != 0) rem = rem - BigDecimal::from_rational(b, precision) * ln3;
                if (c != 0) rem = rem - BigDecimal::from_rational(c, precision) * lnpi;
                auto unit = recognize_rational(rem, Integer(kMaxUnitDenominator));
                if (!unit) {
                    continue;
                }
                SymbolicConstant candidate{*unit, a, b, c};
                Rational err = abs(candidate.evaluate(precision + 10).to_rational() -
                                   x.to_rational());
                if (err >= tolerance) {
                    continue;
                }
                Hit hit{height_of(candidate), candidate};
                if (!best || hit.height < best->height) {
                    best = hit;
                }
            }
        }
    }
    if (!best) {
        return std::nullopt;
    }
    return best->value;
}

}  // namespace enumseq
