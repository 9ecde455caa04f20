#include "enumseq/derivation.hpp"

#include <stdexcept>

#include "enumseq/arith.hpp"
#include "enumseq/series.hpp"

namespace enumseq {

std::vector<LaurentSeries> log_phi_expansion(long j_max, long laurent_depth) {
    if (j_max < 1 || laurent_depth < 1) {
        throw std::invalid_argument("log_phi_expansion: need j_max, laurent_depth >= 1");
    }
    std::vector<LaurentSeries> out(static_cast<std::size_t>(j_max) + 1);
    for (long j = 1; j <= j_max; ++j) {
        const Rational factor =
            rat(j % 2 == 1 ? 1 : -1) / rat(j);
        LaurentSeries& series = out[static_cast<std::size_t>(j)];
        RatPoly odd_sum = faulhaber_odd_sum(static_cast<unsigned long>(2 * j));
        for (long i = 0; i <= odd_sum.degree(); ++i) {
            Rational c = factor * odd_sum.coeff(static_cast<std::size_t>(i));
            if (c != 0) series[i - 2 * j] += c;
        }
        series[1] -= factor / 2;
        series[0] -= factor / 2;
        for (auto it = series.begin(); it != series.end();) {
            if (it->second == 0 || it->first < -laurent_depth) {
                it = series.erase(it);
            } else {
                ++it;
            }
        }
    }
    return out;
}

namespace {

// Polynomials in x^2 attached to powers of D^{-1}: element m multiplies D^{-m}.
using InverseDPolySeries = std::vector<RatPoly>;

InverseDPolySeries multiply_truncated(const InverseDPolySeries& a, const InverseDPolySeries& b,
                                      long depth) {
    InverseDPolySeries out(static_cast<std::size_t>(depth) + 1);
    for (long m1 = 0; m1 <= depth; ++m1) {
        if (a[static_cast<std::size_t>(m1)].degree() < 0) continue;
        for (long m2 = 0; m1 + m2 <= depth; ++m2) {
            if (b[static_cast<std::size_t>(m2)].degree() < 0) continue;
            out[static_cast<std::size_t>(m1 + m2)] =
                out[static_cast<std::size_t>(m1 + m2)] +
                poly_mul(a[static_cast<std::size_t>(m1)], b[static_cast<std::size_t>(m2)]);
        }
    }
    return out;
}

}  // namespace

std::vector<GaussWeightedPoly> integrand_expansion(long depth) {
    if (depth < 0) throw std::invalid_argument("integrand_expansion: need depth >= 0");
    const long j_max = depth + 1;
    auto log_phi = log_phi_expansion(j_max, depth + 2);

    // Residual exponent L(x, D): the t^{2j} coefficients with t = x/sqrt(D),
    // minus the -x^2/3 that is carried as the Gaussian weight. Each term
    // lands at D^{-(j - laurent_exponent)}.
    InverseDPolySeries exponent(static_cast<std::size_t>(depth) + 1);
    for (long j = 1; j <= j_max; ++j) {
        for (const auto& [e, c] : log_phi[static_cast<std::size_t>(j)]) {
            if (j == 1 && e == 1) continue;
            long m = j - e;
            if (m < 0 || m > depth) continue;
            std::vector<Rational> mono(static_cast<std::size_t>(j) + 1, Rational(0));
            mono[static_cast<std::size_t>(j)] = c;
            exponent[static_cast<std::size_t>(m)] =
                exponent[static_cast<std::size_t>(m)] + RatPoly::from_coefficients(std::move(mono));
        }
    }

    // exp(L) as sum of L^i / i!; L starts at D^{-1}, so i <= depth suffices.
    InverseDPolySeries total(static_cast<std::size_t>(depth) + 1);
    InverseDPolySeries power(static_cast<std::size_t>(depth) + 1);
    power[0] = RatPoly::constant(Rational(1));
    total[0] = RatPoly::constant(Rational(1));
    for (long i = 1; i <= depth; ++i) {
        power = multiply_truncated(power, exponent, depth);
        for (long m = 0; m <= depth; ++m) {
            RatPoly scaled = power[static_cast<std::size_t>(m)];
            if (scaled.degree() < 0) continue;
            std::vector<Rational> cs = scaled.coefficients();
            Rational inv_fact = rat(Integer(1), factorial(static_cast<unsigned long>(i)));
            for (Rational& c : cs) c *= inv_fact;
            total[static_cast<std::size_t>(m)] =
                total[static_cast<std::size_t>(m)] + RatPoly::from_coefficients(std::move(cs));
        }
    }

    // x^2 (1 + x^2/D)^{-2} = sum_m (-1)^m (m+1) x^{2(m+1)} D^{-m}.
    InverseDPolySeries prefactor(static_cast<std::size_t>(depth) + 1);
    for (long m = 0; m <= depth; ++m) {
        std::vector<Rational> mono(static_cast<std::size_t>(m) + 2, Rational(0));
        mono[static_cast<std::size_t>(m) + 1] = rat(m % 2 == 0 ? m + 1 : -(m + 1));
        prefactor[static_cast<std::size_t>(m)] = RatPoly::from_coefficients(std::move(mono));
    }

    InverseDPolySeries product = multiply_truncated(prefactor, total, depth);
    std::vector<GaussWeightedPoly> out;
    out.reserve(static_cast<std::size_t>(depth) + 1);
    for (long m = 0; m <= depth; ++m) {
        out.push_back({product[static_cast<std::size_t>(m)]});
    }
    return out;
}

Rational gaussian_moment(unsigned long m) {
    return rat(factorial(2 * m), factorial(m)) * rat(int_pow(Integer(3), m), int_pow(Integer(4), m));
}

InverseDSeries vn_asymptotic_D(long depth) {
    auto integrand = integrand_expansion(depth);
    std::vector<Rational> integrals;
    integrals.reserve(integrand.size());
    for (const auto& gp : integrand) {
        Rational total(0);
        for (long g = 0; g <= gp.even_part.degree(); ++g) {
            total += gp.even_part.coeff(static_cast<std::size_t>(g)) *
                     gaussian_moment(static_cast<unsigned long>(g));
        }
        integrals.push_back(total);
    }
    // Leading integral is the x^2 moment 3/2; the bracket is normalized by it
    // so a_0 = 1, and 3/2 joins the prefactor cancellation into sqrt(27/pi).
    if (integrals.empty() || integrals[0] != rat(3, 2)) {
        throw std::logic_error("vn_asymptotic_D: leading Gaussian integral must be 3/2");
    }
    InverseDSeries out;
    out.coefficients.reserve(integrals.size());
    for (const Rational& value : integrals) {
        out.coefficients.push_back(value / integrals[0]);
    }
    return out;
}

std::vector<Rational> convert_D_to_n(const InverseDSeries& series, long depth) {
    // D^{-j} = (2n)^{-j} (1 - 3/(2n))^{-j}
    //        = sum_{i>=0} C(j+i-1, i) (1/2)^j (3/2)^i n^{-(j+i)}.
    std::vector<Rational> out(static_cast<std::size_t>(depth) + 1, Rational(0));
    const long j_max = std::min<long>(depth, static_cast<long>(series.coefficients.size()) - 1);
    if (j_max >= 0) out[0] = series.coefficients[0];
    for (long j = 1; j <= j_max; ++j) {
        const Rational& aj = series.coefficients[static_cast<std::size_t>(j)];
        if (aj == 0) continue;
        for (long i = 0; j + i <= depth; ++i) {
            Rational term = aj *
                            rat(binomial(static_cast<unsigned long>(j + i - 1),
                                         static_cast<unsigned long>(i)),
                                int_pow(Integer(2), static_cast<unsigned long>(j))) *
                            rat(int_pow(Integer(3), static_cast<unsigned long>(i)),
                                int_pow(Integer(2), static_cast<unsigned long>(i)));
            out[static_cast<std::size_t>(j + i)] += term;
        }
    }
    return out;
}

std::vector<Rational> convert_to_2n_form(const InverseDSeries& series, long depth) {
    TruncatedSeries bracket = TruncatedSeries::from_coefficients(
        static_cast<int>(depth), convert_D_to_n(series, depth));

    // (2n - 7/2) log(1 - 3/(2n)) = -3 + sum_{s>=1} tau_s n^{-s}; the constant
    // -3 leaves the bracket as the e^{-3} of the target normalization.
    std::vector<Rational> tau(static_cast<std::size_t>(depth) + 1, Rational(0));
    for (long s = 1; s <= depth; ++s) {
        Rational three_halves_s = rat(int_pow(Integer(3), static_cast<unsigned long>(s)),
                                      int_pow(Integer(2), static_cast<unsigned long>(s)));
        tau[static_cast<std::size_t>(s)] =
            rat(-2) * three_halves_s * rat(3, 2) / rat(s + 1) + rat(7, 2) * three_halves_s / rat(s);
    }
    TruncatedSeries correction = series_exp(
        TruncatedSeries::from_coefficients(static_cast<int>(depth), std::move(tau)));
    TruncatedSeries result = series_mul(bracket, correction);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(depth) + 1);
    for (long i = 0; i <= depth; ++i) {
        out.push_back(result.coeff(static_cast<int>(i)));
    }
    return out;
}

LogExpansion log_form(long depth) {
    InverseDSeries d_form = vn_asymptotic_D(depth);
    TruncatedSeries bracket = TruncatedSeries::from_coefficients(
        static_cast<int>(depth), convert_to_2n_form(d_form, depth));
    TruncatedSeries log_bracket = series_log(bracket);

    LogExpansion out;
    out.slope = rat(2);
    out.log_coefficient = rat(-4);

    // Constant pieces: the e^{-3} normalization, log sqrt(27/pi), the
    // -(7/2) log 2 from (2n)^{-7/2}, and -(1/2) log(4 pi) from Stirling.
    SymbolicConstant c;
    c.unit = rat(-3);
    c = c + rat(1, 2) * SymbolicConstant{rat(0), rat(0), rat(3), rat(-1)};
    c = c + rat(-7, 2) * SymbolicConstant{rat(0), rat(1), rat(0), rat(0)};
    c = c + rat(-1, 2) * SymbolicConstant{rat(0), rat(2), rat(0), rat(1)};
    out.constant = c;

    // Stirling tail of log (2n)!: B_{2i} / (2i (2i-1) (2n)^{2i-1}).
    std::vector<Rational> stirling(static_cast<std::size_t>(depth) + 1, Rational(0));
    for (long i = 1; 2 * i - 1 <= depth; ++i) {
        stirling[static_cast<std::size_t>(2 * i - 1)] =
            bernoulli(static_cast<unsigned long>(2 * i)) /
            (rat(2 * i) * rat(2 * i - 1) *
             rat(int_pow(Integer(2), static_cast<unsigned long>(2 * i - 1))));
    }

    out.tail.reserve(static_cast<std::size_t>(depth));
    for (long s = 1; s <= depth; ++s) {
        out.tail.push_back(log_bracket.coeff(static_cast<int>(s)) -
                           stirling[static_cast<std::size_t>(s)]);
    }
    return out;
}

}  // namespace enumseq
