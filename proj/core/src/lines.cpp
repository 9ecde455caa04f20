#include "enumseq/lines.hpp"

#include <set>
#include <stdexcept>

#include "enumseq/arith.hpp"
#include "enumseq/poly.hpp"

namespace enumseq {

namespace {

void require_nonnegative(long n) {
    if (n < 0) throw std::invalid_argument("v_n: negative index");
}

// Shared dispatch for the v_0 = -1, v_1 = 1 conventions.
bool convention_value(long n, Integer& out) {
    require_nonnegative(n);
    if (n == 0) {
        out = -1;
        return true;
    }
    if (n == 1) {
        out = 1;
        return true;
    }
    return false;
}

// prod_{j=0}^{D} (D-j + j*x) with coefficients of degree >= keep_below dropped.
IntPoly hypersurface_product(long d, long keep_below) {
    IntPoly p = IntPoly::constant(Integer(1));
    for (long j = 0; j <= d; ++j) {
        p.mul_linear(Integer(d - j), Integer(j), keep_below);
    }
    return p;
}

}  // namespace

std::string to_string(VnMethod method) {
    switch (method) {
        case VnMethod::defn: return "defn";
        case VnMethod::equivariant: return "equivariant";
        case VnMethod::residue: return "residue";
        case VnMethod::stirling: return "stirling";
        case VnMethod::dominici: return "dominici";
        case VnMethod::alternate: return "alternate";
    }
    throw std::logic_error("unknown VnMethod");
}

std::optional<VnMethod> parse_vn_method(const std::string& name) {
    for (VnMethod m : all_vn_methods()) {
        if (to_string(m) == name) return m;
    }
    return std::nullopt;
}

std::vector<VnMethod> all_vn_methods() {
    return {VnMethod::defn,     VnMethod::equivariant, VnMethod::residue,
            VnMethod::stirling, VnMethod::dominici,    VnMethod::alternate};
}

WeightVector default_weights(long n) {
    WeightVector w;
    for (long i = 0; i <= n; ++i) w.weights.emplace_back(i);
    return w;
}

WeightVector random_weights(long n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> draw(-(3 * n + 3), 3 * n + 3);
    std::set<long> seen;
    while (seen.size() < static_cast<std::size_t>(n + 1)) {
        seen.insert(draw(rng));
    }
    WeightVector w;
    for (long value : seen) w.weights.emplace_back(value);
    return w;
}

Integer v_defn(long n) {
    Integer conv;
    if (convention_value(n, conv)) return conv;
    IntPoly p = hypersurface_product(2 * n - 3, n);
    Integer low = n >= 2 ? p.coeff(static_cast<std::size_t>(n - 2)) : Integer(0);
    return p.coeff(static_cast<std::size_t>(n - 1)) - low;
}

Integer v_alternate(long n) {
    Integer conv;
    if (convention_value(n, conv)) return conv;
    IntPoly p = hypersurface_product(2 * n - 3, n + 1);
    return p.coeff(static_cast<std::size_t>(n - 1)) - p.coeff(static_cast<std::size_t>(n));
}

Rational v_equivariant(long n, const WeightVector& w) {
    Integer conv;
    if (convention_value(n, conv)) return rat(conv);
    const auto& ws = w.weights;
    if (ws.size() != static_cast<std::size_t>(n + 1)) {
        throw std::invalid_argument("v_equivariant: need n+1 weights");
    }
    for (std::size_t i = 0; i < ws.size(); ++i) {
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
            if (ws[i] == ws[j]) throw std::invalid_argument("v_equivariant: coincident weights");
        }
    }
    const long d = 2 * n - 3;
    Rational total(0);
    for (std::size_t i = 0; i < ws.size(); ++i) {
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
            Rational numer(1);
            for (long a = 0; a <= d; ++a) {
                numer *= a * ws[i] + (d - a) * ws[j];
                if (numer == 0) break;
            }
            if (numer == 0) continue;
            Rational denom(1);
            for (std::size_t k = 0; k < ws.size(); ++k) {
                if (k == i || k == j) continue;
                denom *= (ws[i] - ws[k]) * (ws[j] - ws[k]);
            }
            total += numer / denom;
        }
    }
    return total;
}

Integer v_residue(long n) {
    Integer conv;
    if (convention_value(n, conv)) return conv;
    const long d = 2 * n - 3;
    IntPoly p = IntPoly::constant(Integer(1));
    for (long i = 1; i < d; ++i) {
        p.mul_linear(Integer(i), Integer(-d), n);
    }
    Integer sum(0);
    for (long t = 0; t <= n - 1; ++t) {
        sum += p.coeff(static_cast<std::size_t>(n - 1 - t)) *
               binomial(static_cast<unsigned long>(n - 2 + t), static_cast<unsigned long>(t));
    }
    Integer result = sum * Integer(d) * Integer(d);
    return n % 2 == 0 ? result : -result;
}

Integer v_stirling(long n) {
    Integer conv;
    if (convention_value(n, conv)) return conv;
    const long d = 2 * n - 3;
    IntPoly rising = IntPoly::constant(Integer(1));
    rising.mul_linear(Integer(0), Integer(1), n);
    for (long i = 1; i < d; ++i) {
        rising.mul_linear(Integer(i), Integer(1), n);
    }
    Integer sum(0);
    for (long m = 0; m <= n - 1; ++m) {
        Integer term = binomial(static_cast<unsigned long>(2 * n - 2 - m),
                                static_cast<unsigned long>(n - 1)) *
                       int_pow(Integer(d), static_cast<unsigned long>(m + 1)) *
                       rising.coeff(static_cast<std::size_t>(m));
        sum += (n - 1 - m) % 2 == 0 ? term : -term;
    }
    return sum;
}

Integer v_dominici(long n) {
    Integer conv;
    if (convention_value(n, conv)) return conv;
    if (n == 2) return v_defn(2);
    const long d = 2 * n - 3;
    std::vector<Rational> y;
    for (long i = 1; i <= 2 * n - 4; ++i) {
        y.push_back(rat(Integer(i), Integer(d - i)));
    }
    auto s = elementary_symmetric(y, static_cast<std::size_t>(n - 1));
    Rational value = rat(Integer(d) * Integer(d) * factorial(static_cast<unsigned long>(2 * n - 4))) *
                     (s[static_cast<std::size_t>(n - 2)] - s[static_cast<std::size_t>(n - 1)]);
    return to_integer_exact(value);
}

Integer v_by_method(long n, VnMethod method) {
    switch (method) {
        case VnMethod::defn: return v_defn(n);
        case VnMethod::equivariant: return to_integer_exact(v_equivariant(n, default_weights(n)));
        case VnMethod::residue: return v_residue(n);
        case VnMethod::stirling: return v_stirling(n);
        case VnMethod::dominici: return v_dominici(n);
        case VnMethod::alternate: return v_alternate(n);
    }
    throw std::logic_error("unknown VnMethod");
}

LocalizationReport localization_identity_check(const std::vector<std::vector<Rational>>& g,
                                               const std::vector<Rational>& roots) {
    if (roots.empty()) throw std::invalid_argument("localization: need at least one root");
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (roots[i] == roots[j]) {
                throw std::invalid_argument("localization: repeated roots");
            }
        }
    }
    const std::size_t n = roots.size() - 1;

    std::vector<Rational> deriv(roots.size(), Rational(1));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j != i) deriv[i] *= roots[i] - roots[j];
        }
    }

    auto eval = [&](const Rational& x, const Rational& yv) {
        Rational acc(0);
        for (std::size_t i = g.size(); i-- > 0;) {
            Rational row(0);
            for (std::size_t j = g[i].size(); j-- > 0;) {
                row = row * yv + g[i][j];
            }
            acc = acc * x + row;
        }
        return acc;
    };

    LocalizationReport report;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = 0; j < roots.size(); ++j) {
            report.sum += eval(roots[i], roots[j]) / (deriv[i] * deriv[j]);
        }
    }
    if (n < g.size() && n < g[n].size()) {
        report.diagonal_coefficient = g[n][n];
    }
    report.pass = report.sum == report.diagonal_coefficient;
    return report;
}

std::vector<VnRecord> v_range(long from, long to, VnMethod method) {
    if (from < 0 || from > to) throw std::invalid_argument("v_range: bad index range");
    std::vector<VnRecord> out;
    out.reserve(static_cast<std::size_t>(to - from + 1));
    for (long n = from; n <= to; ++n) {
        out.push_back({n, v_by_method(n, method), method});
    }
    return out;
}

std::vector<VnRecord> v_range_all_methods(long from, long to) {
    if (from < 0 || from > to) throw std::invalid_argument("v_range: bad index range");
    std::vector<VnRecord> out;
    for (long n = from; n <= to; ++n) {
        for (VnMethod m : all_vn_methods()) {
            out.push_back({n, v_by_method(n, m), m});
        }
    }
    return out;
}

}  // namespace enumseq
