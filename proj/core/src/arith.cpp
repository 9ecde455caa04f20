#include "enumseq/arith.hpp"

#include <mutex>
#include <stdexcept>

namespace enumseq {

namespace {

// Full-range Faulhaber polynomial F_m with F_m(N) = sum_{r=1}^N r^m,
// obtained from (B_{m+1}(x+1) - B_{m+1}(1)) / (m+1).
RatPoly faulhaber_full(unsigned long m) {
    unsigned long mp = m + 1;
    std::vector<Rational> poly(mp + 1, Rational(0));
    for (unsigned long j = 0; j <= mp; ++j) {
        Rational cj = rat(binomial(mp, j)) * bernoulli(j);
        // cj * (x+1)^(mp-j)
        for (unsigned long t = 0; t <= mp - j; ++t)
            poly[t] += cj * rat(binomial(mp - j, t));
    }
    poly[0] = 0;  // drop B_{m+1}(1), the value at x = 0
    for (auto& c : poly) c /= rat(static_cast<long>(mp));
    return RatPoly::from_coefficients(std::move(poly));
}

// Substitute x -> (x-1)/2 into p.
RatPoly compose_half_shift(const RatPoly& p) {
    std::vector<Rational> out(p.coefficients().size(), Rational(0));
    for (std::size_t t = 0; t < p.coefficients().size(); ++t) {
        const Rational& c = p.coefficients()[t];
        if (c == 0) continue;
        Rational scale = c / rat(int_pow(2, static_cast<unsigned long>(t)));
        for (std::size_t i = 0; i <= t; ++i) {
            Rational term = scale * rat(binomial(t, i));
            if ((t - i) % 2 == 1) term = -term;
            out[i] += term;
        }
    }
    return RatPoly::from_coefficients(std::move(out));
}

}  // namespace

Rational bernoulli(unsigned long m) {
    static std::vector<Rational> cache = {Rational(1)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= m) {
        unsigned long n = cache.size();
        Rational s(0);
        for (unsigned long j = 0; j < n; ++j)
            s += rat(binomial(n + 1, j)) * cache[j];
        cache.push_back(-s / rat(static_cast<long>(n + 1)));
    }
    return cache[m];
}

RatPoly faulhaber_odd_sum(unsigned long m) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("faulhaber_odd_sum: exponent must be even and >= 2");
    // Sum over odd r in 1..D equals the full sum minus 2^m times the sum to (D-1)/2.
    RatPoly full = faulhaber_full(m);
    RatPoly half = compose_half_shift(full);
    std::vector<Rational> out;
    out.reserve(full.coefficients().size());
    Rational two_m = rat(int_pow(2, m));
    for (std::size_t i = 0; i < full.coefficients().size(); ++i)
        out.push_back(full.coeff(i) - two_m * half.coeff(i));
    return RatPoly::from_coefficients(std::move(out));
}

std::vector<Rational> elementary_symmetric(const std::vector<Rational>& values,
                                           std::size_t up_to) {
    if (up_to > values.size())
        throw std::invalid_argument("elementary_symmetric: order exceeds value count");
    std::vector<Rational> s(up_to + 1, Rational(0));
    s[0] = 1;
    for (const Rational& y : values) {
        for (std::size_t t = std::min(up_to, s.size() - 1); t >= 1; --t)
            s[t] += y * s[t - 1];
    }
    return s;
}

}  // namespace enumseq
