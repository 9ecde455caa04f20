#pragma once

#include <vector>

#include "enumseq/integer.hpp"

namespace enumseq {

// Formal power series over the rationals, truncated at a fixed order N:
// coefficients for exponents 0..N are stored, everything beyond is dropped.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    static TruncatedSeries from_coefficients(int order, std::vector<Rational> coeffs);

    int order() const { return order_; }
    const Rational& coeff(int i) const;
    void set_coeff(int i, Rational c);
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s);

private:
    int order_;
    std::vector<Rational> coeffs_;
};

// Product truncated to the smaller operand order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse; requires a nonzero constant term.
TruncatedSeries series_inverse(const TruncatedSeries& s);

// exp(s) via the recurrence n*e_n = sum_j j*s_j*e_{n-j}; requires s(0) = 0.
TruncatedSeries series_exp(const TruncatedSeries& s);

// log(s) for s with constant term 1.
TruncatedSeries series_log(const TruncatedSeries& s);

// Coefficient-shift helpers: multiply or divide by x.
TruncatedSeries series_shift_up(const TruncatedSeries& s);

// s'(x), same truncation order (top coefficient becomes meaningless and is
// zeroed).
TruncatedSeries series_derivative(const TruncatedSeries& s);

// outer(inner) where inner has zero constant term.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// Compositional inverse t of s, s(t(q)) = q + O(q^{N+1}); requires
// s = c1*x + O(x^2) with c1 != 0. Newton iteration doubling the valid order.
TruncatedSeries series_reversion(const TruncatedSeries& s);

}  // namespace enumseq
