#include "enumseq/series.hpp"

#include <stdexcept>

namespace enumseq {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::from_coefficients(int order, std::vector<Rational> coeffs) {
    TruncatedSeries s(order);
    if (coeffs.size() > s.coeffs_.size())
        throw std::invalid_argument("TruncatedSeries: more coefficients than order allows");
    for (std::size_t i = 0; i < coeffs.size(); ++i) s.coeffs_[i] = std::move(coeffs[i]);
    return s;
}

const Rational& TruncatedSeries::coeff(int i) const {
    if (i < 0 || i > order_) throw std::out_of_range("TruncatedSeries: coefficient index");
    return coeffs_[static_cast<std::size_t>(i)];
}

void TruncatedSeries::set_coeff(int i, Rational c) {
    if (i < 0 || i > order_) throw std::out_of_range("TruncatedSeries: coefficient index");
    coeffs_[static_cast<std::size_t>(i)] = std::move(c);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order_, b.order_);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order_, b.order_);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
    TruncatedSeries r(s.order_);
    for (int i = 0; i <= s.order_; ++i) r.coeffs_[i] = c * s.coeffs_[i];
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j) == 0) continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
    if (s.coeff(0) == 0) throw std::domain_error("series_inverse: zero constant term");
    int n = s.order();
    TruncatedSeries r(n);
    Rational c0 = s.coeff(0);
    r.set_coeff(0, rat(1) / c0);
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int j = 1; j <= m; ++j) acc += s.coeff(j) * r.coeff(m - j);
        r.set_coeff(m, -acc / c0);
    }
    return r;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (s.coeff(0) != 0) throw std::domain_error("series_exp: nonzero constant term");
    int n = s.order();
    TruncatedSeries e(n);
    e.set_coeff(0, Rational(1));
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int j = 1; j <= m; ++j) acc += rat(j) * s.coeff(j) * e.coeff(m - j);
        e.set_coeff(m, acc / rat(m));
    }
    return e;
}

TruncatedSeries series_log(const TruncatedSeries& s) {
    if (s.coeff(0) != 1) throw std::domain_error("series_log: constant term must be 1");
    int n = s.order();
    TruncatedSeries l(n);
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int j = 1; j < m; ++j) acc += rat(j) * l.coeff(j) * s.coeff(m - j);
        l.set_coeff(m, s.coeff(m) - acc / rat(m));
    }
    return l;
}

TruncatedSeries series_shift_up(const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    for (int i = 1; i <= s.order(); ++i) r.set_coeff(i, s.coeff(i - 1));
    return r;
}

TruncatedSeries series_derivative(const TruncatedSeries& s) {
    TruncatedSeries r(s.order());
    for (int i = 1; i <= s.order(); ++i) r.set_coeff(i - 1, rat(i) * s.coeff(i));
    return r;
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (inner.coeff(0) != 0) throw std::domain_error("series_compose: inner constant term must be 0");
    int n = std::min(outer.order(), inner.order());
    TruncatedSeries inner_n(n);
    for (int j = 0; j <= n; ++j) inner_n.set_coeff(j, inner.coeff(j));
    // Horner evaluation over truncated series.
    TruncatedSeries acc(n);
    for (int i = n; i >= 0; --i) {
        acc = series_mul(acc, inner_n);
        acc.set_coeff(0, acc.coeff(0) + outer.coeff(i));
    }
    return acc;
}

TruncatedSeries series_reversion(const TruncatedSeries& s) {
    if (s.order() < 1 || s.coeff(0) != 0 || s.coeff(1) == 0)
        throw std::domain_error("series_reversion: need s = c1*x + O(x^2), c1 != 0");
    int n = s.order();
    // Newton: given t valid to order m (s(t(q)) = q + O(q^{m+1})), the update
    // t <- t - (s(t) - q) / s'(t) is valid to order 2m.
    TruncatedSeries t(n);
    t.set_coeff(1, rat(1) / s.coeff(1));
    int valid = 1;
    TruncatedSeries sp = series_derivative(s);
    while (valid < n) {
        TruncatedSeries err = series_compose(s, t);
        err.set_coeff(1, err.coeff(1) - 1);
        TruncatedSeries denom = series_compose(sp, t);
        TruncatedSeries delta = series_mul(err, series_inverse(denom));
        t = t - delta;
        valid = std::min(n, 2 * valid);
    }
    return t;
}

}  // namespace enumseq
