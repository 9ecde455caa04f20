#include "enumseq/decimal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace enumseq {

namespace {

Integer pow10_int(unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

// Exact count of decimal digits of |a|, 1 for zero.
long digit_count(const Integer& a) {
    if (a == 0) return 1;
    Integer m = ::abs(a);
    long d = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 10));
    // sizeinbase may overestimate by one
    if (d > 1 && m < pow10_int(static_cast<unsigned long>(d - 1))) --d;
    return d;
}

// Divide by 10^cut rounding half to even.
Integer shift_round_half_even(const Integer& a, long cut) {
    if (cut <= 0) return a;
    Integer p = pow10_int(static_cast<unsigned long>(cut));
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    Integer r2 = 2 * ::abs(Integer(r));
    int sign = a < 0 ? -1 : 1;
    if (r2 > p || (r2 == p && is_odd(q))) q += sign;
    return q;
}

}  // namespace

BigDecimal BigDecimal::make(Integer mant, long e10, int precision) {
    if (precision < 1) throw std::invalid_argument("BigDecimal: precision must be >= 1");
    BigDecimal d;
    d.mant_ = std::move(mant);
    d.e10_ = e10;
    d.prec_ = precision;
    d.normalize();
    return d;
}

void BigDecimal::normalize() {
    if (mant_ == 0) {
        e10_ = 0;
        return;
    }
    long digits = digit_count(mant_);
    if (digits > prec_) {
        long cut = digits - prec_;
        mant_ = shift_round_half_even(mant_, cut);
        e10_ += cut;
        // rounding may carry into one extra digit (e.g. 999 -> 100)
        if (digit_count(mant_) > prec_) {
            mant_ = shift_round_half_even(mant_, 1);
            e10_ += 1;
        }
    }
    while (mant_ != 0 && mpz_divisible_ui_p(mant_.get_mpz_t(), 10)) {
        mant_ /= 10;
        e10_ += 1;
    }
}

BigDecimal::BigDecimal(long value, int precision) {
    *this = make(Integer(value), 0, precision);
}

BigDecimal BigDecimal::from_integer(const Integer& v, int precision) {
    return make(v, 0, precision);
}

BigDecimal BigDecimal::from_rational(const Rational& v, int precision) {
    if (v == 0) return make(0, 0, precision);
    const Integer num = v.get_num();
    const Integer den = v.get_den();
    long scale = precision + 4 + std::max(0L, digit_count(den) - digit_count(num));
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), Integer(num * pow10_int(static_cast<unsigned long>(scale))).get_mpz_t(),
               den.get_mpz_t());
    return make(std::move(q), -scale, precision);
}

BigDecimal BigDecimal::from_string(const std::string& s, int precision) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    std::string digits;
    long frac = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    long exp = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
        if (i >= s.size()) throw std::invalid_argument("BigDecimal: bad exponent in: " + s);
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') break;
            exp = exp * 10 + (s[i] - '0');
        }
        if (eneg) exp = -exp;
    }
    if (!seen_digit || i != s.size())
        throw std::invalid_argument("BigDecimal: cannot parse: " + s);
    Integer mant = integer_from_string(digits.empty() ? "0" : digits);
    if (neg) mant = -mant;
    return make(std::move(mant), exp - frac, precision);
}

long BigDecimal::leading_exponent() const {
    if (mant_ == 0) throw std::domain_error("leading_exponent of zero");
    return digit_count(mant_) - 1 + e10_;
}

Rational BigDecimal::to_rational() const {
    if (mant_ == 0) return Rational(0);
    if (e10_ >= 0) return Rational(mant_ * pow10_int(static_cast<unsigned long>(e10_)));
    return rat(mant_, pow10_int(static_cast<unsigned long>(-e10_)));
}

std::string BigDecimal::to_string() const {
    if (mant_ == 0) return "0";
    std::string digits = Integer(::abs(mant_)).get_str();
    std::string out = mant_ < 0 ? "-" : "";
    long le = leading_exponent();
    if (le >= -6 && le <= 20) {
        if (e10_ >= 0) {
            out += digits;
            out.append(static_cast<std::size_t>(e10_), '0');
        } else if (le >= 0) {
            out += digits.substr(0, static_cast<std::size_t>(le + 1));
            out += '.';
            out += digits.substr(static_cast<std::size_t>(le + 1));
        } else {
            out += "0.";
            out.append(static_cast<std::size_t>(-le - 1), '0');
            out += digits;
        }
        return out;
    }
    out += digits.substr(0, 1);
    if (digits.size() > 1) {
        out += '.';
        out += digits.substr(1);
    }
    out += 'e';
    out += le < 0 ? '-' : '+';
    out += std::to_string(le < 0 ? -le : le);
    return out;
}

BigDecimal BigDecimal::with_precision(int precision) const {
    return make(mant_, e10_, precision);
}

BigDecimal BigDecimal::operator-() const {
    BigDecimal r = *this;
    r.mant_ = -r.mant_;
    return r;
}

BigDecimal BigDecimal::abs() const { return mant_ < 0 ? -*this : *this; }

BigDecimal operator+(const BigDecimal& a, const BigDecimal& b) {
    int prec = std::min(a.prec_, b.prec_);
    if (a.mant_ == 0) return b.with_precision(prec);
    if (b.mant_ == 0) return a.with_precision(prec);
    long la = a.leading_exponent(), lb = b.leading_exponent();
    // A much smaller addend cannot move the result by more than one ulp.
    if (la - lb > prec + 3) return a.with_precision(prec);
    if (lb - la > prec + 3) return b.with_precision(prec);
    long e = std::min(a.e10_, b.e10_);
    Integer ma = a.mant_ * pow10_int(static_cast<unsigned long>(a.e10_ - e));
    Integer mb = b.mant_ * pow10_int(static_cast<unsigned long>(b.e10_ - e));
    return BigDecimal::make(ma + mb, e, prec);
}

BigDecimal operator-(const BigDecimal& a, const BigDecimal& b) { return a + (-b); }

BigDecimal operator*(const BigDecimal& a, const BigDecimal& b) {
    int prec = std::min(a.prec_, b.prec_);
    return BigDecimal::make(a.mant_ * b.mant_, a.e10_ + b.e10_, prec);
}

BigDecimal operator/(const BigDecimal& a, const BigDecimal& b) {
    if (b.mant_ == 0) throw std::domain_error("BigDecimal: division by zero");
    int prec = std::min(a.prec_, b.prec_);
    if (a.mant_ == 0) return BigDecimal::make(0, 0, prec);
    long scale = prec + 4 + std::max(0L, digit_count(b.mant_) - digit_count(a.mant_));
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(),
               Integer(a.mant_ * pow10_int(static_cast<unsigned long>(scale))).get_mpz_t(),
               b.mant_.get_mpz_t());
    return BigDecimal::make(std::move(q), a.e10_ - b.e10_ - scale, prec);
}

int BigDecimal::cmp(const BigDecimal& a, const BigDecimal& b) {
    int sa = a.mant_ < 0 ? -1 : (a.mant_ > 0 ? 1 : 0);
    int sb = b.mant_ < 0 ? -1 : (b.mant_ > 0 ? 1 : 0);
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    long la = a.leading_exponent(), lb = b.leading_exponent();
    if (la != lb) return (la < lb ? -1 : 1) * sa;
    long e = std::min(a.e10_, b.e10_);
    Integer ma = a.mant_ * pow10_int(static_cast<unsigned long>(a.e10_ - e));
    Integer mb = b.mant_ * pow10_int(static_cast<unsigned long>(b.e10_ - e));
    return ::cmp(ma, mb) < 0 ? -1 : (ma == mb ? 0 : 1);
}

Rational BigDecimal::ulp() const {
    long pos = (mant_ == 0 ? 0 : leading_exponent()) - prec_ + 1;
    if (pos >= 0) return Rational(pow10_int(static_cast<unsigned long>(pos)));
    return rat(1, pow10_int(static_cast<unsigned long>(-pos)));
}

int agreeing_digits(const BigDecimal& a, const BigDecimal& b) {
    int prec = std::min(a.precision(), b.precision());
    if (a.is_zero() && b.is_zero()) return prec;
    if (a.is_zero() || b.is_zero()) return 0;
    BigDecimal diff = a - b;
    if (diff.is_zero()) return prec;
    long lm = std::max(a.leading_exponent(), b.leading_exponent());
    long agree = lm - diff.leading_exponent();
    return static_cast<int>(std::clamp(agree, 0L, static_cast<long>(prec)));
}

namespace {

// ln((k+1)/(k-1)) = 2 atanh(1/k) by the odd-power series, k >= 2.
BigDecimal two_atanh_inv(long k, int prec) {
    BigDecimal z = BigDecimal(1, prec) / BigDecimal(k, prec);
    BigDecimal zsq = z * z;
    BigDecimal term = z, sum = z;
    long cutoff = z.leading_exponent() - prec - 4;
    for (long i = 3;; i += 2) {
        term = term * zsq;
        BigDecimal add = term / BigDecimal(i, prec);
        if (add.is_zero() || add.leading_exponent() < cutoff) break;
        sum = sum + add;
    }
    return sum + sum;
}

// atan(1/k) by the alternating odd-power series, k >= 2.
BigDecimal atan_inv(long k, int prec) {
    BigDecimal z = BigDecimal(1, prec) / BigDecimal(k, prec);
    BigDecimal zsq = z * z;
    BigDecimal term = z, sum = z;
    long cutoff = z.leading_exponent() - prec - 4;
    for (long i = 3;; i += 2) {
        term = term * zsq;
        BigDecimal add = term / BigDecimal(i, prec);
        if (add.is_zero() || add.leading_exponent() < cutoff) break;
        sum = (i % 4 == 3) ? sum - add : sum + add;
    }
    return sum;
}

enum class Const { pi, ln2, ln3, ln10, lnpi };

BigDecimal compute_const(Const c, int prec) {
    int w = prec + 10;
    switch (c) {
        case Const::pi: {
            BigDecimal sixteen(16, w), four(4, w);
            return (sixteen * atan_inv(5, w) - four * atan_inv(239, w)).with_precision(prec);
        }
        case Const::ln2:
            return two_atanh_inv(3, w).with_precision(prec);
        case Const::ln3:
            // ln 3 = ln 2 + ln(3/2)
            return (decimal_ln2(w) + two_atanh_inv(5, w)).with_precision(prec);
        case Const::ln10:
            // ln 10 = 3 ln 2 + ln(10/8)
            return (BigDecimal(3, w) * decimal_ln2(w) + two_atanh_inv(9, w)).with_precision(prec);
        case Const::lnpi:
            return decimal_log(decimal_pi(w + 5), prec);
    }
    throw std::logic_error("compute_const: unreachable");
}

BigDecimal cached_const(Const c, int prec) {
    static std::map<std::pair<int, int>, BigDecimal> cache;
    static std::mutex mu;
    std::pair<int, int> key(static_cast<int>(c), prec);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    BigDecimal v = compute_const(c, prec);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, v);
    return v;
}

}  // namespace

BigDecimal decimal_pi(int precision) { return cached_const(Const::pi, precision); }
BigDecimal decimal_ln2(int precision) { return cached_const(Const::ln2, precision); }
BigDecimal decimal_ln3(int precision) { return cached_const(Const::ln3, precision); }
BigDecimal decimal_ln10(int precision) { return cached_const(Const::ln10, precision); }
BigDecimal decimal_lnpi(int precision) { return cached_const(Const::lnpi, precision); }

BigDecimal decimal_log(const BigDecimal& x) { return decimal_log(x, x.precision()); }

BigDecimal decimal_log(const BigDecimal& x, int precision) {
    if (x.is_zero() || x.is_negative())
        throw std::domain_error("decimal_log: argument must be positive");
    int w = precision + 15;
    // x = u * 10^L with u in [1, 10)
    long L = x.leading_exponent();
    BigDecimal u = BigDecimal::from_integer(x.mantissa(), w);
    u = u / BigDecimal::from_rational(Rational(pow10_int(
            static_cast<unsigned long>(u.leading_exponent()))), w);
    // halve into [1, 1.4) so the atanh argument stays small
    BigDecimal two(2, w);
    BigDecimal threshold = BigDecimal::from_rational(rat(7, 5), w);
    long halvings = 0;
    while (u >= threshold) {
        u = u / two;
        ++halvings;
    }
    // ln u = 2 atanh((u-1)/(u+1))
    BigDecimal one(1, w);
    BigDecimal z = (u - one) / (u + one);
    BigDecimal sum = z;
    if (!z.is_zero()) {
        BigDecimal zsq = z * z;
        BigDecimal term = z;
        long cutoff = z.leading_exponent() - w - 4;
        for (long i = 3;; i += 2) {
            term = term * zsq;
            BigDecimal add = term / BigDecimal(i, w);
            if (add.is_zero() || add.leading_exponent() < cutoff) break;
            sum = sum + add;
        }
    }
    BigDecimal result = sum + sum;
    if (halvings != 0) result = result + BigDecimal(halvings, w) * decimal_ln2(w);
    if (L != 0) result = result + BigDecimal(L, w) * decimal_ln10(w);
    return result.with_precision(precision);
}

BigDecimal decimal_exp(const BigDecimal& x) { return decimal_exp(x, x.precision()); }

BigDecimal decimal_exp(const BigDecimal& x, int precision) {
    int w = precision + 15;
    if (x.is_zero()) return BigDecimal(1, precision);
    // x = q ln2 + r with |r| <= ln2/2, so e^x = 2^q e^r
    BigDecimal xw = x.with_precision(w);
    BigDecimal ln2 = decimal_ln2(w);
    BigDecimal qd = xw / ln2;
    // round the quotient to the nearest integer
    Rational qr = qd.to_rational();
    Integer qz;
    {
        Rational shifted = qr + rat(1, 2);
        mpz_fdiv_q(qz.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    }
    if (!qz.fits_slong_p())
        throw std::domain_error("decimal_exp: argument too large");
    long q = qz.get_si();
    BigDecimal r = xw - BigDecimal(q, w) * ln2;
    BigDecimal term(1, w), sum(1, w);
    for (long i = 1;; ++i) {
        term = term * r / BigDecimal(i, w);
        if (term.is_zero() || term.leading_exponent() < -(w + 4)) break;
        sum = sum + term;
    }
    BigDecimal result = sum;
    if (q != 0) {
        Integer p2 = int_pow(2, static_cast<unsigned long>(q < 0 ? -q : q));
        BigDecimal f = BigDecimal::from_integer(p2, w);
        result = q > 0 ? result * f : result / f;
    }
    return result.with_precision(precision);
}

}  // namespace enumseq
