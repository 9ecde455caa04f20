#pragma once

#include <string>

#include "enumseq/integer.hpp"

namespace enumseq {

// Arbitrary-precision decimal floating point: value = mantissa * 10^exponent
// with an explicit working precision P (significant decimal digits). Every
// arithmetic result is computed exactly and then rounded half-even to P
// digits, so each operation is correct to within one unit in the last place.
class BigDecimal {
public:
    static constexpr int kDefaultPrecision = 60;

    BigDecimal() : prec_(kDefaultPrecision) {}
    BigDecimal(long value, int precision);

    static BigDecimal from_integer(const Integer& v, int precision);
    static BigDecimal from_rational(const Rational& v, int precision);
    // Accepts plain and scientific decimal notation ("12.5", "-3e-7", "4.25e+10").
    static BigDecimal from_string(const std::string& s, int precision);

    int precision() const { return prec_; }
    bool is_zero() const { return mant_ == 0; }
    bool is_negative() const { return mant_ < 0; }
    const Integer& mantissa() const { return mant_; }
    long exponent10() const { return e10_; }

    // floor(log10 |value|); only meaningful for nonzero values.
    long leading_exponent() const;

    // Exact value as a rational.
    Rational to_rational() const;
    double to_double() const { return to_rational().get_d(); }
    // Scientific notation with the full stored mantissa ("-1.234e+5").
    std::string to_string() const;

    // Same value re-rounded to the given number of significant digits.
    BigDecimal with_precision(int precision) const;

    BigDecimal operator-() const;
    BigDecimal abs() const;

    friend BigDecimal operator+(const BigDecimal& a, const BigDecimal& b);
    friend BigDecimal operator-(const BigDecimal& a, const BigDecimal& b);
    friend BigDecimal operator*(const BigDecimal& a, const BigDecimal& b);
    friend BigDecimal operator/(const BigDecimal& a, const BigDecimal& b);

    // Exact value comparison: -1, 0, +1.
    static int cmp(const BigDecimal& a, const BigDecimal& b);
    friend bool operator==(const BigDecimal& a, const BigDecimal& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigDecimal& a, const BigDecimal& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigDecimal& a, const BigDecimal& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigDecimal& a, const BigDecimal& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigDecimal& a, const BigDecimal& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigDecimal& a, const BigDecimal& b) { return cmp(a, b) >= 0; }

    // One unit in the last place at this value's magnitude and precision.
    Rational ulp() const;

private:
    static BigDecimal make(Integer mant, long e10, int precision);
    void normalize();

    Integer mant_ = 0;
    long e10_ = 0;
    int prec_;
};

// Number of leading decimal digits on which a and b agree (0 when they differ
// in magnitude or sign; capped at the common precision).
int agreeing_digits(const BigDecimal& a, const BigDecimal& b);

// Natural logarithm, result at the precision of x (or explicit precision).
BigDecimal decimal_log(const BigDecimal& x);
BigDecimal decimal_log(const BigDecimal& x, int precision);

// e^x at the precision of x (or explicit precision).
BigDecimal decimal_exp(const BigDecimal& x);
BigDecimal decimal_exp(const BigDecimal& x, int precision);

// Cached fundamental constants at the requested precision.
BigDecimal decimal_pi(int precision);
BigDecimal decimal_ln2(int precision);
BigDecimal decimal_ln3(int precision);
BigDecimal decimal_ln10(int precision);
BigDecimal decimal_lnpi(int precision);

}  // namespace enumseq
