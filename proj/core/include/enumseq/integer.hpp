#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace enumseq {

// Arbitrary-precision integers and exact rationals, backed by GMP.
// Rationals built through rat() are canonical (reduced, positive
// denominator) and GMP arithmetic keeps them that way.
using Integer = mpz_class;
using Rational = mpq_class;

Rational rat(const Integer& num, const Integer& den);
Rational rat(long num, long den);
inline Rational rat(const Integer& num) { return Rational(num); }
inline Rational rat(long num) { return Rational(num); }

Integer int_pow(const Integer& base, unsigned long exp);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// Least nonnegative residue of a modulo m (m > 0).
Integer mod_nonneg(const Integer& a, const Integer& m);
std::uint64_t mod_nonneg_u64(const Integer& a, std::uint64_t m);

bool is_odd(const Integer& a);
// True when d divides a (d nonzero).
bool divides(const Integer& d, const Integer& a);

std::string to_string(const Integer& a);
std::string to_string(const Rational& a);
Integer integer_from_string(const std::string& s);
// Accepts "n" and "n/d" forms.
Rational rational_from_string(const std::string& s);

// The integer value of a rational whose denominator is 1; throws otherwise.
Integer to_integer_exact(const Rational& a);

}  // namespace enumseq
