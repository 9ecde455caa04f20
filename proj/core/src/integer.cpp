#include "enumseq/integer.hpp"

#include <stdexcept>

namespace enumseq {

Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rat(long num, long den) { return rat(Integer(num), Integer(den)); }

Integer int_pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
    if (m <= 0) throw std::invalid_argument("mod_nonneg: modulus must be positive");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::uint64_t mod_nonneg_u64(const Integer& a, std::uint64_t m) {
    Integer r = mod_nonneg(a, Integer(static_cast<unsigned long>(m)));
    return static_cast<std::uint64_t>(r.get_ui());
}

bool is_odd(const Integer& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

bool divides(const Integer& d, const Integer& a) {
    if (d == 0) throw std::invalid_argument("divides: zero divisor");
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::string to_string(const Integer& a) { return a.get_str(); }

std::string to_string(const Rational& a) { return a.get_str(); }

Integer integer_from_string(const std::string& s) {
    Integer r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("integer_from_string: bad input: " + s);
    return r;
}

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rational_from_string: bad input: " + s);
    r.canonicalize();
    return r;
}

Integer to_integer_exact(const Rational& a) {
    if (a.get_den() != 1) throw std::domain_error("to_integer_exact: not an integer: " + to_string(a));
    return a.get_num();
}

}  // namespace enumseq
