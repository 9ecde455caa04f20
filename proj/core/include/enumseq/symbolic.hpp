#pragma once

#include <optional>
#include <string>

#include "enumseq/decimal.hpp"
#include "enumseq/integer.hpp"

namespace enumseq {

// Exact element of the Q-span of {1, log 2, log 3, log pi}.
struct SymbolicConstant {
    Rational unit{0};
    Rational log2{0};
    Rational log3{0};
    Rational logpi{0};

    friend SymbolicConstant operator+(const SymbolicConstant& a, const SymbolicConstant& b) {
        return {a.unit + b.unit, a.log2 + b.log2, a.log3 + b.log3, a.logpi + b.logpi};
    }
    friend SymbolicConstant operator-(const SymbolicConstant& a, const SymbolicConstant& b) {
        return {a.unit - b.unit, a.log2 - b.log2, a.log3 - b.log3, a.logpi - b.logpi};
    }
    friend SymbolicConstant operator*(const Rational& c, const SymbolicConstant& a) {
        return {c * a.unit, c * a.log2, c * a.log3, c * a.logpi};
    }
    friend bool operator==(const SymbolicConstant& a, const SymbolicConstant& b) {
        return a.unit == b.unit && a.log2 == b.log2 && a.log3 == b.log3 && a.logpi == b.logpi;
    }

    BigDecimal evaluate(int precision) const;
    // Human-readable form like "-3 - 9/2*log(2) + 3/2*log(3) - log(pi)".
    std::string to_string() const;
};

// Nearest fraction with denominator <= max_denominator via continued-fraction
// convergents; empty unless it approximates x to within 10^-(P-5) at x's
// precision P.
std::optional<Rational> recognize_rational(const BigDecimal& x, const Integer& max_denominator);

// Searches small rational coefficients over the basis {1, log2, log3, logpi}
// for a combination matching x to within 10^-(P-8). Log coefficients are
// enumerated with numerators up to 16 and denominators up to
// max_coeff_denominator; the unit part is recovered by recognize_rational.
std::optional<SymbolicConstant> recognize_symbolic(const BigDecimal& x,
                                                   long max_coeff_denominator);

}  // namespace enumseq
