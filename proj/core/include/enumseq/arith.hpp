#pragma once

#include <vector>

#include "enumseq/integer.hpp"
#include "enumseq/poly.hpp"

namespace enumseq {

// Bernoulli number B_m with the B_1 = -1/2 convention.
Rational bernoulli(unsigned long m);

// Polynomial S(D) with S(D) = sum of r^m over odd r in 1..D, valid for every
// odd D. Requires even m >= 2.
RatPoly faulhaber_odd_sum(unsigned long m);

// Elementary symmetric functions S_0..S_k of the given values (S_0 = 1).
std::vector<Rational> elementary_symmetric(const std::vector<Rational>& values,
                                           std::size_t up_to);

}  // namespace enumseq
