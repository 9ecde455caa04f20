#pragma once

#include <map>
#include <vector>

#include "enumseq/integer.hpp"
#include "enumseq/poly.hpp"
#include "enumseq/symbolic.hpp"

namespace enumseq {

// Laurent polynomial in D: exponent -> coefficient, zero coefficients absent.
using LaurentSeries = std::map<long, Rational>;

// Coefficients of t^{2j}, j = 1..j_max (index 0 unused), in
//   log phi_D(t) = sum_j (-1)^{j-1}/j * [OddSum_{2j}(D)/D^{2j} - (D+1)/2] t^{2j},
// where OddSum_m(D) sums r^m over odd r in 1..D. Laurent exponents below
// -laurent_depth are dropped.
std::vector<LaurentSeries> log_phi_expansion(long j_max, long laurent_depth);

// Even polynomial p with index g meaning x^{2g}, standing for p * e^{-x^2/3}.
struct GaussWeightedPoly {
    RatPoly even_part;
};

// Expansion of x^2 (1+x^2/D)^{-2} phi_D(x/sqrt D) e^{x^2/3} in powers of
// D^{-1}: element m is the polynomial multiplying D^{-m}, m = 0..depth.
std::vector<GaussWeightedPoly> integrand_expansion(long depth);

// Integral of x^{2m} e^{-x^2/3} over the line divided by sqrt(3 pi):
// (2m)!/m! * (3/4)^m.
Rational gaussian_moment(unsigned long m);

// Series sum a_j D^{-j} with a_0 = 1.
struct InverseDSeries {
    std::vector<Rational> coefficients;
};

// The expansion v_n = sqrt(27/pi) D^{D-1/2} (1 + a_1/D + a_2/D^2 + ...),
// D = 2n-3, carried to depth M; the sqrt(3 pi) from the Gaussian integrals
// and the remaining prefactor cancel into sqrt(27/pi) exactly.
InverseDSeries vn_asymptotic_D(long depth);

// Re-expands the D-form bracket in powers of 1/n (same
// sqrt(27/pi) (2n-3)^{2n-7/2} normalization).
std::vector<Rational> convert_D_to_n(const InverseDSeries& series, long depth);

// Coefficients of the e^{-3} sqrt(27/pi) (2n)^{2n-7/2} normalization.
std::vector<Rational> convert_to_2n_form(const InverseDSeries& series, long depth);

// log(v_n/(2n)!) = slope*n + log_coefficient*log n + constant
//                  + tail[0]/n + tail[1]/n^2 + ...
struct LogExpansion {
    Rational slope;
    Rational log_coefficient;
    SymbolicConstant constant;
    std::vector<Rational> tail;
};

LogExpansion log_form(long depth);

}  // namespace enumseq
