#pragma once

#include <utility>
#include <vector>

#include "enumseq/asympk.hpp"
#include "enumseq/congruence.hpp"
#include "enumseq/decimal.hpp"
#include "enumseq/integer.hpp"
#include "enumseq/series.hpp"

namespace enumseq {

// Degree-d rational plane curves through 3d-1 generic points.
struct CurveCounts {
    long d_max = 0;
    std::vector<Integer> values;  // values[d-1] = n_d

    const Integer& at(long d) const;
};

// n_d = sum_{k=1}^{d-1} n_k n_{d-k} [k^2(d-k)^2 C(3d-4,3k-2)
//                                    - k^3(d-k) C(3d-4,3k-1)], n_1 = 1.
CurveCounts kontsevich(long d_max);

// Observed residue patterns of n_d (report-only; none of these are proved).
std::vector<TheoremReport> nd_congruence_report(long d_max);

// Power-series solutions of the quintic's Picard-Fuchs equation:
// y_0 = sum (5n)!/n!^5 x^n and the logarithmic partner's regular part
// y~_1 = sum (5n)!/n!^5 * 5(H_{5n} - H_n) x^n, both to order N.
std::pair<TruncatedSeries, TruncatedSeries> picard_fuchs_solutions(int order);

// q(x) = x exp(y~_1/y_0) to the given order.
TruncatedSeries mirror_map(int order);

// K(q) = (q/x dx/dq)^3 * 5/((1-5^5 x) y_0(x)^2) composed with x(q);
// starts 5 + 2875 q + 4876875 q^2 + ...
TruncatedSeries yukawa_series(int order);

struct InstantonCounts {
    long d_max = 0;
    std::vector<Rational> values;  // values[d-1] = q_d as computed
    std::vector<bool> integral;
};

// Solves K(q) = 5 + sum q_d d^3 q^d/(1-q^d) for the q_d by divisor
// recursion; flags each value's integrality.
InstantonCounts extract_instantons(int order);

// Observed residue patterns of q_d (report-only).
std::vector<TheoremReport> qd_congruence_report(long d_max);

// Growth model n_d ~ (3d-1)! a^d d^{-7/2} (b0 + b1/d + b2/d^2 + ...),
// fitted from log(n_d/(3d-1)!).
struct NdAsymptotics {
    AsymptoticModel model;
    BigDecimal a;
    BigDecimal b0;
    BigDecimal b1;
    BigDecimal b2;
};

NdAsymptotics nd_asymptotics(long d_max, int precision);

}  // namespace enumseq
