#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "enumseq/integer.hpp"
#include "enumseq/poly.hpp"

namespace enumseq {

// v_n mod k, computed entirely in residue arithmetic (k < 2^63).
std::uint64_t v_mod(long n, std::uint64_t k);

// Residue grid: rows[r-1][l] = s_{lk+r} mod k for r = 1..k, l = 0..depth-1.
// Row r = k holds the indices divisible by k, starting at index k (never 0).
struct CongruenceTable {
    long modulus = 0;
    long depth = 0;
    std::vector<std::vector<std::uint64_t>> rows;

    const std::vector<std::uint64_t>& row(long r) const;
    std::uint64_t entry(long r, long l) const;
};

CongruenceTable residue_table(const std::function<Integer(long)>& term, long k, long depth);
// v-backed table using v_mod, so no full-size values are materialized.
CongruenceTable residue_table_v(long k, long depth);

struct Counterexample {
    std::string location;
    std::string expected;
    std::string actual;
};

struct TheoremReport {
    std::string check;
    std::string params;
    bool pass = true;
    // Proved statements are asserted; conjectured ranges are report-only.
    bool asserted = true;
    std::optional<Counterexample> counterexample;
};

// The ten parts of the residue-table theorem for v_n:
//   1. every v_n is odd                                   (any k; index range k*depth)
//   2. rows 1 and 2 agree                                 (any k)
//   3. v_{lk+k/2+1} == v_{lk+k/2+2} mod k                 (k even)
//   4. row (k+3)/2 is zero                                (k odd)
//   5. rows 1,2 start 1,1 then carry k-1 for l = 2..k+1   (k prime)
//   6. column l=0 vanishes for rows (k+3)/2..k            (k > 2 prime)
//   7. zero block: rows (k+3)/2..k, columns (k-1)/2..k    (k > 2 prime)
//   8. rows constant; each odd residue hit exactly twice  (k = 2^q)
//   9. rows 1,2,2^{q-1},2^{q-1}+1,2^{q-1}+2,2^q carry
//      1,1,2^{q-1}-1,2^{q-1}+1,2^{q-1}+1,2^q-1            (k = 2^q > 2)
//  10. rows a and a+2^{q-1} differ by 2^{q-1}             (k = 2^q > 2)
// Throws std::invalid_argument when k is not in the part's modulus class or
// depth does not cover the claimed region.
TheoremReport check_theorem1(int part, long k, long depth);

// (2n-3)^3 divides v_n over the inclusive range.
TheoremReport check_divisibility_cube(long n_from, long n_to);

// v_{lk+(k+3)/2} == 0 mod (2l+1)^2 k^{2l+2} for odd k >= 3.
TheoremReport check_lemma4(long k, long l);

// v_{(p+3)/2} == -2p^3 mod p^4, and the refinement
// v_{(p+3)/2} == 2p^3 (1-p) (p-1)! 4^{p-1} mod p^5, for prime p >= 5.
TheoremReport check_extra1_part1(long p);

struct CrConstant {
    long r = 0;
    Rational value;
    std::vector<Integer> b_row;  // b_{0,r}..b_{2r,r}, palindromic
};

// C_r = r/(-4)^{r-1} * ((2r+1)/r!)^2 * sum_j b_{j,r} ((1-2j))_{2r-1}, where
// b_{j,r} = [x^j] prod_{a=1}^{2r} (2r+1-a+ax) and ((u))_a = prod (u+2j-2).
CrConstant cr_constant(long r);

// v_{(p+3)/2+rp} == C_r p^{2r+2} mod p^{2r+3}; the rational C_r is read
// modulo p^{2r+3} through the inverse of its denominator. Asserted for
// p >= 2r+1; smaller primes are checked report-only.
TheoremReport check_extra1_part2(long r, long p);

// v_{1+3k} == v_{2+3k} == Catalan(k) mod 3, and 3 | v_{3k} for k >= 1.
TheoremReport check_catalan_mod3(long k_from, long k_to);

// prod_{i=start}^{start+count-1} (ix - i + j) with coefficients mod modulus.
ModPoly product_linear_mod(long count, long j, std::uint64_t modulus, long start = 0);

// (prod_{i=0}^{2^q-1} (ix-i+j))^2 == x^{2^q} mod 2^q for odd j.
TheoremReport check_lemma12(long q, long j);
// prod over i = 0..2^q-1 equals prod over i = 2^q..2^{q+1}-1 mod 2^{q+1}.
TheoremReport check_lemma13a(long q, long j);
// prod == x^{2^{q-1}-2} (2^{q-1}(x^4+x^3+x+1) + x^2) mod 2^q for q >= 3.
TheoremReport check_lemma13b(long q, long j);
// prod_{i=0}^{p^l-1} (ix-i+j) mod p^l depends only on j mod p.
TheoremReport check_lemma_carl(long p, long l);

// v_{2^q+i} == v_i mod 2^q for i = 0..2^q-1 (v_0 = -1 participates), and the
// residues v_1..v_{2^q} mod 2^q hit each odd residue exactly twice.
TheoremReport check_periodicity_equidistribution(long q);

// C(n,m) mod p by base-p digit products (Lucas).
std::uint64_t binomial_mod_lucas(const Integer& n, const Integer& m, std::uint64_t p);

}  // namespace enumseq
