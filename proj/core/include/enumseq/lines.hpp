#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "enumseq/integer.hpp"

namespace enumseq {

// The six independent ways of computing v_n, the number of lines on a
// generic degree-(2n-3) hypersurface in P^n.
enum class VnMethod { defn, equivariant, residue, stirling, dominici, alternate };

std::string to_string(VnMethod method);
std::optional<VnMethod> parse_vn_method(const std::string& name);
std::vector<VnMethod> all_vn_methods();

// Equivariant weights w_0..w_n, pairwise distinct.
struct WeightVector {
    std::vector<Rational> weights;
};

WeightVector default_weights(long n);
WeightVector random_weights(long n, std::mt19937_64& rng);

struct VnRecord {
    long n = 0;
    Integer value;
    VnMethod method = VnMethod::defn;
};

// Coefficient of x^{n-1} in (1-x) * prod_{j=0}^{2n-3} (2n-3-j + j*x), with
// the conventions v_0 = -1 and v_1 = 1.
Integer v_defn(long n);

// Fixed-point sum over pairs 0 <= i < j <= n of
//   prod_{a=0}^{D} (a*w_i + (D-a)*w_j) / prod_{k != i,j} (w_i-w_k)(w_j-w_k)
// with D = 2n-3. Always an integer equal to v_defn(n) for admissible weights.
Rational v_equivariant(long n, const WeightVector& w);

// (-1)^n D^2 times the coefficient of u^{n-1} in
// prod_{i=1}^{D-1} (i - D*u) * (1-u)^{-(n-1)}.
Integer v_residue(long n);

// sum_{m=0}^{n-1} (-1)^{n-1-m} C(2n-2-m, n-1) D^{m+1} [z^m] z(z+1)...(z+D-1).
Integer v_stirling(long n);

// (2n-3)^2 (2n-4)! {S_{n-2}(y) - S_{n-1}(y)} with y_i = i/(2n-3-i) for
// i = 1..2n-4, where S_k is the kth elementary symmetric function.
Integer v_dominici(long n);

// Coefficient of x^n in (x-1) * prod_{j=0}^{2n-3} (2n-3-j + j*x).
Integer v_alternate(long n);

// Dispatches to the method; equivariant uses default_weights(n).
Integer v_by_method(long n, VnMethod method);

struct LocalizationReport {
    bool pass = false;
    Rational sum;
    Rational diagonal_coefficient;
};

// For G(x,y) = sum g[i][j] x^i y^j and P(x) = prod (x - roots[i]), evaluates
// sum over all root pairs (a,b) of G(a,b) / (P'(a) P'(b)) and compares it with
// g[n][n] where n = roots.size() - 1.
LocalizationReport localization_identity_check(const std::vector<std::vector<Rational>>& g,
                                               const std::vector<Rational>& roots);

std::vector<VnRecord> v_range(long from, long to, VnMethod method);
std::vector<VnRecord> v_range_all_methods(long from, long to);

}  // namespace enumseq
