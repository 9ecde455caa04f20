#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enumseq/decimal.hpp"
#include "enumseq/integer.hpp"

namespace enumseq {

// Contiguous run of sequence values s_{start}, s_{start+1}, ... at a common
// decimal precision.
struct DecimalSequence {
    long start = 0;
    std::vector<BigDecimal> values;

    long end_index() const { return start + static_cast<long>(values.size()) - 1; }
    const BigDecimal& at(long n) const;
    int precision() const;
};

// Order heuristic k ~ ln(number of terms), floored at 5.
long default_asympk_order(long term_count);

enum class AsymptoticForm { plain, variant_i, variant_ii, variant_iii };

std::string to_string(AsymptoticForm form);

struct CoefficientEstimate {
    BigDecimal value;
    // Decimal digits on which three widely spaced probe indices agree.
    int confidence = 0;
    std::optional<Rational> recognized;
};

// Fitted model by form:
//   plain: s_n ~ c_0 + c_1/n + c_2/n^2 + ...
//   I:     s_n ~ A log n + c_0 + c_1/n + ...
//   II:    s_n ~ B n + A log n + c_0 + c_1/n + ...
//   III:   s_n ~ c_0 n^lambda (1 + c_1/n + c_2/n^2 + ...)
struct AsymptoticModel {
    AsymptoticForm form = AsymptoticForm::plain;
    std::optional<CoefficientEstimate> slope;     // B
    std::optional<CoefficientEstimate> log_term;  // A
    std::optional<CoefficientEstimate> power;     // lambda
    std::vector<CoefficientEstimate> coefficients;
};

// The k-fold acceleration operator
//   s^{(k)}_n = sum_{j=0}^k (-1)^j / (j! (k-j)!) * (n-j)^k * s_{n-j},
// defined on the window n >= start + k.
DecimalSequence asympk_apply(const DecimalSequence& s, long k);

// Inductive peeling: c_i is the accelerated limit of the residual, which is
// then replaced by n * (residual - c_i). Each c_i carries a probe-agreement
// confidence; estimates with >= 6 confident digits are offered to
// recognize_rational (denominators up to 10^4).
AsymptoticModel extract_coefficients(const DecimalSequence& s, long k, int depth);

// A from the accelerated limit of n * (s_{n+1} - s_n), then plain extraction
// on s - A log n.
AsymptoticModel variant_I(const DecimalSequence& s, long k, int depth);

// B and A from plain extraction on the difference sequence (which behaves as
// B + A/n + ...), then plain extraction on s - B n - A log n.
AsymptoticModel variant_II(const DecimalSequence& s, long k, int depth);

// lambda from the accelerated limit of n (s_{n+1}/s_n - 1), then plain
// extraction on s / n^lambda; requires strictly positive terms.
AsymptoticModel variant_III(const DecimalSequence& s, long k, int depth);

}  // namespace enumseq
