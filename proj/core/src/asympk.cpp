#include "enumseq/asympk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "enumseq/symbolic.hpp"

namespace enumseq {

const BigDecimal& DecimalSequence::at(long n) const {
    if (n < start || n > end_index()) {
        throw std::out_of_range("DecimalSequence: index " + std::to_string(n) + " outside " +
                                std::to_string(start) + ".." + std::to_string(end_index()));
    }
    return values[static_cast<std::size_t>(n - start)];
}

int DecimalSequence::precision() const {
    return values.empty() ? BigDecimal::kDefaultPrecision : values.front().precision();
}

long default_asympk_order(long term_count) {
    if (term_count < 2) return 5;
    long rounded = std::lround(std::log(static_cast<double>(term_count)));
    return std::max(5L, rounded);
}

std::string to_string(AsymptoticForm form) {
    switch (form) {
        case AsymptoticForm::plain: return "plain";
        case AsymptoticForm::variant_i: return "I";
        case AsymptoticForm::variant_ii: return "II";
        case AsymptoticForm::variant_iii: return "III";
    }
    throw std::logic_error("unknown AsymptoticForm");
}

DecimalSequence asympk_apply(const DecimalSequence& s, long k) {
    if (k < 1) throw std::invalid_argument("asympk_apply: need k >= 1");
    if (static_cast<long>(s.values.size()) < k + 1) {
        throw std::invalid_argument("asympk_apply: need at least k+1 terms");
    }
    const int prec = s.precision();
    DecimalSequence out;
    out.start = s.start + k;
    out.values.reserve(s.values.size() - static_cast<std::size_t>(k));
    for (long n = out.start; n <= s.end_index(); ++n) {
        BigDecimal acc(0, prec);
        for (long j = 0; j <= k; ++j) {
            Integer numer = int_pow(Integer(n - j), static_cast<unsigned long>(k));
            if (j % 2 == 1) numer = -numer;
            Rational w = rat(numer, factorial(static_cast<unsigned long>(j)) *
                                        factorial(static_cast<unsigned long>(k - j)));
            acc = acc + BigDecimal::from_rational(w, prec) * s.at(n - j);
        }
        out.values.push_back(acc);
    }
    return out;
}

namespace {

struct ProbeResult {
    BigDecimal value;
    int confidence = 0;
};

// Accelerates the sequence and reads it at three spaced tail indices; the
// estimate is the last index's value, the confidence the worst agreement.
ProbeResult probe_accelerated(const DecimalSequence& raw, long k) {
    DecimalSequence t = asympk_apply(raw, k);
    const long lo = t.start;
    const long hi = t.end_index();
    const long n1 = std::max(lo, 3 * hi / 5);
    const long n2 = std::max(lo, 4 * hi / 5);
    const BigDecimal& final_value = t.at(hi);
    int conf = std::min(agreeing_digits(t.at(n1), final_value),
                        agreeing_digits(t.at(n2), final_value));
    return {final_value, conf};
}

std::optional<Rational> recognize_estimate(const BigDecimal& value, int confidence) {
    if (confidence < 6) return std::nullopt;
    BigDecimal rounded = value.with_precision(std::min(confidence, value.precision()));
    return recognize_rational(rounded, Integer(10000));
}

CoefficientEstimate estimate_from(const ProbeResult& probe) {
    return {probe.value, probe.confidence, recognize_estimate(probe.value, probe.confidence)};
}

// Exact decimal of the recognized value when present, the raw estimate
// otherwise; later pipeline stages subtract this.
BigDecimal effective_value(const CoefficientEstimate& est, int prec) {
    if (est.recognized) return BigDecimal::from_rational(*est.recognized, prec);
    return est.value;
}

DecimalSequence difference_sequence(const DecimalSequence& s) {
    if (s.values.size() < 2) throw std::invalid_argument("difference: need two terms");
    DecimalSequence d;
    d.start = s.start;
    d.values.reserve(s.values.size() - 1);
    for (long n = s.start; n < s.end_index(); ++n) {
        d.values.push_back(s.at(n + 1) - s.at(n));
    }
    return d;
}

}  // namespace

AsymptoticModel extract_coefficients(const DecimalSequence& s, long k, int depth) {
    if (depth < 0) throw std::invalid_argument("extract_coefficients: need depth >= 0");
    const int prec = s.precision();
    AsymptoticModel model;
    DecimalSequence residual = s;
    for (int i = 0; i <= depth; ++i) {
        CoefficientEstimate est = estimate_from(probe_accelerated(residual, k));
        model.coefficients.push_back(est);
        if (i == depth) break;
        for (long n = residual.start; n <= residual.end_index(); ++n) {
            auto idx = static_cast<std::size_t>(n - residual.start);
            residual.values[idx] = BigDecimal(n, prec) * (residual.values[idx] - est.value);
        }
    }
    return model;
}

AsymptoticModel variant_I(const DecimalSequence& s, long k, int depth) {
    const int prec = s.precision();
    DecimalSequence d = difference_sequence(s);
    for (long n = d.start; n <= d.end_index(); ++n) {
        auto idx = static_cast<std::size_t>(n - d.start);
        d.values[idx] = BigDecimal(n, prec) * d.values[idx];
    }
    CoefficientEstimate a = extract_coefficients(d, k, 0).coefficients.front();
    BigDecimal a_value = effective_value(a, prec);

    DecimalSequence base;
    base.start = s.start;
    base.values.reserve(s.values.size());
    for (long n = s.start; n <= s.end_index(); ++n) {
        base.values.push_back(s.at(n) - a_value * decimal_log(BigDecimal(n, prec)));
    }
    AsymptoticModel model = extract_coefficients(base, k, depth);
    model.form = AsymptoticForm::variant_i;
    model.log_term = a;
    return model;
}

AsymptoticModel variant_II(const DecimalSequence& s, long k, int depth) {
    const int prec = s.precision();
    AsymptoticModel leading = extract_coefficients(difference_sequence(s), k, 1);
    CoefficientEstimate b = leading.coefficients[0];
    CoefficientEstimate a = leading.coefficients[1];
    BigDecimal b_value = effective_value(b, prec);
    BigDecimal a_value = effective_value(a, prec);

    DecimalSequence base;
    base.start = s.start;
    base.values.reserve(s.values.size());
    for (long n = s.start; n <= s.end_index(); ++n) {
        base.values.push_back(s.at(n) - b_value * BigDecimal(n, prec) -
                              a_value * decimal_log(BigDecimal(n, prec)));
    }
    AsymptoticModel model = extract_coefficients(base, k, depth);
    model.form = AsymptoticForm::variant_ii;
    model.slope = b;
    model.log_term = a;
    return model;
}

AsymptoticModel variant_III(const DecimalSequence& s, long k, int depth) {
    const int prec = s.precision();
    for (const BigDecimal& v : s.values) {
        if (v.is_zero() || v.is_negative()) {
            throw std::domain_error("variant_III: sequence must be strictly positive");
        }
    }
    DecimalSequence ratio;
    ratio.start = s.start;
    ratio.values.reserve(s.values.size() - 1);
    const BigDecimal one(1, prec);
    for (long n = s.start; n < s.end_index(); ++n) {
        ratio.values.push_back(BigDecimal(n, prec) * (s.at(n + 1) / s.at(n) - one));
    }
    CoefficientEstimate lambda = extract_coefficients(ratio, k, 0).coefficients.front();
    BigDecimal lambda_value = effective_value(lambda, prec);

    DecimalSequence normalized;
    normalized.start = s.start;
    normalized.values.reserve(s.values.size());
    for (long n = s.start; n <= s.end_index(); ++n) {
        BigDecimal scale = decimal_exp(lambda_value * decimal_log(BigDecimal(n, prec)));
        normalized.values.push_back(s.at(n) / scale);
    }
    AsymptoticModel model = extract_coefficients(normalized, k, depth);
    model.form = AsymptoticForm::variant_iii;
    model.power = lambda;

    // Trailing coefficients are reported relative to the amplitude c_0.
    if (!model.coefficients.empty() && !model.coefficients.front().value.is_zero()) {
        const CoefficientEstimate& amplitude = model.coefficients.front();
        for (std::size_t i = 1; i < model.coefficients.size(); ++i) {
            CoefficientEstimate& c = model.coefficients[i];
            c.value = c.value / amplitude.value;
            c.confidence = std::min(c.confidence, amplitude.confidence);
            c.recognized = recognize_estimate(c.value, c.confidence);
        }
    }
    return model;
}

}  // namespace enumseq
