#include "enumseq/curves.hpp"

#include <algorithm>
#include <stdexcept>

namespace enumseq {

const Integer& CurveCounts::at(long d) const {
    if (d < 1 || d > d_max) throw std::out_of_range("CurveCounts: degree out of range");
    return values[static_cast<std::size_t>(d - 1)];
}

CurveCounts kontsevich(long d_max) {
    if (d_max < 1) throw std::invalid_argument("kontsevich: need d_max >= 1");
    CurveCounts counts;
    counts.d_max = d_max;
    counts.values.reserve(static_cast<std::size_t>(d_max));
    counts.values.emplace_back(1);
    for (long d = 2; d <= d_max; ++d) {
        Integer total(0);
        for (long k = 1; k < d; ++k) {
            const Integer& nk = counts.values[static_cast<std::size_t>(k - 1)];
            const Integer& nrest = counts.values[static_cast<std::size_t>(d - k - 1)];
            Integer bracket =
                Integer(k) * Integer(k) * Integer(d - k) * Integer(d - k) *
                    binomial(static_cast<unsigned long>(3 * d - 4),
                             static_cast<unsigned long>(3 * k - 2)) -
                Integer(k) * Integer(k) * Integer(k) * Integer(d - k) *
                    binomial(static_cast<unsigned long>(3 * d - 4),
                             static_cast<unsigned long>(3 * k - 1));
            total += nk * nrest * bracket;
        }
        counts.values.push_back(total);
    }
    return counts;
}

namespace {

TheoremReport observation(std::string check, std::string params) {
    TheoremReport rep;
    rep.check = std::move(check);
    rep.params = std::move(params);
    rep.asserted = false;
    return rep;
}

void fail_at(TheoremReport& rep, std::string location, std::string expected, std::string actual) {
    if (rep.pass) {
        rep.counterexample = Counterexample{std::move(location), std::move(expected),
                                            std::move(actual)};
    }
    rep.pass = false;
}

std::uint64_t residue(const Integer& value, std::uint64_t m) { return mod_nonneg_u64(value, m); }

}  // namespace

std::vector<TheoremReport> nd_congruence_report(long d_max) {
    if (d_max < 10) throw std::invalid_argument("nd_congruence_report: need d_max >= 10");
    const CurveCounts counts = kontsevich(d_max);
    const std::string range = "d_max=" + std::to_string(d_max);
    std::vector<TheoremReport> reports;

    for (long l = 1; l <= 5; ++l) {
        TheoremReport rep = observation("nd.mod2^" + std::to_string(l), range);
        const std::uint64_t m = std::uint64_t{1} << l;
        for (long d = l + 2; d <= d_max; ++d) {
            std::uint64_t a = residue(counts.at(d), m);
            if (a != 0) fail_at(rep, "d=" + std::to_string(d), "0", std::to_string(a));
        }
        reports.push_back(std::move(rep));
    }

    {
        TheoremReport rep = observation("nd.mod3.multiples", range);
        for (long d = 3; d <= d_max; d += 3) {
            std::uint64_t a = residue(counts.at(d), 3);
            if (a != 0) fail_at(rep, "d=" + std::to_string(d), "0", std::to_string(a));
        }
        reports.push_back(std::move(rep));
    }
    {
        TheoremReport rep = observation("nd.mod3.class2", range);
        for (long d = 2; d <= d_max; d += 3) {
            std::uint64_t a = residue(counts.at(d), 3);
            if (a != 1) fail_at(rep, "d=" + std::to_string(d), "1", std::to_string(a));
        }
        reports.push_back(std::move(rep));
    }
    {
        TheoremReport rep = observation("nd.mod3.class1", range);
        for (long i = 0; 3 * i + 1 <= d_max; ++i) {
            std::uint64_t expected = i % 2 == 0 ? 1 : 2;
            std::uint64_t a = residue(counts.at(3 * i + 1), 3);
            if (a != expected) {
                fail_at(rep, "d=" + std::to_string(3 * i + 1), std::to_string(expected),
                        std::to_string(a));
            }
        }
        reports.push_back(std::move(rep));
    }
    {
        TheoremReport rep = observation("nd.mod6.class2", range);
        for (long i = 1; 6 * i + 2 <= d_max; ++i) {
            std::uint64_t a = residue(counts.at(6 * i + 2), 6);
            if (a != 4) fail_at(rep, "d=" + std::to_string(6 * i + 2), "4", std::to_string(a));
        }
        reports.push_back(std::move(rep));
    }
    {
        TheoremReport rep = observation("nd.mod5", range);
        for (long d = 9; d <= d_max; ++d) {
            std::uint64_t a = residue(counts.at(d), 5);
            if (a != 0) fail_at(rep, "d=" + std::to_string(d), "0", std::to_string(a));
        }
        reports.push_back(std::move(rep));
    }
    {
        TheoremReport rep = observation("nd.mod25", range);
        for (long d = 24; d <= d_max; ++d) {
            std::uint64_t a = residue(counts.at(d), 25);
            if (a != 0) fail_at(rep, "d=" + std::to_string(d), "0", std::to_string(a));
        }
        reports.push_back(std::move(rep));
    }
    {
        TheoremReport rep = observation("nd.mod7.zero_rows", range);
        for (long d = 5; d <= d_max; ++d) {
            if (d % 7 != 5 && d % 7 != 0) continue;
            std::uint64_t a = residue(counts.at(d), 7);
            if (a != 0) fail_at(rep, "d=" + std::to_string(d), "0", std::to_string(a));
        }
        reports.push_back(std::move(rep));
    }
    {
        // Row periodicity with horizontal shift 4 in the k=7 table, from the
        // second column on.
        TheoremReport rep = observation("nd.mod7.shift4", range);
        for (long r = 1; r <= 7; ++r) {
            for (long l = 1; 7 * (l + 4) + r <= d_max; ++l) {
                std::uint64_t lhs = residue(counts.at(7 * l + r), 7);
                std::uint64_t rhs = residue(counts.at(7 * (l + 4) + r), 7);
                if (lhs != rhs) {
                    fail_at(rep, "row=" + std::to_string(r) + " l=" + std::to_string(l),
                            std::to_string(lhs), std::to_string(rhs));
                }
            }
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

std::pair<TruncatedSeries, TruncatedSeries> picard_fuchs_solutions(int order) {
    if (order < 1) throw std::invalid_argument("picard_fuchs_solutions: need order >= 1");
    TruncatedSeries y0(order);
    TruncatedSeries y1(order);
    Integer fact5n(1);
    Integer factn(1);
    Rational window(0);  // H_{5n} - H_n
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            for (long j = 5 * n - 4; j <= 5 * n; ++j) fact5n *= j;
            factn *= n;
            for (long j = 5 * n - 4; j <= 5 * n; ++j) window += rat(Integer(1), Integer(j));
            window -= rat(Integer(1), Integer(n));
        }
        Rational t = rat(fact5n, int_pow(factn, 5));
        y0.set_coeff(n, t);
        y1.set_coeff(n, rat(5) * window * t);
    }
    return {y0, y1};
}

TruncatedSeries mirror_map(int order) {
    if (order < 2) throw std::invalid_argument("mirror_map: need order >= 2");
    auto [y0, y1] = picard_fuchs_solutions(order);
    TruncatedSeries ratio = series_mul(y1, series_inverse(y0));
    return series_shift_up(series_exp(ratio));
}

TruncatedSeries yukawa_series(int order) {
    if (order < 2) throw std::invalid_argument("yukawa_series: need order >= 2");
    // The q/x shift and the zeroed top slot of the derivative each cost one
    // exact coefficient, so work one order higher than requested.
    const int work = order + 1;
    TruncatedSeries x_of_q = series_reversion(mirror_map(work));

    // (q/x)(dx/dq): divide x(q) by q by shifting down, then invert.
    std::vector<Rational> shifted(x_of_q.coefficients().begin() + 1,
                                  x_of_q.coefficients().end());
    TruncatedSeries x_over_q = TruncatedSeries::from_coefficients(work - 1, std::move(shifted));
    TruncatedSeries factor = series_mul(series_derivative(x_of_q), series_inverse(x_over_q));
    TruncatedSeries factor_cubed = series_mul(series_mul(factor, factor), factor);

    auto [y0, y1] = picard_fuchs_solutions(work);
    (void)y1;
    TruncatedSeries one_minus(work);
    one_minus.set_coeff(0, rat(1));
    one_minus.set_coeff(1, rat(-3125));
    TruncatedSeries denom = series_mul(one_minus, series_mul(y0, y0));
    TruncatedSeries w = rat(5) * series_inverse(denom);
    return series_mul(factor_cubed, series_compose(w, x_of_q));
}

InstantonCounts extract_instantons(int order) {
    if (order < 1) throw std::invalid_argument("extract_instantons: need order >= 1");
    TruncatedSeries yukawa = yukawa_series(std::max(order, 2));
    InstantonCounts counts;
    counts.d_max = order;
    counts.values.reserve(static_cast<std::size_t>(order));
    for (int m = 1; m <= order; ++m) {
        Rational coefficient = yukawa.coeff(m);
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            coefficient -= counts.values[static_cast<std::size_t>(d - 1)] * rat(Integer(d) * d * d);
        }
        Rational qd = coefficient / rat(Integer(m) * m * m);
        counts.integral.push_back(Integer(qd.get_den()) == 1);
        counts.values.push_back(std::move(qd));
    }
    return counts;
}

namespace {

// Divisibility of a computed q_d; a non-integral value fails the pattern.
void check_qd_divisible(TheoremReport& rep, const InstantonCounts& counts, long d,
                        std::uint64_t m) {
    const Rational& value = counts.values[static_cast<std::size_t>(d - 1)];
    if (!counts.integral[static_cast<std::size_t>(d - 1)]) {
        fail_at(rep, "d=" + std::to_string(d), "integer", "non-integral value");
        return;
    }
    std::uint64_t a = mod_nonneg_u64(Integer(value.get_num()), m);
    if (a != 0) fail_at(rep, "d=" + std::to_string(d), "0", std::to_string(a));
}

}  // namespace

std::vector<TheoremReport> qd_congruence_report(long d_max) {
    if (d_max < 16) throw std::invalid_argument("qd_congruence_report: need d_max >= 16");
    const InstantonCounts counts = extract_instantons(static_cast<int>(d_max));
    const std::string range = "d_max=" + std::to_string(d_max);
    std::vector<TheoremReport> reports;

    for (long l = 1; l <= 4; ++l) {
        TheoremReport rep = observation("qd.mod2^" + std::to_string(l), range);
        const std::uint64_t m = std::uint64_t{1} << l;
        for (long d = static_cast<long>(m); d <= d_max; d += static_cast<long>(m)) {
            check_qd_divisible(rep, counts, d, m);
        }
        reports.push_back(std::move(rep));
    }
    {
        TheoremReport rep = observation("qd.mod8.multiples_of_4", range);
        for (long d = 4; d <= d_max; d += 4) check_qd_divisible(rep, counts, d, 8);
        reports.push_back(std::move(rep));
    }
    {
        TheoremReport rep = observation("qd.mod16.multiples_of_4", range);
        for (long d = 4; d <= d_max; d += 4) check_qd_divisible(rep, counts, d, 16);
        reports.push_back(std::move(rep));
    }
    {
        // The mod-32 table must NOT be all zero on the multiples of four.
        TheoremReport rep = observation("qd.mod32.nonzero_entry", range);
        bool found = false;
        for (long d = 4; d <= d_max; d += 4) {
            if (!counts.integral[static_cast<std::size_t>(d - 1)]) continue;
            if (mod_nonneg_u64(Integer(counts.values[static_cast<std::size_t>(d - 1)].get_num()),
                               32) != 0) {
                found = true;
                break;
            }
        }
        if (!found) {
            fail_at(rep, "d=4.." + std::to_string(d_max), "some q_d with 32 not dividing q_d",
                    "all divisible");
        }
        reports.push_back(std::move(rep));
    }
    {
        TheoremReport rep = observation("qd.mod5", range);
        for (long d = 1; d <= d_max; ++d) check_qd_divisible(rep, counts, d, 5);
        reports.push_back(std::move(rep));
    }
    {
        TheoremReport rep = observation("qd.mod25", range);
        for (long d = 1; d <= d_max; ++d) check_qd_divisible(rep, counts, d, 25);
        reports.push_back(std::move(rep));
    }
    return reports;
}

NdAsymptotics nd_asymptotics(long d_max, int precision) {
    if (d_max < 100) throw std::invalid_argument("nd_asymptotics: need d_max >= 100");
    if (precision < 20) throw std::invalid_argument("nd_asymptotics: need precision >= 20");
    const CurveCounts counts = kontsevich(d_max);

    DecimalSequence seq;
    seq.start = 2;
    seq.values.reserve(static_cast<std::size_t>(d_max - 1));
    for (long d = 2; d <= d_max; ++d) {
        Rational scaled = rat(counts.at(d), factorial(static_cast<unsigned long>(3 * d - 1)));
        seq.values.push_back(decimal_log(BigDecimal::from_rational(scaled, precision)));
    }

    NdAsymptotics out;
    out.model = variant_II(seq, 8, 2);
    const BigDecimal& b = out.model.slope->value;
    const BigDecimal& c0 = out.model.coefficients[0].value;
    const BigDecimal& c1 = out.model.coefficients[1].value;
    const BigDecimal& c2 = out.model.coefficients[2].value;
    out.a = decimal_exp(b);
    out.b0 = decimal_exp(c0);
    out.b1 = out.b0 * c1;
    out.b2 = out.b0 * c2 + out.b1 * out.b1 / (BigDecimal(2, precision) * out.b0);
    return out;
}

}  // namespace enumseq
