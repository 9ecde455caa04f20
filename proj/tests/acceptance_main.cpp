// Acceptance gate: runs every contract-level criterion with its time budget
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "enumseq/asympk.hpp"
#include "enumseq/congruence.hpp"
#include "enumseq/curves.hpp"
#include "enumseq/decimal.hpp"
#include "enumseq/derivation.hpp"
#include "enumseq/lines.hpp"
#include "enumseq/symbolic.hpp"

using namespace enumseq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void expect(Outcome& out, bool ok, const std::string& what) {
    if (!ok && out.pass) {
        out.pass = false;
        out.detail = what;
    }
}

void expect_reports(Outcome& out, const std::vector<TheoremReport>& reports) {
    for (const auto& rep : reports) {
        expect(out, rep.pass, rep.check + " [" + rep.params + "] failed");
    }
}

// ---- criterion bodies ----

Outcome low_order_values() {
    Outcome out;
    const long expected[] = {1, 27, 2875, 698005, 305093061};
    for (long n = 2; n <= 6; ++n) {
        expect(out, v_defn(n) == Integer(expected[n - 2]),
               "v_" + std::to_string(n) + " wrong");
    }
    return out;
}

Outcome six_method_agreement() {
    Outcome out;
    for (long n = 2; n <= 40; ++n) {
        Integer reference = v_defn(n);
        const std::string tag = " disagrees at n=" + std::to_string(n);
        expect(out, v_alternate(n) == reference, "alternate" + tag);
        expect(out, v_residue(n) == reference, "residue" + tag);
        expect(out, v_stirling(n) == reference, "stirling" + tag);
        expect(out, v_dominici(n) == reference, "dominici" + tag);

        WeightVector shifted, squares;
        for (long i = 0; i <= n; ++i) {
            shifted.weights.emplace_back(2 * i + 1);
            squares.weights.emplace_back(i * i + 1);
        }
        expect(out, v_equivariant(n, default_weights(n)) == Rational(reference),
               "equivariant (default weights)" + tag);
        expect(out, v_equivariant(n, shifted) == Rational(reference),
               "equivariant (odd weights)" + tag);
        expect(out, v_equivariant(n, squares) == Rational(reference),
               "equivariant (square weights)" + tag);
    }
    return out;
}

Outcome defn_throughput() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    Integer witness;
    for (long n = 0; n <= 150; ++n) witness = v_defn(n);
    auto t1 = std::chrono::steady_clock::now();
    for (long n = 151; n <= 224; ++n) witness = v_defn(n);
    auto t2 = std::chrono::steady_clock::now();

    double to_150 = std::chrono::duration<double>(t1 - t0).count();
    double to_224 = std::chrono::duration<double>(t2 - t0).count();
    expect(out, to_150 <= 10.0, "n <= 150 took " + std::to_string(to_150) + " s (> 10 s)");
    expect(out, to_224 <= 120.0, "n <= 224 took " + std::to_string(to_224) + " s (> 120 s)");
    expect(out, witness > 0, "v_224 not positive");
    return out;
}

Outcome residue_table_theorem() {
    Outcome out;
    std::vector<TheoremReport> reports;
    for (long k = 2; k <= 12; ++k) {
        reports.push_back(check_theorem1(1, k, 30));
        reports.push_back(check_theorem1(2, k, 30));
        reports.push_back(check_theorem1(k % 2 == 0 ? 3 : 4, k, 30));
    }
    for (long p : {3, 5, 7, 11, 13}) {
        reports.push_back(check_theorem1(5, p, p + 2));
        reports.push_back(check_theorem1(6, p, p + 2));
        reports.push_back(check_theorem1(7, p, p + 2));
    }
    reports.push_back(check_theorem1(8, 2, 32));
    for (long k : {4, 8, 16, 32}) {
        long depth = 64 / k;
        reports.push_back(check_theorem1(8, k, depth));
        reports.push_back(check_theorem1(9, k, depth));
        reports.push_back(check_theorem1(10, k, depth));
    }
    expect_reports(out, reports);
    for (const auto& rep : reports) {
        expect(out, rep.asserted, rep.check + " unexpectedly demoted to observation");
    }
    return out;
}

Outcome deep_congruences() {
    Outcome out;
    std::vector<TheoremReport> reports;
    for (long p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        reports.push_back(check_extra1_part1(p));
    }
    const std::pair<int, long> pairs[] = {{1, 5}, {1, 7}, {1, 11}, {1, 13},
                                          {2, 5}, {2, 7}, {3, 7}};
    for (auto [r, p] : pairs) reports.push_back(check_extra1_part2(r, p));
    expect_reports(out, reports);
    for (const auto& rep : reports) {
        expect(out, rep.asserted, rep.check + " unexpectedly demoted to observation");
    }
    return out;
}

Outcome modular_constants() {
    Outcome out;
    const char* expected[] = {"-81", "103125/8", "-210171535/64", "1308348857025/1024",
                              "-11660783598520749/16384"};
    for (int r = 1; r <= 5; ++r) {
        expect(out, to_string(cr_constant(r).value) == expected[r - 1],
               "C_" + std::to_string(r) + " wrong");
    }
    return out;
}

Outcome exact_derivation() {
    Outcome out;
    InverseDSeries d = vn_asymptotic_D(7);
    const char* expect_d[] = {"1",
                              "-9/4",
                              "969/160",
                              "-61479/3200",
                              "25225773/358400",
                              "-10092025737/35840000",
                              "2271842858513/2007040000",
                              "-4442983688169/1146880000"};
    expect(out, d.coefficients.size() == 8, "D-series truncated early");
    for (std::size_t i = 0; i < d.coefficients.size() && i < 8; ++i) {
        expect(out, to_string(d.coefficients[i]) == expect_d[i],
               "D-series term " + std::to_string(i) + " wrong");
    }

    std::vector<Rational> n_form = convert_D_to_n(d, 7);
    const char* expect_n[] = {"1", "-9/8", "-111/640", "-9999/25600", "87261/5734400"};
    for (std::size_t i = 0; i < 5; ++i) {
        expect(out, to_string(n_form[i]) == expect_n[i],
               "1/n form term " + std::to_string(i) + " wrong");
    }

    std::vector<Rational> two_n = convert_to_2n_form(d, 7);
    const char* expect_2n[] = {"1", "15/8", "1689/640", "79281/25600", "19691853/5734400"};
    for (std::size_t i = 0; i < 5; ++i) {
        expect(out, to_string(two_n[i]) == expect_2n[i],
               "2n form term " + std::to_string(i) + " wrong");
    }

    LogExpansion lf = log_form(7);
    expect(out, lf.slope == Rational(2), "log-form slope wrong");
    expect(out, lf.log_coefficient == Rational(-4), "log-form log coefficient wrong");
    SymbolicConstant constant;
    constant.unit = Rational(-3);
    constant.log2 = Rational(-9, 2);
    constant.log3 = Rational(3, 2);
    constant.logpi = Rational(-1);
    expect(out, lf.constant == constant, "log-form constant wrong");
    const char* expect_tail[] = {"11/6", "141/160", "9973/28800", "59673/179200"};
    expect(out, lf.tail.size() >= 4, "log-form tail truncated early");
    for (std::size_t i = 0; i < 4 && i < lf.tail.size(); ++i) {
        expect(out, to_string(lf.tail[i]) == expect_tail[i],
               "log-form tail term " + std::to_string(i) + " wrong");
    }
    return out;
}

Outcome numeric_constant_recovery() {
    Outcome out;
    const int precision = 60;
    const long n_max = 300;

    DecimalSequence s;
    s.start = 1;
    s.values.reserve(n_max);
    for (long n = 1; n <= n_max; ++n) {
        Rational ratio = Rational(v_defn(n)) / Rational(factorial(static_cast<unsigned long>(2 * n)));
        BigDecimal x = decimal_log(BigDecimal::from_rational(ratio, precision));
        x = x - BigDecimal(2 * n, precision);
        if (n > 1) {
            x = x + BigDecimal(4, precision) * decimal_log(BigDecimal(n, precision));
        }
        s.values.push_back(x);
    }

    AsymptoticModel model = extract_coefficients(s, 8, 2);
    if (model.coefficients.size() < 3) {
        expect(out, false, "extraction returned fewer than three coefficients");
        return out;
    }

    SymbolicConstant constant = log_form(7).constant;
    BigDecimal reference = constant.evaluate(precision);
    int digits = agreeing_digits(model.coefficients[0].value, reference);
    expect(out, digits >= 20,
           "c_0 matches the closed-form constant to only " + std::to_string(digits) + " digits");
    expect(out, model.coefficients[1].recognized == Rational(11, 6), "c_1 not recognized as 11/6");
    expect(out, model.coefficients[2].recognized == Rational(141, 160),
           "c_2 not recognized as 141/160");

    int conf = std::min(model.coefficients[0].confidence, precision);
    auto symbolic = recognize_symbolic(model.coefficients[0].value.with_precision(conf), 16);
    expect(out, symbolic.has_value() && *symbolic == constant,
           "c_0 not recognized as the closed-form constant");
    return out;
}

Outcome curve_counts_and_patterns() {
    Outcome out;
    CurveCounts counts = kontsevich(60);
    expect(out, counts.at(1) == Integer(1), "n_1 wrong");
    expect(out, counts.at(2) == Integer(1), "n_2 wrong");
    expect(out, counts.at(3) == Integer(12), "n_3 wrong");
    expect(out, counts.at(4) == Integer(620), "n_4 wrong");
    expect_reports(out, nd_congruence_report(60));
    return out;
}

Outcome curve_growth_constants() {
    Outcome out;
    const int precision = 60;
    NdAsymptotics fit = nd_asymptotics(300, precision);

    BigDecimal a_ref = BigDecimal::from_string(
        "0.138009346634518656829562628891755541716014121072", precision);
    BigDecimal b0_ref =
        BigDecimal::from_string("6.0358078488159024106383768720948935", precision);
    BigDecimal b1_ref = BigDecimal::from_string("-2.2352424409362074", precision);

    int a_digits = agreeing_digits(fit.a, a_ref);
    int b0_digits = agreeing_digits(fit.b0, b0_ref);
    int b1_digits = agreeing_digits(fit.b1, b1_ref);
    expect(out, a_digits >= 15, "A agrees to only " + std::to_string(a_digits) + " digits");
    expect(out, b0_digits >= 10, "B0 agrees to only " + std::to_string(b0_digits) + " digits");
    expect(out, b1_digits >= 8, "B1 agrees to only " + std::to_string(b1_digits) + " digits");
    return out;
}

Outcome instanton_numbers() {
    Outcome out;
    const int order = 20;
    InstantonCounts inst = extract_instantons(order);
    expect(out, inst.values[0] == Rational(2875), "q_1 wrong");
    expect(out, inst.values[1] == Rational(609250), "q_2 wrong");
    expect(out, yukawa_series(3).coeff(2) == Rational(4876875),
           "coupling coefficient at q^2 wrong");

    for (long d = 1; d <= order; ++d) {
        expect(out, inst.integral[static_cast<std::size_t>(d - 1)],
               "q_" + std::to_string(d) + " not integral");
    }

    TruncatedSeries k = yukawa_series(order);
    for (long m = 0; m <= order; ++m) {
        Rational rebuilt = (m == 0) ? Rational(5) : Rational(0);
        for (long d = 1; d <= m; ++d) {
            if (m % d == 0) rebuilt += inst.values[static_cast<std::size_t>(d - 1)] * (d * d * d);
        }
        expect(out, k.coeff(static_cast<int>(m)) == rebuilt,
               "coupling does not rebuild at order " + std::to_string(m));
    }

    expect_reports(out, qd_congruence_report(16));
    return out;
}

Outcome property_suites() {
    Outcome out;
    std::mt19937_64 rng(20260814ull);

    // random equivariant weights agree with the definition
    for (long n = 2; n <= 12; ++n) {
        Integer reference = v_defn(n);
        for (int trial = 0; trial < 3; ++trial) {
            WeightVector w = random_weights(n, rng);
            expect(out, v_equivariant(n, w) == Rational(reference),
                   "random-weight fixed-point sum disagrees at n=" + std::to_string(n));
        }
    }

    // localization identity on random coefficient grids
    std::uniform_int_distribution<long> entry(-9, 9);
    for (long n = 2; n <= 4; ++n) {
        std::vector<Rational> roots;
        for (long r = 0; r <= n; ++r) roots.emplace_back(2 * r * r + r + 1);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<std::vector<Rational>> g(static_cast<std::size_t>(n + 1),
                                                 std::vector<Rational>(static_cast<std::size_t>(n + 1)));
            for (auto& row : g) {
                for (auto& cell : row) cell = Rational(entry(rng));
            }
            LocalizationReport rep = localization_identity_check(g, roots);
            expect(out, rep.pass && rep.sum == rep.diagonal_coefficient,
                   "localization identity fails at n=" + std::to_string(n));
        }
    }

    // polynomial product lemmas over their parameter grids
    std::vector<TheoremReport> reports;
    for (long q : {1, 2, 3, 4, 5}) {
        for (long j : {1, 3, 5, 7}) reports.push_back(check_lemma12(q, j));
    }
    for (long q : {2, 3, 4}) {
        for (long j : {1, 3, 5}) reports.push_back(check_lemma13a(q, j));
    }
    for (long q : {3, 4, 5}) {
        for (long j : {1, 3}) reports.push_back(check_lemma13b(q, j));
    }
    for (auto [p, l] : {std::pair<long, long>{3, 2}, {3, 3}, {5, 2}, {2, 3}}) {
        reports.push_back(check_lemma_carl(p, l));
    }
    for (long k : {3, 5, 7, 9}) {
        for (long l : {1, 2, 3}) reports.push_back(check_lemma4(k, l));
    }
    for (long q : {1, 2, 3, 4, 5}) reports.push_back(check_periodicity_equidistribution(q));
    reports.push_back(check_divisibility_cube(2, 120));
    reports.push_back(check_catalan_mod3(0, 60));
    expect_reports(out, reports);
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "exact low-order line counts", 1.0, low_order_values},
        {2, "six computation routes agree to n = 40", 60.0, six_method_agreement},
        {3, "definition-route throughput to n = 224", 120.0, defn_throughput},
        {4, "residue-table theorem across its grid", 300.0, residue_table_theorem},
        {5, "deep congruences at half-integer shifts", 300.0, deep_congruences},
        {6, "exact modular constants C_r", 60.0, modular_constants},
        {7, "exact asymptotic derivation", 30.0, exact_derivation},
        {8, "numeric recovery of the closed-form constant", 300.0, numeric_constant_recovery},
        {9, "curve counts and observed patterns", 120.0, curve_counts_and_patterns},
        {10, "curve-count growth constants", 600.0, curve_growth_constants},
        {11, "instanton numbers and coupling round trip", 600.0, instanton_numbers},
        {12, "randomized property suites", 300.0, property_suites},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome outcome = criterion.run();
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = seconds <= criterion.budget_seconds;
        bool pass = outcome.pass && in_budget;
        std::printf("criterion %2d  %s  %7.2f s / %5.0f s  %s\n", criterion.id,
                    pass ? "PASS" : "FAIL", seconds, criterion.budget_seconds, criterion.name);
        if (!outcome.pass) std::printf("              detail: %s\n", outcome.detail.c_str());
        if (outcome.pass && !in_budget) std::printf("              detail: over time budget\n");
        if (!pass) ++failures;
    }
    std::printf("%d/12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
