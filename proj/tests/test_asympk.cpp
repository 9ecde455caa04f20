#include <functional>
#include <stdexcept>

#include "doctest.h"

#include "enumseq/asympk.hpp"
#include "enumseq/decimal.hpp"

using namespace enumseq;

namespace {

DecimalSequence build_sequence(long start, long count, int precision,
                               const std::function<BigDecimal(long)>& term) {
    DecimalSequence s;
    s.start = start;
    s.values.reserve(static_cast<std::size_t>(count));
    for (long n = start; n < start + count; ++n) s.values.push_back(term(n));
    return s;
}

BigDecimal rational_term(const Rational& r, int precision) {
    return BigDecimal::from_rational(r, precision);
}

}  // namespace

TEST_CASE("sequence container enforces its index window") {
    DecimalSequence s = build_sequence(3, 5, 30, [](long n) { return BigDecimal(n, 30); });
    CHECK(s.end_index() == 7);
    CHECK(s.precision() == 30);
    CHECK(s.at(3).to_string() == "3");
    CHECK(s.at(7).to_string() == "7");
    CHECK_THROWS_AS((void)s.at(2), std::out_of_range);
    CHECK_THROWS_AS((void)s.at(8), std::out_of_range);
}

TEST_CASE("order heuristic grows with the logarithm of the length") {
    CHECK(default_asympk_order(10) == 5);
    CHECK(default_asympk_order(100) == 5);
    CHECK(default_asympk_order(300) == 6);
    CHECK(default_asympk_order(1000) == 7);
}

TEST_CASE("acceleration fixes constant sequences") {
    const int precision = 40;
    BigDecimal c = rational_term(Rational(7, 3), precision);
    DecimalSequence s = build_sequence(1, 60, precision, [&](long) { return c; });
    DecimalSequence out = asympk_apply(s, 4);
    CHECK(out.start == 5);
    CHECK(out.end_index() == 60);
    for (long n = out.start; n <= out.end_index(); ++n) {
        // the alternating sum cancels large terms, so allow rounding losses
        CHECK(agreeing_digits(out.at(n), c) >= precision - 15);
    }
}

TEST_CASE("acceleration rejects bad arguments") {
    DecimalSequence s = build_sequence(1, 5, 30, [](long n) { return BigDecimal(n, 30); });
    CHECK_THROWS_AS((void)asympk_apply(s, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)asympk_apply(s, 10), std::invalid_argument);
}

TEST_CASE("plain extraction recovers an inverse-power tail") {
    const int precision = 50;
    DecimalSequence s = build_sequence(1, 120, precision, [&](long n) {
        Rational value = Rational(3, 7) + Rational(5, 3) / n + Rational(1) / (n * n) -
                         Rational(4) / (n * n * n);
        return rational_term(value, precision);
    });
    AsymptoticModel model = extract_coefficients(s, 6, 3);
    CHECK(model.form == AsymptoticForm::plain);
    REQUIRE(model.coefficients.size() == 4);
    CHECK(model.coefficients[0].recognized == Rational(3, 7));
    CHECK(model.coefficients[1].recognized == Rational(5, 3));
    CHECK(model.coefficients[2].recognized == Rational(1));
    CHECK(model.coefficients[3].recognized == Rational(-4));
    CHECK(model.coefficients[0].confidence >= 20);
    CHECK(!model.slope);
    CHECK(!model.log_term);
    CHECK(!model.power);
}

TEST_CASE("logarithmic growth is separated before extraction") {
    const int precision = 50;
    DecimalSequence s = build_sequence(1, 150, precision, [&](long n) {
        BigDecimal log_part = BigDecimal(2, precision) * decimal_log(BigDecimal(n, precision));
        return log_part + rational_term(Rational(1, 2) + Rational(3) / n, precision);
    });
    AsymptoticModel model = variant_I(s, 6, 2);
    CHECK(model.form == AsymptoticForm::variant_i);
    REQUIRE(model.log_term.has_value());
    CHECK(model.log_term->recognized == Rational(2));
    REQUIRE(model.coefficients.size() == 3);
    CHECK(model.coefficients[0].recognized == Rational(1, 2));
    CHECK(model.coefficients[1].recognized == Rational(3));
}

TEST_CASE("linear and logarithmic growth are both separated") {
    const int precision = 50;
    DecimalSequence s = build_sequence(1, 150, precision, [&](long n) {
        BigDecimal log_part = BigDecimal(3, precision) * decimal_log(BigDecimal(n, precision));
        return log_part + rational_term(Rational(n, 4) + Rational(7) + Rational(2) / n, precision);
    });
    AsymptoticModel model = variant_II(s, 6, 2);
    CHECK(model.form == AsymptoticForm::variant_ii);
    REQUIRE(model.slope.has_value());
    REQUIRE(model.log_term.has_value());
    CHECK(model.slope->recognized == Rational(1, 4));
    CHECK(model.log_term->recognized == Rational(3));
    REQUIRE(model.coefficients.size() == 3);
    CHECK(model.coefficients[0].recognized == Rational(7));
    CHECK(model.coefficients[1].recognized == Rational(2));
}

TEST_CASE("power-law amplitude and exponent are recovered") {
    const int precision = 50;
    DecimalSequence s = build_sequence(1, 150, precision, [&](long n) {
        BigDecimal exponent =
            rational_term(Rational(3, 2), precision) * decimal_log(BigDecimal(n, precision));
        BigDecimal power = decimal_exp(exponent);
        return power * rational_term(Rational(5) + Rational(10) / n, precision);
    });
    AsymptoticModel model = variant_III(s, 6, 1);
    CHECK(model.form == AsymptoticForm::variant_iii);
    REQUIRE(model.power.has_value());
    CHECK(model.power->recognized == Rational(3, 2));
    REQUIRE(model.coefficients.size() >= 2);
    CHECK(model.coefficients[0].recognized == Rational(5));
    CHECK(model.coefficients[1].recognized == Rational(2));
}

TEST_CASE("ratio-based extraction requires positive terms") {
    DecimalSequence s = build_sequence(1, 20, 30, [](long n) { return BigDecimal(n - 3, 30); });
    CHECK_THROWS_AS((void)variant_III(s, 2, 1), std::domain_error);
}

TEST_CASE("form names round trip through the printer") {
    CHECK(to_string(AsymptoticForm::plain) == "plain");
    CHECK(to_string(AsymptoticForm::variant_i) == "I");
    CHECK(to_string(AsymptoticForm::variant_ii) == "II");
    CHECK(to_string(AsymptoticForm::variant_iii) == "III");
}
