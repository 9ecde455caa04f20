#include <random>

#include "doctest.h"

#include "enumseq/decimal.hpp"
#include "enumseq/symbolic.hpp"

using namespace enumseq;

TEST_CASE("construction and string round trips") {
    CHECK(BigDecimal(0, 30).is_zero());
    CHECK(BigDecimal(-7, 30).is_negative());
    CHECK(BigDecimal::from_string("12.5", 30).to_rational() == rat(25, 2));
    CHECK(BigDecimal::from_string("-3e-7", 30).to_rational() == rat(-3, 10000000));
    CHECK(BigDecimal::from_string("4.25e+10", 30).to_rational() == rat(42500000000L));
    BigDecimal x = BigDecimal::from_rational(rat(-22, 7), 40);
    BigDecimal y = BigDecimal::from_string(x.to_string(), 40);
    CHECK(x == y);
}

TEST_CASE("rounding is half-even and bounded by one ulp") {
    CHECK(BigDecimal(25, 1).to_rational() == rat(20));
    CHECK(BigDecimal(35, 1).to_rational() == rat(40));
    CHECK(BigDecimal(26, 1).to_rational() == rat(30));

    std::mt19937_64 rng(0xabcdef);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 9999);
    for (int trial = 0; trial < 100; ++trial) {
        Rational v = rat(num(rng), den(rng));
        BigDecimal d = BigDecimal::from_rational(v, 25);
        Rational err = abs(d.to_rational() - v);
        CHECK(err <= d.ulp());
    }
}

TEST_CASE("arithmetic stays within an ulp") {
    const int p = 30;
    BigDecimal third = BigDecimal::from_rational(rat(1, 3), p);
    BigDecimal one = third * BigDecimal(3, p);
    CHECK(abs(one.to_rational() - 1) <= 2 * one.ulp());

    BigDecimal a = BigDecimal::from_rational(rat(355, 113), p);
    BigDecimal b = BigDecimal::from_rational(rat(113, 355), p);
    CHECK(abs((a * b).to_rational() - 1) <= 2 * (a * b).ulp());
    CHECK((a / a).to_rational() == 1);
}

TEST_CASE("agreeing digits") {
    const int p = 40;
    BigDecimal a = BigDecimal::from_string("1.234567890123", p);
    BigDecimal b = BigDecimal::from_string("1.234567891", p);
    int d = agreeing_digits(a, b);
    CHECK(d >= 8);
    CHECK(d <= 10);
    CHECK(agreeing_digits(a, -a) == 0);
    CHECK(agreeing_digits(a, BigDecimal(0, p)) == 0);
    CHECK(agreeing_digits(a, a) == p);
}

TEST_CASE("constants match reference digits") {
    CHECK(agreeing_digits(decimal_pi(50), BigDecimal::from_string(
              "3.14159265358979323846264338327950288419716939937510", 50)) >= 49);
    CHECK(agreeing_digits(decimal_ln2(50), BigDecimal::from_string(
              "0.69314718055994530941723212145817656807550013436026", 50)) >= 49);
    CHECK(agreeing_digits(decimal_ln3(50), BigDecimal::from_string(
              "1.09861228866810969139524523692252570464749055782275", 50)) >= 49);
    CHECK(agreeing_digits(decimal_ln10(50), BigDecimal::from_string(
              "2.30258509299404568401799145468436420760110148862877", 50)) >= 49);
    CHECK(agreeing_digits(decimal_lnpi(50), BigDecimal::from_string(
              "1.14472988584940017414342735135305871164729481291531", 50)) >= 49);
}

TEST_CASE("transcendentals are stable under precision changes") {
    BigDecimal x = BigDecimal::from_rational(rat(7, 3), 40);
    BigDecimal lo = decimal_log(x, 40);
    BigDecimal hi = decimal_log(BigDecimal::from_rational(rat(7, 3), 60), 60);
    CHECK(agreeing_digits(lo, hi.with_precision(40)) >= 38);

    BigDecimal e1 = decimal_exp(BigDecimal(1, 40));
    CHECK(agreeing_digits(e1, BigDecimal::from_string(
              "2.71828182845904523536028747135266249775724709369996", 40)) >= 39);

    // exp and log invert each other
    BigDecimal back = decimal_exp(decimal_log(x));
    CHECK(agreeing_digits(back, x) >= 38);
    CHECK_THROWS(decimal_log(BigDecimal(-1, 30)));
}

TEST_CASE("symbolic constants evaluate linearly") {
    SymbolicConstant a{rat(1, 3), rat(-2), rat(5, 4), rat(0)};
    SymbolicConstant b{rat(-7), rat(1, 2), rat(0), rat(3)};
    BigDecimal lhs = (a + b).evaluate(45);
    BigDecimal rhs = a.evaluate(45) + b.evaluate(45);
    CHECK(agreeing_digits(lhs, rhs) >= 43);
    CHECK((a - a).evaluate(45).is_zero());
    SymbolicConstant scaled = rat(2) * a;
    CHECK(scaled.log2 == rat(-4));
    CHECK(scaled.unit == rat(2, 3));
}

TEST_CASE("symbolic printing") {
    SymbolicConstant c{rat(-3), rat(-9, 2), rat(3, 2), rat(-1)};
    CHECK(c.to_string() == "-3 - 9/2*log(2) + 3/2*log(3) - log(pi)");
    CHECK(SymbolicConstant{}.to_string() == "0");
    CHECK(SymbolicConstant{rat(0), rat(1), rat(0), rat(0)}.to_string() == "log(2)");
}

TEST_CASE("rational recognition is sound on synthetic fractions") {
    std::mt19937_64 rng(0x600df00d);
    std::uniform_int_distribution<long> num(-50000, 50000);
    std::uniform_int_distribution<long> den(1, 9999);
    for (int trial = 0; trial < 200; ++trial) {
        Rational v = rat(num(rng), den(rng));
        BigDecimal x = BigDecimal::from_rational(v, 40);
        auto back = recognize_rational(x, Integer(10000));
        REQUIRE(back.has_value());
        CHECK(*back == v);
    }
    CHECK(!recognize_rational(BigDecimal::from_string("0.1234567890", 40), Integer(10)));
    auto exact = recognize_rational(BigDecimal::from_rational(rat(11, 6), 60), Integer(10000));
    REQUIRE(exact.has_value());
    CHECK(*exact == rat(11, 6));
}

TEST_CASE("symbolic recognition recovers low-height combinations") {
    SymbolicConstant c{rat(-3), rat(-9, 2), rat(3, 2), rat(-1)};
    auto back = recognize_symbolic(c.evaluate(40), 16);
    REQUIRE(back.has_value());
    CHECK(*back == c);

    SymbolicConstant pure{rat(22, 7), rat(0), rat(0), rat(0)};
    auto back2 = recognize_symbolic(pure.evaluate(40), 16);
    REQUIRE(back2.has_value());
    CHECK(*back2 == pure);

    SymbolicConstant mixed{rat(0), rat(1, 3), rat(-2), rat(5, 2)};
    auto back3 = recognize_symbolic(mixed.evaluate(40), 8);
    REQUIRE(back3.has_value());
    CHECK(*back3 == mixed);
}

TEST_CASE("symbolic recognition rejects unrelated values") {
    CHECK(!recognize_symbolic(decimal_pi(40), 4));
}
