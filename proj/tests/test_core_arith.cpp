#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"

#include "enumseq/arith.hpp"
#include "enumseq/integer.hpp"
#include "enumseq/poly.hpp"
#include "enumseq/series.hpp"

using namespace enumseq;

TEST_CASE("integer utilities") {
    CHECK(factorial(0) == Integer(1));
    CHECK(factorial(6) == Integer(720));
    CHECK(binomial(10, 3) == Integer(120));
    CHECK(binomial(3, 10) == Integer(0));
    CHECK(int_pow(Integer(3), 5) == Integer(243));
    CHECK(int_pow(Integer(-2), 3) == Integer(-8));
    CHECK(mod_nonneg_u64(Integer(-1), 7) == 6);
    CHECK(mod_nonneg_u64(Integer(-14), 7) == 0);
    CHECK(is_odd(Integer(-3)));
    CHECK(!is_odd(Integer(0)));
    CHECK(divides(Integer(27), Integer(-54)));
    CHECK(!divides(Integer(27), Integer(28)));
    CHECK(to_string(Integer(-305093061)) == "-305093061");
    CHECK(integer_from_string("-305093061") == Integer(-305093061));
    CHECK(rational_from_string("103125/8") == rat(103125, 8));
    CHECK(to_integer_exact(rat(12, 4)) == Integer(3));
    CHECK_THROWS(to_integer_exact(rat(1, 2)));
}

TEST_CASE("pascal identity on random binomials") {
    std::mt19937_64 rng(0x1a2b3c4d);
    std::uniform_int_distribution<unsigned long> pick(1, 80);
    for (int trial = 0; trial < 50; ++trial) {
        unsigned long n = pick(rng);
        unsigned long m = pick(rng) % (n + 1);
        Integer lhs = binomial(n + 1, m + 1);
        Integer rhs = binomial(n, m) + binomial(n, m + 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("modular scalars") {
    ModInt a(5, 7), b(3, 7);
    CHECK((a + b).value == 1);
    CHECK((a - b).value == 2);
    CHECK((b - a).value == 5);
    CHECK((a * b).value == 1);
    CHECK(ModInt(6, 7) * ModInt(6, 7) == ModInt(1, 7));
    // products stay exact near the 64-bit edge
    std::uint64_t m = 0xffffffff00000000ull >> 2;
    ModInt big(m - 1, m);
    CHECK((big * big).value == 1);
}

TEST_CASE("dense polynomial basics") {
    CHECK(IntPoly().degree() == -1);
    CHECK(IntPoly::constant(Integer(0)).degree() == -1);

    RatPoly p = RatPoly::from_coefficients({Rational(-1), Rational(0), Rational(3)});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(1) == Rational(0));
    CHECK(p.coeff(5) == Rational(0));
    CHECK(poly_eval(p, Rational(2)) == Rational(11));

    // trailing zeros trim away
    RatPoly padded = RatPoly::from_coefficients({Rational(4), Rational(0), Rational(0)});
    CHECK(padded.degree() == 0);

    RatPoly q = RatPoly::from_coefficients({Rational(2), Rational(1)});
    RatPoly prod = poly_mul(p, q);
    // (3x^2 - 1)(x + 2) = 3x^3 + 6x^2 - x - 2
    CHECK(prod.coeff(3) == Rational(3));
    CHECK(prod.coeff(2) == Rational(6));
    CHECK(prod.coeff(1) == Rational(-1));
    CHECK(prod.coeff(0) == Rational(-2));
}

TEST_CASE("truncated linear products agree with full products") {
    std::mt19937_64 rng(0xfeedbeef);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Integer> cs;
        for (int i = 0; i <= 6; ++i) cs.emplace_back(coeff(rng));
        long a = coeff(rng), b = coeff(rng);
        if (b == 0) b = 1;
        IntPoly full = IntPoly::from_coefficients(cs);
        full.mul_linear(Integer(a), Integer(b), 0);
        IntPoly cut = IntPoly::from_coefficients(cs);
        cut.mul_linear(Integer(a), Integer(b), 5);
        for (std::size_t i = 0; i < 5; ++i) CHECK(cut.coeff(i) == full.coeff(i));
        CHECK(cut.degree() < 5);
    }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == rat(1));
    CHECK(bernoulli(1) == rat(-1, 2));
    CHECK(bernoulli(2) == rat(1, 6));
    CHECK(bernoulli(3) == rat(0));
    CHECK(bernoulli(4) == rat(-1, 30));
    CHECK(bernoulli(12) == rat(-691, 2730));
}

TEST_CASE("odd-argument power sums match direct summation") {
    for (unsigned long m : {2ul, 4ul, 6ul, 8ul}) {
        RatPoly s = faulhaber_odd_sum(m);
        for (long d = 1; d <= 21; d += 2) {
            Rational direct(0);
            for (long r = 1; r <= d; r += 2) direct += rat(int_pow(Integer(r), m));
            CHECK(poly_eval(s, rat(d)) == direct);
        }
    }
}

TEST_CASE("elementary symmetric functions") {
    std::vector<Rational> values = {rat(1), rat(2), rat(3)};
    auto s = elementary_symmetric(values, 3);
    CHECK(s[0] == rat(1));
    CHECK(s[1] == rat(6));
    CHECK(s[2] == rat(11));
    CHECK(s[3] == rat(6));

    std::mt19937_64 rng(0x7777);
    std::shuffle(values.begin(), values.end(), rng);
    auto t = elementary_symmetric(values, 3);
    CHECK(s == t);
}

TEST_CASE("series arithmetic round trips") {
    std::mt19937_64 rng(0x5e51e5);
    std::uniform_int_distribution<long> coeff(-6, 6);
    for (int trial = 0; trial < 30; ++trial) {
        TruncatedSeries s(10);
        for (int i = 0; i <= 10; ++i) s.set_coeff(i, rat(coeff(rng), 1 + trial % 3));

        // inverse: s * s^{-1} = 1 when the constant term is nonzero
        if (s.coeff(0) != 0) {
            TruncatedSeries prod = series_mul(s, series_inverse(s));
            CHECK(prod.coeff(0) == rat(1));
            for (int i = 1; i <= 10; ++i) CHECK(prod.coeff(i) == rat(0));
        }
        // log(exp(t)) = t for t with zero constant term
        TruncatedSeries t = s;
        t.set_coeff(0, rat(0));
        TruncatedSeries back = series_log(series_exp(t) );
        for (int i = 0; i <= 10; ++i) CHECK(back.coeff(i) == t.coeff(i));
    }
}

TEST_CASE("series reversion round trips") {
    std::mt19937_64 rng(0xc0ffee);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        int order = 4 + static_cast<int>(rng() % 9);  // 4..12
        TruncatedSeries s(order);
        s.set_coeff(1, rat(1 + static_cast<long>(rng() % 4)));
        for (int i = 2; i <= order; ++i) {
            long den = coeff(rng);
            s.set_coeff(i, rat(coeff(rng), 1 + den * den));
        }
        TruncatedSeries inv = series_reversion(s);
        TruncatedSeries composed = series_compose(s, inv);
        CHECK(composed.coeff(0) == rat(0));
        CHECK(composed.coeff(1) == rat(1));
        for (int i = 2; i <= order; ++i) CHECK(composed.coeff(i) == rat(0));
    }
}

TEST_CASE("series helpers") {
    TruncatedSeries s(4);
    for (int i = 0; i <= 4; ++i) s.set_coeff(i, rat(i + 1));
    TruncatedSeries up = series_shift_up(s);
    CHECK(up.coeff(0) == rat(0));
    CHECK(up.coeff(1) == rat(1));
    CHECK(up.coeff(4) == rat(4));
    TruncatedSeries d = series_derivative(s);
    CHECK(d.coeff(0) == rat(2));
    CHECK(d.coeff(1) == rat(6));
    CHECK(d.coeff(3) == rat(20));
    CHECK(d.coeff(4) == rat(0));

    CHECK_THROWS(series_exp(TruncatedSeries::from_coefficients(2, {rat(1), rat(0), rat(0)})));
    CHECK_THROWS(series_inverse(TruncatedSeries(3)));
}
