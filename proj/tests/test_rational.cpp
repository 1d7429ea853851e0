#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <limits>

#include "maxplus/errors.hpp"
#include "maxplus/random.hpp"
#include "maxplus/rational.hpp"

using maxplus::checked_lcm;
using maxplus::OverflowError;
using maxplus::ParseError;
using maxplus::Rational;
using maxplus::Rng;

namespace {

Rational random_rational(Rng& rng) {
    auto num = std::int64_t(rng.below(2001)) - 1000;
    auto den = std::int64_t(rng.range(1, 60));
    return Rational(num, den);
}

}  // namespace

TEST_CASE("rationals reduce on construction") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -9) == Rational(1, 3));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), maxplus::DomainError);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 6) + Rational(1, 10) == Rational(4, 15));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));

    // The float-mode classic: a tenth really is a tenth here.
    Rational tenth(1, 10);
    Rational sum;
    for (int i = 0; i < 10; ++i) sum = sum + tenth;
    CHECK(sum == Rational(1));
}

TEST_CASE("rational order uses exact cross multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(7, 5) > Rational(4, 3));

    // Values chosen so that naive cross multiplication in 64 bits would
    // overflow; the comparison must still be correct.
    std::int64_t big = std::int64_t(1) << 62;
    CHECK(Rational(big, 3) > Rational(big - 1, 3));
}

TEST_CASE("from_string parses integers, decimals, exponents, fractions") {
    CHECK(Rational::from_string("123") == Rational(123));
    CHECK(Rational::from_string("-4.75") == Rational(-19, 4));
    CHECK(Rational::from_string("2.5e-3") == Rational(1, 400));
    CHECK(Rational::from_string("7/20") == Rational(7, 20));
    CHECK(Rational::from_string("0.1") == Rational(1, 10));
    CHECK(Rational::from_string("+0.25") == Rational(1, 4));
    CHECK(Rational::from_string("1e2") == Rational(100));

    CHECK_THROWS_AS(Rational::from_string("x"), ParseError);
    CHECK_THROWS_AS(Rational::from_string(""), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), maxplus::DomainError);
    CHECK_THROWS_AS(Rational::from_string("1.2.3"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1e99999"), OverflowError);
}

TEST_CASE("to_string emits exact decimals when possible") {
    CHECK(Rational(1, 10).to_string() == "0.1");
    CHECK(Rational(-19, 4).to_string() == "-4.75");
    CHECK(Rational(3).to_string() == "3");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(1, 3).to_string() == "1/3");
    CHECK(Rational(-5, 6).to_string() == "-5/6");
}

TEST_CASE("to_string round-trips through from_string") {
    Rng rng(20240814);
    for (int i = 0; i < 500; ++i) {
        Rational r = random_rational(rng);
        CHECK(Rational::from_string(r.to_string()) == r);
    }
}

TEST_CASE("overflow is an error, not silent wraparound") {
    Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Rational(1), OverflowError);
    CHECK_THROWS_AS(big * Rational(2), OverflowError);
    CHECK_THROWS_AS(
        maxplus::abs(Rational(std::numeric_limits<std::int64_t>::min())),
        OverflowError);
}

TEST_CASE("checked_lcm") {
    CHECK(checked_lcm(4, 6) == 12);
    CHECK(checked_lcm(1, 7) == 7);
    CHECK(checked_lcm(12, 12) == 12);
    CHECK_THROWS_AS(
        checked_lcm(std::numeric_limits<std::int64_t>::max() - 1, 7),
        OverflowError);
}

TEST_CASE("to_double") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(-3, 4).to_double() == -0.75);
}

TEST_CASE("sums and lattice combinations keep denominators inside the lcm") {
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        Rational a = random_rational(rng);
        Rational b = random_rational(rng);
        std::int64_t scale = checked_lcm(a.denominator(), b.denominator());
        for (Rational r : {a + b, a - b, std::min(a, b), std::max(a, b)})
            CHECK(scale % r.denominator() == 0);
    }
}
