#include <doctest.h>

#include <random>
#include <sstream>

#include "qdice/rational.hpp"

using qdice::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(2, 4).num() == 1);
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(5, -1).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

    // the three-dice identity: 3*23/1800 + 3*3133/115200 = 307/2560
    CHECK(Rational(3) * Rational(23, 1800) + Rational(3) * Rational(3133, 115200) ==
          Rational(307, 2560));
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 7) == Rational(1));
    CHECK(Rational(1, 2) <= Rational(1, 2));
    CHECK(Rational(5, 4) > Rational(1));
    CHECK(Rational(1, 3).sign() == 1);
    CHECK(Rational(-1, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-7, 2).abs() == Rational(7, 2));
}

TEST_CASE("parse and str round-trip") {
    CHECK(Rational::parse("23/1800") == Rational(23, 1800));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("+4") == Rational(4));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK_FALSE(Rational::parse("1/0").has_value());
    CHECK_FALSE(Rational::parse("").has_value());
    CHECK_FALSE(Rational::parse("1.5").has_value());
    CHECK_FALSE(Rational::parse("2/-3").has_value());
    CHECK_FALSE(Rational::parse("7 ").has_value());
    CHECK_FALSE(Rational::parse("a/b").has_value());
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);

    CHECK(Rational(307, 2560).str() == "307/2560");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(8, 4).str() == "2");
    std::ostringstream os;
    os << Rational(3133, 115200);
    CHECK(os.str() == "3133/115200");
}

TEST_CASE("decimal rendering: nine significant digits, half away from zero") {
    CHECK(Rational(307, 1280).decimal() == "0.239843750");
    CHECK(Rational(973, 1280).decimal() == "0.760156250");
    CHECK(Rational(307, 2560).decimal() == "0.119921875");
    CHECK(Rational(23, 1800).decimal() == "0.0127777778");
    CHECK(Rational(3133, 115200).decimal() == "0.0271961806");
    CHECK(Rational(1, 512).decimal() == "0.00195312500");

    CHECK(Rational(0).decimal() == "0");
    CHECK(Rational(1).decimal() == "1.00000000");
    CHECK(Rational(-307, 1280).decimal() == "-0.239843750");
    CHECK(Rational(2, 3).decimal() == "0.666666667");
    CHECK(Rational(1, 3).decimal(3) == "0.333");
    CHECK(Rational(1234567891).decimal() == "1234567890");  // rounds in the last kept digit
    CHECK(Rational(12345678912).decimal() == "12345678900");
    CHECK(Rational(1, 2).decimal(1) == "0.5");
    CHECK(Rational(999999999950L, 1000000000000L).decimal() == "1.00000000");  // carry ripples up
    CHECK(Rational(1, 1000000).decimal(3) == "0.00000100");
    CHECK_THROWS_AS(Rational(1, 2).decimal(0), std::invalid_argument);
}

TEST_CASE("field axioms hold on random samples") {
    std::mt19937_64 rng(20260816);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    for (int t = 0; t < 300; ++t) {
        const Rational a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}
