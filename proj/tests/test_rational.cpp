#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "tde/rational.hpp"

using tde::Rational;

TEST_CASE("rational normalizes to lowest terms") {
    Rational r(6, -4);
    CHECK(r.str() == "-3/2");
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 5).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parse") {
    CHECK(Rational::parse("10/3") == Rational(10, 3));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS(Rational::parse("1.5"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse(" 1"));
    CHECK_THROWS(Rational::parse("1/-2"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("rational arithmetic and order") {
    Rational a(2, 3), b(1, 3);
    CHECK(a + b == Rational(1));
    CHECK(a - b == b);
    CHECK(a * b == Rational(2, 9));
    CHECK(a / b == Rational(2));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(b < a);
    CHECK(-a < b);
    CHECK(Rational(-7, 2).floor() == Rational(-4));
    CHECK(Rational(-7, 2).ceil() == Rational(-3));
    CHECK(Rational(7, 2).abs() == Rational(7, 2));
    std::ostringstream os;
    os << Rational(-5, 15);
    CHECK(os.str() == "-1/3");
}

TEST_CASE("simplest rational in an interval") {
    CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
    CHECK(simplest_between(Rational(3, 10), Rational(4, 10)) == Rational(1, 3));
    CHECK(simplest_between(Rational(99, 100), Rational(101, 100)) == Rational(1));
    CHECK(simplest_between(Rational(-5, 2), Rational(-2, 1)) == Rational(-2));
    CHECK(simplest_between(Rational(7, 5), Rational(7, 5)) == Rational(7, 5));
    // brute force over small denominators
    for (int n1 = 1; n1 < 20; ++n1)
        for (int n2 = n1; n2 < 20; ++n2) {
            Rational lo(n1, 7), hi(n2, 6);
            if (hi < lo) continue;
            Rational s = simplest_between(lo, hi);
            CHECK(lo <= s);
            CHECK(s <= hi);
            for (int q = 1; q < s.denominator().get_si(); ++q) {
                Rational p = (lo * q).ceil();
                CHECK(hi < p / q);
            }
        }
}
