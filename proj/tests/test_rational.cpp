#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "greenrec/rational.hpp"
#include "greenrec/scalar.hpp"

using greenrec::rational;
using greenrec::scalar_pow;

namespace {

// Deterministic generator of small random rationals for the axiom checks.
struct rational_gen {
    std::mt19937_64 rng;

    explicit rational_gen(std::uint64_t seed) : rng(seed) {}

    rational next() {
        auto num = static_cast<long long>(rng() % 2001) - 1000;
        auto den = static_cast<long long>(rng() % 50) + 1;
        return rational(rational::int_type(num), rational::int_type(den));
    }

    rational next_nonzero() {
        for (;;) {
            rational r = next();
            if (!r.is_zero()) return r;
        }
    }
};

} // namespace

TEST_CASE("parse reduces to canonical form") {
    CHECK(rational::parse("3/6") == rational(1, 2));
    CHECK(rational::parse("-4") == rational(-4));
    CHECK(rational::parse("0/7") == rational());
    CHECK(rational::parse("0/7").denominator() == 1);
    CHECK(rational::parse("-0") == rational());
    CHECK(rational::parse("123456789012345678901234567890/3").numerator() ==
          rational::int_type("41152263004115226300411522630"));
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(rational::parse(""), greenrec::parse_error);
    CHECK_THROWS_AS(rational::parse("-"), greenrec::parse_error);
    CHECK_THROWS_AS(rational::parse("3/"), greenrec::parse_error);
    CHECK_THROWS_AS(rational::parse("/3"), greenrec::parse_error);
    CHECK_THROWS_AS(rational::parse("+3"), greenrec::parse_error);
    CHECK_THROWS_AS(rational::parse("3/-2"), greenrec::parse_error);
    CHECK_THROWS_AS(rational::parse(" 3"), greenrec::parse_error);
    CHECK_THROWS_AS(rational::parse("3 "), greenrec::parse_error);
    CHECK_THROWS_AS(rational::parse("1.5"), greenrec::parse_error);
    CHECK_THROWS_AS(rational::parse("3/0"), greenrec::domain_error);
}

TEST_CASE("render round-trips canonically") {
    for (const char* text : {"3/6", "-4", "0/7", "22/7", "-9/12", "1000000000000000/7"}) {
        rational r = rational::parse(text);
        CHECK(rational::parse(r.str()) == r);
        // Rendering a canonical value is a fixed point.
        CHECK(rational::parse(r.str()).str() == r.str());
    }
    CHECK(rational(1, 2).str() == "1/2");
    CHECK(rational(-4).str() == "-4");
    CHECK(rational().str() == "0");
}

TEST_CASE("canonical form is construction-path independent") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(-3, -6) == rational(1, 2));
    CHECK(rational(3, -6) == rational(-1, 2));
    CHECK(rational(0, 17) == rational());
    CHECK(rational(3, -6).denominator() > 0);
    CHECK_THROWS_AS(rational(1, 0), greenrec::domain_error);

    rational via_sum = rational(1, 6) + rational(1, 3);
    CHECK(via_sum == rational(1, 2));
    CHECK(via_sum.numerator() == 1);
    CHECK(via_sum.denominator() == 2);
}

TEST_CASE("ordering by value") {
    CHECK(rational(1, 3) < rational(1, 2));
    CHECK(rational(-1, 2) < rational(1, 3));
    CHECK(rational(-2, 3) < rational(-1, 2));
    CHECK(rational(7, 1) > rational(13, 2));
    CHECK(rational(2, 4) <= rational(1, 2));
}

TEST_CASE("integer powers are exact") {
    CHECK(scalar_pow(rational(2), 5) == rational(32));
    CHECK(scalar_pow(rational(2), -2) == rational(1, 4));
    CHECK(scalar_pow(rational(-3, 2), 3) == rational(-27, 8));
    CHECK(scalar_pow(rational(7), 0) == rational(1));
    CHECK(scalar_pow(rational(), 0) == rational(1));
    CHECK(scalar_pow(rational(2), 100) ==
          rational(rational::int_type("1267650600228229401496703205376")));
    CHECK_THROWS_AS(scalar_pow(rational(), -1), greenrec::domain_error);
}

TEST_CASE("field axioms hold exactly on randomized inputs") {
    rational_gen gen(20240811);
    const rational one(1);
    for (int i = 0; i < 500; ++i) {
        rational a = gen.next();
        rational b = gen.next();
        rational c = gen.next();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == rational());
        rational nz = gen.next_nonzero();
        CHECK(nz * (one / nz) == one);
    }
}

TEST_CASE("division by zero is a domain error") {
    CHECK_THROWS_AS(rational(3) / rational(), greenrec::domain_error);
}

TEST_CASE("float mode conversions") {
    using traits = greenrec::scalar_traits<double>;
    CHECK(traits::parse("1/2") == 0.5);
    CHECK(traits::parse("-4") == -4.0);
    CHECK(traits::render(0.5) == "0.5");
    CHECK(greenrec::pow_integer(2.0, -2) == 0.25);
}
