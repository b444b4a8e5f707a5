#include <doctest.h>

#include <random>

#include "ylat/rational.hpp"

using namespace ylat;

namespace {
Rational rat(const char* s) { return parse_rational(s); }
}  // namespace

TEST_CASE("factorial basics") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    // oracle: direct running product
    Integer product(1);
    for (unsigned long n = 1; n <= 30; ++n) {
        product *= n;
        CHECK(factorial(n) == product);
    }
    CHECK(factorial(5) == 120);
}

TEST_CASE("pochhammer examples") {
    CHECK(pochhammer(rat("7/3"), 0) == 1);
    CHECK(pochhammer(rat("1/2"), 3) == rat("15/8"));  // (1/2)(3/2)(5/2)
    CHECK(pochhammer(Rational(3), 4) == 360);         // 3*4*5*6
}

TEST_CASE("pochhammer splitting and factorial identities") {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 9), len(0, 20);
    for (int trial = 0; trial < 200; ++trial) {
        Rational x = make_rational(num(gen), den(gen));
        unsigned long m = static_cast<unsigned long>(len(gen));
        unsigned long n = static_cast<unsigned long>(len(gen));
        Rational shifted = x + Rational(static_cast<long>(m));
        CHECK(pochhammer(x, m + n) == pochhammer(x, m) * pochhammer(shifted, n));
    }
    for (unsigned long n = 0; n <= 50; ++n) CHECK(pochhammer(Rational(1), n) == Rational(factorial(n)));
}

TEST_CASE("complex arithmetic and norms") {
    GaussianRational zero;
    CHECK(norm_sq(zero) == 0);
    GaussianRational i(Rational(0), Rational(1));
    CHECK(norm_sq(i) == 1);
    GaussianRational z(rat("3/2"), rat("1/2"));
    CHECK(norm_sq(z) == rat("5/2"));
    CHECK(conjugate(z).im == rat("-1/2"));
    CHECK(conjugate(z).re == z.re);

    std::mt19937 gen(11);
    std::uniform_int_distribution<int> num(-8, 8), den(1, 5), len(0, 20);
    for (int trial = 0; trial < 100; ++trial) {
        GaussianRational w(make_rational(num(gen), den(gen)), make_rational(num(gen), den(gen)));
        unsigned long n = static_cast<unsigned long>(len(gen));
        CHECK(norm_sq(w) == norm_sq(conjugate(w)));
        GaussianRational paired = pochhammer(w, n) * pochhammer(conjugate(w), n);
        CHECK(paired.im == 0);
        CHECK(paired.re >= 0);
    }
}

TEST_CASE("complex division inverts multiplication") {
    GaussianRational a(rat("2/3"), rat("-5/7"));
    GaussianRational b(rat("1/2"), rat("4/3"));
    CHECK((a * b) / b == a);
    CHECK_THROWS_AS(a / GaussianRational(), Error);
}

TEST_CASE("to_double rounds to nearest") {
    CHECK(to_double(rat("1/2")) == 0.5);
    CHECK(to_double(rat("15/8")) == 1.875);
    CHECK(to_double(rat("1/3")) == 1.0 / 3.0);
    CHECK(to_double(rat("-1/3")) == -1.0 / 3.0);
    CHECK(to_double(Rational(0)) == 0.0);
    // exactly representable stays exact
    CHECK(to_double(make_rational(1, 1024)) == 0.0009765625);
    CHECK_THROWS_AS(to_double(rat("1/3"), 24), Error);

    // doubles are rationals, so conversion back must be the identity
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 200; ++trial) {
        double d = static_cast<double>(gen()) / static_cast<double>(gen() | 1);
        if (!std::isfinite(d)) continue;
        CHECK(to_double(Rational(d)) == d);
    }
}

TEST_CASE("rational text round-trip") {
    for (const char* s : {"0", "1", "-1", "1/2", "-22/7", "355/113"}) {
        CHECK(format(parse_rational(s)) == s);
    }
    CHECK(parse_rational("4/8") == rat("1/2"));  // normalized on input
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2x"), ParseError);
    try {
        parse_rational("12/x");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 3);
    }
}

TEST_CASE("complex text round-trip") {
    GaussianRational z = parse_complex("3/2+1/2i");
    CHECK(z.re == rat("3/2"));
    CHECK(z.im == rat("1/2"));
    for (const char* s : {"i", "-i", "2i", "-1/3i", "3/2+1/2i", "1-i", "-5/4", "0"}) {
        CHECK(format(parse_complex(s)) == s);
    }
    CHECK_THROWS_AS(parse_complex("1+"), ParseError);
    CHECK_THROWS_AS(parse_complex("1+2"), ParseError);
    CHECK_THROWS_AS(parse_complex("i2"), ParseError);
}
