#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cuspidal/curve.hpp"
#include "cuspidal/errors.hpp"
#include "cuspidal/rational.hpp"

using namespace cuspidal;

TEST_CASE("rational is stored reduced with positive denominator") {
  const Rational x(6, -4);
  CHECK(x.numerator() == -3);
  CHECK(x.denominator() == 2);
  CHECK(x.str() == "-3/2");
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational::parse("x/2"), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational floor and fractional part") {
  CHECK(Rational(-3, 2).floor() == -2);
  CHECK(Rational(-3, 2).frac() == Rational(1, 2));
  CHECK(Rational(7).floor() == 7);
  CHECK(Rational(7).frac() == Rational(0));
  CHECK(Rational(5, 3).floor() == 1);
}

TEST_CASE("rational arithmetic round trips on random fractions") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> num(-1000, 1000), den(1, 500);
  for (int i = 0; i < 500; ++i) {
    const Rational x(num(rng), den(rng)), y(num(rng), den(rng));
    CHECK((x + y) - y == x);
    if (y.sign() != 0) CHECK((x / y) * y == x);
    const Rational f = x.frac();
    CHECK(Rational(x.floor(), mpz_class(1)) + f == x);
    CHECK(f >= Rational(0));
    CHECK(f < Rational(1));
  }
}

TEST_CASE("curve type derived quantities") {
  for (Int e = 0; e <= 10; ++e) {
    CHECK(make_curve_type(4, 4, e).g() == 6 * e + 9);
  }
  const auto c66 = make_curve_type(6, 6, 0);
  CHECK(c66.g() == 25);
  CHECK(c66.w() == 6);
  CHECK(c66.d() == 72);
  CHECK(c66.c() == 6);

  const auto c11 = make_curve_type(1, 1, 0);
  CHECK(c11.g() == 0);
  CHECK(c11.w() == 1);
  CHECK(c11.d() == 2);

  // a = 0 is accepted when e > 0.
  const auto c03 = make_curve_type(0, 3, 1);
  CHECK(c03.w() == 3);
  CHECK(c03.g() == 1);
}

TEST_CASE("curve type rejects invalid input") {
  CHECK_THROWS_AS(make_curve_type(1, 0, 0), DomainError);
  CHECK_THROWS_AS(make_curve_type(1, 0, 3), DomainError);
  CHECK_THROWS_AS(make_curve_type(-1, 2, 0), DomainError);
  CHECK_THROWS_AS(make_curve_type(1, 2, -1), DomainError);
  // d = 0.
  CHECK_THROWS_AS(make_curve_type(0, 3, 0), DomainError);
}

TEST_CASE("d - 2g = 2a + 2b + be - 2 on a grid") {
  for (Int a = 0; a <= 12; ++a) {
    for (Int b = 1; b <= 12; ++b) {
      for (Int e = 0; e <= 6; ++e) {
        CurveType ct = [&] {
          try {
            return make_curve_type(a, b, e);
          } catch (const DomainError&) {
            return make_curve_type(1, 1, 0);
          }
        }();
        CHECK(ct.d() - 2 * ct.g() == 2 * ct.a() + 2 * ct.b() + ct.b() * ct.e() - 2);
        CHECK(ct.g() >= 0);
      }
    }
  }
}

TEST_CASE("puiseux cusps") {
  const auto c = make_cusp(3, 6 * 2 + 10);
  CHECK(c.mu() == 42);
  CHECK(c.delta() == 21);
  CHECK(c.delta() == make_curve_type(4, 4, 2).g());

  CHECK(make_cusp(2, 3).mu() == 2);
  CHECK(make_cusp(2, 3).delta() == 1);
  CHECK(make_cusp(6, 11).mu() == 50);
  CHECK(make_cusp(6, 11).delta() == 25);

  CHECK_THROWS_AS(make_cusp(4, 6), DomainError);
  CHECK_THROWS_AS(make_cusp(5, 3), DomainError);
  CHECK_THROWS_AS(make_cusp(1, 3), DomainError);
  CHECK_THROWS_AS(make_cusp(3, 3), DomainError);

  CHECK(parse_cusp("2:51") == make_cusp(2, 51));
  CHECK_THROWS_AS(parse_cusp("2-51"), DomainError);
  CHECK_THROWS_AS(parse_cusp("2:5x"), DomainError);
  CHECK_THROWS_AS(parse_cusp(":5"), DomainError);
}

TEST_CASE("milnor number is even for every cusp") {
  for (Int r = 2; r <= 30; ++r) {
    for (Int s = r + 1; s <= 60; ++s) {
      if (gcd(r, s) != 1) continue;
      const auto c = make_cusp(r, s);
      CHECK(c.mu() % 2 == 0);
      CHECK(2 * c.delta() == c.mu());
    }
  }
}

TEST_CASE("configuration genus budget") {
  const auto ct = make_curve_type(6, 6, 0);
  CuspConfiguration cfg{{make_cusp(6, 11)}};
  CHECK(cfg.genus_compatible(ct));
  CHECK_NOTHROW(require_genus_compatible(ct, cfg));

  CuspConfiguration bad{{make_cusp(2, 3)}};
  CHECK_FALSE(bad.genus_compatible(ct));
  try {
    require_genus_compatible(ct, bad);
    FAIL("expected GenusMismatch");
  } catch (const GenusMismatch& ex) {
    CHECK(std::string(ex.what()).find("g = 25") != std::string::npos);
  }

  CuspConfiguration two{{make_cusp(7, 9), make_cusp(2, 3)}};
  CHECK(two.canonical().cusps.front() == make_cusp(2, 3));
  CHECK(two.str() == "7:9;2:3");
}
