#include <cmath>
#include <random>

#include "doctest.h"
#include "tiltwall/exactnum.hpp"

using namespace tiltwall;

namespace {

QI qi(long a, long b, long d) { return QI(Rational(a), Rational(b), Integer(d)); }
Rational q(const char* s) { return Rational::parse(s); }

}  // namespace

TEST_CASE("rationals stay reduced and parse p/q") {
  CHECK(q("6/4") == Rational(Integer(3), Integer(2)));
  CHECK(q("6/4").str() == "3/2");
  CHECK(q(" -10 / 5 ").str() == "-2");
  CHECK(q("0/7").str() == "0");
  CHECK(Rational(Integer(3), Integer(-6)).str() == "-1/2");
  CHECK_THROWS_AS(q("1/0"), std::domain_error);
  CHECK_THROWS_AS(q("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(q("abc"), std::invalid_argument);
  CHECK(q("-7/2").floor() == -4);
  CHECK(q("-7/2").ceil() == -3);
}

TEST_CASE("quadratic irrationals canonicalize the radicand") {
  const QI x(Rational(1), Rational(1), Integer(8));
  CHECK(x.radicand() == 2);
  CHECK(x.radical_coefficient() == Rational(2));
  CHECK(QI(Rational(1), Rational(3), Integer(9)) == QI(Rational(10)));
  CHECK(QI(Rational(1), Rational(0), Integer(5)).radicand() == 0);
  CHECK(QI::sqrt(q("1/2")) == QI(Rational(), q("1/2"), Integer(2)));
  CHECK(QI::sqrt(Rational(4)) == QI(2));
  CHECK_THROWS_AS(QI::sqrt(Rational(-1)), std::domain_error);
}

TEST_CASE("qi_compare examples") {
  CHECK(qi_compare(QI(q("3/2")), qi(0, 1, 2)) == std::strong_ordering::greater);
  CHECK(qi_compare(qi(0, 1, 2), qi(0, 1, 2)) == std::strong_ordering::equal);
  // -2 > -sqrt(5) since 4 < 5 with both negative.
  CHECK(qi_compare(QI(-2), qi(0, -1, 5)) == std::strong_ordering::greater);
  // cross-field: sqrt(2) + sqrt(3) vs pi-ish 3.1462...; 1 + sqrt(2) = 2.414 < sqrt(6) = 2.449
  CHECK(qi_compare(qi(1, 1, 2), qi(0, 1, 6)) == std::strong_ordering::less);
  CHECK(qi_compare(qi(0, 1, 3), qi(0, 1, 2)) == std::strong_ordering::greater);
  CHECK(qi_compare(qi(-1, 1, 3), qi(0, -1, 2)) == std::strong_ordering::greater);
}

TEST_CASE("qi_compare is a total order agreeing with interval arithmetic") {
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<long> small(-12, 12);
  std::uniform_int_distribution<long> den(1, 6);
  std::uniform_int_distribution<long> rad(0, 4);
  const long radicands[] = {0, 2, 3, 5, 6};
  auto draw = [&] {
    return QI(Rational(Integer(small(rng)), Integer(den(rng))), Rational(Integer(small(rng)), Integer(den(rng))),
              Integer(radicands[rad(rng)]));
  };
  int decided = 0;
  for (int i = 0; i < 3000; ++i) {
    const QI x = draw(), y = draw(), z = draw();
    const auto xy = qi_compare(x, y);
    CHECK(qi_compare(y, x) == 0 <=> xy);
    if (xy <= 0 && qi_compare(y, z) <= 0) CHECK(qi_compare(x, z) <= 0);
    CHECK((xy == 0) == (x == y));
    const double dx = x.to_double(), dy = y.to_double();
    const double tol = 1e-9 * (1.0 + std::fabs(dx) + std::fabs(dy));
    if (dx + tol < dy) {
      CHECK(xy < 0);
      ++decided;
    } else if (dy + tol < dx) {
      CHECK(xy > 0);
      ++decided;
    }
  }
  CHECK(decided > 2500);
}

TEST_CASE("field arithmetic") {
  const QI r2 = qi(0, 1, 2);
  CHECK(r2 * r2 == QI(2));
  CHECK((QI(1) + r2) * (QI(1) - r2) == QI(-1));
  CHECK(QI(1) / (QI(1) + r2) == qi(-1, 1, 2));
  CHECK_THROWS_AS(r2 + qi(0, 1, 3), std::domain_error);
  CHECK_THROWS_AS(QI(1) / QI(0), std::domain_error);
}

TEST_CASE("textual form round-trips") {
  for (const QI& x : {QI(q("3/2")), qi(0, 1, 2), qi(0, -1, 2), qi(-1, 2, 5), QI(Rational(1), q("-3/4"), Integer(7)),
                      QI(0)}) {
    CHECK(QI::parse(x.str()) == x);
  }
  CHECK(qi(0, -1, 2).str() == "-sqrt(2)");
  CHECK(QI(Rational(1), q("-3/4"), Integer(7)).str() == "1-3/4*sqrt(7)");
  CHECK(QI::parse("1/2+-3*sqrt(8)") == QI(q("1/2"), Rational(-6), Integer(2)));
  CHECK(QI::parse("2*sqrt(3)") == qi(0, 2, 3));
  CHECK(QI::parse("-1/2-sqrt(5)") == QI(q("-1/2"), Rational(-1), Integer(5)));
  CHECK_THROWS(QI::parse("1+sqrt(2"));
}

TEST_CASE("quad_roots examples") {
  SUBCASE("x^2 - 2") {
    const auto r = quad_roots({Rational(-2), Rational(0), Rational(1)});
    REQUIRE(r.values.size() == 2);
    CHECK(r.values[0] == qi(0, -1, 2));
    CHECK(r.values[1] == qi(0, 1, 2));
    CHECK_FALSE(r.double_root);
  }
  SUBCASE("4x^2 - 4x + 1") {
    const auto r = quad_roots({Rational(1), Rational(-4), Rational(4)});
    REQUIRE(r.values.size() == 1);
    CHECK(r.values[0] == QI(q("1/2")));
    CHECK(r.double_root);
  }
  SUBCASE("2x - 5") {
    const auto r = quad_roots({Rational(-5), Rational(2), Rational(0)});
    REQUIRE(r.values.size() == 1);
    CHECK(r.values[0] == QI(q("5/2")));
  }
  SUBCASE("no real roots and the zero polynomial") {
    CHECK(quad_roots({Rational(1), Rational(0), Rational(1)}).values.empty());
    CHECK(quad_roots({Rational(3), Rational(0), Rational(0)}).values.empty());
    CHECK_THROWS_WITH_AS(quad_roots({}), "indeterminate roots", std::invalid_argument);
  }
}

TEST_CASE("quad_eval examples") {
  const QuadPoly p{Rational(-2), Rational(0), Rational(1)};
  CHECK(quad_eval(p, qi(0, 1, 2)) == QI(0));
  CHECK(quad_eval(p, QI(2)) == QI(2));
  const QuadPoly two_sq{Rational(2), Rational(-4), Rational(2)};  // 2(x-1)^2
  CHECK(quad_eval(two_sq, QI(2)) == QI(2));
}

TEST_CASE("roots are exact zeros; rational roots carry d = 0") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int i = 0; i < 500; ++i) {
    const QuadPoly p{Rational(c(rng)), Rational(c(rng)), Rational(c(rng))};
    if (p.is_zero()) continue;
    for (const auto& r : quad_roots(p).values) CHECK(quad_eval(p, r) == QI(0));
    // (x - r1)(x - r2) with integer roots
    const long r1 = c(rng), r2 = c(rng);
    const QuadPoly f{Rational(r1 * r2), Rational(-(r1 + r2)), Rational(1)};
    for (const auto& r : quad_roots(f).values) CHECK(r.is_rational());
  }
}

TEST_CASE("polynomial rendering") {
  CHECK(QuadPoly{Rational(-2), Rational(0), Rational(1)}.str() == "x^2 - 2");
  CHECK(QuadPoly{Rational(1), Rational(-4), Rational(4)}.str() == "4*x^2 - 4*x + 1");
  CHECK(QuadPoly{}.str() == "0");
  CHECK(QuadPoly{Rational(0), q("-1/2"), Rational(0)}.str() == "-1/2*x");
}
