#include "doctest.h"

#include "tornheim/errors.hpp"
#include "tornheim/even_zeta.hpp"
#include "tornheim/zeta_expr.hpp"

#include <random>

using namespace tornheim;

namespace {

ZetaExpr random_expr(std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms), nargs(0, 3), arg(2, 9), num(-30, 30), den(1, 12);
  ZetaExpr e;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<int> args(nargs(rng));
    for (int& a : args) a = arg(rng);
    e += ZetaExpr(ZetaMonomial(args), Rational(num(rng), den(rng)));
  }
  return e;
}

ZetaExpr z(int k) { return ZetaExpr::zeta(k); }

}  // namespace

TEST_CASE("basic algebra") {
  CHECK(add(z(3) * Rational(2), z(3) * Rational(-2)).is_zero());
  CHECK(mul(z(2), z(4)) == ZetaExpr(ZetaMonomial{2, 4}));
  CHECK(mul(z(3), z(3)) == ZetaExpr(ZetaMonomial{3, 3}));
  CHECK(mul(z(4), z(2)) == mul(z(2), z(4)));
  CHECK_THROWS_AS(ZetaMonomial{1}, DomainError);
}

TEST_CASE("weight") {
  CHECK(*mul(z(3), z(3)).weight() == 6);
  const ZetaExpr t222 = z(4) * z(2) * Rational(4) - z(6) * Rational(20, 3);
  CHECK(*t222.weight() == 6);
  CHECK_FALSE((z(2) + z(3)).weight().has_value());
  CHECK_THROWS_AS(ZetaExpr().weight(), DomainError);
}

TEST_CASE("render") {
  CHECK(ZetaExpr().render() == "0");
  CHECK((z(3) * Rational(2)).render() == "2*z(3)");
  CHECK((z(6) * Rational(-20, 3) + z(2) * z(4) * Rational(4)).render() == "4*z(2)*z(4) - 20/3*z(6)");
  CHECK((z(2) * z(2) * Rational(-1, 2) + Rational(1)).render() == "1 - 1/2*z(2)*z(2)");
}

TEST_CASE("parse") {
  CHECK(ZetaExpr::parse("z(3)") == z(3));
  CHECK(ZetaExpr::parse(" - 1/2 * z(2)*z(2) + 3*z(4)") == z(2) * z(2) * Rational(-1, 2) + z(4) * Rational(3));
  CHECK(ZetaExpr::parse("0") == ZetaExpr());
  CHECK_THROWS_AS(ZetaExpr::parse("z(1)"), ParseError);
  CHECK_THROWS_AS(ZetaExpr::parse("2*z(3"), ParseError);
  CHECK_THROWS_AS(ZetaExpr::parse(""), ParseError);
  CHECK_THROWS_AS(ZetaExpr::parse("2 z(3)"), ParseError);
}

TEST_CASE("parse of render is identity") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const ZetaExpr e = random_expr(rng);
    CHECK(ZetaExpr::parse(e.render()) == e);
  }
}

TEST_CASE("ring axioms") {
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    const ZetaExpr a = random_expr(rng, 3), b = random_expr(rng, 3), c = random_expr(rng, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == ZetaExpr());
  }
}

TEST_CASE("homogeneity") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> arg(2, 6);
  for (int i = 0; i < 100; ++i) {
    const int x = arg(rng), y = arg(rng);
    const ZetaExpr a = z(x) * z(y), b = z(x + y) * Rational(3, 7);
    CHECK(*(a + b).weight() == x + y);
    CHECK(*(a * Rational(5)).weight() == x + y);
    CHECK(*(a * b).weight() == 2 * (x + y));
  }
}

TEST_CASE("even canonicalization") {
  CHECK(even_zeta_ratio(2) == Rational(2, 5));
  CHECK(even_zeta_ratio(3) == Rational(8, 35));
  CHECK(zeta_even_canonical(z(4)) == z(2) * z(2) * Rational(2, 5));
  CHECK(zeta_even_canonical(z(6)) == z(2) * z(2) * z(2) * Rational(8, 35));
  CHECK(zeta_even_canonical(z(3)) == z(3));
  std::mt19937 rng(8);
  for (int i = 0; i < 100; ++i) {
    const ZetaExpr e = random_expr(rng);
    CHECK(zeta_even_canonical(zeta_even_canonical(e)) == zeta_even_canonical(e));
  }
}
