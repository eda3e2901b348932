#include "doctest.h"

#include "tornheim/closed_forms.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/exact.hpp"
#include "tornheim/numerics.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <random>

using namespace tornheim;

namespace {

NumericConfig cfg30() {
  NumericConfig c;
  c.precision_digits = 30;
  c.tolerance = 1e-20L;
  return c;
}

// Plain double sum over the diagonal d = mu + nu <= D; used only as a
// coarse, independent cross-check.
double brute_tornheim(int r, int s, int t, int D) {
  double sum = 0;
  for (int d = 2; d <= D; ++d)
    for (int mu = 1; mu < d; ++mu) sum += std::pow(mu, -r) * std::pow(d - mu, -s) * std::pow(d, -t);
  return sum;
}

double brute_euler(int m, int n, int N) {
  double h = 0, sum = 0;
  for (int nu = 1; nu <= N; ++nu) {
    h += std::pow(nu, -m);
    sum += h * std::pow(nu, -n);
  }
  return sum;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(20) == Rational(-174611, 330));
}

TEST_CASE("zeta at integers") {
  Evaluator ev(cfg30());
  PrecisionGuard g(ev.working_digits());
  const BigFloat pi = boost::math::constants::pi<BigFloat>();
  CHECK(ev.agree(ev.zeta(2), pi * pi / 6));
  CHECK(ev.agree(ev.zeta(4), pow(pi, 4) / 90));
  CHECK(ev.agree(ev.zeta(3), BigFloat("1.2020569031595942853997381615114499907649862923405")));
  CHECK(ev.agree(ev.zeta(5), BigFloat("1.0369277551433699263313654864570341680570809195019")));
  // zeta(50) - 1 = 2^-50 + 3^-50 + ...
  BigFloat tail = pow(BigFloat(2), -50) + pow(BigFloat(3), -50);
  CHECK(ev.agree(ev.zeta(50), 1 + tail));
  CHECK_THROWS_AS(ev.zeta(1), DomainError);
}

TEST_CASE("hurwitz shift") {
  Evaluator ev(cfg30());
  PrecisionGuard g(ev.working_digits());
  CHECK(ev.agree(ev.hurwitz_shift(2, 3), ev.zeta(2) - BigFloat(5) / 4));
  CHECK(ev.agree(ev.hurwitz_shift(3, 1), ev.zeta(3)));
  CHECK(ev.agree(ev.hurwitz(2, 4), ev.zeta(2) - 1 - BigFloat(1) / 4 - BigFloat(1) / 9));
}

TEST_CASE("high precision request") {
  NumericConfig c;
  c.precision_digits = 120;
  c.tolerance = 1e-105L;
  Evaluator ev(c);
  PrecisionGuard g(ev.working_digits());
  const BigFloat pi = boost::math::constants::pi<BigFloat>();
  CHECK(ev.agree(ev.zeta(2), pi * pi / 6));
  CHECK(ev.agree(ev.euler_sum(1, 2), 2 * ev.zeta(3)));
}

TEST_CASE("config validation") {
  NumericConfig c;
  c.precision_digits = 20;
  c.tolerance = 1e-15L;
  CHECK_THROWS_AS(Evaluator{c}, DomainError);
  c.tolerance = 1e-10L;
  CHECK_NOTHROW(Evaluator{c});
  c.max_terms = 0;
  CHECK_THROWS_AS(Evaluator{c}, DomainError);
}

TEST_CASE("euler sums against classical values") {
  Evaluator ev(cfg30());
  PrecisionGuard g(ev.working_digits());
  CHECK(ev.agree(ev.euler_sum(1, 2), 2 * ev.zeta(3)));
  CHECK(ev.agree(ev.euler_sum(1, 3), ev.zeta(4) * 5 / 4));
  CHECK(ev.agree(ev.euler_sum(2, 2), ev.zeta(4) * 7 / 4));
  CHECK(ev.agree(ev.euler_sum(2, 4), ev.zeta(3) * ev.zeta(3) - ev.zeta(6) / 3));
  CHECK(std::abs(static_cast<double>(ev.euler_sum(3, 2)) - brute_euler(3, 2, 200000)) < 1e-4);
  CHECK_THROWS_AS(ev.euler_sum(0, 3), DivergentDescriptor);
  CHECK_THROWS_AS(ev.euler_sum(2, 1), DivergentDescriptor);
}

TEST_CASE("euler symmetry property") {
  Evaluator ev(cfg30());
  PrecisionGuard g(ev.working_digits());
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(2, 9);
  for (int i = 0; i < 20; ++i) {
    const int m = pick(rng), n = pick(rng);
    CHECK(ev.agree(ev.euler_sum(m, n) + ev.euler_sum(n, m), ev.zeta(m + n) + ev.zeta(m) * ev.zeta(n), 4));
  }
}

TEST_CASE("tornheim basics") {
  Evaluator ev(cfg30());
  PrecisionGuard g(ev.working_digits());
  CHECK(ev.agree(ev.tornheim(1, 1, 1), 2 * ev.zeta(3)));
  CHECK(ev.agree(ev.tornheim(0, 0, 3), ev.zeta(2) - ev.zeta(3)));
  CHECK(std::abs(static_cast<double>(ev.tornheim(0, 0, 3)) - 0.44287716) < 1e-7);
  CHECK(ev.agree(ev.tornheim(2, 3, 0), ev.zeta(2) * ev.zeta(3)));
  CHECK(ev.agree(ev.tornheim(2, 2, 2), ev.zeta(2) * ev.zeta(4) * 4 - ev.zeta(6) * 20 / 3, 10));
  CHECK(ev.agree(ev.tornheim(3, 2, 4), ev.tornheim(2, 3, 4)));
  CHECK(std::abs(static_cast<double>(ev.tornheim(2, 3, 4)) - brute_tornheim(2, 3, 4, 3000)) < 1e-9);
  CHECK_THROWS_AS(ev.tornheim(1, 0, 1), DivergentDescriptor);
  CHECK_THROWS_AS(ev.tornheim(0, 1, 1), DivergentDescriptor);
  CHECK_THROWS_AS(ev.tornheim(-1, -1, 5), DomainError);
}

TEST_CASE("tornheim recursion property") {
  Evaluator ev(cfg30());
  PrecisionGuard g(ev.working_digits());
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(1, 6);
  for (int i = 0; i < 25; ++i) {
    const int r = pick(rng), s = pick(rng), t = pick(rng) - 1;
    if (r + s + t <= 2 || r + t <= 1 || s + t <= 1) continue;
    CHECK(ev.agree(ev.tornheim(r, s - 1, t + 1) + ev.tornheim(r - 1, s, t + 1), ev.tornheim(r, s, t), 8));
  }
}

TEST_CASE("negative first argument") {
  Evaluator ev(cfg30());
  PrecisionGuard g(ev.working_digits());
  // mu = (mu + nu) - nu
  for (int s = 2; s <= 5; ++s)
    for (int t = 3; t <= 6; ++t) {
      if (s + t - 1 <= 2) continue;
      CHECK(ev.agree(ev.tornheim(-1, s, t), ev.tornheim(0, s, t - 1) - ev.tornheim(0, s - 1, t), 8));
    }
  CHECK(ev.agree(ev.tornheim(4, -1, 3), ev.tornheim(-1, 4, 3)));
  // mu^2 = (mu+nu)^2 - 2 nu (mu+nu) + nu^2
  CHECK(ev.agree(ev.tornheim(-2, 4, 6), ev.tornheim(0, 4, 4) - 2 * ev.tornheim(0, 3, 5) + ev.tornheim(0, 2, 6), 8));
  CHECK_THROWS_AS(ev.tornheim(-1, 1, 2), DivergentDescriptor);
}

TEST_CASE("diagonal route agrees with partial fractions") {
  NumericConfig lo;
  lo.precision_digits = 16;
  lo.tolerance = 1e-5L;
  lo.max_terms = 100000000;
  NumericConfig lo_small = lo;
  lo_small.max_terms = 1000;
  Evaluator a(lo), b(lo_small);
  PrecisionGuard g(a.working_digits());
  CHECK(abs(a.tornheim(4, 4, 4) - b.tornheim(4, 4, 4)) < BigFloat("1e-12"));
  CHECK(abs(a.tornheim(3, 5, 3) - b.tornheim(3, 5, 3)) < BigFloat("1e-12"));
}

TEST_CASE("shifted sums") {
  Evaluator ev(cfg30());
  PrecisionGuard g(ev.working_digits());
  // sum 1/(nu (nu+1)) = 1
  CHECK(ev.agree(ev.shifted_sum(0, 1, 1, 1), BigFloat(1)));
  // sum 1/(nu^2 (nu+1)) = zeta(2) - 1
  CHECK(ev.agree(ev.shifted_sum(0, 2, 1, 1), ev.zeta(2) - 1));
  // sum H_nu / (nu (nu+1)) = zeta(2)
  CHECK(ev.agree(ev.shifted_sum(1, 1, 1, 1), ev.zeta(2)));
  CHECK(ev.agree(ev.shifted_sum(2, 3, 0, 5), ev.euler_sum(2, 3)));
  // sum_{nu} 1/(nu+mu)^2 = hurwitz_shift(2, mu+1)
  CHECK(ev.agree(ev.shifted_sum(0, 0, 2, 7), ev.hurwitz_shift(2, 8)));
  double brute = 0, h = 0;
  for (int nu = 1; nu <= 400000; ++nu) {
    h += 1.0 / nu;
    brute += h / (double(nu) * nu * (nu + 9.0));
  }
  CHECK(std::abs(static_cast<double>(ev.shifted_sum(1, 2, 1, 9)) - brute) < 1e-8);
}

TEST_CASE("zeta expressions and formatting") {
  Evaluator ev(cfg30());
  PrecisionGuard g(ev.working_digits());
  const ZetaExpr e = ZetaExpr::parse("4*z(2)*z(4) - 20/3*z(6)");
  CHECK(ev.agree(ev.zeta_expr(e), ev.tornheim(2, 2, 2), 10));
  CHECK(ev.agree(ev.zeta_expr(ZetaExpr(Rational(3, 7))), BigFloat(3) / 7));
  CHECK(ev.format(ev.zeta(3), 12) == "1.20205690316");
  CHECK(ev.format(BigFloat(0), 5) == "0");
  CHECK(ev.format(ev.zeta(40) - 1, 5).find("e-13") != std::string::npos);
}

TEST_CASE("closed forms agree numerically") {
  Evaluator ev(cfg30());
  PrecisionGuard g(ev.working_digits());
  for (int n = 2; n <= 10; ++n) CHECK(ev.agree(ev.zeta_expr(euler_E1n(n)), ev.euler_sum(1, n), 10));
  for (int s = 1; s <= 6; ++s) {
    CHECK(ev.agree(ev.zeta_expr(euler_E1_odd_variant(s)), ev.euler_sum(1, 2 * s + 1), 10));
    CHECK(ev.agree(ev.zeta_expr(euler_E1_odd_alternating(s)), ev.euler_sum(1, 2 * s + 1), 10));
  }
  for (int s = 1; s <= 8; ++s) CHECK(ev.agree(ev.zeta_expr(tornheim_T11s(s)), ev.tornheim(1, 1, s), 10));
  for (int s = 1; s <= 5; ++s) CHECK(ev.agree(ev.zeta_expr(tornheim_Tsss(s)), ev.tornheim(s, s, s), 100));
  for (int t = 3; t <= 8; ++t) CHECK(ev.agree(ev.zeta_expr(tornheim_T00t(t)), ev.tornheim(0, 0, t), 10));
  for (int s = 2; s <= 8; ++s) CHECK(ev.agree(ev.zeta_expr(tornheim_T0ss(s)), ev.tornheim(0, s, s), 10));
  for (int r = 1; r <= 6; ++r)
    for (int s = 1; s <= 6; ++s) {
      CAPTURE(r);
      CAPTURE(s);
      CHECK(ev.agree(ev.zeta_expr(tornheim_Trs1(r, s)), ev.tornheim(r, s, 1), 100));
    }
  for (const auto& sv : specific_values()) {
    CAPTURE(sv.target.str());
    CHECK(ev.agree(ev.zeta_expr(sv.value), ev.descriptor(sv.target), 10));
  }
}

TEST_CASE("closed form domains") {
  CHECK_THROWS_AS(tornheim_Trs1(0, 3), FormulaProducesZeta1);
  CHECK_THROWS_AS(euler_E1n(1), DivergentDescriptor);
  CHECK_THROWS_AS(tornheim_T00t(2), DivergentDescriptor);
  CHECK(tornheim_Tsss(1) == ZetaExpr::zeta(3, 2));
  CHECK(euler_E1n(2) == ZetaExpr::zeta(3, 2));
  CHECK(tornheim_T11s(1) == ZetaExpr::zeta(3, 2));
}

TEST_CASE("reflection property") {
  Evaluator ev(cfg30());
  PrecisionGuard g(ev.working_digits());
  for (int s = 1; s <= 6; ++s)
    for (int t = 1; t <= 5; ++t) {
      if (2 * s + t <= 2) continue;
      CHECK(ev.agree(2 * ev.tornheim(s, s - 1, t + 1), ev.tornheim(s, s, t), 8));
    }
}
