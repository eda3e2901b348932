#include "doctest.h"

#include "tornheim/errors.hpp"
#include "tornheim/exact.hpp"

#include <random>

using namespace tornheim;

namespace {

// Independent oracle: plain mpq loop, no memoization.
mpq_class direct_harmonic(long r, int n) {
  mpq_class total = 0;
  for (long s = 1; s <= r; ++s) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), s, n);
    total += mpq_class(1, 1) / mpq_class(p);
  }
  return total;
}

}  // namespace

TEST_CASE("harmonic values") {
  CHECK(harmonic(0, 5) == 0);
  CHECK(harmonic(1, 7) == 1);
  CHECK(harmonic(3, 1) == Rational(11, 6));
  for (long r = 0; r <= 40; ++r)
    for (int n = 1; n <= 4; ++n) CHECK(harmonic(r, n).raw() == direct_harmonic(r, n));
  CHECK_THROWS_AS(harmonic(-1, 2), DomainError);
  CHECK_THROWS_AS(harmonic(3, 0), DomainError);
}

TEST_CASE("harmonic step property") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> rd(1, 200);
  std::uniform_int_distribution<int> nd(1, 6);
  for (int i = 0; i < 300; ++i) {
    const long r = rd(rng);
    const int n = nd(rng);
    CHECK(harmonic(r, n) - harmonic(r - 1, n) == inverse_power(r, n));
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(7, -1) == 0);
  CHECK(binomial(30, 15) == Rational(155117520));
  for (long a = 1; a <= 20; ++a)
    for (long b = 1; b <= a; ++b) CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}

TEST_CASE("harmonic_cumsum") {
  CHECK(harmonic_cumsum(0, 2) == 0);
  CHECK(harmonic_cumsum(2, 2) == Rational(9, 4));
  CHECK(harmonic_cumsum(5, 3) == Rational(203413, 36000));
  for (long N = 0; N <= 30; ++N)
    for (int n = 2; n <= 5; ++n)
      CHECK(harmonic_cumsum(N, n) == Rational(N + 1) * harmonic(N, n) - harmonic(N, n - 1));
  CHECK_THROWS_AS(harmonic_cumsum(3, 1), DomainError);
}

TEST_CASE("harmonic_convolution") {
  for (int n = 1; n <= 3; ++n)
    for (int s = 1; s <= 3; ++s) CHECK(harmonic_convolution(1, n, s) == 0);
  CHECK(harmonic_convolution(4, 1, 1) == Rational(35, 12));
  CHECK(harmonic_convolution(4, 1, 1) == pow(harmonic(4, 1), 2) - harmonic(4, 2));
  CHECK(harmonic_convolution(5, 2, 3) == Rational(2861, 1728));
  for (long mu = 1; mu <= 30; ++mu)
    for (int n = 1; n <= 5; ++n)
      for (int s = n + 1; s <= 5; ++s) CHECK(harmonic_convolution(mu, n, s) == harmonic_convolution(mu, s, n));
}

TEST_CASE("lp5bakz-style square identity") {
  for (long mu = 1; mu <= 20; ++mu) {
    Rational lhs;
    for (long nu = 1; nu <= mu; ++nu) lhs += harmonic(nu - 1, 1) / Rational(nu);
    CHECK(Rational(2) * lhs == pow(harmonic(mu, 1), 2) - harmonic(mu, 2));
  }
}

TEST_CASE("finite_partial_fraction_sum") {
  CHECK(finite_partial_fraction_sum(3, 2, 1, 1, Shift::plus) == Rational(1, 3) + Rational(1, 8) + Rational(1, 15));
  CHECK(finite_partial_fraction_sum(1, 5, 2, 2, Shift::minus) == Rational(1, 16));
  CHECK(finite_partial_fraction_sum(2, 4, 1, 2, Shift::minus) == Rational(17, 72));
  CHECK_THROWS_AS(finite_partial_fraction_sum(4, 4, 1, 1, Shift::minus), DomainError);
}

TEST_CASE("signed range sums") {
  std::function<Rational(long)> f = [](long i) { return Rational(i * i); };
  CHECK(signed_range_sum<Rational>(3, 2, f) == 0);
  CHECK(signed_range_sum<Rational>(1, 3, f) == 14);
  CHECK(signed_range_sum<Rational>(3, 0, f) == Rational(-5));
}

TEST_CASE("rational round trips") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 500; ++i) {
    const Rational a(d(rng), d(rng) == 0 ? 1 : 997);
    long bn = d(rng);
    if (bn == 0) bn = 1;
    const Rational b(bn, std::abs(d(rng)) + 1);
    CHECK(a + b - b == a);
    CHECK(a * b / b == a);
    CHECK(Rational::parse(a.str()) == a);
  }
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
}
