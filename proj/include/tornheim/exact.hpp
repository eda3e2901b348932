#pragma once

// Exact rational evaluation of harmonic numbers and the finite sums built
// from them. Everything here is the ground truth for finite identities.

#include "tornheim/rational.hpp"

#include <functional>

namespace tornheim {

/// H_{r,n} = sum_{s=1}^{r} s^{-n}; H_{0,n} = 0. Requires r >= 0, n >= 1.
/// Values are memoized per order as prefix sums; safe to call concurrently.
Rational harmonic(long r, int n);

/// Binomial coefficient C(a, b). Zero when b < 0 or 0 <= a < b; for
/// negative a uses the falling-factorial definition a(a-1)...(a-b+1)/b!.
Rational binomial(long a, long b);

/// sum_{r=1}^{N} H_{r,n} = (N+1) H_{N,n} - H_{N,n-1}. Requires n >= 2.
Rational harmonic_cumsum(long N, int n);

/// K(mu; n, s) = sum_{i=1}^{mu} H_{mu-i,s} / i^n. Requires mu >= 0.
Rational harmonic_convolution(long mu, int n, int s);

enum class Shift { plus, minus };

/// sum_{nu=1}^{N} 1 / (nu^s (nu +/- mu)^t) by direct summation.
/// The minus form requires 1 <= N < mu.
Rational finite_partial_fraction_sum(long N, long mu, int s, int t, Shift sign);

/// Sum over i = a..b with the signed-range convention used by the
/// identities: an empty range when b = a - 1, and
/// sum_{i=a}^{b} f_i = -sum_{i=b+1}^{a-1} f_i when b < a - 1.
template <class T>
T signed_range_sum(long a, long b, const std::function<T(long)>& f) {
  T total{};
  if (b >= a) {
    for (long i = a; i <= b; ++i) total += f(i);
  } else if (b < a - 1) {
    for (long i = b + 1; i <= a - 1; ++i) total -= f(i);
  }
  return total;
}

/// 1 / x^k as a rational, x != 0.
inline Rational inverse_power(long x, long k) { return pow(Rational(x), -k); }

}  // namespace tornheim
