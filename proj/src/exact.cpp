#include "tornheim/exact.hpp"

#include "tornheim/errors.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace tornheim {

namespace {

// Prefix sums of s^{-n}, one vector per order n. Grown on demand.
class HarmonicTable {
 public:
  Rational get(long r, int n) {
    {
      std::shared_lock lock(mutex_);
      auto it = prefix_.find(n);
      if (it != prefix_.end() && static_cast<long>(it->second.size()) > r) return it->second[r];
    }
    std::unique_lock lock(mutex_);
    auto& v = prefix_[n];
    if (v.empty()) v.emplace_back(0);
    while (static_cast<long>(v.size()) <= r) {
      const long s = static_cast<long>(v.size());
      v.push_back(v.back() + inverse_power(s, n));
    }
    return v[r];
  }

 private:
  std::shared_mutex mutex_;
  std::map<int, std::vector<Rational>> prefix_;
};

HarmonicTable& table() {
  static HarmonicTable t;
  return t;
}

}  // namespace

Rational harmonic(long r, int n) {
  if (r < 0) throw DomainError("harmonic: negative upper index " + std::to_string(r));
  if (n < 1) throw DomainError("harmonic: order must be >= 1");
  return table().get(r, n);
}

Rational binomial(long a, long b) {
  if (b < 0) return 0;
  if (a >= 0 && b > a) return 0;
  if (a >= 0 && b > a - b) b = a - b;
  BigInt num = 1, den = 1;
  for (long i = 0; i < b; ++i) {
    num *= (a - i);
    den *= (i + 1);
  }
  return Rational(num, den);
}

Rational harmonic_cumsum(long N, int n) {
  if (n < 2) throw DomainError("harmonic_cumsum: order must be >= 2");
  if (N < 0) throw DomainError("harmonic_cumsum: N must be >= 0");
  Rational total;
  for (long r = 1; r <= N; ++r) total += harmonic(r, n);
  return total;
}

Rational harmonic_convolution(long mu, int n, int s) {
  if (mu < 0) throw DomainError("harmonic_convolution: mu must be >= 0");
  Rational total;
  for (long i = 1; i <= mu; ++i) total += harmonic(mu - i, s) * inverse_power(i, n);
  return total;
}

Rational finite_partial_fraction_sum(long N, long mu, int s, int t, Shift sign) {
  if (N < 0) throw DomainError("finite_partial_fraction_sum: N must be >= 0");
  if (sign == Shift::minus && N >= mu)
    throw DomainError("finite_partial_fraction_sum: minus form needs 1 <= N < mu");
  Rational total;
  for (long nu = 1; nu <= N; ++nu) {
    const long shifted = sign == Shift::plus ? nu + mu : mu - nu;
    if (shifted == 0) throw DomainError("finite_partial_fraction_sum: zero denominator");
    total += inverse_power(nu, s) * inverse_power(shifted, t);
  }
  return total;
}

}  // namespace tornheim
