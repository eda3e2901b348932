#pragma once

// Configurable-precision evaluation of zeta values, Euler sums, Tornheim
// series and related series, with explicit truncation control.

#include "tornheim/descriptor.hpp"
#include "tornheim/rational.hpp"
#include "tornheim/zeta_expr.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace tornheim {

using BigFloat = boost::multiprecision::mpfr_float;

struct NumericConfig {
  int precision_digits = 50;
  long double tolerance = 1e-30L;
  long max_terms = 1000000;

  /// Throws DomainError unless precision_digits >= 15, max_terms >= 1 and
  /// tolerance >= 10^-(precision_digits-10).
  void validate() const;
};

/// Holds the process-wide MPFR lock and default precision for its lifetime.
/// MPFR's default precision in Boost is a global, so numeric work is
/// serialized through this guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

/// Every returned value is within config().tolerance of the true value.
/// Internally each primitive is computed to tolerance * 1e-8 so that the
/// linear combinations used by callers stay inside the budget.
class Evaluator {
 public:
  explicit Evaluator(NumericConfig cfg = {});

  const NumericConfig& config() const { return cfg_; }
  unsigned working_digits() const { return digits_; }
  BigFloat tolerance() const;
  /// |a - b| <= factor * tolerance.
  bool agree(const BigFloat& a, const BigFloat& b, double factor = 1.0) const;

  BigFloat to_big(const Rational& q) const;
  BigFloat harmonic(long r, int n) const;

  /// zeta(s), s >= 2.
  BigFloat zeta(int s);
  /// Hurwitz zeta(s, a) = sum_{k>=0} (a+k)^-s for s >= 2, a >= 1.
  BigFloat hurwitz(int s, long a);
  /// zeta(t) - H_{mu-1,t}, t >= 2, mu >= 1.
  BigFloat hurwitz_shift(int t, long mu);
  /// E(m,n) = sum H_{nu,m} / nu^n, m >= 1, n >= 2.
  BigFloat euler_sum(int m, int n);
  /// T(r,s,t). Either first argument may be negative; the series must converge.
  BigFloat tornheim(int r, int s, int t);
  /// sum_{nu>=1} h(nu) nu^-a (nu+mu)^-b with h = H_{nu,k} (k >= 1) or h = 1
  /// (k = 0). Requires a, b, mu >= 0 and a + b >= 2.
  BigFloat shifted_sum(int k, int a, int b, long mu);
  BigFloat zeta_expr(const ZetaExpr& e);
  BigFloat descriptor(const SumDescriptor& d);

  /// D significant digits, fixed notation where sensible.
  std::string format(const BigFloat& x, int digits) const;

 private:
  struct Plan {
    long n_direct;
    int p;
  };
  Plan hurwitz_plan(int s, long a) const;
  BigFloat hurwitz_uncached(int s, long a);
  /// log10_target: absolute accuracy goal; defaults to the internal tolerance.
  BigFloat harmonic_tail(int k, int e, long N, double log10_target = 1.0);
  BigFloat tornheim_nonneg(int r, int s, int t);
  BigFloat tornheim_negative(int k, int s, int t);
  bool tornheim_diagonal(int r, int s, int t, BigFloat& out);

  NumericConfig cfg_;
  unsigned digits_;
  double log10_tol_;  // internal per-primitive tolerance
  std::map<std::pair<int, long>, BigFloat> hurwitz_cache_;
  std::map<std::pair<int, int>, BigFloat> euler_cache_;
  std::map<std::tuple<int, int, int>, BigFloat> tornheim_cache_;
};

/// Exact Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(int n);

// Free-function forms; each uses a fresh evaluator for cfg.
BigFloat zeta_numeric(int s, const NumericConfig& cfg = {});
BigFloat euler_sum_numeric(int m, int n, const NumericConfig& cfg = {});
BigFloat tornheim_numeric(int r, int s, int t, const NumericConfig& cfg = {});
BigFloat zeta_expr_numeric(const ZetaExpr& e, const NumericConfig& cfg = {});
BigFloat hurwitz_shift(int t, long mu, const NumericConfig& cfg = {});

}  // namespace tornheim
