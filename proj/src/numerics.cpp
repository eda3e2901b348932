#include "tornheim/numerics.hpp"

#include "tornheim/errors.hpp"
#include "tornheim/exact.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <vector>

namespace tornheim {

namespace {

std::recursive_mutex& mpfr_mutex() {
  static std::recursive_mutex m;
  return m;
}

constexpr double kLog10TwoPi = 0.79817986835811504;  // log10(2 pi)
constexpr double kLn10 = 2.302585092994046;

// log10 of an upper bound for |B_{2q}| / (2q)! * (s)_{2q-1}, using
// |B_{2q}| / (2q)! <= 3.3 / (2 pi)^{2q}.
double log10_em_coefficient(int s, int q) {
  return std::log10(3.3) - 2.0 * q * kLog10TwoPi + (std::lgamma(s + 2.0 * q - 1.0) - std::lgamma(double(s))) / kLn10;
}

// B_{2j} / (2j)! * (s)_{2j-1}, exact.
Rational em_coefficient(int s, int j) {
  BigInt rising = 1, fact = 1;
  for (int i = 0; i < 2 * j - 1; ++i) rising *= (s + i);
  for (int i = 2; i <= 2 * j; ++i) fact *= i;
  return bernoulli(2 * j) * Rational(rising) / Rational(fact);
}

BigFloat inv_pow(long base, int e) {
  BigFloat b(base);
  return 1 / boost::multiprecision::pow(b, e);
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("bernoulli: negative index");
  static std::mutex m;
  static std::vector<Rational> b{Rational(1)};
  std::lock_guard lock(m);
  while (static_cast<int>(b.size()) <= n) {
    const int k = static_cast<int>(b.size());
    Rational acc;
    for (int i = 0; i < k; ++i) acc += binomial(k + 1, i) * b[i];
    b.push_back(-acc / Rational(k + 1));
  }
  return b[n];
}

void NumericConfig::validate() const {
  if (precision_digits < 15) throw DomainError("precision_digits must be >= 15");
  if (max_terms < 1) throw DomainError("max_terms must be >= 1");
  if (!(tolerance > 0)) throw DomainError("tolerance must be positive");
  if (std::log10(static_cast<double>(tolerance)) < -(precision_digits - 10) - 1e-9)
    throw DomainError("tolerance must be >= 10^-(precision_digits-10)");
}

PrecisionGuard::PrecisionGuard(unsigned digits) : lock_(mpfr_mutex()), saved_(BigFloat::default_precision()) {
  BigFloat::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { BigFloat::default_precision(saved_); }

Evaluator::Evaluator(NumericConfig cfg) : cfg_(cfg) {
  cfg_.validate();
  digits_ = static_cast<unsigned>(cfg_.precision_digits + 10);
  log10_tol_ = std::log10(static_cast<double>(cfg_.tolerance)) - 8.0;
}

BigFloat Evaluator::tolerance() const {
  PrecisionGuard g(digits_);
  return BigFloat(cfg_.tolerance);
}

bool Evaluator::agree(const BigFloat& a, const BigFloat& b, double factor) const {
  PrecisionGuard g(digits_);
  return abs(a - b) <= tolerance() * factor;
}

BigFloat Evaluator::to_big(const Rational& q) const {
  PrecisionGuard g(digits_);
  BigFloat x;
  mpfr_set_q(x.backend().data(), q.raw().get_mpq_t(), MPFR_RNDN);
  return x;
}

BigFloat Evaluator::harmonic(long r, int n) const {
  PrecisionGuard g(digits_);
  BigFloat h = 0;
  for (long i = 1; i <= r; ++i) h += inv_pow(i, n);
  return h;
}

Evaluator::Plan Evaluator::hurwitz_plan(int s, long a) const {
  // Remainder after p correction terms is at most the (p+1)-th term; a
  // factor 2 of slack is added. The target is relative to a^-s since
  // callers weight high-order values by large coefficients.
  const double target = log10_tol_ - s * std::log10(double(a));
  auto fits = [&](long n, int p) {
    const double M = double(a) + double(n);
    const int q = p + 1;
    const double lg = std::log10(2.0) + log10_em_coefficient(s, q) - (s + 2.0 * q - 1.0) * std::log10(M);
    return lg <= target;
  };
  auto next = [](long n) { return n == 0 ? 1 : 2 * n; };
  for (long n = 0; n <= std::min<long>(4096, cfg_.max_terms); n = next(n))
    for (int p = 0; p <= 5; ++p)
      if (fits(n, p)) return {n, p};
  for (long n = 0; n <= cfg_.max_terms; n = next(n))
    for (int p = 0; p <= 120; ++p)
      if (fits(n, p)) return {n, p};
  throw PrecisionUnreachable("zeta(" + std::to_string(s) + "," + std::to_string(a) +
                             "): tolerance not reachable within max_terms");
}

BigFloat Evaluator::hurwitz_uncached(int s, long a) {
  const Plan plan = hurwitz_plan(s, a);
  BigFloat sum = 0;
  for (long k = 0; k < plan.n_direct; ++k) sum += inv_pow(a + k, s);
  const long M = a + plan.n_direct;
  const BigFloat x = BigFloat(1) / BigFloat(M);
  const BigFloat xs = boost::multiprecision::pow(x, s);
  sum += xs * M / (s - 1) + xs / 2;
  BigFloat xp = xs * x;  // M^{-s-2j+1}
  const BigFloat x2 = x * x;
  for (int j = 1; j <= plan.p; ++j) {
    sum += to_big(em_coefficient(s, j)) * xp;
    xp *= x2;
  }
  return sum;
}

BigFloat Evaluator::hurwitz(int s, long a) {
  if (s < 2) throw DomainError("hurwitz zeta requires s >= 2");
  if (a < 1) throw DomainError("hurwitz zeta requires a >= 1");
  PrecisionGuard g(digits_);
  const auto key = std::make_pair(s, a);
  auto it = hurwitz_cache_.find(key);
  if (it != hurwitz_cache_.end()) return it->second;
  BigFloat v = hurwitz_uncached(s, a);
  hurwitz_cache_.emplace(key, v);
  return v;
}

BigFloat Evaluator::zeta(int s) {
  if (s < 2) throw DomainError("zeta(" + std::to_string(s) + ") is not available (s >= 2 required)");
  return hurwitz(s, 1);
}

BigFloat Evaluator::hurwitz_shift(int t, long mu) {
  if (t < 2 || mu < 1) throw DomainError("hurwitz_shift requires t >= 2, mu >= 1");
  PrecisionGuard g(digits_);
  return zeta(t) - to_big(tornheim::harmonic(mu - 1, t));
}

// sum_{d>N} H_{d,k} / d^e, k >= 1, e >= 2, written as
// H_{N,k} zeta(e,N+1) + sum_{i>N} i^-k zeta(e,i) with zeta(e,i) expanded by
// Euler-Maclaurin at i; the expansion error summed over i is bounded by
// |c_{p+1}| zeta(k+e+2p+1, N+1).
BigFloat Evaluator::harmonic_tail(int k, int e, long N, double log10_target) {
  if (k == 0) return hurwitz(e, N + 1);
  const double target = log10_target > 0 ? log10_tol_ : log10_target;
  int p = -1;
  for (int q = 0; q <= 150; ++q) {
    const int x = k + e + 2 * q + 1;
    const double lg = std::log10(2.0) + log10_em_coefficient(e, q + 1) - (x - 1) * std::log10(double(N)) -
                      std::log10(double(x - 1));
    if (lg <= target) {
      p = q;
      break;
    }
  }
  if (p < 0) throw PrecisionUnreachable("harmonic tail expansion does not reach tolerance");
  BigFloat sum = harmonic(N, k) * hurwitz(e, N + 1);
  sum += hurwitz(k + e - 1, N + 1) / (e - 1);
  sum += hurwitz(k + e, N + 1) / 2;
  for (int q = 1; q <= p; ++q) sum += to_big(em_coefficient(e, q)) * hurwitz(k + e + 2 * q - 1, N + 1);
  return sum;
}

BigFloat Evaluator::euler_sum(int m, int n) {
  if (m < 1 || n < 2) throw DivergentDescriptor("divergent: E(m,n) requires m>=1 and n>=2");
  PrecisionGuard g(digits_);
  const auto key = std::make_pair(m, n);
  auto it = euler_cache_.find(key);
  if (it != euler_cache_.end()) return it->second;
  // the tail expansion bottoms out near 10^(-2.7 N), so N grows with precision
  const long N = std::max<long>(64, digits_);
  BigFloat h = 0, head = 0;
  for (long d = 1; d <= N; ++d) {
    h += inv_pow(d, m);
    head += h * inv_pow(d, n);
  }
  BigFloat v = head + harmonic_tail(m, n, N);
  euler_cache_.emplace(key, v);
  return v;
}

BigFloat Evaluator::shifted_sum(int k, int a, int b, long mu) {
  if (k < 0 || a < 0 || b < 0 || mu < 0) throw DomainError("shifted_sum: negative parameter");
  if (a + b < 2) throw DivergentDescriptor("divergent: shifted_sum requires a+b>=2");
  PrecisionGuard g(digits_);
  if (b == 0 || mu == 0) return k == 0 ? zeta(a + b) : euler_sum(k, a + b);
  const long N = std::max<long>({256, 16 * mu, static_cast<long>(digits_)});
  BigFloat h = 0, head = 0;
  for (long nu = 1; nu <= N; ++nu) {
    if (k > 0) h += inv_pow(nu, k);
    head += (k > 0 ? h : BigFloat(1)) * inv_pow(nu, a) * inv_pow(nu + mu, b);
  }
  // Tail: (nu+mu)^-b = sum_j (-1)^j C(b+j-1,j) mu^j nu^{-b-j}, nu > N >= 16 mu.
  const BigFloat t0 = harmonic_tail(k, a + b, N);
  const double rho = double(mu) / double(N + 1);
  const double log_t0 = std::log10(std::max(static_cast<double>(t0), 1e-300));
  BigFloat tail = 0;
  BigFloat mu_pow = 1;
  for (int j = 0;; ++j) {
    // the factor C(b+j-1,j) mu^j amplifies the absolute error of each tail
    const Rational coef = binomial(b + j - 1, j);
    const double amp = std::log10(coef.raw().get_d()) + j * std::log10(double(mu));
    const BigFloat term = to_big(coef) * mu_pow * (j == 0 ? t0 : harmonic_tail(k, a + b + j, N, log10_tol_ - amp - 2));
    tail += (j % 2 == 0) ? term : BigFloat(-term);
    mu_pow *= mu;
    // Next term bounded by C(b+j,j+1) rho^{j+1} t0, later ones shrink geometrically.
    const double ratio = rho * double(b + j + 1) / double(j + 2);
    const double lg = std::log10(static_cast<double>(binomial(b + j, j + 1).raw().get_d())) + (j + 1) * std::log10(rho) +
                      log_t0 - std::log10(1.0 - std::min(ratio, 0.5));
    if (lg <= log10_tol_) break;
    if (j > 2000) throw PrecisionUnreachable("shifted_sum tail did not converge");
  }
  return head + tail;
}

bool Evaluator::tornheim_diagonal(int r, int s, int t, BigFloat& out) {
  // tail over d > D is at most sum (1+ln d)(2^s d^{-s-t} + 2^r d^{-r-t})
  auto log_bound = [&](double D) {
    auto part = [&](int lead, int x) {
      const double xm = x - 1.0;
      return std::pow(2.0, lead) * std::pow(D, -xm) * ((1 + std::log(D)) / xm + 1 / (xm * xm));
    };
    return std::log10(part(s, s + t) + part(r, r + t));
  };
  const double budget = double(cfg_.max_terms) / 32.0;
  long D = 8;
  while (log_bound(double(D)) > log10_tol_) {
    D *= 2;
    if (double(D) * double(D) / 2.0 > budget) return false;
  }
  std::vector<BigFloat> ir(D), is(D);
  for (long i = 1; i < D; ++i) {
    ir[i] = inv_pow(i, r);
    is[i] = inv_pow(i, s);
  }
  BigFloat sum = 0;
  for (long d = 2; d <= D; ++d) {
    BigFloat inner = 0;
    for (long m = 1; m < d; ++m) inner += ir[m] * is[d - m];
    sum += inner * inv_pow(d, t);
  }
  out = sum;
  return true;
}

BigFloat Evaluator::tornheim_nonneg(int r, int s, int t) {
  if (t == 0) return zeta(r) * zeta(s);
  if (r == 0 && s == 0) return zeta(t - 1) - zeta(t);
  if (s == 0) return euler_sum(r, t) - zeta(r + t);
  if (r == 0) return euler_sum(s, t) - zeta(s + t);
  BigFloat direct;
  if (tornheim_diagonal(r, s, t, direct)) return direct;
  // Partial fractions into T(i,0,c) = E(i,c) - zeta(i+c).
  BigFloat sum = 0;
  for (int i = 0; i <= r - 1; ++i)
    sum += to_big(binomial(s + i - 1, i)) * (euler_sum(r - i, s + t + i) - zeta(r + s + t));
  for (int i = 0; i <= s - 1; ++i)
    sum += to_big(binomial(r + i - 1, i)) * (euler_sum(s - i, r + t + i) - zeta(r + s + t));
  return sum;
}

// T(-k,s,t) = sum_j C(k,j) (-1)^j sum_d d^{k-j-t} H_{d-1,s-j}.
BigFloat Evaluator::tornheim_negative(int k, int s, int t) {
  BigFloat total = 0;
  for (int j = 0; j <= k; ++j) {
    const int q = s - j, e = t + j - k;
    BigFloat piece = 0;
    if (q >= 1) {
      if (e < 2) throw DivergentDescriptor("divergent: T with negative argument has a divergent component");
      piece = euler_sum(q, e) - zeta(q + e);
    } else {
      // H_{d-1,q} = sum_{i<d} i^u, a polynomial in d (Faulhaber).
      const int u = -q;
      std::vector<std::pair<int, Rational>> poly;  // (degree, coefficient)
      if (u == 0) {
        poly = {{1, Rational(1)}, {0, Rational(-1)}};
      } else {
        for (int l = 0; l <= u; ++l)
          poly.emplace_back(u + 1 - l, binomial(u + 1, l) * bernoulli(l) / Rational(u + 1));
      }
      for (const auto& [deg, c] : poly) {
        if (c.is_zero()) continue;
        const int arg = e - deg;
        if (arg < 2) throw DivergentDescriptor("divergent: T with negative argument has a divergent component");
        piece += to_big(c) * zeta(arg);
      }
    }
    const BigFloat w = to_big(binomial(k, j));
    total += (j % 2 == 0) ? BigFloat(w * piece) : BigFloat(-w * piece);
  }
  return total;
}

BigFloat Evaluator::tornheim(int r, int s, int t) {
  if (r > s) std::swap(r, s);
  if (t < 0 || s < 0) throw DomainError("tornheim: only the first argument may be negative");
  if (r + t <= 1 || s + t <= 1 || r + s + t <= 2) {
    SumDescriptor::tornheim(std::max(r, 0), s, t).require_convergent();
    throw DivergentDescriptor("divergent: requires r+t>1");
  }
  PrecisionGuard g(digits_);
  const auto key = std::make_tuple(r, s, t);
  auto it = tornheim_cache_.find(key);
  if (it != tornheim_cache_.end()) return it->second;
  BigFloat v = r < 0 ? tornheim_negative(-r, s, t) : tornheim_nonneg(r, s, t);
  tornheim_cache_.emplace(key, v);
  return v;
}

BigFloat Evaluator::zeta_expr(const ZetaExpr& e) {
  PrecisionGuard g(digits_);
  BigFloat sum = 0;
  double err = 0;
  const double eps = std::pow(10.0, log10_tol_);
  for (const auto& [m, c] : e.terms()) {
    BigFloat prod = to_big(c);
    for (int k : m.args()) prod *= zeta(k);
    sum += prod;
    const double len = double(m.args().size());
    err += std::abs(c.raw().get_d()) * len * eps * std::pow(1.65, len);
  }
  if (err > static_cast<double>(cfg_.tolerance)) throw PrecisionUnreachable("zeta expression coefficients too large for tolerance");
  return sum;
}

BigFloat Evaluator::descriptor(const SumDescriptor& d) {
  d.require_convergent();
  return d.is_euler() ? euler_sum(d.a(), d.b()) : tornheim(d.a(), d.b(), d.c());
}

std::string Evaluator::format(const BigFloat& x, int digits) const {
  PrecisionGuard g(digits_);
  if (x == 0) return "0";
  const BigFloat ax = abs(x);
  const long e10 = static_cast<long>(floor(log10(ax)));
  std::ostringstream os;
  if (e10 >= -5 && e10 < 20) {
    os << std::fixed << std::setprecision(std::max<long>(0, digits - 1 - e10)) << x;
  } else {
    os << std::scientific << std::setprecision(digits - 1) << x;
  }
  return os.str();
}

BigFloat zeta_numeric(int s, const NumericConfig& cfg) { return Evaluator(cfg).zeta(s); }
BigFloat euler_sum_numeric(int m, int n, const NumericConfig& cfg) { return Evaluator(cfg).euler_sum(m, n); }
BigFloat tornheim_numeric(int r, int s, int t, const NumericConfig& cfg) { return Evaluator(cfg).tornheim(r, s, t); }
BigFloat zeta_expr_numeric(const ZetaExpr& e, const NumericConfig& cfg) { return Evaluator(cfg).zeta_expr(e); }
BigFloat hurwitz_shift(int t, long mu, const NumericConfig& cfg) { return Evaluator(cfg).hurwitz_shift(t, mu); }

}  // namespace tornheim
