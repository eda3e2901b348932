#include "tornheim/identities.hpp"

#include "tornheim/closed_forms.hpp"
#include "tornheim/combinations.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/exact.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace tornheim {

std::string to_string(IdentityKind k) { return k == IdentityKind::Exact ? "exact" : "numeric"; }

long Params::operator[](const std::string& name) const {
  for (const auto& [k, v] : vals_)
    if (k == name) return v;
  throw DomainError("identity parameter '" + name + "' not set");
}

bool Params::has(const std::string& name) const {
  return std::any_of(vals_.begin(), vals_.end(), [&](const auto& kv) { return kv.first == name; });
}

void Params::set(const std::string& name, long v) {
  for (auto& [k, old] : vals_)
    if (k == name) {
      old = v;
      return;
    }
  vals_.emplace_back(name, v);
}

std::string Params::str() const {
  std::string out;
  for (const auto& [k, v] : vals_) out += (out.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return out.empty() ? "-" : out;
}

std::size_t IdentityReport::passed() const {
  return std::count_if(results.begin(), results.end(), [](const TupleResult& t) { return t.pass; });
}
std::size_t IdentityReport::failed() const { return results.size() - passed(); }

std::size_t RunSummary::passed() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.passed();
  return n;
}
std::size_t RunSummary::failed() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.failed();
  return n;
}
std::size_t RunSummary::cases_failed() const {
  return std::count_if(reports.begin(), reports.end(), [](const IdentityReport& r) { return !r.ok(); });
}

namespace {

using Q = Rational;

// ---------------------------------------------------------------- helpers

long sg(long k) { return sign_power(k); }
Q C(long a, long b) { return binomial(a, b); }
/// x^k, k of either sign.
Q P(long x, long k) { return pow(Q(x), k); }

/// H_{r,k} for any integer order (k <= 0 gives power sums).
Q Hq(long r, long k) {
  if (r < 0) throw DomainError("harmonic number with negative index");
  if (k >= 1) return harmonic(r, static_cast<int>(k));
  Q total;
  for (long j = 1; j <= r; ++j) total += P(j, -k);
  return total;
}

/// Sum over i = a..b under the signed-range convention.
template <class T, class F>
T rsum(long a, long b, F f) {
  T total{};
  if (b >= a) {
    for (long i = a; i <= b; ++i) total += f(i);
  } else if (b < a - 1) {
    for (long i = b + 1; i <= a - 1; ++i) total -= f(i);
  }
  return total;
}
template <class F>
Q qsum(long a, long b, F f) {
  return rsum<Q>(a, b, f);
}

struct Range {
  const char* name;
  long lo, hi;
};

std::vector<Params> product(const std::vector<Range>& rs, const std::function<bool(const Params&)>& keep = {}) {
  std::vector<Params> out;
  Params cur;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == rs.size()) {
      if (!keep || keep(cur)) out.push_back(cur);
      return;
    }
    for (long v = rs[k].lo; v <= rs[k].hi; ++v) {
      cur.set(rs[k].name, v);
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

struct Num {
  Evaluator& ev;
  BigFloat q(const Q& x) const { return ev.to_big(x); }
  BigFloat z(int k) const { return k == 0 ? q(Q(-1, 2)) : ev.zeta(k); }
  BigFloat H(long r, long k) const { return q(Hq(r, k)); }
  BigFloat E(int m, int n) const { return ev.euler_sum(m, n); }
  BigFloat T(int r, int s, int t) const { return ev.tornheim(r, s, t); }
  /// sum_nu h(nu) / (nu^a (nu+mu)^b), h = H_{nu,k} or 1 when k = 0.
  BigFloat S(int k, int a, int b, long mu) const { return ev.shifted_sum(k, a, b, mu); }
  BigFloat zero() const { return q(Q(0)); }
};

template <class F>
BigFloat bsum(long a, long b, F f) {
  return rsum<BigFloat>(a, b, f);
}

// Finite sums that appear on the right of several statements.
/// sum_{i=1}^{mu} H_{i-1,k} / i^e
Q G(long mu, long k, long e) {
  Q total;
  for (long i = 1; i <= mu; ++i) total += Hq(i - 1, k) * P(i, -e);
  return total;
}
/// sum_{i=1}^{mu} H_{i,k} / i^e
Q Gplus(long mu, long k, long e) {
  Q total;
  for (long i = 1; i <= mu; ++i) total += Hq(i, k) * P(i, -e);
  return total;
}
/// sum_{nu=1}^{N} 1/(nu^s (nu+mu)^t), exponents of any sign.
Q plus_sum(long N, long mu, long s, long t) {
  Q total;
  for (long nu = 1; nu <= N; ++nu) total += P(nu, -s) * P(nu + mu, -t);
  return total;
}
/// sum_{nu=1}^{N} 1/(nu^s (mu-nu)^t), N < mu.
Q minus_sum(long N, long mu, long s, long t) {
  Q total;
  for (long nu = 1; nu <= N; ++nu) total += P(nu, -s) * P(mu - nu, -t);
  return total;
}

bool convergent_T(int r, int s, int t) { return r + t > 1 && s + t > 1 && r + s + t > 2; }

// ---------------------------------------------------------------- registry

class Catalog {
 public:
  std::vector<IdentityCase> cases;

  IdentityCase& exact(std::string id, std::string domain, std::string statement,
                      std::function<std::vector<Params>(const Grid&)> tuples,
                      std::function<std::vector<ExactSides>(const Params&)> check,
                      std::vector<std::string> forms = {"main"}, std::string note = {}) {
    IdentityCase c;
    c.id = std::move(id);
    c.kind = IdentityKind::Exact;
    c.domain = std::move(domain);
    c.statement = std::move(statement);
    c.forms = std::move(forms);
    c.note = std::move(note);
    c.tuples = std::move(tuples);
    c.exact = std::move(check);
    cases.push_back(std::move(c));
    return cases.back();
  }

  IdentityCase& numeric(std::string id, std::string domain, std::string statement,
                        std::function<std::vector<Params>(const Grid&)> tuples,
                        std::function<std::vector<NumericSides>(const Params&, Evaluator&)> check,
                        std::vector<std::string> forms = {"main"}, std::string note = {}) {
    IdentityCase c;
    c.id = std::move(id);
    c.kind = IdentityKind::Numeric;
    c.domain = std::move(domain);
    c.statement = std::move(statement);
    c.forms = std::move(forms);
    c.note = std::move(note);
    c.tuples = std::move(tuples);
    c.numeric = std::move(check);
    cases.push_back(std::move(c));
    return cases.back();
  }
};

const char* kMuPositive = "mu restricted to positive integers";

void add_finite_basics(Catalog& cat) {
  cat.exact(
      "eq-i4135lr", "mu>=1, N>=1, t>=1", "sum_{nu=1}^N (nu+mu)^-t = H_{N+mu,t} - H_{mu,t}",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"N", 1, g.n_max}, {"t", 1, g.exp_max}}); },
      [](const Params& p) {
        const long mu = p["mu"], N = p["N"], t = p["t"];
        return std::vector<ExactSides>{{"main", plus_sum(N, mu, 0, t), Hq(N + mu, t) - Hq(mu, t)}};
      });

  cat.exact(
      "eq-s2fevcr", "1<=N<mu, t>=1", "sum_{nu=1}^N (mu-nu)^-t = H_{mu-1,t} - H_{mu-N-1,t}",
      [](const Grid& g) {
        return product({{"mu", 2, g.mu_max}, {"N", 1, g.n_max}, {"t", 1, g.exp_max}},
                       [](const Params& p) { return p["N"] < p["mu"]; });
      },
      [](const Params& p) {
        const long mu = p["mu"], N = p["N"], t = p["t"];
        return std::vector<ExactSides>{{"main", minus_sum(N, mu, 0, t), Hq(mu - 1, t) - Hq(mu - N - 1, t)}};
      });

  cat.exact(
      "eq-mjf11t4", "integers a, b, u (b < a allowed)",
      "sum_{i=a}^b f_i = sum_{i=u-b}^{u-a} f_{u-i}, with sum_{i=a}^b f_i = -sum_{i=b+1}^{a-1} f_i for b < a",
      [](const Grid&) { return product({{"a", -3, 3}, {"b", -4, 6}, {"u", -2, 4}}); },
      [](const Params& p) {
        const long a = p["a"], b = p["b"], u = p["u"];
        auto f = [](long i) { return Q(1) / Q(i * i + i + 1); };
        std::vector<ExactSides> out;
        const Q lhs = qsum(a, b, f);
        out.push_back({"main", lhs, qsum(u - b, u - a, [&](long i) { return f(u - i); })});
        out.push_back({"reversal", lhs, qsum(0, b - a, [&](long i) { return f(b - i); })});
        out.push_back({"reflection", lhs, qsum(a, b, [&](long i) { return f(a + b - i); })});
        out.push_back({"variant", qsum(a, b - a, f), qsum(a, b - a, [&](long i) { return f(b - i); })});
        out.push_back({"empty", qsum(a + 1, a - 1, f) + qsum(a, a - 1, f), -f(a)});
        return out;
      },
      {"main", "reversal", "reflection", "variant", "empty"});

  cat.exact(
      "eq-gk1txsj", "mu>=1, N>=1, n>=0",
      "nu^-n - (nu+mu)^-n = sum_{p=0}^{n-1} mu/(nu^{p+1}(nu+mu)^{n-p}); summed: H_{N,n} - H_{N+mu,n} + H_{mu,n}",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"N", 1, g.n_max}, {"n", 0, g.exp_max}}); },
      [](const Params& p) {
        const long mu = p["mu"], N = p["N"], n = p["n"];
        auto term = [&](long nu) {
          return qsum(0, n - 1, [&](long q) { return Q(mu) * P(nu, -(q + 1)) * P(nu + mu, -(n - q)); });
        };
        Q summed;
        for (long nu = 1; nu <= N; ++nu) summed += term(nu);
        return std::vector<ExactSides>{
            {"pointwise", P(N, -n) - P(N + mu, -n), term(N)},
            {"summed", Hq(N, n) - Hq(N + mu, n) + Hq(mu, n), summed}};
      },
      {"pointwise", "summed"}, "n = 1 pointwise is the telescoping identity 1/nu - 1/(nu+mu) = mu/(nu(nu+mu))");

  cat.exact(
      "harmonic-cumsum", "N>=1, n>=1", "sum_{r=1}^N H_{r,n} = (N+1) H_{N,n} - H_{N,n-1}",
      [](const Grid& g) { return product({{"N", 1, g.n_max}, {"n", 1, g.exp_max}}); },
      [](const Params& p) {
        const long N = p["N"], n = p["n"];
        Q direct;
        for (long r = 1; r <= N; ++r) direct += Hq(r, n);
        std::vector<ExactSides> out{{"main", direct, Q(N + 1) * Hq(N, n) - Hq(N, n - 1)}};
        if (n >= 2) out.push_back({"library", harmonic_cumsum(N, static_cast<int>(n)), direct});
        return out;
      },
      {"main", "library"},
      "the printed form (N+1)H_{N,n} - N H_{N,n-1} is a misprint (N=2, n=2 gives 3/4 instead of 9/4); "
      "the form used inside the T(0,0,t) derivation, with coefficient 1 on H_{N,n-1}, is checked");

  cat.exact(
      "eq-T00t-finite", "N>=1, t>=1",
      "sum_{mu,nu<=N} (nu+mu)^-t = 2N H_{2N,t} + H_{2N,t} - H_{2N,t-1} - 2N H_{N,t} - 2H_{N,t} + 2H_{N,t-1}",
      [](const Grid& g) { return product({{"N", 1, g.n_max}, {"t", 1, g.exp_max}}); },
      [](const Params& p) {
        const long N = p["N"], t = p["t"];
        Q direct, via_i4135lr;
        for (long mu = 1; mu <= N; ++mu) {
          for (long nu = 1; nu <= N; ++nu) direct += P(nu + mu, -t);
          via_i4135lr += Hq(N + mu, t) - Hq(mu, t);
        }
        const Q closed = Q(2 * N) * Hq(2 * N, t) + Hq(2 * N, t) - Hq(2 * N, t - 1) - Q(2 * N) * Hq(N, t) -
                         Q(2) * Hq(N, t) + Q(2) * Hq(N, t - 1);
        return std::vector<ExactSides>{{"main", direct, closed}, {"telescoped", direct, via_i4135lr}};
      },
      {"main", "telescoped"});

  cat.exact(
      "harmonic-symmetry-finite", "mu>=0, n,s>=1",
      "sum_{nu<=mu} H_{nu,n}/nu^s + sum_{nu<=mu} H_{nu,s}/nu^n = H_{mu,n+s} + H_{mu,n} H_{mu,s}; "
      "2 sum_{nu<=mu} H_{nu,n}/nu^n = H_{mu,n}^2 + H_{mu,2n}",
      [](const Grid& g) { return product({{"mu", 0, g.mu_max}, {"n", 1, g.exp_max}, {"s", 1, g.exp_max}}); },
      [](const Params& p) {
        const long mu = p["mu"], n = p["n"], s = p["s"];
        std::vector<ExactSides> out{
            {"main", Gplus(mu, n, s) + Gplus(mu, s, n), Hq(mu, n + s) + Hq(mu, n) * Hq(mu, s)}};
        if (n == s) out.push_back({"diagonal", Q(2) * Gplus(mu, n, n), Hq(mu, n) * Hq(mu, n) + Hq(mu, 2 * n)});
        return out;
      },
      {"main", "diagonal"});
}

void add_partial_fractions(Catalog& cat) {
  cat.exact(
      "eq-hrp8apz", "nu,mu>=1 (mu>nu for the minus form), s,t>=1",
      "1/(nu^s (nu+mu)^t) = sum_{i=0}^{s-1} C(t+i-1,i)(-1)^i/(nu^{s-i} mu^{t+i}) "
      "+ sum_{i=0}^{t-1} C(s+i-1,i)(-1)^s/(mu^{s+i}(nu+mu)^{t-i})",
      [](const Grid& g) {
        return product({{"nu", 1, g.n_max}, {"mu", 1, g.mu_max}, {"s", 1, g.exp_max}, {"t", 1, g.exp_max}});
      },
      [](const Params& p) {
        const long nu = p["nu"], mu = p["mu"], s = p["s"], t = p["t"];
        std::vector<ExactSides> out;
        const Q plus = qsum(0, s - 1, [&](long i) { return C(t + i - 1, i) * Q(sg(i)) * P(nu, i - s) * P(mu, -(t + i)); }) +
                       qsum(0, t - 1, [&](long i) { return C(s + i - 1, i) * Q(sg(s)) * P(mu, -(s + i)) * P(nu + mu, i - t); });
        out.push_back({"main", P(nu, -s) * P(nu + mu, -t), plus});
        const Q swap = qsum(0, s - 1, [&](long i) { return C(t + i - 1, i) * P(nu, i - s) * P(mu + nu, -(t + i)); }) +
                       qsum(0, t - 1, [&](long i) { return C(s + i - 1, i) * P(mu, i - t) * P(mu + nu, -(s + i)); });
        out.push_back({"swap", P(nu, -s) * P(mu, -t), swap});
        if (nu < mu) {
          const Q minus = qsum(0, s - 1, [&](long i) { return C(t + i - 1, i) * P(nu, i - s) * P(mu, -(t + i)); }) +
                          qsum(0, t - 1, [&](long i) { return C(s + i - 1, i) * P(mu, -(s + i)) * P(mu - nu, i - t); });
          out.push_back({"minus", P(nu, -s) * P(mu - nu, -t), minus});
        }
        return out;
      },
      {"main", "swap", "minus"});

  cat.exact(
      "eq-p5bh6gf", "nu,mu>=1, s,t>=1",
      "1/(nu^s (nu+mu)^t) = sum_{i=0}^{s-2} ... + (-1)^s sum_{i=0}^{t-2} ... "
      "+ (-1)^{s-1} C(s+t-2,s-1) mu^{1-s-t} mu/(nu(nu+mu))",
      [](const Grid& g) {
        return product({{"nu", 1, g.n_max}, {"mu", 1, g.mu_max}, {"s", 1, g.exp_max}, {"t", 1, g.exp_max}});
      },
      [](const Params& p) {
        const long nu = p["nu"], mu = p["mu"], s = p["s"], t = p["t"];
        const Q rhs = qsum(0, s - 2, [&](long i) { return C(t + i - 1, i) * Q(sg(i)) * P(nu, i - s) * P(mu, -(t + i)); }) +
                      Q(sg(s)) * qsum(0, t - 2, [&](long i) { return C(s + i - 1, i) * P(mu, -(s + i)) * P(nu + mu, i - t); }) +
                      Q(sg(s - 1)) * C(s + t - 2, s - 1) * P(mu, 1 - s - t) * Q(mu) / Q(nu * (nu + mu));
        return std::vector<ExactSides>{{"main", P(nu, -s) * P(nu + mu, -t), rhs}};
      });

  cat.exact(
      "thm-b2i7lfz", "mu>=1, N>=1, s,t>=1 (" + std::string(kMuPositive) + ")",
      "sum_{nu=1}^N 1/(nu^s (nu+mu)^t) = sum_{i=0}^{s-1} C(t+i-1,i)(-1)^i H_{N,s-i}/mu^{t+i} "
      "+ (-1)^s sum_{i=0}^{t-1} C(s+i-1,i)(H_{N+mu,t-i} - H_{mu,t-i})/mu^{s+i}",
      [](const Grid& g) {
        return product({{"mu", 1, g.mu_max}, {"N", 1, g.n_max}, {"s", 1, g.exp_max}, {"t", 1, g.exp_max}});
      },
      [](const Params& p) {
        const long mu = p["mu"], N = p["N"], s = p["s"], t = p["t"];
        const Q rhs = qsum(0, s - 1, [&](long i) { return C(t + i - 1, i) * Q(sg(i)) * Hq(N, s - i) * P(mu, -(t + i)); }) +
                      Q(sg(s)) * qsum(0, t - 1, [&](long i) {
                        return C(s + i - 1, i) * (Hq(N + mu, t - i) - Hq(mu, t - i)) * P(mu, -(s + i));
                      });
        return std::vector<ExactSides>{{"main", plus_sum(N, mu, s, t), rhs}};
      });

  cat.exact(
      "eq-s45a41o", "mu>=1, N>=1, s>=1",
      "sum_{nu=1}^N 1/(nu^s (nu+mu)^s) = (-1)^{s-1} sum_{i=1}^s C(2s-i-1,s-1)(H_{mu,i} - H_{N+mu,i} - (-1)^i H_{N,i})/mu^{2s-i}",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"N", 1, g.n_max}, {"s", 1, g.exp_max}}); },
      [](const Params& p) {
        const long mu = p["mu"], N = p["N"], s = p["s"];
        const Q lhs = plus_sum(N, mu, s, s);
        const Q first = qsum(0, s - 1, [&](long i) {
          return C(s + i - 1, i) *
                 (Q(sg(i)) * Hq(N, s - i) + Q(sg(s)) * (Hq(N + mu, s - i) - Hq(mu, s - i))) * P(mu, -(s + i));
        });
        const Q second = Q(sg(s - 1)) * qsum(1, s, [&](long i) {
          return C(2 * s - i - 1, s - 1) * (Hq(mu, i) - Hq(N + mu, i) - Q(sg(i)) * Hq(N, i)) * P(mu, i - 2 * s);
        });
        return std::vector<ExactSides>{{"first", lhs, first}, {"second", lhs, second}};
      },
      {"first", "second"});

  cat.exact(
      "thm-minus-variant", "1<=N<mu, n>=0",
      "sum_{p=1}^n (-1)^{p-1} sum_{nu=1}^N mu/(nu^{n-p+1}(mu-nu)^p) = H_{N,n} - (-1)^n (H_{mu-1,n} - H_{mu-N-1,n})",
      [](const Grid& g) {
        return product({{"mu", 2, g.mu_max}, {"N", 1, g.n_max}, {"n", 0, g.exp_max}},
                       [](const Params& p) { return p["N"] < p["mu"]; });
      },
      [](const Params& p) {
        const long mu = p["mu"], N = p["N"], n = p["n"];
        const Q lhs = qsum(1, n, [&](long q) { return Q(sg(q - 1)) * Q(mu) * minus_sum(N, mu, n - q + 1, q); });
        std::vector<ExactSides> out{{"main", lhs, Hq(N, n) - Q(sg(n)) * (Hq(mu - 1, n) - Hq(mu - N - 1, n))}};
        if (n == 1)
          out.push_back({"particular", Q(mu) * minus_sum(N, mu, 1, 1), Hq(N, 1) + Hq(mu - 1, 1) - Hq(mu - N - 1, 1)});
        return out;
      },
      {"main", "particular"}, "n = 0 uses H_{r,0} = r");

  cat.exact(
      "thm-u9a6spe", "1<=N<mu, s,t>=1",
      "sum_{nu=1}^N 1/(nu^s (mu-nu)^t) = sum_{i=0}^{s-1} C(t+i-1,i) H_{N,s-i}/mu^{t+i} "
      "+ sum_{i=0}^{t-1} C(s+i-1,i)(H_{mu-1,t-i} - H_{mu-N-1,t-i})/mu^{s+i}",
      [](const Grid& g) {
        return product({{"mu", 2, g.mu_max}, {"N", 1, g.n_max}, {"s", 1, g.exp_max}, {"t", 1, g.exp_max}},
                       [](const Params& p) { return p["N"] < p["mu"]; });
      },
      [](const Params& p) {
        const long mu = p["mu"], N = p["N"], s = p["s"], t = p["t"];
        const Q lhs = minus_sum(N, mu, s, t);
        auto d = [&](long i) { return Hq(mu - 1, i) - Hq(mu - N - 1, i); };
        std::vector<ExactSides> out;
        out.push_back({"main", lhs,
                       qsum(0, s - 1, [&](long i) { return C(t + i - 1, i) * Hq(N, s - i) * P(mu, -(t + i)); }) +
                           qsum(0, t - 1, [&](long i) { return C(s + i - 1, i) * d(t - i) * P(mu, -(s + i)); })});
        out.push_back({"index-shifted", lhs,
                       qsum(1, s, [&](long i) { return C(s + t - i - 1, t - 1) * Hq(N, i) * P(mu, i - s - t); }) +
                           qsum(1, t, [&](long i) { return C(s + t - i - 1, s - 1) * d(i) * P(mu, i - s - t); })});
        if (t == 1)
          out.push_back({"mzn7m04", lhs, d(1) * P(mu, -s) + qsum(1, s, [&](long i) { return Hq(N, i) * P(mu, i - s - 1); })});
        if (s == 1)
          out.push_back({"pjzwe2i", lhs, Hq(N, 1) * P(mu, -t) + qsum(1, t, [&](long i) { return d(i) * P(mu, i - t - 1); })});
        if (s == t)
          out.push_back({"hega9ix", lhs, qsum(1, s, [&](long i) {
                           return C(2 * s - i - 1, s - 1) * (Hq(N, i) + d(i)) * P(mu, i - 2 * s);
                         })});
        return out;
      },
      {"main", "index-shifted", "mzn7m04", "pjzwe2i", "hega9ix"},
      "index-shifted form: the printed H_{mu-N-1,t} in the second sum is read as H_{mu-N-1,i}; the "
      "literal reading fails whenever t > 1 and N < mu - 1");

  cat.exact(
      "lemma-amfvtaz", "a,c nonzero rationals from a fixed table, m>=1",
      "a f^m = a f + sum_{i=1}^{m-1} c f^i = a f + sum_{i=0}^{m-2} c f^{m-i-1}, where a f = c + a",
      [](const Grid&) {
        static const std::vector<std::pair<long, long>> values{{1, 1}, {-1, 1}, {2, 1}, {-3, 4}, {5, 3}};
        std::vector<Params> out;
        for (auto [ap, aq] : values)
          for (auto [cp, cq] : values)
            for (long m = 1; m <= 8; ++m) out.push_back(Params{{"a_p", ap}, {"a_q", aq}, {"c_p", cp}, {"c_q", cq}, {"m", m}});
        return out;
      },
      [](const Params& p) {
        const Q a(p["a_p"], p["a_q"]), c(p["c_p"], p["c_q"]);
        const long m = p["m"];
        const Q f = (c + a) / a;
        const Q lhs = a * pow(f, m);
        return std::vector<ExactSides>{
            {"main", lhs, a * f + qsum(1, m - 1, [&](long i) { return c * pow(f, i); })},
            {"shifted", lhs, a * f + qsum(0, m - 2, [&](long i) { return c * pow(f, m - i - 1); })}};
      },
      {"main", "shifted"}, "a, c, f taken as rational constants");

  cat.exact(
      "eq-xbugcw0", "nu,mu>=1, m>=1",
      "(-1)^{m-1} mu^m/(nu^m (nu+mu)) = mu/(nu(nu+mu)) + sum_{i=1}^{m-1} (-1)^i mu^i/nu^{i+1}",
      [](const Grid& g) { return product({{"nu", 1, g.n_max}, {"mu", 1, g.mu_max}, {"m", 1, g.exp_max}}); },
      [](const Params& p) {
        const long nu = p["nu"], mu = p["mu"], m = p["m"];
        return std::vector<ExactSides>{
            {"main", Q(sg(m - 1)) * P(mu, m) * P(nu, -m) / Q(nu + mu),
             Q(mu) / Q(nu * (nu + mu)) + qsum(1, m - 1, [&](long i) { return Q(sg(i)) * P(mu, i) * P(nu, -(i + 1)); })}};
      });
}

void add_differentiated(Catalog& cat) {
  // Pointwise identities obtained by differentiating the partial fractions,
  // then their finite sums over nu (plus and minus forms).
  auto tfna = [](long nu, long mu, long m, long n, bool minus) {
    // minus: nu -> -nu form, rearranged as in the minus theorem
    if (!minus)
      return std::pair{Q(sg(m - 1)) * qsum(0, n, [&](long q) {
                         return Q(sg(q)) * C(m, q) * P(mu, m - q) * P(nu, -m) * P(nu + mu, -(n - q + 1));
                       }),
                       -P(nu + mu, -(n + 1)) + Q(sg(n)) * qsum(n, m - 1, [&](long i) {
                         return Q(sg(i)) * C(i, n) * P(mu, i - n) * P(nu, -(i + 1));
                       })};
    return std::pair{qsum(0, n, [&](long q) {
                       return Q(sg(q)) * C(m, q) * P(mu, m - q) * P(nu, -m) * P(mu - nu, -(n - q + 1));
                     }),
                     P(mu - nu, -(n + 1)) +
                         Q(sg(n)) * qsum(n, m - 1, [&](long i) { return C(i, n) * P(mu, i - n) * P(nu, -(i + 1)); })};
  };

  cat.exact(
      "eq-tfna05t", "nu,mu>=1, m>=1, n>=0",
      "(-1)^{m-1} sum_{p=0}^n (-1)^p C(m,p) mu^{m-p}/(nu^m (nu+mu)^{n-p+1}) = -(nu+mu)^{-n-1} "
      "+ (-1)^n sum_{i=n}^{m-1} (-1)^i C(i,n) mu^{i-n}/nu^{i+1}",
      [](const Grid& g) {
        return product({{"nu", 1, g.n_max}, {"mu", 1, g.mu_max}, {"m", 1, g.exp_max}, {"n", 0, g.exp_max}});
      },
      [tfna](const Params& p) {
        auto [l, r] = tfna(p["nu"], p["mu"], p["m"], p["n"], false);
        return std::vector<ExactSides>{{"main", l, r}};
      });

  cat.exact(
      "thm-x1nstmi", "mu>=1, N>=1, m>=1, n>=0",
      "(-1)^{m-1} sum_{p=0}^n (-1)^p C(m,p) sum_{nu=1}^N mu^{m-p}/(nu^m (nu+mu)^{n-p+1}) "
      "= H_{mu,n+1} - H_{N+mu,n+1} + (-1)^n sum_{i=n}^{m-1} (-1)^i C(i,n) mu^{i-n} H_{N,i+1}",
      [](const Grid& g) {
        return product({{"mu", 1, g.mu_max}, {"N", 1, g.n_max}, {"m", 1, g.exp_max}, {"n", 0, g.exp_max}});
      },
      [tfna](const Params& p) {
        const long mu = p["mu"], N = p["N"], m = p["m"], n = p["n"];
        Q lhs;
        for (long nu = 1; nu <= N; ++nu) lhs += tfna(nu, mu, m, n, false).first;
        const Q rhs = Hq(mu, n + 1) - Hq(N + mu, n + 1) + Q(sg(n)) * qsum(n, m - 1, [&](long i) {
                        return Q(sg(i)) * C(i, n) * P(mu, i - n) * Hq(N, i + 1);
                      });
        return std::vector<ExactSides>{{"main", lhs, rhs}};
      });

  cat.exact(
      "thm-minus-x1nstmi", "1<=N<mu, m>=1, n>=0",
      "sum_{p=0}^n (-1)^p C(m,p) sum_{nu=1}^N mu^{m-p}/(nu^m (mu-nu)^{n-p+1}) "
      "= H_{mu-1,n+1} - H_{mu-N-1,n+1} + (-1)^n sum_{i=n}^{m-1} C(i,n) mu^{i-n} H_{N,i+1}",
      [](const Grid& g) {
        return product({{"mu", 2, g.mu_max}, {"N", 1, g.n_max}, {"m", 1, g.exp_max}, {"n", 0, g.exp_max}},
                       [](const Params& p) { return p["N"] < p["mu"]; });
      },
      [tfna](const Params& p) {
        const long mu = p["mu"], N = p["N"], m = p["m"], n = p["n"];
        Q lhs;
        for (long nu = 1; nu <= N; ++nu) lhs += tfna(nu, mu, m, n, true).first;
        const Q rhs = Hq(mu - 1, n + 1) - Hq(mu - N - 1, n + 1) +
                      Q(sg(n)) * qsum(n, m - 1, [&](long i) { return C(i, n) * P(mu, i - n) * Hq(N, i + 1); });
        return std::vector<ExactSides>{{"main", lhs, rhs}};
      });

  auto amx_lhs = [](long nu, long mu, long m, long n) {
    return Q(sg(m)) * qsum(0, n, [&](long q) {
             return C(m + q - 1, q) * P(mu, m + 1) * P(nu, -(m + q)) * P(nu + mu, -(n - q + 1));
           });
  };

  cat.exact(
      "eq-amxnxuz", "nu,mu>=1, m>=1, n>=0",
      "(-1)^m sum_{p=0}^n C(m+p-1,p) mu^{m+1}/(nu^{m+p}(nu+mu)^{n-p+1}) = mu/(nu+mu)^{n+1} "
      "+ sum_{i=1}^m (-1)^i C(i+n-1,n) mu^i/nu^{i+n}",
      [](const Grid& g) {
        return product({{"nu", 1, g.n_max}, {"mu", 1, g.mu_max}, {"m", 1, g.exp_max}, {"n", 0, g.exp_max}});
      },
      [amx_lhs](const Params& p) {
        const long nu = p["nu"], mu = p["mu"], m = p["m"], n = p["n"];
        const Q rhs = Q(mu) * P(nu + mu, -(n + 1)) +
                      qsum(1, m, [&](long i) { return Q(sg(i)) * C(i + n - 1, n) * P(mu, i) * P(nu, -(i + n)); });
        return std::vector<ExactSides>{{"main", amx_lhs(nu, mu, m, n), rhs}};
      });

  cat.exact(
      "thm-amxnxuz-finite", "mu>=1, N>=1, m>=1, n>=0",
      "(-1)^m sum_{p=0}^n C(m+p-1,p) sum_{nu=1}^N mu^{m+1}/(nu^{m+p}(nu+mu)^{n-p+1}) "
      "= mu H_{N+mu,n+1} - mu H_{N,n+1} - mu H_{mu,n+1} + sum_{i=2}^m (-1)^i C(i+n-1,n) mu^i H_{N,i+n}",
      [](const Grid& g) {
        return product({{"mu", 1, g.mu_max}, {"N", 1, g.n_max}, {"m", 1, g.exp_max}, {"n", 0, g.exp_max}});
      },
      [amx_lhs](const Params& p) {
        const long mu = p["mu"], N = p["N"], m = p["m"], n = p["n"];
        Q lhs;
        for (long nu = 1; nu <= N; ++nu) lhs += amx_lhs(nu, mu, m, n);
        const Q rhs = Q(mu) * (Hq(N + mu, n + 1) - Hq(N, n + 1) - Hq(mu, n + 1)) +
                      qsum(2, m, [&](long i) { return Q(sg(i)) * C(i + n - 1, n) * P(mu, i) * Hq(N, i + n); });
        return std::vector<ExactSides>{{"main", lhs, rhs}};
      });

  cat.exact(
      "thm-minus-amxnxuz", "1<=N<mu, m>=1, n>=0",
      "sum_{p=0}^n C(m+p-1,p)(-1)^p sum_{nu=1}^N mu^{m+1}/(nu^{m+p}(mu-nu)^{n-p+1}) "
      "= mu H_{mu-1,n+1} - mu H_{mu-N-1,n+1} + (-1)^n sum_{i=1}^m C(i+n-1,n) mu^i H_{N,i+n}",
      [](const Grid& g) {
        return product({{"mu", 2, g.mu_max}, {"N", 1, g.n_max}, {"m", 1, g.exp_max}, {"n", 0, g.exp_max}},
                       [](const Params& p) { return p["N"] < p["mu"]; });
      },
      [](const Params& p) {
        const long mu = p["mu"], N = p["N"], m = p["m"], n = p["n"];
        const Q lhs = qsum(0, n, [&](long q) {
          return C(m + q - 1, q) * Q(sg(q)) * P(mu, m + 1) * minus_sum(N, mu, m + q, n - q + 1);
        });
        const Q rhs = Q(mu) * (Hq(mu - 1, n + 1) - Hq(mu - N - 1, n + 1)) +
                      Q(sg(n)) * qsum(1, m, [&](long i) { return C(i + n - 1, n) * P(mu, i) * Hq(N, i + n); });
        return std::vector<ExactSides>{{"main", lhs, rhs}};
      });

  auto pkq_lhs = [](long nu, long mu, long m, long n) {
    return qsum(0, n, [&](long q) {
      return C(m + n - q - 1, m - 1) * P(mu, m) * P(nu, -(q + 1)) * P(nu + mu, -(m + n - q));
    });
  };

  cat.exact(
      "eq-pkqyaem", "nu,mu>=1, m>=1, n>=0",
      "sum_{p=0}^n C(m+n-p-1,m-1) mu^m/(nu^{p+1}(nu+mu)^{m+n-p}) = nu^{-n-1} "
      "- sum_{i=1}^m C(i+n-1,n) mu^{i-1}/(nu+mu)^{i+n}",
      [](const Grid& g) {
        return product({{"nu", 1, g.n_max}, {"mu", 1, g.mu_max}, {"m", 1, g.exp_max}, {"n", 0, g.exp_max}});
      },
      [pkq_lhs](const Params& p) {
        const long nu = p["nu"], mu = p["mu"], m = p["m"], n = p["n"];
        const Q rhs = P(nu, -(n + 1)) -
                      qsum(1, m, [&](long i) { return C(i + n - 1, n) * P(mu, i - 1) * P(nu + mu, -(i + n)); });
        return std::vector<ExactSides>{{"main", pkq_lhs(nu, mu, m, n), rhs}};
      });

  cat.exact(
      "thm-pkqyaem-finite", "mu>=1, N>=1, m>=1, n>=0",
      "sum_{p=0}^n C(m+n-p-1,m-1) sum_{nu=1}^N mu^m/(nu^{p+1}(nu+mu)^{m+n-p}) = H_{N,n+1} "
      "- sum_{i=1}^m C(i+n-1,n) mu^{i-1} H_{N+mu,i+n} + sum_{i=1}^m C(i+n-1,n) mu^{i-1} H_{mu,i+n}",
      [](const Grid& g) {
        return product({{"mu", 1, g.mu_max}, {"N", 1, g.n_max}, {"m", 1, g.exp_max}, {"n", 0, g.exp_max}});
      },
      [pkq_lhs](const Params& p) {
        const long mu = p["mu"], N = p["N"], m = p["m"], n = p["n"];
        Q lhs;
        for (long nu = 1; nu <= N; ++nu) lhs += pkq_lhs(nu, mu, m, n);
        const Q rhs = Hq(N, n + 1) + qsum(1, m, [&](long i) {
                        return C(i + n - 1, n) * P(mu, i - 1) * (Hq(mu, i + n) - Hq(N + mu, i + n));
                      });
        return std::vector<ExactSides>{{"main", lhs, rhs}};
      });

  cat.exact(
      "thm-minus-pkqyaem", "1<=N<mu, m>=1, n>=0",
      "sum_{p=0}^n (-1)^p C(m+n-p-1,m-1) sum_{nu=1}^N mu^m/(nu^{p+1}(mu-nu)^{m+n-p}) "
      "= (-1)^n H_{N,n+1} + sum_{i=1}^m C(i+n-1,n) mu^{i-1}(H_{mu-1,i+n} - H_{mu-N-1,i+n})",
      [](const Grid& g) {
        return product({{"mu", 2, g.mu_max}, {"N", 1, g.n_max}, {"m", 1, g.exp_max}, {"n", 0, g.exp_max}},
                       [](const Params& p) { return p["N"] < p["mu"]; });
      },
      [](const Params& p) {
        const long mu = p["mu"], N = p["N"], m = p["m"], n = p["n"];
        const Q lhs = qsum(0, n, [&](long q) {
          return Q(sg(q)) * C(m + n - q - 1, m - 1) * P(mu, m) * minus_sum(N, mu, q + 1, m + n - q);
        });
        const Q rhs = Q(sg(n)) * Hq(N, n + 1) + qsum(1, m, [&](long i) {
                        return C(i + n - 1, n) * P(mu, i - 1) * (Hq(mu - 1, i + n) - Hq(mu - N - 1, i + n));
                      });
        return std::vector<ExactSides>{{"main", lhs, rhs}};
      });
}

void add_convolutions(Catalog& cat) {
  cat.exact(
      "lemma-eclzyl6", "mu>=0, n,s>=1",
      "K(mu;n,s) = sum_{nu=1}^mu H_{mu-nu,s}/nu^n = sum_{j=1}^n C(n+s-j-1,s-1) G_j + sum_{j=1}^s C(n+s-j-1,n-1) G_j, "
      "G_j = sum_{nu<=mu} H_{nu-1,j}/nu^{n+s-j}; K(mu;n,s) = K(mu;s,n)",
      [](const Grid& g) { return product({{"mu", 0, g.mu_max}, {"n", 1, g.exp_max}, {"s", 1, g.exp_max}}); },
      [](const Params& p) {
        const long mu = p["mu"], n = p["n"], s = p["s"];
        const Q K = harmonic_convolution(mu, static_cast<int>(n), static_cast<int>(s));
        auto body = [&](auto&& g) {
          return qsum(1, n, [&](long j) { return C(n + s - j - 1, s - 1) * g(j); }) +
                 qsum(1, s, [&](long j) { return C(n + s - j - 1, n - 1) * g(j); });
        };
        const Q first = body([&](long j) { return G(mu, j, n + s - j); });
        const Q second = body([&](long j) { return Gplus(mu, j, n + s - j); }) - C(n + s, n) * Hq(mu, n + s);
        return std::vector<ExactSides>{{"main", K, first},
                                       {"shifted", K, second},
                                       {"symmetry", K, harmonic_convolution(mu, static_cast<int>(s), static_cast<int>(n))}};
      },
      {"main", "shifted", "symmetry"});

  cat.exact(
      "eq-srgz6mr", "mu>=1, n>=1",
      "sum_{nu=1}^mu H_{mu-nu}/nu^n = sum_{j=1}^n sum_{nu<=mu} H_{nu-1,j}/nu^{n-j+1} + sum_{nu<=mu} H_{nu-1}/nu^n "
      "= sum_{j=2}^n sum_{nu<=mu} H_{nu,j}/nu^{n-j+1} + 2 sum_{nu<=mu} H_nu/nu^n - (n+1) H_{mu,n+1}",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"n", 1, g.exp_max}}); },
      [](const Params& p) {
        const long mu = p["mu"], n = p["n"];
        const Q K = harmonic_convolution(mu, static_cast<int>(n), 1);
        const Q first = qsum(1, n, [&](long j) { return G(mu, j, n - j + 1); }) + G(mu, 1, n);
        const Q second = qsum(2, n, [&](long j) { return Gplus(mu, j, n - j + 1); }) + Q(2) * Gplus(mu, 1, n) -
                         Q(n + 1) * Hq(mu, n + 1);
        return std::vector<ExactSides>{{"first", K, first}, {"second", K, second}};
      },
      {"first", "second"});

  cat.exact(
      "eq-lp5bakz", "mu>=1",
      "sum_{nu=1}^mu H_{mu-nu}/nu = 2 sum_{nu=1}^mu H_{nu-1}/nu = H_mu^2 - H_{mu,2}",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}}); },
      [](const Params& p) {
        const long mu = p["mu"];
        const Q K = harmonic_convolution(mu, 1, 1);
        const Q closed = Hq(mu, 1) * Hq(mu, 1) - Hq(mu, 2);
        return std::vector<ExactSides>{{"first", K, Q(2) * G(mu, 1, 1)}, {"second", K, closed}};
      },
      {"first", "second"});

  cat.exact(
      "eq-te7cg80", "mu>=1, n,s>=1",
      "sum_{i=1}^{mu-1} sum_{nu=1}^{mu-i} 1/(nu^n (nu+i)^s) expressed through H_{mu,.}, H_{mu-1,.} and "
      "sum_{i<=mu} H_{i-1,k}/i^{n+s-k}, sum_{i<mu} H_{i,s-j}/i^{n+j}",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"n", 1, g.exp_max}, {"s", 1, g.exp_max}}); },
      [](const Params& p) {
        const long mu = p["mu"], n = p["n"], s = p["s"];
        Q lhs;
        for (long i = 1; i <= mu - 1; ++i) lhs += plus_sum(mu - i, i, n, s);
        auto g = [&](long k) { return G(mu, k, n + s - k); };
        const Q A = qsum(0, n - 1, [&](long j) {
          return C(s + j - 1, j) * Q(sg(j)) * qsum(1, s + j, [&](long k) { return C(n + s - k - 1, n - j - 1) * g(k); });
        });
        const Q B = qsum(0, n - 1, [&](long j) {
          return C(s + j - 1, j) * Q(sg(j)) * qsum(1, n - j, [&](long k) { return C(n + s - k - 1, s + j - 1) * g(k); });
        });
        const Q Cc = Q(sg(n)) * qsum(0, s - 1, [&](long j) { return C(n + j - 1, j) * Hq(mu, s - j) * Hq(mu - 1, n + j); });
        const Q D = Q(sg(n - 1)) * qsum(0, s - 1, [&](long j) { return C(n + j - 1, j) * Gplus(mu - 1, s - j, n + j); });
        return std::vector<ExactSides>{{"main", lhs, A + B + Cc + D}};
      },
      {"main"}, "finite on both sides, so checked exactly rather than numerically");
}

// ---------------------------------------------------------------- numeric

std::vector<NumericSides> one(std::string form, BigFloat l, BigFloat r) {
  std::vector<NumericSides> v;
  v.push_back({std::move(form), std::move(l), std::move(r)});
  return v;
}

void add_numeric_sums(Catalog& cat) {
  const std::string mu_note = std::string(kMuPositive) + " (the statement allows complex mu)";

  cat.numeric(
      "eq-k6u5u0q", "mu>=1, t>=2",
      "sum_{nu>=1} (nu+mu)^-t = zeta(t) - H_{mu,t}; zeta(t,mu) = zeta(t) - H_{mu-1,t}",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"t", 2, g.exp_max}}); },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"];
        const int t = static_cast<int>(p["t"]);
        auto out = one("main", x.S(0, 0, t, mu), x.z(t) - x.H(mu, t));
        out.push_back({"hurwitz", ev.hurwitz(t, mu), x.z(t) - x.H(mu - 1, t)});
        return out;
      },
      {"main", "hurwitz"});

  cat.numeric(
      "eq-mvt7nzf", "mu>=1, n>=1", "H_{mu,n} = sum_{p=0}^{n-1} sum_{nu>=1} mu/(nu^{p+1}(nu+mu)^{n-p})",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"n", 1, g.exp_max}}); },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"], n = p["n"];
        const BigFloat rhs =
            bsum(0, n - 1, [&](long q) { return x.q(Q(mu)) * x.S(0, static_cast<int>(q + 1), static_cast<int>(n - q), mu); });
        return one("main", x.H(mu, n), rhs);
      },
      {"main"}, mu_note);

  cat.numeric(
      "eq-gbbnxxa", "mu>=1", "sum_{nu>=1} mu/(nu(mu+nu)) = H_mu",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}}); },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"];
        return one("main", x.q(Q(mu)) * x.S(0, 1, 1, mu), x.H(mu, 1));
      },
      {"main"}, mu_note);

  cat.numeric(
      "cor-p1iwzvm", "mu>=1, s,t>=1, s+t>=2",
      "sum_{nu>=1} 1/(nu^s (nu+mu)^t) = sum_{i=0}^{s-2} C(t+i-1,i)(-1)^i zeta(s-i)/mu^{t+i} "
      "+ (-1)^s sum_{i=0}^{t-2} C(s+i-1,i)(zeta(t-i) - H_{mu,t-i})/mu^{s+i} + (-1)^{s-1} C(s+t-2,s-1) H_mu/mu^{s+t-1}",
      [](const Grid& g) {
        return product({{"mu", 1, g.mu_max}, {"s", 1, g.exp_max}, {"t", 1, g.exp_max}},
                       [](const Params& p) { return p["s"] + p["t"] >= 2; });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"], s = p["s"], t = p["t"];
        const BigFloat lhs = x.S(0, static_cast<int>(s), static_cast<int>(t), mu);
        const BigFloat rhs =
            bsum(0, s - 2, [&](long i) { return x.q(C(t + i - 1, i) * Q(sg(i)) * P(mu, -(t + i))) * x.z(static_cast<int>(s - i)); }) +
            x.q(Q(sg(s))) * bsum(0, t - 2, [&](long i) {
              return x.q(C(s + i - 1, i) * P(mu, -(s + i))) * (x.z(static_cast<int>(t - i)) - x.H(mu, t - i));
            }) +
            x.q(Q(sg(s - 1)) * C(s + t - 2, s - 1) * Hq(mu, 1) * P(mu, 1 - s - t));
        auto out = one("main", lhs, rhs);
        if (s == t) {
          const BigFloat cg =
              x.q(Q(sg(s - 1)) * qsum(1, s, [&](long i) { return C(2 * s - i - 1, s - 1) * Hq(mu, i) * P(mu, i - 2 * s); })) -
              x.q(Q(sg(s - 1) * 2)) * bsum(1, s / 2, [&](long i) {
                return x.q(C(2 * s - 2 * i - 1, s - 1) * P(mu, 2 * i - 2 * s)) * x.z(static_cast<int>(2 * i));
              });
          out.push_back({"cgxlioc", lhs, cg});
        }
        return out;
      },
      {"main", "cgxlioc"}, mu_note);

  cat.numeric(
      "cor-s2t7fyj", "mu>=1, m>=1, n>=0",
      "(-1)^{m-1} sum_{p=0}^n (-1)^p C(m,p) sum_{nu>=1} mu^{m-p}/(nu^m (nu+mu)^{n-p+1}) "
      "= H_{mu,n+1} + (-1)^n sum_{i=n+1}^{m-1} (-1)^i C(i,n) mu^{i-n} zeta(i+1)",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"m", 1, g.exp_max}, {"n", 0, g.exp_max - 1}}); },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"], m = p["m"], n = p["n"];
        auto S = [&](long a, long b) { return x.S(0, static_cast<int>(a), static_cast<int>(b), mu); };
        const BigFloat lhs = x.q(Q(sg(m - 1))) * bsum(0, std::min(n, m), [&](long q) {
                               return x.q(Q(sg(q)) * C(m, q) * P(mu, m - q)) * S(m, n - q + 1);
                             });
        const BigFloat rhs = x.H(mu, n + 1) + x.q(Q(sg(n))) * bsum(n + 1, m - 1, [&](long i) {
                               return x.q(Q(sg(i)) * C(i, n) * P(mu, i - n)) * x.z(static_cast<int>(i + 1));
                             });
        auto out = one("main", lhs, rhs);
        if (n == 0)
          out.push_back({"k9w7fxv", x.q(Q(sg(m - 1)) * P(mu, m)) * S(m, 1),
                         x.H(mu, 1) + bsum(1, m - 1, [&](long i) { return x.q(Q(sg(i)) * P(mu, i)) * x.z(static_cast<int>(i + 1)); })});
        if (m == 1 && n >= 1) {
          out.push_back({"alternating-zeta",
                         bsum(0, n, [&](long q) { return x.q(Q(sg(q)) * C(n, q) * P(mu, q)) * S(n, q + 1); }),
                         x.z(static_cast<int>(n + 1)) - x.H(mu, n + 1)});
          out.push_back({"alternating-harmonic",
                         bsum(1, n, [&](long q) { return x.q(Q(sg(q - 1)) * C(n, q) * P(mu, q)) * S(n, q); }),
                         x.H(mu, n)});
        }
        return out;
      },
      {"main", "k9w7fxv", "alternating-zeta", "alternating-harmonic"}, mu_note);

  cat.numeric(
      "cor-ztqq3ah", "mu>=1, m>=1, n>=0",
      "(-1)^m sum_{p=0}^n C(m+p-1,p) sum_{nu>=1} mu^{m+1}/(nu^{m+p}(nu+mu)^{n-p+1}) "
      "= -mu H_{mu,n+1} + sum_{i=2}^m (-1)^i C(i+n-1,n) mu^i zeta(n+i)",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"m", 1, g.exp_max}, {"n", 0, g.exp_max - 1}}); },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"], m = p["m"], n = p["n"];
        const BigFloat lhs = x.q(Q(sg(m))) * bsum(0, n, [&](long q) {
                               return x.q(C(m + q - 1, q) * P(mu, m + 1)) *
                                      x.S(0, static_cast<int>(m + q), static_cast<int>(n - q + 1), mu);
                             });
        const BigFloat rhs = x.q(-Q(mu) * Hq(mu, n + 1)) + bsum(2, m, [&](long i) {
                               return x.q(Q(sg(i)) * C(i + n - 1, n) * P(mu, i)) * x.z(static_cast<int>(n + i));
                             });
        return one("main", lhs, rhs);
      },
      {"main"}, mu_note);

  cat.numeric(
      "cor-cwe2ocv", "mu>=1, m,n>=0",
      "sum_{p=0}^n C(m+p,m) sum_{nu>=1} mu^{m+1}/(nu^{n-p+1}(nu+mu)^{m+p+1}) "
      "= sum_{i=n}^{m+n} C(i,n) mu^{i-n} H_{mu,i+1} - sum_{i=n+1}^{m+n} C(i,n) mu^{i-n} zeta(i+1)",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"m", 0, g.exp_max - 1}, {"n", 0, g.exp_max - 1}}); },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"], m = p["m"], n = p["n"];
        const BigFloat lhs = bsum(0, n, [&](long q) {
          return x.q(C(m + q, m) * P(mu, m + 1)) * x.S(0, static_cast<int>(n - q + 1), static_cast<int>(m + q + 1), mu);
        });
        const BigFloat rhs =
            x.q(qsum(n, m + n, [&](long i) { return C(i, n) * P(mu, i - n) * Hq(mu, i + 1); })) -
            bsum(n + 1, m + n, [&](long i) { return x.q(C(i, n) * P(mu, i - n)) * x.z(static_cast<int>(i + 1)); });
        auto out = one("main", lhs, rhs);
        if (n == 0) {
          const BigFloat g_lhs = x.q(P(mu, m + 1)) * x.S(0, 1, static_cast<int>(m + 1), mu);
          const BigFloat g_rhs = x.H(mu, 1) -
                                 bsum(1, m, [&](long i) { return x.q(P(mu, i)) * x.z(static_cast<int>(i + 1)); }) +
                                 x.q(qsum(1, m, [&](long i) { return P(mu, i) * Hq(mu, i + 1); }));
          out.push_back({"gqhxhjb", g_lhs, g_rhs});
        }
        return out;
      },
      {"main", "gqhxhjb"}, mu_note);
}

void add_tornheim_relations(Catalog& cat) {
  auto weight_ok = [](const Grid& g, long w) { return w <= g.weight_max; };

  cat.numeric(
      "tornheim-properties", "r,s,t>=0 convergent, weight bounded",
      "T(r,s,t) = T(s,r,t); T(r,s,0) = zeta(r) zeta(s); T(r,0,t) + T(t,0,r) = zeta(r) zeta(t) - zeta(r+t) for r,t>=2",
      [weight_ok](const Grid& g) {
        return product({{"r", 0, 5}, {"s", 0, 5}, {"t", 0, 5}}, [&](const Params& p) {
          return convergent_T(p["r"], p["s"], p["t"]) && weight_ok(g, p["r"] + p["s"] + p["t"]);
        });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const int r = static_cast<int>(p["r"]), s = static_cast<int>(p["s"]), t = static_cast<int>(p["t"]);
        std::vector<NumericSides> out;
        out.push_back({"symmetry", x.T(r, s, t), x.T(s, r, t)});
        if (t == 0) out.push_back({"product", x.T(r, s, 0), x.z(r) * x.z(s)});
        if (s == 0 && r >= 2 && t >= 2) out.push_back({"pair", x.T(r, 0, t) + x.T(t, 0, r), x.z(r) * x.z(t) - x.z(r + t)});
        return out;
      },
      {"symmetry", "product", "pair"});

  cat.numeric(
      "eq-shguxqu", "r,s>=1, convergent, weight bounded", "T(r,s-1,t+1) + T(r-1,s,t+1) = T(r,s,t)",
      [weight_ok](const Grid& g) {
        return product({{"r", 1, 5}, {"s", 1, 5}, {"t", 0, 5}}, [&](const Params& p) {
          const long r = p["r"], s = p["s"], t = p["t"];
          return convergent_T(r, s, t) && convergent_T(r, s - 1, t + 1) && convergent_T(r - 1, s, t + 1) &&
                 weight_ok(g, r + s + t);
        });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const int r = static_cast<int>(p["r"]), s = static_cast<int>(p["s"]), t = static_cast<int>(p["t"]);
        return one("main", x.T(r, s - 1, t + 1) + x.T(r - 1, s, t + 1), x.T(r, s, t));
      });

  cat.numeric(
      "eq-lf9ruko", "n,m>=2, weight bounded", "E(n,m) = zeta(n) zeta(m) - T(m,0,n)",
      [weight_ok](const Grid& g) {
        return product({{"n", 2, 8}, {"m", 2, 8}}, [&](const Params& p) { return weight_ok(g, p["n"] + p["m"]); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const int n = static_cast<int>(p["n"]), m = static_cast<int>(p["m"]);
        auto out = one("main", x.E(n, m), x.z(n) * x.z(m) - x.T(m, 0, n));
        out.push_back({"up0stgt", x.T(m, 0, n), x.z(m) * x.z(n) - x.E(n, m)});
        return out;
      },
      {"main", "up0stgt"});

  cat.numeric(
      "thm-euler-symmetry", "m,n>=2, weight bounded", "E(m,n) + E(n,m) = zeta(m+n) + zeta(m) zeta(n)",
      [weight_ok](const Grid& g) {
        return product({{"m", 2, 10}, {"n", 2, 10}},
                       [&](const Params& p) { return p["m"] <= p["n"] && weight_ok(g, p["n"] + p["m"]); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const int m = static_cast<int>(p["m"]), n = static_cast<int>(p["n"]);
        return one("main", x.E(m, n) + x.E(n, m), x.z(m + n) + x.z(m) * x.z(n));
      });

  cat.numeric(
      "thm-euler-E1n", "n>=2, weight bounded",
      "2 E(1,n) = (n+2) zeta(n+1) - sum_{j=1}^{n-2} zeta(j+1) zeta(n-j)",
      [weight_ok](const Grid& g) {
        return product({{"n", 2, 13}}, [&](const Params& p) { return weight_ok(g, p["n"] + 1); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const int n = static_cast<int>(p["n"]);
        const BigFloat rhs = x.q(Q(n + 2)) * x.z(n + 1) -
                             bsum(1, n - 2, [&](long j) { return x.z(static_cast<int>(j + 1)) * x.z(static_cast<int>(n - j)); });
        auto out = one("main", x.q(Q(2)) * x.E(1, n), rhs);
        out.push_back({"closed-form", x.E(1, n), ev.zeta_expr(euler_E1n(n))});
        return out;
      },
      {"main", "closed-form"});

  cat.numeric(
      "thm-tiqlu9p", "n>=1, r>=2, weight bounded",
      "E(n,r) = sum_{p=1}^n T(r-1,n-p+1,p) = sum_{p=0}^{n-1} T(r-1,p+1,n-p); E(1,r) = T(r-1,1,1)",
      [weight_ok](const Grid& g) {
        return product({{"n", 1, 6}, {"r", 2, 8}}, [&](const Params& p) { return weight_ok(g, p["n"] + p["r"]); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const int n = static_cast<int>(p["n"]), r = static_cast<int>(p["r"]);
        const BigFloat e = x.E(n, r);
        auto out = one("main", e, bsum(1, n, [&](long q) { return x.T(r - 1, static_cast<int>(n - q + 1), static_cast<int>(q)); }));
        out.push_back({"p-from-0", e, bsum(0, n - 1, [&](long q) { return x.T(r - 1, static_cast<int>(q + 1), static_cast<int>(n - q)); })});
        if (n == 1) out.push_back({"E1r", e, x.T(r - 1, 1, 1)});
        return out;
      },
      {"main", "p-from-0", "E1r"});

  cat.numeric(
      "thm-a1ft4e9", "s,t>=1, r>=0 with r+s>1, r+t>1, r+s+t>2, weight bounded",
      "T(s,t,r) = sum_{i=0}^{s-1} C(t+i-1,i) T(s-i,0,t+r+i) + sum_{i=0}^{t-1} C(s+i-1,i) T(t-i,0,s+r+i)",
      [weight_ok](const Grid& g) {
        return product({{"s", 1, 5}, {"t", 1, 5}, {"r", 0, 5}}, [&](const Params& p) {
          const long s = p["s"], t = p["t"], r = p["r"];
          return r + s > 1 && r + t > 1 && r + s + t > 2 && weight_ok(g, r + s + t);
        });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long s = p["s"], t = p["t"], r = p["r"];
        auto T0 = [&](long a, long c) { return x.T(static_cast<int>(a), 0, static_cast<int>(c)); };
        const BigFloat lhs = x.T(static_cast<int>(s), static_cast<int>(t), static_cast<int>(r));
        const BigFloat first = bsum(0, s - 1, [&](long i) { return x.q(C(t + i - 1, i)) * T0(s - i, t + r + i); }) +
                               bsum(0, t - 1, [&](long i) { return x.q(C(s + i - 1, i)) * T0(t - i, s + r + i); });
        const BigFloat second = bsum(1, s, [&](long i) { return x.q(C(s + t - i - 1, t - 1)) * T0(i, s + r + t - i); }) +
                                bsum(1, t, [&](long i) { return x.q(C(s + t - i - 1, s - 1)) * T0(i, s + r + t - i); });
        auto out = one("main", lhs, first);
        out.push_back({"index-shifted", lhs, second});
        return out;
      },
      {"main", "index-shifted"});

  cat.numeric(
      "thm-isoq1ou", "m>=1, r>=2, n>=0, r>m-n, weight bounded",
      "(-1)^{m-1} sum_{p=0}^n (-1)^p C(m,p) T(r-m+p,m,n-p+1) = E(n+1,r) "
      "+ (-1)^n sum_{i=n+1}^{m-1} (-1)^i C(i,n) zeta(i+1) zeta(r-i+n)",
      [weight_ok](const Grid& g) {
        return product({{"m", 1, 6}, {"r", 2, 9}, {"n", 0, 5}}, [&](const Params& p) {
          return p["r"] > p["m"] - p["n"] && weight_ok(g, p["r"] + p["n"] + 1);
        });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long m = p["m"], r = p["r"], n = p["n"];
        const BigFloat lhs = x.q(Q(sg(m - 1))) * bsum(0, std::min(n, m), [&](long q) {
                               return x.q(Q(sg(q)) * C(m, q)) *
                                      x.T(static_cast<int>(r - m + q), static_cast<int>(m), static_cast<int>(n - q + 1));
                             });
        const BigFloat rhs = x.E(static_cast<int>(n + 1), static_cast<int>(r)) + x.q(Q(sg(n))) * bsum(n + 1, m - 1, [&](long i) {
                               return x.q(Q(sg(i)) * C(i, n)) * x.z(static_cast<int>(i + 1)) * x.z(static_cast<int>(r - i + n));
                             });
        return one("main", lhs, rhs);
      },
      {"main"}, "first Tornheim argument may be negative; evaluated by binomial expansion");

  cat.numeric(
      "cor-alternating", "n>=1, r>=2, weight bounded", "E(n,r) = sum_{p=1}^n (-1)^{p-1} C(n,p) T(r-p,n,p)",
      [weight_ok](const Grid& g) {
        return product({{"n", 1, 6}, {"r", 2, 8}}, [&](const Params& p) { return weight_ok(g, p["n"] + p["r"]); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long n = p["n"], r = p["r"];
        return one("main", x.E(static_cast<int>(n), static_cast<int>(r)), bsum(1, n, [&](long q) {
                     return x.q(Q(sg(q - 1)) * C(n, q)) * x.T(static_cast<int>(r - q), static_cast<int>(n), static_cast<int>(q));
                   }));
      });

  cat.numeric(
      "cor-Tr-m-m-1", "m>=1, r>=2, r>m",
      "(-1)^{m-1} T(r-m,m,1) = (r+2)/2 zeta(r+1) - 1/2 sum_{i=1}^{r-2} zeta(r-i) zeta(i+1) "
      "+ sum_{i=1}^{m-1} (-1)^i zeta(r-i) zeta(i+1)",
      [weight_ok](const Grid& g) {
        return product({{"m", 1, 8}, {"r", 2, 12}},
                       [&](const Params& p) { return p["r"] > p["m"] && weight_ok(g, p["r"] + 1); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long m = p["m"], r = p["r"];
        auto zz = [&](long a, long b) { return x.z(static_cast<int>(a)) * x.z(static_cast<int>(b)); };
        const BigFloat rhs = x.q(Q(r + 2, 2)) * x.z(static_cast<int>(r + 1)) -
                             x.q(Q(1, 2)) * bsum(1, r - 2, [&](long i) { return zz(r - i, i + 1); }) +
                             bsum(1, m - 1, [&](long i) { return x.q(Q(sg(i))) * zz(r - i, i + 1); });
        return one("main", x.q(Q(sg(m - 1))) * x.T(static_cast<int>(r - m), static_cast<int>(m), 1), rhs);
      });

  cat.numeric(
      "cor-fl7eehk", "m>=0, r>=2, r>m-1, weight bounded",
      "(-1)^{m-1} T(r-m,m,2) = E(2,r) + m/2 (r+3) zeta(r+2) - m/2 sum_{i=1}^{r-1} zeta(r-i+1) zeta(i+1) "
      "+ m sum_{i=1}^{m-1} (-1)^i zeta(r-i+1) zeta(i+1) - sum_{i=2}^{m-1} (-1)^i i zeta(r-i+1) zeta(i+1)",
      [weight_ok](const Grid& g) {
        return product({{"m", 0, 8}, {"r", 2, 10}},
                       [&](const Params& p) { return p["r"] > p["m"] - 1 && weight_ok(g, p["r"] + 2); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long m = p["m"], r = p["r"];
        auto zz = [&](long a, long b) { return x.z(static_cast<int>(a)) * x.z(static_cast<int>(b)); };
        const BigFloat lhs = x.q(Q(sg(m - 1))) * x.T(static_cast<int>(r - m), static_cast<int>(m), 2);
        const BigFloat rhs = x.E(2, static_cast<int>(r)) + x.q(Q(m * (r + 3), 2)) * x.z(static_cast<int>(r + 2)) -
                             x.q(Q(m, 2)) * bsum(1, r - 1, [&](long i) { return zz(r - i + 1, i + 1); }) +
                             (m == 0 ? x.zero()
                                     : x.q(Q(m)) * bsum(1, m - 1, [&](long i) { return x.q(Q(sg(i))) * zz(r - i + 1, i + 1); })) -
                             // signed range: m = 0, 1 reach i = 0, whose coefficient vanishes
                             bsum(2, m - 1, [&](long i) { return i == 0 ? x.zero() : x.q(Q(sg(i) * i)) * zz(r - i + 1, i + 1); });
        auto out = one("main", lhs, rhs);
        const SumDescriptor d = SumDescriptor::tornheim(static_cast<int>(r - m), static_cast<int>(m), 2);
        for (const auto& sv : specific_values())
          if (sv.target.canonical() == d.canonical()) out.push_back({"specific-value", x.T(static_cast<int>(r - m), static_cast<int>(m), 2), ev.zeta_expr(sv.value)});
        return out;
      },
      {"main", "specific-value"});

  cat.numeric(
      "eq-reflection", "s>=1, t>=0, convergent, weight bounded",
      "2 T(s,s-1,t+1) = T(s,s,t); 2 T(s,s-1,1) = zeta(s)^2; 2 T(1,2,1) = zeta(2)^2",
      [weight_ok](const Grid& g) {
        return product({{"s", 1, 6}, {"t", 0, 6}}, [&](const Params& p) {
          return convergent_T(p["s"], p["s"], p["t"]) && weight_ok(g, 2 * p["s"] + p["t"]);
        });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const int s = static_cast<int>(p["s"]), t = static_cast<int>(p["t"]);
        auto out = one("main", x.q(Q(2)) * x.T(s, s - 1, t + 1), x.T(s, s, t));
        if (t == 0) out.push_back({"zeta-square", x.q(Q(2)) * x.T(s, s - 1, 1), x.z(s) * x.z(s)});
        if (s == 2 && t == 0) out.push_back({"T121", x.q(Q(2)) * x.T(1, 2, 1), x.z(2) * x.z(2)});
        return out;
      },
      {"main", "zeta-square", "T121"});

  cat.numeric(
      "cor-ecbg7m6", "m,n>=1, 2n>m-1, weight bounded",
      "(-1)^{m-1} 2 sum_{p=0}^n (-1)^p C(m,p) T(n-m+p+1,m,n-p+1) = zeta(n+1)^2 + zeta(2n+2) "
      "+ (-1)^n 2 sum_{i=n+1}^{m-1} (-1)^i C(i,n) zeta(i+1) zeta(2n-i+1)",
      [weight_ok](const Grid& g) {
        return product({{"m", 1, 8}, {"n", 1, 6}},
                       [&](const Params& p) { return 2 * p["n"] > p["m"] - 1 && weight_ok(g, 2 * p["n"] + 2); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long m = p["m"], n = p["n"];
        const BigFloat lhs = x.q(Q(2 * sg(m - 1))) * bsum(0, std::min(n, m), [&](long q) {
                               return x.q(Q(sg(q)) * C(m, q)) *
                                      x.T(static_cast<int>(n - m + q + 1), static_cast<int>(m), static_cast<int>(n - q + 1));
                             });
        const int n1 = static_cast<int>(n + 1);
        const BigFloat rhs = x.z(n1) * x.z(n1) + x.z(2 * n1) + x.q(Q(2 * sg(n))) * bsum(n + 1, m - 1, [&](long i) {
                               return x.q(Q(sg(i)) * C(i, n)) * x.z(static_cast<int>(i + 1)) * x.z(static_cast<int>(2 * n - i + 1));
                             });
        return one("main", lhs, rhs);
      });

  cat.numeric(
      "ecbg7m6-consequences", "n>=1 (n>=2 for the first form), weight bounded",
      "2 sum_{p=1}^n (-1)^{p-1} C(n,p) T(n-p,n,p) = zeta(n)^2 + zeta(2n); "
      "sum_{p=1}^{2n-1} (-1)^{p-1} C(2n,p) T(2n-p,2n,p) = zeta(2n)^2; "
      "sum_{p=1}^{2n} (-1)^{p-1} C(2n+1,p) T(2n-p+1,2n+1,p) = zeta(4n+2)",
      [weight_ok](const Grid& g) {
        return product({{"n", 1, 7}}, [&](const Params& p) { return weight_ok(g, 2 * p["n"]); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long n = p["n"];
        std::vector<NumericSides> out;
        auto alt = [&](long top, long k, long a) {
          return bsum(1, top, [&](long q) {
            return x.q(Q(sg(q - 1)) * C(k, q)) * x.T(static_cast<int>(a - q), static_cast<int>(k), static_cast<int>(q));
          });
        };
        const int ni = static_cast<int>(n);
        if (n >= 2) out.push_back({"m=n+1", x.q(Q(2)) * alt(n, n, n), x.z(ni) * x.z(ni) + x.z(2 * ni)});
        // weights 4n and 4n+2; kept within the evaluator's comfortable range
        if (4 * n <= 14) out.push_back({"even", alt(2 * n - 1, 2 * n, 2 * n), x.z(2 * ni) * x.z(2 * ni)});
        if (4 * n + 2 <= 14) out.push_back({"odd", alt(2 * n, 2 * n + 1, 2 * n + 1), x.z(4 * ni + 2)});
        return out;
      },
      {"m=n+1", "even", "odd"},
      "the odd form's right side zeta(2(2n+1)) is correct as printed (checked against T(0,m,m))");

  cat.numeric(
      "thm-ztqq3ah-sum", "m>=1, n>=0, r>=m+2, weight bounded",
      "(-1)^m sum_{p=0}^n C(m+p-1,p) T(r-m-1,m+p,n-p+1) = -E(n+1,r-1) + sum_{i=2}^m (-1)^i C(i+n-1,n) zeta(n+i) zeta(r-i)",
      [weight_ok](const Grid& g) {
        return product({{"m", 1, 6}, {"n", 0, 5}, {"r", 3, 10}},
                       [&](const Params& p) { return p["r"] >= p["m"] + 2 && weight_ok(g, p["r"] + p["n"]); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long m = p["m"], n = p["n"], r = p["r"];
        const BigFloat lhs = x.q(Q(sg(m))) * bsum(0, n, [&](long q) {
                               return x.q(C(m + q - 1, q)) *
                                      x.T(static_cast<int>(r - m - 1), static_cast<int>(m + q), static_cast<int>(n - q + 1));
                             });
        const BigFloat rhs = -x.E(static_cast<int>(n + 1), static_cast<int>(r - 1)) + bsum(2, m, [&](long i) {
                               return x.q(Q(sg(i)) * C(i + n - 1, n)) * x.z(static_cast<int>(n + i)) * x.z(static_cast<int>(r - i));
                             });
        return one("main", lhs, rhs);
      });

  cat.numeric(
      "cor-ztqq3ah-sum", "m,n>=1, n>=m, weight bounded",
      "(-1)^m 2 sum_{p=0}^n C(m+p-1,p) T(n-m+1,m+p,n-p+1) = -zeta(n+1)^2 - zeta(2n+2) "
      "+ 2 sum_{i=2}^m (-1)^i C(i+n-1,n) zeta(n+i) zeta(n+2-i); 2 sum_{p=1}^n T(n-1,n-p+1,p) = zeta(n)^2 + zeta(2n)",
      [weight_ok](const Grid& g) {
        return product({{"m", 1, 6}, {"n", 1, 6}},
                       [&](const Params& p) { return p["n"] >= p["m"] && weight_ok(g, 2 * p["n"] + 2); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long m = p["m"], n = p["n"], r = n + 2;
        const int n1 = static_cast<int>(n + 1);
        const BigFloat lhs = x.q(Q(2 * sg(m))) * bsum(0, n, [&](long q) {
                               return x.q(C(m + q - 1, q)) *
                                      x.T(static_cast<int>(n - m + 1), static_cast<int>(m + q), static_cast<int>(n - q + 1));
                             });
        const BigFloat rhs = -x.z(n1) * x.z(n1) - x.z(2 * n1) + x.q(Q(2)) * bsum(2, m, [&](long i) {
                               return x.q(Q(sg(i)) * C(i + n - 1, n)) * x.z(static_cast<int>(n + i)) * x.z(static_cast<int>(r - i));
                             });
        auto out = one("main", lhs, rhs);
        if (m == 1 && n >= 2) {
          const int ni = static_cast<int>(n);
          out.push_back({"particular", x.q(Q(2)) * bsum(1, n, [&](long q) {
                           return x.T(ni - 1, static_cast<int>(n - q + 1), static_cast<int>(q));
                         }),
                         x.z(ni) * x.z(ni) + x.z(2 * ni)});
        }
        return out;
      },
      {"main", "particular"}, "the free r on the right side of the printed corollary is r = n + 2");

  cat.numeric(
      "thm-cwe2ocv-sum", "r>=2, m,n>=0, r>m+1, weight bounded",
      "sum_{p=0}^n C(m+p,m) T(r-m-1,n-p+1,m+p+1) = sum_{i=n}^{m+n} C(i,n) E(i+1,r-i+n) "
      "- sum_{i=n+1}^{m+n} C(i,n) zeta(i+1) zeta(r-i+n)",
      [weight_ok](const Grid& g) {
        return product({{"m", 0, 5}, {"n", 0, 5}, {"r", 2, 10}},
                       [&](const Params& p) { return p["r"] > p["m"] + 1 && weight_ok(g, p["r"] + p["n"] + 1); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long m = p["m"], n = p["n"], r = p["r"];
        const BigFloat lhs = bsum(0, n, [&](long q) {
          return x.q(C(m + q, m)) * x.T(static_cast<int>(r - m - 1), static_cast<int>(n - q + 1), static_cast<int>(m + q + 1));
        });
        const BigFloat rhs =
            bsum(n, m + n, [&](long i) { return x.q(C(i, n)) * x.E(static_cast<int>(i + 1), static_cast<int>(r - i + n)); }) -
            bsum(n + 1, m + n, [&](long i) {
              return x.q(C(i, n)) * x.z(static_cast<int>(i + 1)) * x.z(static_cast<int>(r - i + n));
            });
        return one("main", lhs, rhs);
      },
      {"main"},
      "the printed plus sign before the zeta-product sum is a misprint: dividing the mu-sum corollary by mu^r "
      "gives a minus sign, and the printed sign fails numerically whenever m >= 1");

  cat.numeric(
      "thm-T0st-pair", "s,t>=2, weight bounded",
      "T(0,s,t) + T(0,t,s) = zeta(s) zeta(t) - zeta(s+t); 2 T(0,s,s) = zeta(s)^2 - zeta(2s)",
      [weight_ok](const Grid& g) {
        return product({{"s", 2, 10}, {"t", 2, 10}},
                       [&](const Params& p) { return p["s"] <= p["t"] && weight_ok(g, p["s"] + p["t"]); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const int s = static_cast<int>(p["s"]), t = static_cast<int>(p["t"]);
        auto out = one("main", x.T(0, s, t) + x.T(0, t, s), x.z(s) * x.z(t) - x.z(s + t));
        if (s == t) out.push_back({"p5c00dq", x.q(Q(2)) * x.T(0, s, s), x.z(s) * x.z(s) - x.z(2 * s)});
        return out;
      },
      {"main", "p5c00dq"});

  cat.numeric(
      "thm-T00t", "t>=3, weight bounded", "T(0,0,t) = zeta(t-1) - zeta(t)",
      [weight_ok](const Grid& g) {
        return product({{"t", 3, 14}}, [&](const Params& p) { return weight_ok(g, p["t"]); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const int t = static_cast<int>(p["t"]);
        return one("main", x.T(0, 0, t), x.z(t - 1) - x.z(t));
      });

  auto bvg_ok = [weight_ok](const Grid& g) {
    return product({{"r", 0, 5}, {"s", 1, 5}, {"t", 1, 5}}, [&](const Params& p) {
      const long r = p["r"], s = p["s"], t = p["t"];
      return r + s > 1 && r + t > 1 && weight_ok(g, r + s + t);
    });
  };

  cat.numeric(
      "thm-bvgewqc", "r>=0, s,t>=1, r+s>1, r+t>1, weight bounded",
      "T(r,s,t) = sum_{i=0}^{s-2} (-1)^i C(t+i-1,i) zeta(s-i) zeta(r+t+i) + (-1)^s sum_{i=0}^{t-2} C(s+i-1,i) zeta(t-i) zeta(r+s+i) "
      "- (-1)^s sum_{i=0}^{t-2} C(s+i-1,i) E(t-i,r+s+i) - (-1)^s C(s+t-2,t-1) E(1,r+s+t-1)",
      bvg_ok,
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long r = p["r"], s = p["s"], t = p["t"];
        auto z = [&](long k) { return x.z(static_cast<int>(k)); };
        const BigFloat rhs =
            bsum(0, s - 2, [&](long i) { return x.q(Q(sg(i)) * C(t + i - 1, i)) * z(s - i) * z(r + t + i); }) +
            x.q(Q(sg(s))) * bsum(0, t - 2, [&](long i) { return x.q(C(s + i - 1, i)) * z(t - i) * z(r + s + i); }) -
            x.q(Q(sg(s))) * bsum(0, t - 2, [&](long i) {
              return x.q(C(s + i - 1, i)) * x.E(static_cast<int>(t - i), static_cast<int>(r + s + i));
            }) -
            x.q(Q(sg(s)) * C(s + t - 2, t - 1)) * x.E(1, static_cast<int>(r + s + t - 1));
        return one("main", x.T(static_cast<int>(r), static_cast<int>(s), static_cast<int>(t)), rhs);
      });

  cat.numeric(
      "cor-Trs1", "r,s>=1, weight bounded",
      "T(r,s,1) = (-1)^{s-1}/2 ((r+s+2) zeta(r+s+1) - sum_{i=1-r}^{s-2} zeta(s-i) zeta(r+i+1)) "
      "+ sum_{i=0}^{s-2} (-1)^i zeta(s-i) zeta(r+i+1); T(1,1,1) = E(1,2) = 2 zeta(3)",
      [weight_ok](const Grid& g) {
        return product({{"r", 1, 10}, {"s", 1, 10}}, [&](const Params& p) { return weight_ok(g, p["r"] + p["s"] + 1); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long r = p["r"], s = p["s"];
        auto z = [&](long k) { return x.z(static_cast<int>(k)); };
        const BigFloat bracket = x.q(Q(r + s + 2)) * z(r + s + 1) - bsum(1 - r, s - 2, [&](long i) { return z(s - i) * z(r + i + 1); });
        const BigFloat rhs = x.q(Q(sg(s - 1), 2)) * bracket + bsum(0, s - 2, [&](long i) { return x.q(Q(sg(i))) * z(s - i) * z(r + i + 1); });
        const BigFloat lhs = x.T(static_cast<int>(r), static_cast<int>(s), 1);
        auto out = one("main", lhs, rhs);
        out.push_back({"closed-form", lhs, ev.zeta_expr(tornheim_Trs1(static_cast<int>(r), static_cast<int>(s)))});
        if (r == 1 && s == 1) {
          out.push_back({"T111", lhs, x.q(Q(2)) * z(3)});
          out.push_back({"E12", x.E(1, 2), x.q(Q(2)) * z(3)});
        }
        return out;
      },
      {"main", "closed-form", "T111", "E12"});

  cat.numeric(
      "eq-llgretd", "r>=0, s,t>=1, r+s>1, r+t>1, weight bounded",
      "T(r,s,t) = (-1)^t sum_{i=t-s+2}^t (-1)^i C(2t-i-1,t-1) zeta(s-t+i) zeta(r+2t-i) "
      "+ (-1)^s sum_{i=2}^t C(s+t-i-1,s-1) zeta(i) zeta(r+s+t-i) - (-1)^s sum_{i=1}^t C(s+t-i-1,s-1) E(i,r+s+t-i)",
      bvg_ok,
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long r = p["r"], s = p["s"], t = p["t"];
        auto z = [&](long k) { return x.z(static_cast<int>(k)); };
        const BigFloat rhs =
            x.q(Q(sg(t))) * bsum(t - s + 2, t, [&](long i) {
              return x.q(Q(sg(i)) * C(2 * t - i - 1, t - 1)) * z(s - t + i) * z(r + 2 * t - i);
            }) +
            x.q(Q(sg(s))) * bsum(2, t, [&](long i) { return x.q(C(s + t - i - 1, s - 1)) * z(i) * z(r + s + t - i); }) -
            x.q(Q(sg(s))) * bsum(1, t, [&](long i) {
              return x.q(C(s + t - i - 1, s - 1)) * x.E(static_cast<int>(i), static_cast<int>(r + s + t - i));
            });
        return one("main", x.T(static_cast<int>(r), static_cast<int>(s), static_cast<int>(t)), rhs);
      });

  cat.numeric(
      "eq-n4vyrlv", "s>=1, r>=0, r+s>1, weight bounded",
      "(-1)^{s-1} T(r,s,s) = -sum_{i=2}^s C(2s-i-1,s-1)((-1)^i+1) zeta(i) zeta(r+2s-i) + sum_{i=1}^s C(2s-i-1,s-1) E(i,r+2s-i)",
      [weight_ok](const Grid& g) {
        return product({{"r", 0, 6}, {"s", 1, 6}},
                       [&](const Params& p) { return p["r"] + p["s"] > 1 && weight_ok(g, p["r"] + 2 * p["s"]); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long r = p["r"], s = p["s"];
        auto z = [&](long k) { return x.z(static_cast<int>(k)); };
        const BigFloat lhs = x.q(Q(sg(s - 1))) * x.T(static_cast<int>(r), static_cast<int>(s), static_cast<int>(s));
        const BigFloat esum = bsum(1, s, [&](long i) {
          return x.q(C(2 * s - i - 1, s - 1)) * x.E(static_cast<int>(i), static_cast<int>(r + 2 * s - i));
        });
        const BigFloat first =
            -bsum(2, s, [&](long i) { return x.q(C(2 * s - i - 1, s - 1) * Q(sg(i) + 1)) * z(i) * z(r + 2 * s - i); }) + esum;
        const BigFloat second =
            -x.q(Q(2)) * bsum(1, s / 2, [&](long i) { return x.q(C(2 * s - 2 * i - 1, s - 1)) * z(2 * i) * z(r + 2 * s - 2 * i); }) +
            esum;
        auto out = one("first", lhs, first);
        out.push_back({"second", lhs, second});
        return out;
      },
      {"first", "second"});

  cat.numeric(
      "eq-m2uzmco", "s>=1, weight bounded",
      "T(s,s,s) = 4/(1+2(-1)^s) sum_{i=0}^{floor(s/2)} C(2s-2i-1,s-1) zeta(2i) zeta(3s-2i), zeta(0) = -1/2",
      [weight_ok](const Grid& g) {
        return product({{"s", 1, 5}}, [&](const Params& p) { return weight_ok(g, 3 * p["s"]); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long s = p["s"];
        const BigFloat rhs = x.q(Q(4) / Q(1 + 2 * sg(s))) * bsum(0, s / 2, [&](long i) {
                               return x.q(C(2 * s - 2 * i - 1, s - 1)) * x.z(static_cast<int>(2 * i)) * x.z(static_cast<int>(3 * s - 2 * i));
                             });
        const int si = static_cast<int>(s);
        auto out = one("main", x.T(si, si, si), rhs);
        out.push_back({"closed-form", x.T(si, si, si), ev.zeta_expr(tornheim_Tsss(si))});
        return out;
      },
      {"main", "closed-form"});

  cat.numeric(
      "thm-T11s", "s>=1, weight bounded",
      "T(1,1,s) = (s+1) zeta(s+2) - sum_{i=2}^s zeta(i) zeta(s-i+2); sum_{i=1}^s E(i,s-i+2) = (s+1) zeta(s+2)",
      [weight_ok](const Grid& g) {
        return product({{"s", 1, 12}}, [&](const Params& p) { return weight_ok(g, p["s"] + 2); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long s = p["s"];
        auto z = [&](long k) { return x.z(static_cast<int>(k)); };
        const BigFloat closed = x.q(Q(s + 1)) * z(s + 2);
        auto out = one("main", x.T(1, 1, static_cast<int>(s)), closed - bsum(2, s, [&](long i) { return z(i) * z(s - i + 2); }));
        out.push_back({"E-sum", bsum(1, s, [&](long i) { return x.E(static_cast<int>(i), static_cast<int>(s - i + 2)); }), closed});
        return out;
      },
      {"main", "E-sum"});
}

void add_euler_sums(Catalog& cat) {
  const std::string mu_note = std::string(kMuPositive) + " (the statement allows complex mu)";

  cat.numeric(
      "eq-spedt89", "mu>=1, n>=1, s>=2",
      "sum H_{nu,n}/nu^s - sum H_{nu,n}/(nu+mu)^s = sum_{i=1}^{mu-1} sum_{nu>=1} 1/(nu^n (nu+i)^s) "
      "- sum_{i=1}^{mu-1} sum_{nu=1}^{mu-i} 1/(nu^n (nu+i)^s) + sum_{nu<=mu} H_{nu,n}/nu^s + zeta(n+s) - H_{mu,n+s}",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"n", 1, g.exp_max - 1}, {"s", 2, g.exp_max}}); },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"], n = p["n"], s = p["s"];
        const int ni = static_cast<int>(n), si = static_cast<int>(s);
        const BigFloat lhs = x.E(ni, si) - x.S(ni, 0, si, mu);
        Q finite = Gplus(mu, n, s) - Hq(mu, n + s);
        for (long i = 1; i <= mu - 1; ++i) finite -= plus_sum(mu - i, i, n, s);
        const BigFloat rhs = bsum(1, mu - 1, [&](long i) { return x.S(0, ni, si, i); }) + x.q(finite) + x.z(ni + si);
        return one("main", lhs, rhs);
      },
      {"main"}, mu_note);

  cat.numeric(
      "eq-hfmh2se", "mu>=1, n,s>=1, n+s>=2",
      "sum_{i=1}^{mu-1} sum_{nu>=1} 1/(nu^n (nu+i)^s) = sum_{j=0}^{n-2} C(s+j-1,j)(-1)^j zeta(n-j) H_{mu-1,s+j} "
      "+ (-1)^n sum_{j=0}^{s-2} C(n+j-1,j) zeta(s-j) H_{mu-1,n+j} + (-1)^{n-1} sum_{j=0}^{s-1} C(n+j-1,j) sum_{i<mu} H_{i,s-j}/i^{n+j}",
      [](const Grid& g) {
        return product({{"mu", 1, g.mu_max}, {"n", 1, g.exp_max}, {"s", 1, g.exp_max}},
                       [](const Params& p) { return p["n"] + p["s"] >= 2; });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"], n = p["n"], s = p["s"];
        auto z = [&](long k) { return x.z(static_cast<int>(k)); };
        const BigFloat lhs = bsum(1, mu - 1, [&](long i) { return x.S(0, static_cast<int>(n), static_cast<int>(s), i); });
        const BigFloat rhs =
            bsum(0, n - 2, [&](long j) { return x.q(C(s + j - 1, j) * Q(sg(j)) * Hq(mu - 1, s + j)) * z(n - j); }) +
            x.q(Q(sg(n))) * bsum(0, s - 2, [&](long j) { return x.q(C(n + j - 1, j) * Hq(mu - 1, n + j)) * z(s - j); }) +
            x.q(Q(sg(n - 1)) * qsum(0, s - 1, [&](long j) { return C(n + j - 1, j) * Gplus(mu - 1, s - j, n + j); }));
        return one("main", lhs, rhs);
      });

  cat.numeric(
      "eq-vdgftrd", "mu>=1, n,s>=2",
      "sum H_{nu,n}/(nu+mu)^s + sum H_{nu,s}/(nu+mu)^n = H_{mu,n+s} - H_{mu,n} H_{mu,s} - zeta(n+s) + zeta(n) zeta(s) "
      "- (double sums over i<mu, both orders) + (finite double sums, both orders)",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"n", 2, g.exp_max}, {"s", 2, g.exp_max}}); },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"], n = p["n"], s = p["s"];
        const int ni = static_cast<int>(n), si = static_cast<int>(s);
        const BigFloat lhs = x.S(ni, 0, si, mu) + x.S(si, 0, ni, mu);
        Q finite = Hq(mu, n + s) - Hq(mu, n) * Hq(mu, s);
        for (long i = 1; i <= mu - 1; ++i) finite += plus_sum(mu - i, i, n, s) + plus_sum(mu - i, i, s, n);
        const BigFloat rhs = x.q(finite) - x.z(ni + si) + x.z(ni) * x.z(si) -
                             bsum(1, mu - 1, [&](long i) { return x.S(0, ni, si, i) + x.S(0, si, ni, i); });
        return one("main", lhs, rhs);
      });

  cat.numeric(
      "thm-ryy2yk3", "mu>=1, s>=2",
      "2 sum H_nu/(nu+mu)^s = 2 H_{mu-1}(zeta(s) - H_{mu-1,s}) + s(zeta(s+1) - H_{mu-1,s+1}) "
      "- sum_{i=1}^{s-2} (zeta(i+1) - H_{mu-1,i+1})(zeta(s-i) - H_{mu-1,s-i})",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"s", 2, g.exp_max + 1}}); },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"], s = p["s"];
        auto zt = [&](long k) { return x.z(static_cast<int>(k)) - x.H(mu - 1, k); };
        const BigFloat lhs = x.q(Q(2)) * x.S(1, 0, static_cast<int>(s), mu);
        const BigFloat rhs = x.q(Q(2) * Hq(mu - 1, 1)) * zt(s) + x.q(Q(s)) * zt(s + 1) -
                             bsum(1, s - 2, [&](long i) { return zt(i + 1) * zt(s - i); });
        auto out = one("main", lhs, rhs);
        if (mu == 1)
          out.push_back({"mu=1", lhs, x.q(Q(s)) * x.z(static_cast<int>(s + 1)) - bsum(1, s - 2, [&](long j) {
                                        return x.z(static_cast<int>(j + 1)) * x.z(static_cast<int>(s - j));
                                      })});
        return out;
      },
      {"main", "mu=1"}, mu_note);

  cat.numeric(
      "thm-lv0bcn0", "mu>=1, n,s>=2",
      "sum H_{nu,n}/(nu+mu)^s + sum H_{nu,s}/(nu+mu)^n in zeta values, H_{mu,.}, H_{mu-1,.} and sum_{i<=mu} H_{i-1,k}/i^{n+s-k}",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"n", 2, g.exp_max}, {"s", 2, g.exp_max}}); },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"], n = p["n"], s = p["s"];
        const int ni = static_cast<int>(n), si = static_cast<int>(s);
        auto z = [&](long k) { return x.z(static_cast<int>(k)); };
        auto g = [&](long k) { return G(mu, k, n + s - k); };
        const BigFloat lhs = x.S(ni, 0, si, mu) + x.S(si, 0, ni, mu);

        const Q finite =
            Hq(mu, n + s) - Hq(mu, n) * Hq(mu, s) +
            Q(sg(n)) * qsum(0, s - 1, [&](long j) { return C(n + j - 1, j) * Hq(mu, s - j) * Hq(mu - 1, n + j); }) +
            Q(sg(s)) * qsum(0, n - 1, [&](long j) { return C(s + j - 1, j) * Hq(mu, n - j) * Hq(mu - 1, s + j); }) +
            qsum(0, n - 1, [&](long j) {
              return C(s + j - 1, j) * Q(sg(j)) * qsum(1, s + j, [&](long k) { return C(n + s - k - 1, n - j - 1) * g(k); });
            }) +
            qsum(0, s - 1, [&](long j) {
              return C(n + j - 1, j) * Q(sg(j)) * qsum(1, n + j, [&](long k) { return C(n + s - k - 1, s - j - 1) * g(k); });
            }) +
            qsum(0, n - 1, [&](long j) {
              return C(s + j - 1, j) * Q(sg(j)) * qsum(1, n - j, [&](long k) { return C(n + s - k - 1, s + j - 1) * g(k); });
            }) +
            qsum(0, s - 1, [&](long j) {
              return C(n + j - 1, j) * Q(sg(j)) * qsum(1, s - j, [&](long k) { return C(n + s - k - 1, n + j - 1) * g(k); });
            });
        const BigFloat rhs =
            x.q(finite) - z(n + s) + z(n) * z(s) -
            bsum(0, n - 2, [&](long j) { return x.q(C(s + j - 1, j) * Q(sg(j) + sg(s)) * Hq(mu - 1, s + j)) * z(n - j); }) -
            bsum(0, s - 2, [&](long j) { return x.q(C(n + j - 1, j) * Q(sg(j) + sg(n)) * Hq(mu - 1, n + j)) * z(s - j); });
        auto out = one("main", lhs, rhs);
        if (mu == 1) out.push_back({"mu=1", lhs, z(n) * z(s) - z(n + s)});
        if (n == s) {
          auto gd = [&](long k) { return G(mu, k, 2 * n - k); };
          const long sn = sg(n - 1);
          const Q fin =
              Hq(mu, 2 * n) - Hq(mu, n) * Hq(mu, n) -
              Q(2 * sn) * qsum(1, n, [&](long j) {
                return C(2 * n - j - 1, n - 1) * Hq(mu - 1, 2 * n - j) * Hq(mu, j);
              }) -
              Q(2 * sn) * qsum(1, n, [&](long j) {
                return C(2 * n - j - 1, n - 1) * Q(sg(j)) * qsum(1, 2 * n - j, [&](long k) { return C(2 * n - k - 1, j - 1) * gd(k); });
              }) -
              Q(2 * sn) * qsum(1, n, [&](long j) {
                return C(2 * n - j - 1, n - 1) * Q(sg(j)) * qsum(1, j, [&](long k) { return C(2 * n - k - 1, 2 * n - j - 1) * gd(k); });
              });
          const BigFloat diag = x.q(fin) - z(2 * n) + z(n) * z(n) + x.q(Q(4 * sn)) * bsum(1, n / 2, [&](long j) {
                                  return x.q(C(2 * n - 2 * j - 1, n - 1) * Hq(mu - 1, 2 * n - 2 * j)) * z(2 * j);
                                });
          out.push_back({"diagonal", x.q(Q(2)) * x.S(ni, 0, ni, mu), diag});
        }
        return out;
      },
      {"main", "mu=1", "diagonal"},
      mu_note + "; diagonal form: the printed (-1)^j in the H_{mu-1,2n-j} H_{mu,j} sum is dropped, as obtained by "
                "setting n = s in the main form");

  cat.numeric(
      "thm-x9at23s", "mu,n>=1",
      "mu sum H_{nu,n}/(nu(nu+mu)) = (-1)^{n-1} sum_{j=1}^{n-1} (-1)^j H_{mu-1,n-j} zeta(j+1) + (two finite double sums) "
      "+ (1+(-1)^{n-1}) H_mu H_{mu-1,n} - sum_{i<mu} H_i/i^n + zeta(n+1)",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"n", 1, g.exp_max}}); },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"], n = p["n"];
        auto g = [&](long j) { return G(mu, j, n - j + 1); };
        const BigFloat lhs = x.q(Q(mu)) * x.S(static_cast<int>(n), 1, 1, mu);
        const BigFloat zpart = x.q(Q(sg(n - 1))) * bsum(1, n - 1, [&](long j) {
                                 return x.q(Q(sg(j)) * Hq(mu - 1, n - j)) * x.z(static_cast<int>(j + 1));
                               }) +
                               x.z(static_cast<int>(n + 1));
        const Q tail = Q(1 + sg(n - 1)) * Hq(mu, 1) * Hq(mu - 1, n) - Gplus(mu - 1, 1, n);
        const Q reduced =
            Q(sg(n - 1)) * qsum(1, n, [&](long k) {
              return Q(sg(k)) * qsum(1, n - k + 1, [&](long j) { return C(n - j, k - 1) * g(j); });
            }) +
            Q(sg(n - 1)) * qsum(1, n, [&](long k) { return Q(sg(k)) * qsum(1, k, [&](long j) { return C(n - j, n - k) * g(j); }); });
        Q raw;
        for (long i = 1; i <= mu - 1; ++i)
          for (long k = 1; k <= n; ++k) raw += Q(sg(k)) * P(i, k - n - 1) * Hq(mu - i, k);
        raw *= Q(sg(n - 1));
        auto out = one("main", lhs, zpart + x.q(reduced + tail));
        out.push_back({"unreduced", lhs, zpart + x.q(raw + tail)});
        if (n == 1)
          out.push_back({"n=1", x.q(Q(2 * mu)) * x.S(1, 1, 1, mu),
                         x.q(Hq(mu - 1, 1) * Hq(mu - 1, 1) + Hq(mu - 1, 2)) + x.q(Q(2)) * x.z(2)});
        if (mu == 1) out.push_back({"mu=1", x.S(static_cast<int>(n), 1, 1, 1), x.z(static_cast<int>(n + 1))});
        return out;
      },
      {"main", "unreduced", "n=1", "mu=1"}, mu_note);

  cat.numeric(
      "thm-Hnu-over-nus-nut", "mu,s,t>=1",
      "2 sum H_nu/(nu^s (nu+mu)^t) in zeta values and H_{mu-1,.}",
      [](const Grid& g) { return product({{"mu", 1, g.mu_max}, {"s", 1, g.exp_max - 1}, {"t", 1, g.exp_max - 1}}); },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long mu = p["mu"], s = p["s"], t = p["t"];
        auto z = [&](long k) { return x.z(static_cast<int>(k)); };
        auto zt = [&](long k) { return z(k) - x.H(mu - 1, k); };
        const Q h1 = Hq(mu - 1, 1);
        const BigFloat lhs = x.q(Q(2)) * x.S(1, static_cast<int>(s), static_cast<int>(t), mu);
        BigFloat rhs = x.q(Q(sg(s - 1)) * C(s + t - 2, s - 1) * P(mu, 1 - s - t)) *
                       (x.q(h1 * h1 + Hq(mu - 1, 2)) + x.q(Q(2)) * z(2));
        rhs += bsum(0, s - 2, [&](long i) {
          const BigFloat inner = x.q(Q(s - i + 2)) * z(s - i + 1) -
                                 bsum(1, s - i - 2, [&](long j) { return z(j + 1) * z(s - i - j); });
          return x.q(C(t + i - 1, i) * Q(sg(i)) * P(mu, -(t + i))) * inner;
        });
        rhs += x.q(Q(sg(s))) * bsum(0, t - 2, [&](long i) {
          const BigFloat inner = x.q(Q(2) * h1) * zt(t - i) + x.q(Q(t - i)) * zt(t - i + 1) -
                                 bsum(1, t - i - 2, [&](long j) { return zt(j + 1) * zt(t - i - j); });
          return x.q(C(s + i - 1, i) * P(mu, -(s + i))) * inner;
        });
        return one("main", lhs, rhs);
      },
      {"main"}, mu_note);
}

void add_linear_combinations(Catalog& cat) {
  auto weight_ok = [](const Grid& g, long w) { return w <= g.weight_max; };

  // C(i+t-1,t-1)(2i+t-1)/(i+t-1), with the value 1 at i = 0, t = 1 where
  // the quotient is 0/0 (this is what makes t = 1 agree with the E(1,2s+1) form).
  auto ylv_coef = [](long i, long t) {
    if (i + t - 1 == 0) return Q(1);
    return C(i + t - 1, t - 1) * Q(2 * i + t - 1) / Q(i + t - 1);
  };

  cat.numeric(
      "eq-ylv3nb4", "s,t>=1, weight bounded",
      "sum_{i=1}^{t-1} C(i+s-1,s)(2s+i-1)/(i+s-1) E(t-i+1,2s+i) + (2s+t-1)/(s+t-1) C(s+t-1,t-1) E(1,2s+t) "
      "= sum_{i=1}^{t-1} C(i+s-1,s)(2s+i-1)/(i+s-1) zeta(t-i+1) zeta(2s+i) "
      "+ (-1)^{s+1} sum_{i=0}^{s-1} (-1)^i C(i+t-1,t-1)(2i+t-1)/(i+t-1) zeta(s-i+1) zeta(s+i+t)",
      [weight_ok](const Grid& g) {
        return product({{"s", 1, 6}, {"t", 1, 10}}, [&](const Params& p) { return weight_ok(g, 2 * p["s"] + p["t"] + 1); });
      },
      [ylv_coef](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long s = p["s"], t = p["t"];
        auto z = [&](long k) { return x.z(static_cast<int>(k)); };
        auto w = [&](long i) { return C(i + s - 1, s) * Q(2 * s + i - 1) / Q(i + s - 1); };
        const BigFloat lhs =
            bsum(1, t - 1, [&](long i) { return x.q(w(i)) * x.E(static_cast<int>(t - i + 1), static_cast<int>(2 * s + i)); }) +
            x.q(Q(2 * s + t - 1) / Q(s + t - 1) * C(s + t - 1, t - 1)) * x.E(1, static_cast<int>(2 * s + t));
        const BigFloat rhs =
            bsum(1, t - 1, [&](long i) { return x.q(w(i)) * z(t - i + 1) * z(2 * s + i); }) +
            x.q(Q(sg(s + 1))) * bsum(0, s - 1, [&](long i) { return x.q(Q(sg(i)) * ylv_coef(i, t)) * z(s - i + 1) * z(s + i + t); });
        return one("main", lhs, rhs);
      },
      {"main"}, "at t = 1, i = 0 the coefficient (2i+t-1)/(i+t-1) is 0/0 and is taken as 1");

  cat.numeric(
      "thm-ctfkdby", "s>=1, weight bounded",
      "2 (-1)^{s+1} E(1,2s+1) = zeta(s+1)^2 + 2 sum_{i=1}^{s-1} (-1)^i zeta(s-i+1) zeta(s+i+1); "
      "2 E(1,2s+1) = (-1)^{s-1} zeta(s+1)^2 + 2 sum_{i=0}^{s-2} (-1)^i zeta(i+2) zeta(2s-i)",
      [weight_ok](const Grid& g) {
        return product({{"s", 1, 7}}, [&](const Params& p) { return weight_ok(g, 2 * p["s"] + 2); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long s = p["s"];
        auto z = [&](long k) { return x.z(static_cast<int>(k)); };
        const BigFloat e = x.E(1, static_cast<int>(2 * s + 1));
        auto out = one("main", x.q(Q(2 * sg(s + 1))) * e,
                       z(s + 1) * z(s + 1) + x.q(Q(2)) * bsum(1, s - 1, [&](long i) { return x.q(Q(sg(i))) * z(s - i + 1) * z(s + i + 1); }));
        out.push_back({"nvv0110", x.q(Q(2)) * e,
                       x.q(Q(sg(s - 1))) * z(s + 1) * z(s + 1) +
                           x.q(Q(2)) * bsum(0, s - 2, [&](long i) { return x.q(Q(sg(i))) * z(i + 2) * z(2 * s - i); })});
        return out;
      },
      {"main", "nvv0110"});

  cat.numeric(
      "eq-lm6twhv", "s>=1, weight bounded", "2 E(1,2s+1) = sum_{i=0}^{2s-2} (-1)^i zeta(i+2) zeta(2s-i)",
      [weight_ok](const Grid& g) {
        return product({{"s", 1, 7}}, [&](const Params& p) { return weight_ok(g, 2 * p["s"] + 2); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long s = p["s"];
        return one("main", x.q(Q(2)) * x.E(1, static_cast<int>(2 * s + 1)), bsum(0, 2 * s - 2, [&](long i) {
                     return x.q(Q(sg(i))) * x.z(static_cast<int>(i + 2)) * x.z(static_cast<int>(2 * s - i));
                   }));
      });

  cat.numeric(
      "thm-euler-even", "s>=2", "(2s+1) zeta(2s) = 2 sum_{i=1}^{s-1} zeta(2s-2i) zeta(2i)",
      [weight_ok](const Grid& g) {
        return product({{"s", 2, 8}}, [&](const Params& p) { return weight_ok(g, 2 * p["s"]); });
      },
      [](const Params& p, Evaluator& ev) {
        Num x{ev};
        const long s = p["s"];
        return one("main", x.q(Q(2 * s + 1)) * x.z(static_cast<int>(2 * s)), x.q(Q(2)) * bsum(1, s - 1, [&](long i) {
                     return x.z(static_cast<int>(2 * s - 2 * i)) * x.z(static_cast<int>(2 * i));
                   }));
      });

  // Each rational combination of Euler sums known to reduce to zeta values.
  for (const std::string& id : combination_identity_ids()) {
    cat.numeric(
        id, "every instance up to the grid weight",
        "sum_k c_k E(m_k,n_k) = zeta polynomial (see combination table)",
        [id](const Grid& g) {
          std::vector<Params> out;
          for (int w = 3; w <= g.weight_max; ++w) {
            const auto all = combination_identities(w);
            for (std::size_t k = 0; k < all.size(); ++k) {
              if (all[k].id != id) continue;
              Params p{{"w", w}};
              std::stringstream ss(all[k].params);
              std::string item;
              while (std::getline(ss, item, ','))
                if (auto eq = item.find('='); eq != std::string::npos) p.set(item.substr(0, eq), std::stol(item.substr(eq + 1)));
              p.set("k", static_cast<long>(k));
              out.push_back(p);
            }
          }
          return out;
        },
        [](const Params& p, Evaluator& ev) {
          const auto all = combination_identities(static_cast<int>(p["w"]));
          const EulerCombination& c = all.at(static_cast<std::size_t>(p["k"]));
          BigFloat lhs = ev.to_big(Q(0));
          for (const auto& [mn, coef] : c.lhs) lhs += ev.to_big(coef) * ev.euler_sum(mn.first, mn.second);
          return one("main", lhs, ev.zeta_expr(c.rhs));
        });
  }
}

std::vector<IdentityCase> build() {
  Catalog cat;
  add_finite_basics(cat);
  add_partial_fractions(cat);
  add_differentiated(cat);
  add_convolutions(cat);
  add_numeric_sums(cat);
  add_tornheim_relations(cat);
  add_euler_sums(cat);
  add_linear_combinations(cat);
  return std::move(cat.cases);
}

struct Selection {
  const IdentityCase* c;
  std::string form;  // empty: every form
};

Selection select(const std::string& id) {
  const auto& reg = registry();
  for (const auto& c : reg)
    if (c.id == id) return {&c, ""};
  std::string parent, form;
  if (auto colon = id.find(':'); colon != std::string::npos) {
    parent = id.substr(0, colon);
    form = id.substr(colon + 1);
    for (const auto& c : reg)
      if (c.id == parent && std::find(c.forms.begin(), c.forms.end(), form) != c.forms.end()) return {&c, form};
  } else if (id.rfind("eq-", 0) == 0) {
    form = id.substr(3);
    for (const auto& c : reg)
      if (std::find(c.forms.begin(), c.forms.end(), form) != c.forms.end()) return {&c, form};
  }
  throw UnknownIdentity("unknown identity id: " + id);
}

std::vector<Params> in_grid(const IdentityCase& c, const Grid& g) {
  auto t = c.tuples(g);
  if (g.boundary_only)
    t.erase(std::remove_if(t.begin(), t.end(),
                           [](const Params& p) { return p.has("mu") && p.has("N") && p["mu"] != p["N"] + 1; }),
            t.end());
  return t;
}

IdentityReport run_selection(const Selection& sel, const Grid& grid, const NumericConfig& cfg) {
  const IdentityCase& c = *sel.c;
  IdentityReport rep;
  rep.id = sel.form.empty() ? c.id : c.id + ":" + sel.form;
  rep.kind = c.kind;
  rep.note = c.note;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto tuples = in_grid(c, grid);
    if (c.kind == IdentityKind::Exact) {
      for (const auto& p : tuples)
        for (auto& side : c.exact(p)) {
          if (!sel.form.empty() && side.form != sel.form) continue;
          const Q diff = side.lhs - side.rhs;
          rep.results.push_back({p, side.form, diff.is_zero(), diff.str()});
        }
    } else {
      cfg.validate();
      Evaluator ev(cfg);
      PrecisionGuard guard(ev.working_digits());
      for (const auto& p : tuples)
        for (auto& side : c.numeric(p, ev)) {
          if (!sel.form.empty() && side.form != sel.form) continue;
          const BigFloat diff = abs(side.lhs - side.rhs);
          rep.results.push_back({p, side.form, ev.agree(side.lhs, side.rhs), ev.format(diff, 3)});
        }
    }
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

const std::vector<IdentityCase>& registry() {
  static const std::vector<IdentityCase> reg = build();
  return reg;
}

const IdentityCase& find_identity(const std::string& id) { return *select(id).c; }

IdentityReport run(const std::string& id, const Grid& grid, const NumericConfig& cfg) {
  return run_selection(select(id), grid, cfg);
}

RunSummary run_all(const Grid& grid, const NumericConfig& cfg, KindFilter filter, unsigned threads) {
  const auto& reg = registry();
  std::vector<const IdentityCase*> todo;
  for (const auto& c : reg) {
    if (filter == KindFilter::ExactOnly && c.kind != IdentityKind::Exact) continue;
    if (filter == KindFilter::NumericOnly && c.kind != IdentityKind::Numeric) continue;
    todo.push_back(&c);
  }
  RunSummary out;
  out.reports.resize(todo.size());
  const auto start = std::chrono::steady_clock::now();
  if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < todo.size();) out.reports[k] = run_selection({todo[k], ""}, grid, cfg);
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

void write_text(std::ostream& os, const IdentityReport& r, bool failures_only) {
  for (const auto& t : r.results) {
    if (failures_only && t.pass) continue;
    os << (t.pass ? "PASS " : "FAIL ") << r.id << " [" << t.form << "] " << t.params.str() << " residual=" << t.residual
       << "\n";
  }
  os << r.id << ": " << r.passed() << "/" << r.results.size() << " passed (" << to_string(r.kind) << ")";
  if (!r.error.empty()) os << " ERROR " << r.error;
  if (r.results.empty() && r.error.empty()) os << " EMPTY";
  os << "\n";
  if (!r.note.empty()) os << "  note: " << r.note << "\n";
}

void write_text(std::ostream& os, const RunSummary& s, bool failures_only) {
  for (const auto& r : s.reports) write_text(os, r, failures_only);
  os << "total: " << s.reports.size() << " identities, " << s.passed() << " tuples passed, " << s.failed()
     << " failed, " << s.cases_failed() << " identities failing\n";
}

void write_json_lines(std::ostream& os, const IdentityReport& r) {
  for (const auto& t : r.results) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.params.values()) params[k] = v;
    nlohmann::ordered_json j{{"id", r.id},         {"kind", to_string(r.kind)}, {"form", t.form},
                             {"params", params},   {"status", t.pass ? "pass" : "fail"},
                             {"residual", t.residual}};
    os << j.dump() << "\n";
  }
  if (!r.error.empty()) {
    nlohmann::ordered_json j{{"id", r.id}, {"kind", to_string(r.kind)}, {"status", "error"}, {"error", r.error}};
    os << j.dump() << "\n";
  }
}

void write_json_lines(std::ostream& os, const RunSummary& s) {
  for (const auto& r : s.reports) write_json_lines(os, r);
}

const std::vector<CoverageRow>& coverage_table() {
  static const std::vector<CoverageRow> rows{
      {"generalized harmonic numbers H_{r,n}", {"eq-i4135lr", "exact-core:harmonic"}},
      {"linear Euler sums E(m,n)", {"numerics:euler_sum", "eq-lf9ruko"}},
      {"Euler's evaluation of E(1,n)", {"thm-euler-E1n", "closed-forms:euler_E1n", "relation:closed:E1n"}},
      {"T symmetry T(r,s,t) = T(s,r,t)", {"tornheim-properties", "descriptor:canonical"}},
      {"T convergence criterion", {"descriptor:validate", "tornheim-properties"}},
      {"T(r,s,0) = zeta(r) zeta(s)", {"tornheim-properties", "relation:product"}},
      {"T(r,0,t) + T(t,0,r) pair relation", {"tornheim-properties", "relation:pair-r0t"}},
      {"T recursion T(r,s-1,t+1) + T(r-1,s,t+1) = T(r,s,t)", {"eq-shguxqu", "relation:recursion"}},
      {"finite shifted power sum (i4135lr)", {"eq-i4135lr"}},
      {"shifted zeta tail (k6u5u0q) and Hurwitz link", {"eq-k6u5u0q"}},
      {"Euler sum / Tornheim bridge (lf9ruko)", {"eq-lf9ruko", "relation:bridge"}},
      {"telescoping identity (yav4944)", {"eq-gk1txsj"}},
      {"differentiated telescoping identity (gk1txsj)", {"eq-gk1txsj"}},
      {"harmonic number as infinite sum (mvt7nzf)", {"eq-mvt7nzf"}},
      {"decomposition of E(n,r) into T (tiqlu9p)", {"thm-tiqlu9p", "relation:decomposition"}},
      {"E(1,r) = T(r-1,1,1)", {"thm-tiqlu9p"}},
      {"index shift identities (mjf11t4)", {"eq-mjf11t4", "exact-core:signed_range_sum"}},
      {"minus-shifted power sum (s2fevcr)", {"eq-s2fevcr"}},
      {"H_mu as infinite sum (gbbnxxa)", {"eq-gbbnxxa"}},
      {"partial fraction (hrp8apz)", {"eq-hrp8apz"}},
      {"finite partial fraction sum (b2i7lfz)", {"thm-b2i7lfz"}},
      {"equal-exponent finite sum (s45a41o)", {"eq-s45a41o"}},
      {"rewritten partial fraction (p5bh6gf)", {"eq-p5bh6gf"}},
      {"infinite partial fraction sum (p1iwzvm)", {"cor-p1iwzvm"}},
      {"equal-exponent infinite sum (cgxlioc)", {"cor-p1iwzvm"}},
      {"alternating minus-variant finite sum", {"thm-minus-variant"}},
      {"minus-variant finite sum (u9a6spe)", {"thm-u9a6spe"}},
      {"particular cases (mzn7m04), (pjzwe2i), (hega9ix)", {"thm-u9a6spe"}},
      {"geometric lemma (amfvtaz)", {"lemma-amfvtaz"}},
      {"partial fraction (xbugcw0)", {"eq-xbugcw0"}},
      {"differentiated partial fraction (tfna05t)", {"eq-tfna05t"}},
      {"finite sum (x1nstmi)", {"thm-x1nstmi"}},
      {"infinite sum (s2t7fyj) and its particular cases", {"cor-s2t7fyj"}},
      {"particular case (k9w7fxv)", {"cor-s2t7fyj"}},
      {"minus form of x1nstmi", {"thm-minus-x1nstmi"}},
      {"differentiated partial fraction (amxnxuz)", {"eq-amxnxuz"}},
      {"finite sum from amxnxuz", {"thm-amxnxuz-finite"}},
      {"infinite sum (ztqq3ah)", {"cor-ztqq3ah"}},
      {"minus form of amxnxuz", {"thm-minus-amxnxuz"}},
      {"differentiated partial fraction (pkqyaem)", {"eq-pkqyaem"}},
      {"finite sum from pkqyaem", {"thm-pkqyaem-finite"}},
      {"infinite sum (cwe2ocv) and (gqhxhjb)", {"cor-cwe2ocv"}},
      {"minus form of pkqyaem", {"thm-minus-pkqyaem"}},
      {"functional relation (shguxqu)", {"eq-shguxqu", "relation:recursion"}},
      {"partial fraction to T(i,0,.) (a1ft4e9)", {"thm-a1ft4e9", "relation:partial-fraction"}},
      {"Tornheim sum theorem (isoq1ou)", {"thm-isoq1ou"}},
      {"alternating decomposition", {"cor-alternating", "relation:alternating"}},
      {"T(r-m,m,1) corollary", {"cor-Tr-m-m-1"}},
      {"T(r-m,m,2) corollary (fl7eehk) and the six specific values", {"cor-fl7eehk", "closed-forms:specific_values"}},
      {"reflection 2T(s,s-1,t+1) = T(s,s,t)", {"eq-reflection", "relation:reflection"}},
      {"corollary (ecbg7m6)", {"cor-ecbg7m6"}},
      {"consequences of ecbg7m6 (m = n+1, even, odd)", {"ecbg7m6-consequences"}},
      {"summed form of ztqq3ah and its corollary", {"thm-ztqq3ah-sum", "cor-ztqq3ah-sum"}},
      {"summed form of cwe2ocv", {"thm-cwe2ocv-sum"}},
      {"T(r,0,t) via E (up0stgt)", {"eq-lf9ruko"}},
      {"Euler sum symmetry (csxx7lv)", {"thm-euler-symmetry", "closed-forms:euler_symmetry_pair", "relation:euler-symmetry"}},
      {"T(0,s,t) + T(0,t,s) theorem", {"thm-T0st-pair", "relation:pair-0st"}},
      {"2T(0,s,s) corollary (p5c00dq)", {"thm-T0st-pair", "closed-forms:tornheim_T0ss"}},
      {"T(0,0,t) and its finite derivation", {"thm-T00t", "eq-T00t-finite", "closed-forms:tornheim_T00t"}},
      {"cumulative harmonic sum", {"harmonic-cumsum"}},
      {"general T(r,s,t) in E sums (bvgewqc)", {"thm-bvgewqc"}},
      {"T(r,s,1) corollary and T(1,1,1) = 2 zeta(3)", {"cor-Trs1", "closed-forms:tornheim_Trs1"}},
      {"index-shifted general T (llgretd)", {"eq-llgretd"}},
      {"T(r,s,s) (n4vyrlv)", {"eq-n4vyrlv"}},
      {"shifted Euler sum difference (spedt89)", {"eq-spedt89"}},
      {"harmonic convolution lemma (eclzyl6)", {"lemma-eclzyl6"}},
      {"convolution with H_{mu-nu} (srgz6mr)", {"eq-srgz6mr"}},
      {"convolution identity (lp5bakz)", {"eq-lp5bakz"}},
      {"finite Euler sum symmetry and diagonal", {"harmonic-symmetry-finite"}},
      {"shifted E(1,s) (ryy2yk3)", {"thm-ryy2yk3"}},
      {"shifted symmetry relation (vdgftrd)", {"eq-vdgftrd"}},
      {"double sum (hfmh2se)", {"eq-hfmh2se"}},
      {"finite double sum (te7cg80)", {"eq-te7cg80"}},
      {"shifted Euler sum symmetry (lv0bcn0) and particular cases", {"thm-lv0bcn0"}},
      {"sum H_{nu,n}/(nu(nu+mu)) (x9at23s)", {"thm-x9at23s"}},
      {"sum H_nu/(nu^s (nu+mu)^t)", {"thm-Hnu-over-nus-nut"}},
      {"weighted Euler sum relation (ylv3nb4)", {"eq-ylv3nb4"}},
      {"E(1,2s+1) variants (ctfkdby), (nvv0110)", {"thm-ctfkdby", "closed-forms:euler_E1_odd_variant"}},
      {"E(1,2s+1) alternating form (lm6twhv)", {"eq-lm6twhv", "closed-forms:euler_E1_odd_alternating"}},
      {"Euler's even zeta relation", {"thm-euler-even", "even-zeta:canonical"}},
      {"T(1,1,s) and the E-sum consequence", {"thm-T11s", "thm-sum-Ei", "closed-forms:tornheim_T11s"}},
      {"theorem (xzc9oni) and corollaries (t7si22d), (ab4k60c), weight 12",
       {"thm-xzc9oni", "cor-t7si22d", "cor-ab4k60c", "cor-weight12"}},
      {"T(s,s,s) (m2uzmco) and the resulting combination", {"eq-m2uzmco", "thm-Tsss-combination", "closed-forms:tornheim_Tsss"}},
      {"theorem (bwgw7lo) with (ge54qm8), (r81stqo)", {"thm-bwgw7lo", "eq-r81stqo"}},
      {"t = 3 corollary and its particular cases (bdgdtr)",
       {"cor-bwgw7lo-t3", "eq-bwgw7lo-t3-w8", "eq-bdgdtr", "eq-E37-plus-E46"}},
      {"t = s-1 and t = s corollaries", {"cor-bwgw7lo-t-s-1", "eq-9E210-2E39", "cor-bwgw7lo-t-s"}},
      {"final symmetric combination theorem", {"final-symmetric-theorem"}},
  };
  return rows;
}

void write_coverage(std::ostream& os) {
  for (const auto& row : coverage_table()) {
    os << row.statement << " :";
    for (const auto& c : row.covered_by) os << " " << c;
    os << "\n";
  }
}

}  // namespace tornheim
