#include "doctest.h"

#include "tornheim/errors.hpp"
#include "tornheim/exact.hpp"
#include "tornheim/identities.hpp"

#include <json.hpp>

#include <random>
#include <set>
#include <sstream>

using namespace tornheim;

namespace {

Grid small_grid() {
  Grid g;
  g.mu_max = 6;
  g.n_max = 6;
  g.exp_max = 4;
  g.weight_max = 12;
  return g;
}

const IdentityReport* report_for(const RunSummary& s, const std::string& id) {
  for (const auto& r : s.reports)
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("registry size, required ids and kinds") {
  const auto& reg = registry();
  CHECK(reg.size() >= 40);
  std::set<std::string> ids;
  for (const auto& c : reg) {
    CHECK_MESSAGE(ids.insert(c.id).second, c.id);
    CHECK(!c.statement.empty());
    CHECK(!c.forms.empty());
    CHECK(c.tuples);
    const bool has_check = c.kind == IdentityKind::Exact ? static_cast<bool>(c.exact) : static_cast<bool>(c.numeric);
    CHECK(has_check);
  }
  const std::vector<std::string> exact_ids{
      "thm-b2i7lfz",    "eq-s45a41o",         "thm-minus-variant", "thm-u9a6spe",    "lemma-amfvtaz",
      "thm-x1nstmi",    "thm-minus-x1nstmi",  "thm-amxnxuz-finite", "thm-pkqyaem-finite", "thm-minus-pkqyaem",
      "lemma-eclzyl6",  "eq-srgz6mr",         "eq-lp5bakz",        "eq-i4135lr",     "eq-s2fevcr",
      "eq-gk1txsj",     "harmonic-cumsum"};
  const std::vector<std::string> numeric_ids{
      "cor-p1iwzvm",  "cor-s2t7fyj", "cor-ztqq3ah", "cor-cwe2ocv",    "eq-gbbnxxa",       "eq-mvt7nzf",
      "thm-ryy2yk3",  "thm-lv0bcn0", "thm-x9at23s", "thm-Hnu-over-nus-nut", "thm-bvgewqc", "eq-llgretd",
      "eq-n4vyrlv",   "thm-isoq1ou", "cor-ecbg7m6", "thm-bwgw7lo",    "thm-sum-Ei",       "thm-xzc9oni",
      "thm-Tsss-combination", "final-symmetric-theorem", "eq-spedt89", "eq-hfmh2se"};
  for (const auto& id : exact_ids) CHECK_MESSAGE(find_identity(id).kind == IdentityKind::Exact, id);
  for (const auto& id : numeric_ids) CHECK_MESSAGE(find_identity(id).kind == IdentityKind::Numeric, id);
  // finite on both sides
  CHECK(find_identity("eq-te7cg80").kind == IdentityKind::Exact);
}

TEST_CASE("every case has in-domain tuples on the default grid") {
  for (const auto& c : registry()) CHECK_MESSAGE(!c.tuples(Grid{}).empty(), c.id);
}

TEST_CASE("mu grids are positive integers") {
  for (const auto& c : registry())
    for (const auto& p : c.tuples(Grid{}))
      if (p.has("mu")) CHECK_MESSAGE(p["mu"] >= (c.id == "lemma-eclzyl6" || c.id == "harmonic-symmetry-finite" ? 0 : 1), c.id);
  for (const auto& p : find_identity("eq-gbbnxxa").tuples(Grid{})) CHECK(p["mu"] >= 1);
}

TEST_CASE("tuples respect N < mu for the minus variants") {
  for (const std::string id : {"eq-s2fevcr", "thm-minus-variant", "thm-u9a6spe", "thm-minus-x1nstmi",
                               "thm-minus-amxnxuz", "thm-minus-pkqyaem"})
    for (const auto& p : find_identity(id).tuples(Grid{})) CHECK_MESSAGE(p["N"] < p["mu"], id);
}

TEST_CASE("unknown ids and form aliases") {
  CHECK_THROWS_AS(find_identity("thm-nonexistent"), UnknownIdentity);
  CHECK_THROWS_AS(run("eq-zzzzzzz"), UnknownIdentity);
  CHECK_THROWS_AS(find_identity("thm-u9a6spe:nosuchform"), UnknownIdentity);
  CHECK(find_identity("eq-mzn7m04").id == "thm-u9a6spe");
  CHECK(find_identity("eq-cgxlioc").id == "cor-p1iwzvm");
  CHECK(find_identity("thm-u9a6spe:hega9ix").id == "thm-u9a6spe");
  const auto r = run("eq-hega9ix", small_grid());
  CHECK(r.id == "thm-u9a6spe:hega9ix");
  CHECK(r.ok());
  for (const auto& t : r.results) CHECK(t.form == "hega9ix");
}

TEST_CASE("run eq-i4135lr on the default grid") {
  const auto r = run("eq-i4135lr");
  CHECK(r.ok());
  CHECK(r.results.size() == 12u * 12u * 5u);
  for (const auto& t : r.results) CHECK(t.residual == "0");
}

TEST_CASE("exact suite on the default grid has zero failures") {
  const auto s = run_all(Grid{}, NumericConfig{}, KindFilter::ExactOnly);
  std::ostringstream os;
  write_text(os, s, true);
  INFO(os.str());
  CHECK(s.ok());
  CHECK(s.failed() == 0);
  CHECK(s.passed() > 10000);
  for (const auto& r : s.reports) CHECK(r.kind == IdentityKind::Exact);
}

TEST_CASE("numeric suite on a reduced grid has zero failures") {
  const auto s = run_all(small_grid(), NumericConfig{}, KindFilter::NumericOnly);
  std::ostringstream os;
  write_text(os, s, true);
  INFO(os.str());
  CHECK(s.ok());
  for (const auto& r : s.reports) CHECK_MESSAGE(!r.results.empty(), r.id);
}

TEST_CASE("boundary grid mu = N + 1") {
  Grid g;
  g.boundary_only = true;
  const auto s = run_all(g, NumericConfig{}, KindFilter::ExactOnly);
  CHECK(s.ok());
  const auto* minus = report_for(s, "thm-minus-variant");
  REQUIRE(minus != nullptr);
  CHECK(!minus->results.empty());
  for (const auto& t : minus->results) CHECK(t.params["mu"] == t.params["N"] + 1);
}

TEST_CASE("x9at23s at mu = 1 gives sum H_{nu,n}/(nu(nu+1)) = zeta(n+1)") {
  Grid g;
  g.mu_max = 1;
  const auto r = run("thm-x9at23s:mu=1", g);
  CHECK(r.ok());
  std::set<long> ns;
  for (const auto& t : r.results) ns.insert(t.params["n"]);
  CHECK(ns == std::set<long>{1, 2, 3, 4, 5});
}

TEST_CASE("ryy2yk3 at mu = 1 covers s = 2..6") {
  Grid g;
  g.mu_max = 1;
  const auto r = run("thm-ryy2yk3:mu=1", g);
  CHECK(r.ok());
  std::set<long> ss;
  for (const auto& t : r.results) ss.insert(t.params["s"]);
  CHECK(ss == std::set<long>{2, 3, 4, 5, 6});
}

TEST_CASE("lv0bcn0 particular cases are checked separately") {
  const auto r = run("thm-lv0bcn0", small_grid());
  CHECK(r.ok());
  std::set<std::string> forms;
  for (const auto& t : r.results) forms.insert(t.form);
  CHECK(forms.count("mu=1") == 1);
  CHECK(forms.count("diagonal") == 1);
}

// The corrected readings are needed: the literal printed forms fail.
TEST_CASE("literal u9a6spe index-shifted form fails for t > 1") {
  const long mu = 7, N = 3, s = 2, t = 3;
  Rational lhs;
  for (long nu = 1; nu <= N; ++nu) lhs += inverse_power(nu, s) * inverse_power(mu - nu, t);
  auto shifted = [&](bool literal) {
    Rational v;
    for (long i = 1; i <= s; ++i) v += binomial(s + t - i - 1, t - 1) * harmonic(N, i) * inverse_power(mu, s + t - i);
    for (long i = 1; i <= t; ++i)
      v += binomial(s + t - i - 1, s - 1) * (harmonic(mu - 1, i) - harmonic(mu - N - 1, literal ? t : i)) *
           inverse_power(mu, s + t - i);
    return v;
  };
  CHECK(shifted(false) == lhs);
  CHECK(shifted(true) != lhs);
}

TEST_CASE("printed sign of the summed cwe2ocv theorem fails, the derived one holds") {
  Evaluator ev;
  PrecisionGuard g(ev.working_digits());
  const int m = 1, n = 1, r = 4;
  BigFloat lhs = 0;
  for (int p = 0; p <= n; ++p)
    lhs += ev.to_big(binomial(m + p, m)) * ev.tornheim(r - m - 1, n - p + 1, m + p + 1);
  BigFloat esum = 0, zsum = 0;
  for (int i = n; i <= m + n; ++i) esum += ev.to_big(binomial(i, n)) * ev.euler_sum(i + 1, r - i + n);
  for (int i = n + 1; i <= m + n; ++i) zsum += ev.to_big(binomial(i, n)) * ev.zeta(i + 1) * ev.zeta(r - i + n);
  CHECK(ev.agree(lhs, esum - zsum));
  CHECK_FALSE(ev.agree(lhs, esum + zsum));
}

TEST_CASE("printed lv0bcn0 diagonal case with (-1)^j fails") {
  Evaluator ev;
  PrecisionGuard g(ev.working_digits());
  const long mu = 3, n = 2;
  auto Hm = [](long r, long k) { return harmonic(r, static_cast<int>(k)); };
  auto G = [&](long k) {
    Rational v;
    for (long i = 1; i <= mu; ++i) v += Hm(i - 1, k) * inverse_power(i, 2 * n - k);
    return v;
  };
  auto rhs = [&](bool printed) {
    const long sn = sign_power(n - 1);
    Rational fin = Hm(mu, 2 * n) - Hm(mu, n) * Hm(mu, n);
    for (long j = 1; j <= n; ++j) {
      const Rational c = binomial(2 * n - j - 1, n - 1);
      fin -= Rational(2 * sn) * c * Rational(printed ? sign_power(j) : 1) * Hm(mu - 1, 2 * n - j) * Hm(mu, j);
      Rational a, b;
      for (long k = 1; k <= 2 * n - j; ++k) a += binomial(2 * n - k - 1, j - 1) * G(k);
      for (long k = 1; k <= j; ++k) b += binomial(2 * n - k - 1, 2 * n - j - 1) * G(k);
      fin -= Rational(2 * sn * sign_power(j)) * c * (a + b);
    }
    BigFloat v = ev.to_big(fin) - ev.zeta(2 * n) + ev.zeta(n) * ev.zeta(n);
    for (long j = 1; j <= n / 2; ++j)
      v += ev.to_big(Rational(4 * sn) * binomial(2 * n - 2 * j - 1, n - 1) * Hm(mu - 1, 2 * n - 2 * j)) * ev.zeta(2 * j);
    return v;
  };
  const BigFloat lhs = ev.to_big(Rational(2)) * ev.shifted_sum(n, 0, n, mu);
  CHECK(ev.agree(lhs, rhs(false)));
  CHECK_FALSE(ev.agree(lhs, rhs(true)));
}

TEST_CASE("printed harmonic cumulative sum fails, corrected form holds") {
  for (long N = 1; N <= 8; ++N)
    for (int n = 2; n <= 5; ++n) {
      Rational direct;
      for (long r = 1; r <= N; ++r) direct += harmonic(r, n);
      CHECK(direct == Rational(N + 1) * harmonic(N, n) - harmonic(N, n - 1));
      if (N >= 2) CHECK(direct != Rational(N + 1) * harmonic(N, n) - Rational(N) * harmonic(N, n - 1));
    }
}

TEST_CASE("exact failures report the rational difference") {
  // A corrupted copy of eq-i4135lr, run through the same reporting path.
  IdentityReport rep;
  rep.id = "probe";
  const Rational diff = harmonic(5, 2) - harmonic(4, 2);
  rep.results.push_back({Params{{"mu", 1}}, "main", diff.is_zero(), diff.str()});
  CHECK(rep.failed() == 1);
  CHECK(rep.results[0].residual == "1/25");
}

TEST_CASE("json lines: one record per tuple with the documented fields") {
  const auto r = run("eq-lp5bakz");
  std::ostringstream os;
  write_json_lines(os, r);
  std::istringstream in(os.str());
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("id") == "eq-lp5bakz");
    CHECK(j.at("status") == "pass");
    CHECK(j.at("residual") == "0");
    CHECK(j.at("params").contains("mu"));
    ++n;
  }
  CHECK(n == r.results.size());
}

TEST_CASE("text report is deterministic") {
  std::ostringstream a, b;
  write_text(a, run_all(small_grid(), NumericConfig{}, KindFilter::ExactOnly, 4));
  write_text(b, run_all(small_grid(), NumericConfig{}, KindFilter::ExactOnly, 1));
  CHECK(a.str() == b.str());
}

TEST_CASE("coverage table rows are non-empty and point at real checks") {
  const auto& rows = coverage_table();
  CHECK(rows.size() >= 60);
  std::set<std::string> ids;
  for (const auto& c : registry()) ids.insert(c.id);
  for (const auto& row : rows) {
    CHECK_MESSAGE(!row.covered_by.empty(), row.statement);
    bool any = false;
    for (const auto& ref : row.covered_by) {
      // library references are "module:operation"; everything else is a registry id
      if (ref.find(':') != std::string::npos) {
        any = true;
        continue;
      }
      CHECK_MESSAGE(ids.count(ref) == 1, ref);
      any = true;
    }
    CHECK(any);
  }
  // every registry case is referenced at least once
  std::set<std::string> referenced;
  for (const auto& row : rows)
    for (const auto& ref : row.covered_by) referenced.insert(ref);
  for (const auto& id : ids) CHECK_MESSAGE(referenced.count(id) == 1, id);
}

// Property: exact identities hold on random tuples beyond the default grid.
TEST_CASE("property: exact identities on random larger tuples") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> mu_d(2, 30), n_d(1, 29), e_d(1, 7);
  const auto& b2 = find_identity("thm-b2i7lfz");
  const auto& u9 = find_identity("thm-u9a6spe");
  const auto& ec = find_identity("lemma-eclzyl6");
  for (int k = 0; k < 60; ++k) {
    const long mu = mu_d(rng), s = e_d(rng), t = e_d(rng);
    const long N = std::min(n_d(rng), mu - 1);
    for (const auto& side : b2.exact(Params{{"mu", mu}, {"N", N}, {"s", s}, {"t", t}})) CHECK(side.lhs == side.rhs);
    for (const auto& side : u9.exact(Params{{"mu", mu}, {"N", N}, {"s", s}, {"t", t}})) CHECK(side.lhs == side.rhs);
    for (const auto& side : ec.exact(Params{{"mu", mu}, {"n", s}, {"s", t}})) CHECK(side.lhs == side.rhs);
  }
}
