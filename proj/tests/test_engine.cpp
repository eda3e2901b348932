#include "doctest.h"

#include "tornheim/closed_forms.hpp"
#include "tornheim/engine.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/even_zeta.hpp"

#include <boost/math/special_functions/zeta.hpp>

#include <random>
#include <set>

using namespace tornheim;

namespace {

bool has_relation(const std::vector<Relation>& rels, const std::string& family,
                  const std::map<SumDescriptor, Rational>& coefs, const ZetaExpr& rhs) {
  for (const auto& r : rels)
    if (r.family == family && r.coefficients == coefs && equal_mod_even(r.rhs, rhs)) return true;
  return false;
}

SumDescriptor T(int a, int b, int c) { return SumDescriptor::tornheim(a, b, c); }
SumDescriptor E(int m, int n) { return SumDescriptor::euler(m, n); }

// sum H_{nu,2}/nu^3 with an asymptotic tail and Boost's zeta; shares no
// code with the numerics module.
BigFloat oracle_E23(unsigned digits) {
  PrecisionGuard g(digits);
  const long N = 2000;
  BigFloat h = 0, head = 0;
  for (long nu = 1; nu <= N; ++nu) {
    h += 1 / (BigFloat(nu) * nu);
    head += h / (BigFloat(nu) * nu * nu);
  }
  auto tail_pow = [&](int k) {
    BigFloat part = 0;
    for (long nu = 1; nu <= N; ++nu) part += 1 / pow(BigFloat(nu), k);
    return boost::math::zeta(BigFloat(k)) - part;
  };
  // H_{nu,2} = zeta(2) - 1/nu + 1/(2nu^2) - 1/(6nu^3) + 1/(30nu^5) - 1/(42nu^7) + 1/(30nu^9)
  const BigFloat z2 = boost::math::zeta(BigFloat(2));
  BigFloat tail = z2 * tail_pow(3) - tail_pow(4) + tail_pow(5) / 2 - tail_pow(6) / 6 + tail_pow(8) / 30 -
                  tail_pow(10) / 42 + tail_pow(12) / 30;
  return head + tail;
}

}  // namespace

TEST_CASE("relation examples") {
  const auto w3 = generate_relations(3);
  CHECK(has_relation(w3, "closed:T11s", {{T(1, 1, 1), 1}}, ZetaExpr::zeta(3, 2)));
  const auto w4 = generate_relations(4);
  CHECK(has_relation(w4, "recursion", {{T(1, 1, 2), 1}, {T(0, 2, 2), 1}, {T(1, 2, 1), -1}}, ZetaExpr()));
  const auto w6 = generate_relations(6);
  CHECK(has_relation(w6, "euler-symmetry", {{E(2, 4), 1}, {E(4, 2), 1}},
                     ZetaExpr::zeta(6) + ZetaExpr::zeta2(2, 4)));
  CHECK_THROWS_AS(generate_relations(2), DomainError);
}

TEST_CASE("relations are weight homogeneous over canonical unknowns") {
  for (int w = 3; w <= 14; ++w) {
    const auto unknowns = weight_unknowns(w);
    const std::set<SumDescriptor> known(unknowns.begin(), unknowns.end());
    for (const auto& r : generate_relations(w)) {
      CAPTURE(r.provenance());
      for (const auto& [u, c] : r.coefficients) {
        CHECK(u.weight() == w);
        CHECK(known.count(u) == 1);
        CHECK(u == u.canonical());
      }
      if (r.family == "closed:T00t") {
        // T(0,0,t) = zeta(t-1) - zeta(t) mixes two weights.
        CHECK(equal_mod_even(r.rhs, ZetaExpr::zeta(w - 1) - ZetaExpr::zeta(w)));
      } else if (!r.rhs.is_zero()) {
        CHECK(r.rhs.weight() == std::optional<int>(w));
      }
    }
  }
}

TEST_CASE("every family appears") {
  std::set<std::string> seen;
  for (int w = 3; w <= 9; ++w)
    for (const auto& r : generate_relations(w)) seen.insert(r.family);
  for (const auto& f : relation_families()) CHECK_MESSAGE(seen.count(f), f);
}

TEST_CASE("odd and small weights close completely") {
  for (int w : {3, 4, 5, 6, 7}) {
    const auto& sol = solve(w);
    CHECK(sol.all_closed());
    for (const auto& [u, red] : sol.reductions) CHECK(red.is_closed());
  }
  CHECK(solve(3).at(E(1, 2)).value == ZetaExpr::zeta(3, 2));
}

TEST_CASE("weight six matches the tabulated values") {
  for (const auto& sv : specific_values()) {
    const Reduction r = reduce(sv.target);
    REQUIRE(r.is_closed());
    CHECK(equal_mod_even(r.value, sv.value));
  }
  CHECK(reduce(T(2, 2, 2)).render() == "4*z(2)*z(4) - 20/3*z(6)");
  CHECK(reduce(E(2, 4)).render() == "z(3)*z(3) - 1/3*z(6)");
}

TEST_CASE("E(2,3) against an independent oracle") {
  const Reduction r = reduce(E(2, 3));
  REQUIRE(r.is_closed());
  Evaluator ev;
  PrecisionGuard g(ev.working_digits());
  const BigFloat oracle = oracle_E23(40);
  CHECK(abs(ev.zeta_expr(r.value) - oracle) < BigFloat("1e-30"));
}

TEST_CASE("even weights keep a small basis") {
  CHECK(solve(8).basis == std::vector<SumDescriptor>{E(2, 6)});
  CHECK(solve(10).basis == std::vector<SumDescriptor>{E(2, 8)});
  const Reduction r = reduce(E(2, 6));
  CHECK(!r.is_closed());
  CHECK(r.render() == "E(2,6)");
  CHECK(!reduce(E(3, 5)).is_closed());
}

TEST_CASE("substituted solution satisfies every relation exactly") {
  for (int w = 3; w <= 12; ++w) {
    const auto& sol = solve(w);
    for (const auto& r : generate_relations(w)) {
      const LinearForm res = sol.residual(r);
      CHECK_MESSAGE(res.basis.empty(), r.provenance());
      CHECK_MESSAGE(res.zeta.is_zero(), r.provenance());
    }
  }
}

TEST_CASE("reduce handles argument order and divergence") {
  CHECK(reduce(T(2, 1, 3)).render() == reduce(T(1, 2, 3)).render());
  CHECK_THROWS_WITH_AS(reduce(T(1, 0, 1)), "divergent: requires r+s+t>2", DivergentDescriptor);
  CHECK_THROWS_AS(reduce(E(2, 1)), DivergentDescriptor);
  CHECK_THROWS_AS(reduce(E(3, 13)), DomainError);
}

TEST_CASE("determinism across engines") {
  RelationEngine a, b;
  for (int w : {5, 8, 12}) {
    const auto& sa = a.solve(w);
    const auto& sb = b.solve(w);
    REQUIRE(sa.reductions.size() == sb.reductions.size());
    for (const auto& [u, r] : sa.reductions) CHECK(r.render() == sb.at(u).render());
  }
}

TEST_CASE("even canonicalization is numerically invariant") {
  Evaluator ev(NumericConfig{30, 1e-20L, 1000000});
  PrecisionGuard g(ev.working_digits());
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> arg(1, 6), len(1, 3), num(-9, 9), den(1, 5);
  for (int i = 0; i < 100; ++i) {
    ZetaExpr e;
    for (int t = 0; t < 3; ++t) {
      std::vector<int> args;
      for (int j = len(rng); j > 0; --j) args.push_back(2 * arg(rng));
      e += ZetaExpr(ZetaMonomial(args), Rational(num(rng), den(rng)));
    }
    const ZetaExpr c = zeta_even_canonical(e);
    CHECK(ev.agree(ev.zeta_expr(e), ev.zeta_expr(c), 1e6));
    CHECK(zeta_even_canonical(c) == c);
    CHECK(zeta_even_collapse(e) == zeta_even_collapse(c));
  }
}

TEST_CASE("combination identities reduce symbolically") {
  for (int w : {6, 8, 10, 12}) {
    const auto rep = verify_combination_identities(w);
    CHECK(!rep.checks.empty());
    for (const auto& c : rep.checks) {
      CAPTURE(c.id);
      CAPTURE(c.params);
      CHECK(c.symbolic_ok);
      CHECK(c.numeric_ok);
    }
  }
}

TEST_CASE("corrupted relations are detected and localized") {
  const std::vector<Mutation> mutations{
      {"recursion", 3, Rational(1)},         {"partial-fraction", 1, Rational(-1, 2)},
      {"decomposition", 2, Rational(2)},     {"bridge", 0, Rational(1, 3)},
      {"alternating", 1, Rational(-1)},      {"closed:Trs1", 0, Rational(1)}};
  for (const auto& m : mutations) {
    CAPTURE(m.family);
    EngineConfig cfg;
    cfg.mutation = m;
    RelationEngine eng(cfg);
    bool caught = false;
    try {
      eng.solve(7);
    } catch (const SolverFault& f) {
      caught = true;
      CHECK(f.families() == std::vector<std::string>{m.family});
    }
    CHECK(caught);
  }
}

TEST_CASE("weight cap") {
  EngineConfig cfg;
  cfg.weight_cap = 8;
  RelationEngine eng(cfg);
  CHECK_THROWS_AS(eng.solve(9), DomainError);
  CHECK_NOTHROW(eng.solve(8));
}
