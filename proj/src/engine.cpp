#include "tornheim/engine.hpp"

#include "tornheim/closed_forms.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/even_zeta.hpp"

#include <algorithm>
#include <set>

namespace tornheim {

std::string LinearForm::render() const {
  std::string out;
  for (const auto& [u, c] : basis) {
    Rational mag = c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (c.sign() < 0) mag = -c;
    if (mag != Rational(1)) out += mag.str() + "*";
    out += u.str();
  }
  if (zeta.is_zero()) return out.empty() ? "0" : out;
  const std::string z = zeta.render();
  if (out.empty()) return z;
  if (z[0] == '-') return out + " - " + z.substr(1);
  return out + " + " + z;
}

const Reduction& WeightSolution::at(const SumDescriptor& d) const {
  auto it = reductions.find(d.canonical());
  if (it == reductions.end()) throw DomainError("no reduction for " + d.str());
  return it->second;
}

LinearForm WeightSolution::substitute(const std::map<SumDescriptor, Rational>& coefs) const {
  LinearForm f;
  for (const auto& [u, c] : coefs) {
    const Reduction& r = at(u);
    for (const auto& [b, k] : r.basis) {
      auto& slot = f.basis[b];
      slot += c * k;
      if (slot.is_zero()) f.basis.erase(b);
    }
    f.zeta += r.value * c;
  }
  f.zeta = zeta_even_canonical(f.zeta);
  return f;
}

LinearForm WeightSolution::residual(const Relation& r) const {
  LinearForm f = substitute(r.coefficients);
  f.zeta = zeta_even_canonical(f.zeta - r.rhs);
  return f;
}

bool CombinationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CombinationCheck& c) { return c.ok(); });
}

RelationEngine::RelationEngine(EngineConfig cfg) : cfg_(std::move(cfg)), eval_(cfg_.numeric) {
  if (cfg_.weight_cap < 3) throw DomainError("weight_cap must be >= 3");
}

void RelationEngine::check_weight(int w) const {
  if (w < 3) throw DomainError("weight must be >= 3");
  if (w > cfg_.weight_cap)
    throw DomainError("weight " + std::to_string(w) + " exceeds the weight cap " + std::to_string(cfg_.weight_cap));
}

namespace {

struct Row {
  std::map<int, Rational> a;
  ZetaExpr rhs;
};

void axpy(Row& dst, const Row& src, const Rational& f) {
  for (const auto& [c, v] : src.a) {
    auto& slot = dst.a[c];
    slot -= f * v;
    if (slot.is_zero()) dst.a.erase(c);
  }
  dst.rhs -= src.rhs * f;
}

}  // namespace

std::unique_ptr<WeightSolution> RelationEngine::eliminate(int w, const std::vector<Relation>& rels) {
  auto sol = std::make_unique<WeightSolution>();
  sol->weight = w;
  sol->unknowns = weight_unknowns(w);
  sol->relation_count = rels.size();
  std::map<SumDescriptor, int> col;
  for (std::size_t i = 0; i < sol->unknowns.size(); ++i) col[sol->unknowns[i]] = static_cast<int>(i);

  std::vector<Row> rows;
  rows.reserve(rels.size());
  for (const auto& r : rels) {
    Row row;
    for (const auto& [u, c] : r.coefficients) {
      auto it = col.find(u);
      if (it == col.end()) throw DomainError("relation " + r.provenance() + " has unknown " + u.str());
      row.a[it->second] = c;
    }
    row.rhs = zeta_even_canonical(r.rhs);
    rows.push_back(std::move(row));
  }

  const int ncols = static_cast<int>(sol->unknowns.size());
  std::vector<int> pivot_col;
  std::size_t k = 0;
  for (int c = 0; c < ncols && k < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t i = k; i < rows.size(); ++i)
      if (rows[i].a.count(c) && (best == rows.size() || rows[i].a.size() < rows[best].a.size())) best = i;
    if (best == rows.size()) continue;
    std::swap(rows[k], rows[best]);
    Row& p = rows[k];
    const Rational inv = Rational(1) / p.a.at(c);
    for (auto& [cc, v] : p.a) v *= inv;
    p.rhs *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == k) continue;
      auto it = rows[i].a.find(c);
      if (it == rows[i].a.end()) continue;
      const Rational f = it->second;
      axpy(rows[i], p, f);
    }
    pivot_col.push_back(c);
    ++k;
  }
  for (std::size_t i = k; i < rows.size(); ++i)
    if (!rows[i].rhs.is_zero())
      throw InconsistentSystem("weight " + std::to_string(w) + ": elimination reached 0 = " + rows[i].rhs.render(),
                               faulty_families(rels));

  std::set<int> pivots(pivot_col.begin(), pivot_col.end());
  for (int c = 0; c < ncols; ++c)
    if (!pivots.count(c)) sol->basis.push_back(sol->unknowns[c]);
  for (std::size_t i = 0; i < k; ++i) {
    const SumDescriptor& u = sol->unknowns[pivot_col[i]];
    Reduction red;
    red.target = u;
    for (const auto& [c, v] : rows[i].a)
      if (c != pivot_col[i]) red.basis[sol->unknowns[c]] = -v;
    red.status = red.basis.empty() ? Reduction::Status::closed : Reduction::Status::basis;
    red.value = red.is_closed() ? display(u, rows[i].rhs) : zeta_even_collapse(rows[i].rhs);
    sol->reductions.emplace(u, std::move(red));
  }
  for (const auto& u : sol->basis) {
    Reduction red;
    red.target = u;
    red.status = Reduction::Status::basis;
    red.basis[u] = 1;
    sol->reductions.emplace(u, std::move(red));
  }
  return sol;
}

ZetaExpr RelationEngine::display(const SumDescriptor& d, const ZetaExpr& canonical_value) const {
  for (const auto& cand : closed_form_candidates(d))
    if (equal_mod_even(cand, canonical_value)) return cand;
  return zeta_even_collapse(canonical_value);
}

BigFloat RelationEngine::numeric_form(const LinearForm& f) {
  PrecisionGuard g(eval_.working_digits());
  BigFloat v = eval_.zeta_expr(f.zeta);
  for (const auto& [u, c] : f.basis) v += eval_.to_big(c) * eval_.descriptor(u);
  return v;
}

std::vector<std::string> RelationEngine::faulty_families(const std::vector<Relation>& rels) {
  PrecisionGuard g(eval_.working_digits());
  std::vector<std::string> out;
  for (const auto& r : rels) {
    BigFloat lhs = 0;
    Rational scale = 1;
    for (const auto& [u, c] : r.coefficients) {
      lhs += eval_.to_big(c) * eval_.descriptor(u);
      scale += abs(c);
    }
    for (const auto& [m, c] : r.rhs.terms()) scale += abs(c);
    const BigFloat res = abs(lhs - eval_.zeta_expr(r.rhs));
    if (res > eval_.tolerance() * 100 * eval_.to_big(scale) &&
        std::find(out.begin(), out.end(), r.family) == out.end())
      out.push_back(r.family);
  }
  return out;
}

void RelationEngine::verify(const WeightSolution& sol, const std::vector<Relation>& rels) {
  PrecisionGuard g(eval_.working_digits());
  for (const auto& [u, red] : sol.reductions) {
    if (red.basis.size() == 1 && red.basis.begin()->first == u && red.value.is_zero()) continue;
    Rational scale = 1;
    for (const auto& [b, c] : red.basis) scale += abs(c);
    for (const auto& [m, c] : red.value.terms()) scale += abs(c);
    const BigFloat want = eval_.descriptor(u);
    const BigFloat got = numeric_form(red.form());
    if (abs(want - got) > eval_.tolerance() * 10 * eval_.to_big(scale))
      throw NumericVerificationFailure("weight " + std::to_string(sol.weight) + ": " + u.str() + " = " +
                                           red.render() + " fails numeric verification",
                                       faulty_families(rels));
  }
}

const WeightSolution& RelationEngine::solve(int w) {
  check_weight(w);
  std::lock_guard lock(mutex_);
  auto it = cache_.find(w);
  if (it != cache_.end()) return *it->second;
  const auto rels = generate_relations(w, cfg_.mutation);
  auto sol = eliminate(w, rels);
  if (cfg_.verify) verify(*sol, rels);
  return *cache_.emplace(w, std::move(sol)).first->second;
}

Reduction RelationEngine::reduce(const SumDescriptor& d) {
  d.require_convergent();
  return solve(d.weight()).at(d);
}

BigFloat RelationEngine::numeric(const SumDescriptor& d) {
  std::lock_guard lock(mutex_);
  return eval_.descriptor(d);
}

std::string RelationEngine::format(const BigFloat& x, int digits) {
  std::lock_guard lock(mutex_);
  return eval_.format(x, digits);
}

CombinationReport RelationEngine::verify_combination_identities(int w) {
  const WeightSolution& sol = solve(w);
  std::lock_guard lock(mutex_);
  PrecisionGuard g(eval_.working_digits());
  CombinationReport rep;
  rep.weight = w;
  for (const auto& ci : combination_identities(w)) {
    CombinationCheck chk;
    chk.id = ci.id;
    chk.params = ci.params;
    std::map<SumDescriptor, Rational> coefs;
    BigFloat lhs = 0;
    for (const auto& [mn, c] : ci.lhs) {
      const auto d = SumDescriptor::euler(mn.first, mn.second);
      coefs[d] += c;
      lhs += eval_.to_big(c) * eval_.euler_sum(mn.first, mn.second);
    }
    LinearForm f = sol.substitute(coefs);
    f.zeta = zeta_even_collapse(f.zeta - ci.rhs);
    chk.symbolic_ok = f.basis.empty() && f.zeta.is_zero();
    chk.residual = f.render();
    const BigFloat diff = lhs - eval_.zeta_expr(ci.rhs);
    chk.numeric_ok = abs(diff) <= eval_.tolerance() * 1000;
    chk.numeric_residual = eval_.format(diff, 5);
    rep.checks.push_back(std::move(chk));
  }
  return rep;
}

RelationEngine& default_engine() {
  static RelationEngine engine;
  return engine;
}

const WeightSolution& solve(int w) { return default_engine().solve(w); }
Reduction reduce(const SumDescriptor& d) { return default_engine().reduce(d); }
CombinationReport verify_combination_identities(int w) { return default_engine().verify_combination_identities(w); }

}  // namespace tornheim
