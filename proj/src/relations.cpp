#include "tornheim/relations.hpp"

#include "tornheim/closed_forms.hpp"
#include "tornheim/errors.hpp"
#include "tornheim/even_zeta.hpp"
#include "tornheim/exact.hpp"

namespace tornheim {

namespace {

class RelationBuilder {
 public:
  RelationBuilder(std::string family, std::string instance) {
    r_.family = std::move(family);
    r_.instance = std::move(instance);
  }

  void t(const Rational& c, int a, int b, int cc) { add(c, SumDescriptor::tornheim(a, b, cc)); }
  void e(const Rational& c, int m, int n) { add(c, SumDescriptor::euler(m, n)); }
  void z(const Rational& c, int a) { raw_.add(c, a); }
  void z(const Rational& c, int a, int b) { raw_.add(c, a, b); }
  void rhs(const ZetaExpr& e) { extra_ += e; }

  void emit(std::vector<Relation>& out) {
    if (!valid_) return;
    r_.rhs = zeta_even_canonical(raw_.finish(r_.provenance()) + extra_);
    if (r_.coefficients.empty() && r_.rhs.is_zero()) return;
    out.push_back(std::move(r_));
  }

 private:
  void add(const Rational& c, const SumDescriptor& d) {
    if (d.a() < 0 || d.b() < 0 || d.c() < 0 || !d.convergent()) {
      valid_ = false;
      return;
    }
    const SumDescriptor u = d.canonical();
    auto& slot = r_.coefficients[u];
    slot += c;
    if (slot.is_zero()) r_.coefficients.erase(u);
  }

  Relation r_;
  RawZeta raw_;
  ZetaExpr extra_;
  bool valid_ = true;
};

std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ",";
    s += std::string(k) + "=" + std::to_string(v);
  }
  return s;
}

void recursion(int w, std::vector<Relation>& out) {
  for (int r = 1; r <= w; ++r)
    for (int s = 1; r + s <= w; ++s) {
      const int t = w - r - s;
      RelationBuilder b("recursion", params({{"r", r}, {"s", s}, {"t", t}}));
      b.t(1, r, s - 1, t + 1);
      b.t(1, r - 1, s, t + 1);
      b.t(-1, r, s, t);
      b.emit(out);
    }
}

void product(int w, std::vector<Relation>& out) {
  for (int a = 2; 2 * a <= w; ++a) {
    RelationBuilder b("product", params({{"r", a}, {"s", w - a}}));
    b.t(1, a, w - a, 0);
    b.z(1, a, w - a);
    b.emit(out);
  }
}

void bridge(int w, std::vector<Relation>& out) {
  for (int r = 2; r <= w - 2; ++r) {
    const int t = w - r;
    RelationBuilder b("bridge", params({{"r", r}, {"t", t}}));
    b.t(1, r, 0, t);
    b.e(1, t, r);
    b.z(1, r, t);
    b.emit(out);
  }
}

void t0_diagonal(int w, std::vector<Relation>& out) {
  for (int a = 1; a <= w - 2; ++a) {
    RelationBuilder b("t0-diagonal", params({{"r", a}, {"t", w - a}}));
    b.t(1, a, 0, w - a);
    b.e(-1, a, w - a);
    b.z(-1, w);
    b.emit(out);
  }
}

void pair_r0t(int w, std::vector<Relation>& out) {
  for (int r = 2; r <= w - 2; ++r) {
    const int t = w - r;
    RelationBuilder b("pair-r0t", params({{"r", r}, {"t", t}}));
    b.t(1, r, 0, t);
    b.t(1, t, 0, r);
    b.z(1, r, t);
    b.z(-1, w);
    b.emit(out);
  }
}

void decomposition(int w, std::vector<Relation>& out) {
  for (int n = 1; n <= w - 2; ++n) {
    const int r = w - n;
    RelationBuilder b("decomposition", params({{"n", n}, {"r", r}}));
    b.e(1, n, r);
    for (int p = 1; p <= n; ++p) b.t(-1, r - 1, n - p + 1, p);
    b.emit(out);
  }
}

// Only r >= n: otherwise the sum reaches a negative first argument.
void alternating(int w, std::vector<Relation>& out) {
  for (int n = 1; n <= w - 2; ++n) {
    const int r = w - n;
    if (r < n) continue;
    RelationBuilder b("alternating", params({{"n", n}, {"r", r}}));
    b.e(1, n, r);
    for (int p = 1; p <= n; ++p) b.t(-Rational(sign_power(p - 1)) * binomial(n, p), r - p, n, p);
    b.emit(out);
  }
}

// T(s,t,r) = sum_i C(t+i-1,i) T(s-i,0,t+r+i) + sum_i C(s+i-1,i) T(t-i,0,s+r+i)
void partial_fraction(int w, std::vector<Relation>& out) {
  for (int s = 1; s <= w; ++s)
    for (int t = 1; s + t <= w; ++t) {
      const int r = w - s - t;
      RelationBuilder b("partial-fraction", params({{"s", s}, {"t", t}, {"r", r}}));
      b.t(1, s, t, r);
      for (int i = 0; i <= s - 1; ++i) b.t(-binomial(t + i - 1, i), s - i, 0, t + r + i);
      for (int i = 0; i <= t - 1; ++i) b.t(-binomial(s + i - 1, i), t - i, 0, s + r + i);
      b.emit(out);
    }
}

void euler_symmetry(int w, std::vector<Relation>& out) {
  for (int m = 2; m <= w - 2; ++m) {
    RelationBuilder b("euler-symmetry", params({{"m", m}, {"n", w - m}}));
    b.e(1, m, w - m);
    b.e(1, w - m, m);
    b.rhs(euler_symmetry_pair(m, w - m));
    b.emit(out);
  }
}

void pair_0st(int w, std::vector<Relation>& out) {
  for (int s = 2; s <= w - 2; ++s) {
    const int t = w - s;
    RelationBuilder b("pair-0st", params({{"s", s}, {"t", t}}));
    b.t(1, 0, s, t);
    b.t(1, 0, t, s);
    b.z(1, s, t);
    b.z(-1, w);
    b.emit(out);
  }
}

void reflection(int w, std::vector<Relation>& out) {
  for (int s = 1; 2 * s <= w; ++s) {
    const int t = w - 2 * s;
    RelationBuilder b("reflection", params({{"s", s}, {"t", t}}));
    b.t(2, s, s - 1, t + 1);
    b.t(-1, s, s, t);
    b.emit(out);
  }
}

void unit(std::vector<Relation>& out, const std::string& family, const std::string& inst, const SumDescriptor& d,
          const ZetaExpr& value) {
  RelationBuilder b(family, inst);
  if (d.is_euler())
    b.e(1, d.a(), d.b());
  else
    b.t(1, d.a(), d.b(), d.c());
  b.rhs(value);
  b.emit(out);
}

void closed_units(int w, std::vector<Relation>& out) {
  unit(out, "closed:E1n", params({{"n", w - 1}}), SumDescriptor::euler(1, w - 1), euler_E1n(w - 1));
  if (w % 2 == 0 && w >= 4) {
    const int s = (w - 2) / 2;
    unit(out, "closed:E1-odd", params({{"s", s}}), SumDescriptor::euler(1, w - 1), euler_E1_odd_variant(s));
  }
  unit(out, "closed:T00t", params({{"t", w}}), SumDescriptor::tornheim(0, 0, w), tornheim_T00t(w));
  if (w % 2 == 0 && w >= 4)
    unit(out, "closed:T0ss", params({{"s", w / 2}}), SumDescriptor::tornheim(0, w / 2, w / 2), tornheim_T0ss(w / 2));
  unit(out, "closed:T11s", params({{"s", w - 2}}), SumDescriptor::tornheim(1, 1, w - 2), tornheim_T11s(w - 2));
  if (w % 3 == 0)
    unit(out, "closed:Tsss", params({{"s", w / 3}}), SumDescriptor::tornheim(w / 3, w / 3, w / 3),
         tornheim_Tsss(w / 3));
  for (int r = 1; 2 * r <= w - 1; ++r) {
    const int s = w - 1 - r;
    unit(out, "closed:Trs1", params({{"r", r}, {"s", s}}), SumDescriptor::tornheim(r, s, 1), tornheim_Trs1(r, s));
  }
}

}  // namespace

const std::vector<std::string>& relation_families() {
  static const std::vector<std::string> names{
      "recursion",     "product",        "bridge",   "t0-diagonal", "pair-r0t",    "decomposition",
      "alternating",   "partial-fraction", "euler-symmetry", "pair-0st", "reflection", "closed:E1n",
      "closed:E1-odd", "closed:T00t",    "closed:T0ss", "closed:T11s", "closed:Tsss", "closed:Trs1"};
  return names;
}

std::vector<SumDescriptor> weight_unknowns(int w) {
  std::vector<SumDescriptor> out;
  for (int a = 0; 2 * a <= w; ++a)
    for (int b = a; a + b <= w; ++b) {
      const auto d = SumDescriptor::tornheim(a, b, w - a - b);
      if (d.convergent()) out.push_back(d);
    }
  for (int m = w - 2; m >= 1; --m) out.push_back(SumDescriptor::euler(m, w - m));
  return out;
}

std::vector<Relation> generate_relations(int w, const std::optional<Mutation>& mutation) {
  if (w < 3) throw DomainError("generate_relations requires w >= 3");
  std::vector<Relation> out;
  recursion(w, out);
  product(w, out);
  bridge(w, out);
  t0_diagonal(w, out);
  pair_r0t(w, out);
  decomposition(w, out);
  alternating(w, out);
  partial_fraction(w, out);
  euler_symmetry(w, out);
  pair_0st(w, out);
  reflection(w, out);
  closed_units(w, out);
  if (mutation) {
    std::vector<Relation*> fam;
    for (auto& r : out)
      if (r.family == mutation->family && !r.coefficients.empty()) fam.push_back(&r);
    if (fam.empty()) throw DomainError("mutation: no relation in family " + mutation->family);
    Relation& r = *fam[mutation->index % fam.size()];
    auto it = r.coefficients.begin();
    it->second += mutation->delta;
    if (it->second.is_zero()) r.coefficients.erase(it);
  }
  return out;
}

}  // namespace tornheim
