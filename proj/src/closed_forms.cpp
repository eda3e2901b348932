#include "tornheim/closed_forms.hpp"

#include "tornheim/errors.hpp"
#include "tornheim/exact.hpp"

#include <algorithm>

namespace tornheim {

void RawZeta::add(const Rational& c, std::vector<int> args) {
  if (c.is_zero()) return;
  std::sort(args.begin(), args.end());
  auto [it, inserted] = terms_.try_emplace(std::move(args), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void RawZeta::add(const RawZeta& o, const Rational& scale) {
  for (const auto& [args, c] : o.terms_) add(c * scale, args);
}

ZetaExpr RawZeta::finish(const std::string& context) const {
  ZetaExpr out;
  for (const auto& [args, c] : terms_) {
    Rational coef = c;
    std::vector<int> kept;
    for (int k : args) {
      if (k == 0) {
        coef *= Rational(-1, 2);
      } else if (k == 1) {
        throw FormulaProducesZeta1(context + ": zeta(1) term does not cancel");
      } else if (k < 0) {
        throw DomainError(context + ": zeta at a negative argument");
      } else {
        kept.push_back(k);
      }
    }
    out += ZetaExpr(ZetaMonomial(kept), coef);
  }
  return out;
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw DivergentDescriptor(msg);
}

}  // namespace

ZetaExpr euler_E1n(int n) {
  require(n >= 2, "divergent: E(1,n) requires n>=2");
  RawZeta z;
  z.add(Rational(n + 2, 2), n + 1);
  for (int j = 1; j <= n - 2; ++j) z.add(Rational(-1, 2), j + 1, n - j);
  return z.finish("euler_E1n");
}

ZetaExpr euler_symmetry_pair(int m, int n) {
  if (m < 2 || n < 2) throw DomainError("euler_symmetry_pair requires m,n>=2");
  return ZetaExpr::zeta(m + n) + ZetaExpr::zeta2(m, n);
}

ZetaExpr euler_E1_odd_variant(int s) {
  if (s < 1) throw DomainError("euler_E1_odd_variant requires s>=1");
  RawZeta z;
  z.add(Rational(sign_power(s - 1), 2), s + 1, s + 1);
  for (int i = 0; i <= s - 2; ++i) z.add(Rational(sign_power(i)), i + 2, 2 * s - i);
  return z.finish("euler_E1_odd_variant");
}

ZetaExpr euler_E1_odd_alternating(int s) {
  if (s < 1) throw DomainError("euler_E1_odd_alternating requires s>=1");
  RawZeta z;
  for (int i = 0; i <= 2 * s - 2; ++i) z.add(Rational(sign_power(i), 2), i + 2, 2 * s - i);
  return z.finish("euler_E1_odd_alternating");
}

ZetaExpr tornheim_T11s(int s) {
  if (s < 1) throw DomainError("tornheim_T11s requires s>=1");
  RawZeta z;
  z.add(Rational(s + 1), s + 2);
  for (int i = 2; i <= s; ++i) z.add(Rational(-1), i, s - i + 2);
  return z.finish("tornheim_T11s");
}

ZetaExpr tornheim_Tsss(int s) {
  if (s < 1) throw DomainError("tornheim_Tsss requires s>=1");
  RawZeta z;
  const Rational lead = Rational(4) / Rational(1 + 2 * sign_power(s));
  for (int i = 0; i <= s / 2; ++i) z.add(lead * binomial(2 * s - 2 * i - 1, s - 1), 2 * i, 3 * s - 2 * i);
  return z.finish("tornheim_Tsss");
}

ZetaExpr tornheim_T00t(int t) {
  require(t >= 3, "divergent: requires r+s+t>2");
  return ZetaExpr::zeta(t - 1) - ZetaExpr::zeta(t);
}

ZetaExpr tornheim_T0ss(int s) {
  require(s >= 2, "divergent: requires r+t>1");
  return (ZetaExpr::zeta2(s, s) - ZetaExpr::zeta(2 * s)) * Rational(1, 2);
}

ZetaExpr tornheim_Trs1(int r, int s) {
  if (r < 0 || s < 0) throw DomainError("tornheim_Trs1 requires r,s>=0");
  RawZeta bracket;
  bracket.add(Rational(r + s + 2), r + s + 1);
  // i = 1-r .. s-2 under the signed-range convention
  auto inner = [&](int i, const Rational& sign) { bracket.add(-sign, s - i, r + i + 1); };
  const int lo = 1 - r, hi = s - 2;
  if (hi >= lo) {
    for (int i = lo; i <= hi; ++i) inner(i, 1);
  } else if (hi < lo - 1) {
    for (int i = hi + 1; i <= lo - 1; ++i) inner(i, -1);
  }
  RawZeta z;
  z.add(bracket, Rational(sign_power(s - 1), 2));
  for (int i = 0; i <= s - 2; ++i) z.add(Rational(sign_power(i)), s - i, r + i + 1);
  return z.finish("tornheim_Trs1");
}

const std::vector<SpecificValue>& specific_values() {
  static const std::vector<SpecificValue> table = [] {
    auto z = [](int k) { return ZetaExpr::zeta(k); };
    auto zz = [](int a, int b) { return ZetaExpr::zeta2(a, b); };
    const Rational half(1, 2);
    const ZetaExpr t112 = zz(2, 2) * Rational(-1) + z(4) * Rational(3);
    const ZetaExpr t222 = z(6) * Rational(-20, 3) + zz(2, 4) * Rational(4);
    return std::vector<SpecificValue>{
        {SumDescriptor::tornheim(4, 0, 2), z(6) * Rational(1, 3) + zz(2, 4) - zz(3, 3)},
        {SumDescriptor::tornheim(3, 1, 2), zz(3, 3) * half + z(6) * Rational(19, 6) - zz(2, 4) * Rational(2)},
        {SumDescriptor::tornheim(2, 2, 2), t222},
        {SumDescriptor::tornheim(2, 0, 2), zz(2, 2) * half - z(4) * half},
        {SumDescriptor::tornheim(1, 1, 2), t112},
        {SumDescriptor::tornheim(1, 0, 3), t112 * half},
        {SumDescriptor::tornheim(2, 1, 3), t222 * half},
        {SumDescriptor::euler(2, 4), zz(3, 3) - z(6) * Rational(1, 3)},
    };
  }();
  return table;
}

std::vector<ZetaExpr> closed_form_candidates(const SumDescriptor& d) {
  std::vector<ZetaExpr> out;
  for (const auto& sv : specific_values())
    if (sv.target.canonical() == d.canonical()) out.push_back(sv.value);
  if (d.is_euler()) {
    const int m = d.a(), n = d.b();
    if (m == 1 && n >= 2) out.push_back(euler_E1n(n));
    if (m == n && m >= 2) out.push_back(euler_symmetry_pair(m, n) * Rational(1, 2));
    return out;
  }
  const SumDescriptor c = d.canonical();
  const int r = c.a(), s = c.b(), t = c.c();
  if (t == 0 && r >= 2) out.push_back(ZetaExpr::zeta2(r, s));
  if (r == 1 && s == 1 && t >= 1) out.push_back(tornheim_T11s(t));
  if (r == s && s == t && s >= 1) out.push_back(tornheim_Tsss(s));
  if (r == 0 && s == 0 && t >= 3) out.push_back(tornheim_T00t(t));
  if (r == 0 && s == t && s >= 2) out.push_back(tornheim_T0ss(s));
  if (t == 1 && s == r + 1 && r >= 1) out.push_back(ZetaExpr::zeta2(s, s, Rational(1, 2)));
  if (t == 1 && r >= 1 && s >= 1) out.push_back(tornheim_Trs1(r, s));
  return out;
}

}  // namespace tornheim
