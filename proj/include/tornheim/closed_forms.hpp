#pragma once

// Explicit zeta-value evaluations of Euler sums and Tornheim series.

#include "tornheim/descriptor.hpp"
#include "tornheim/zeta_expr.hpp"

#include <map>
#include <string>
#include <vector>

namespace tornheim {

/// Accumulates c * zeta(k1)...zeta(kj) with arbitrary integer arguments.
/// finish() substitutes zeta(0) = -1/2 and rejects a surviving zeta(1)
/// with FormulaProducesZeta1.
class RawZeta {
 public:
  void add(const Rational& c, std::vector<int> args);
  void add(const Rational& c) { add(c, {}); }
  void add(const Rational& c, int a) { add(c, std::vector<int>{a}); }
  void add(const Rational& c, int a, int b) { add(c, std::vector<int>{a, b}); }
  void add(const RawZeta& o, const Rational& scale = 1);
  ZetaExpr finish(const std::string& context) const;

 private:
  std::map<std::vector<int>, Rational> terms_;
};

/// E(1,n) by Euler's formula. n >= 2.
ZetaExpr euler_E1n(int n);
/// E(m,n) + E(n,m) = zeta(m+n) + zeta(m) zeta(n). m, n >= 2.
ZetaExpr euler_symmetry_pair(int m, int n);
/// E(1,2s+1) in the alternating-square form. s >= 1.
ZetaExpr euler_E1_odd_variant(int s);
/// E(1,2s+1) as half an alternating sum of zeta products. s >= 1.
ZetaExpr euler_E1_odd_alternating(int s);
/// T(1,1,s). s >= 1.
ZetaExpr tornheim_T11s(int s);
/// T(s,s,s) with zeta(0) = -1/2 in the i = 0 term. s >= 1.
ZetaExpr tornheim_Tsss(int s);
/// T(0,0,t) = zeta(t-1) - zeta(t). t >= 3.
ZetaExpr tornheim_T00t(int t);
/// T(0,s,s) = (zeta(s)^2 - zeta(2s)) / 2. s >= 2.
ZetaExpr tornheim_T0ss(int s);
/// T(r,s,1), with the inner range taken literally under the signed-range
/// convention. Throws FormulaProducesZeta1 outside its domain (r or s = 0).
ZetaExpr tornheim_Trs1(int r, int s);

struct SpecificValue {
  SumDescriptor target;
  ZetaExpr value;
};

/// The tabulated low-weight values (T(4,0,2), T(3,1,2), T(2,2,2), ...).
const std::vector<SpecificValue>& specific_values();

/// Closed forms applicable to d, most specific first. Each one is a valid
/// value of d; used to pick a readable rendering of a solved reduction.
std::vector<ZetaExpr> closed_form_candidates(const SumDescriptor& d);

}  // namespace tornheim
