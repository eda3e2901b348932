#pragma once

#include "tornheim/zeta_expr.hpp"

namespace tornheim {

/// c_k with zeta(2k) = c_k * zeta(2)^k, from Euler's recursion
/// (2s+1) zeta(2s) = 2 sum_{i=1}^{s-1} zeta(2s-2i) zeta(2i). Requires k >= 1.
Rational even_zeta_ratio(int k);

/// Rewrites every zeta(2k), k >= 2, as c_k zeta(2)^k. Idempotent.
ZetaExpr zeta_even_canonical(const ZetaExpr& e);

/// Canonical form with the zeta(2)^j part of each monomial written as a
/// single zeta(2j), e.g. zeta(2)^2 -> 5/2 zeta(4). Also a normal form.
ZetaExpr zeta_even_collapse(const ZetaExpr& e);

/// True when a and b agree after even canonicalization.
bool equal_mod_even(const ZetaExpr& a, const ZetaExpr& b);

}  // namespace tornheim
