#pragma once

// Rational combinations of linear Euler sums that evaluate to zeta values.

#include "tornheim/zeta_expr.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tornheim {

struct EulerCombination {
  std::string id;
  std::string params;
  int weight = 0;
  std::map<std::pair<int, int>, Rational> lhs;  // (m,n) -> coefficient of E(m,n)
  ZetaExpr rhs;
};

/// Every instance of the known combination identities at weight w.
std::vector<EulerCombination> combination_identities(int w);

/// Ids used by combination_identities, in a fixed order.
const std::vector<std::string>& combination_identity_ids();

}  // namespace tornheim
