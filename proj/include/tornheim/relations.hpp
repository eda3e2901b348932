#pragma once

// Linear relations among the Tornheim series and Euler sums of one weight.

#include "tornheim/descriptor.hpp"
#include "tornheim/zeta_expr.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tornheim {

/// sum coefficients[u] * u = rhs, over canonical convergent unknowns.
struct Relation {
  std::string family;
  std::string instance;
  std::map<SumDescriptor, Rational> coefficients;
  ZetaExpr rhs;

  std::string provenance() const { return family + " " + instance; }
};

/// Test hook: adds `delta` to the first coefficient of the index-th relation
/// (taken modulo the family size) of `family`.
struct Mutation {
  std::string family;
  std::size_t index = 0;
  Rational delta{1};
};

/// Family names in generation order.
const std::vector<std::string>& relation_families();

/// Unknowns of weight w in column order: canonical T(a,b,c) ascending, then
/// E(m,w-m) for m = w-2 down to 1.
std::vector<SumDescriptor> weight_unknowns(int w);

/// Every relation instance of weight w (w >= 3). Instances that would touch a
/// divergent series are left out.
std::vector<Relation> generate_relations(int w, const std::optional<Mutation>& mutation = std::nullopt);

}  // namespace tornheim
