#pragma once

// Exact elimination over the relations of one weight.

#include "tornheim/combinations.hpp"
#include "tornheim/numerics.hpp"
#include "tornheim/relations.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace tornheim {

/// sum basis[u] * u + zeta.
struct LinearForm {
  std::map<SumDescriptor, Rational> basis;
  ZetaExpr zeta;

  bool is_closed() const { return basis.empty(); }
  std::string render() const;
};

struct Reduction {
  enum class Status { closed, basis };

  SumDescriptor target = SumDescriptor::euler(1, 2);  // canonical unknown
  Status status = Status::closed;
  /// The closed value, or the zeta part of a basis form, in display form.
  ZetaExpr value;
  std::map<SumDescriptor, Rational> basis;

  bool is_closed() const { return status == Status::closed; }
  LinearForm form() const { return {basis, value}; }
  std::string render() const { return form().render(); }
};

struct WeightSolution {
  int weight = 0;
  std::vector<SumDescriptor> unknowns;
  std::vector<SumDescriptor> basis;  // free unknowns
  std::map<SumDescriptor, Reduction> reductions;
  std::size_t relation_count = 0;

  bool all_closed() const { return basis.empty(); }
  const Reduction& at(const SumDescriptor& d) const;
  /// Substitutes the solution into sum coefs[u] * u.
  LinearForm substitute(const std::map<SumDescriptor, Rational>& coefs) const;
  /// Left side minus right side of r after substitution; zero when r holds.
  LinearForm residual(const Relation& r) const;
};

struct EngineConfig {
  int weight_cap = 14;
  NumericConfig numeric;
  bool verify = true;
  std::optional<Mutation> mutation;
};

struct CombinationCheck {
  std::string id;
  std::string params;
  bool symbolic_ok = false;
  bool numeric_ok = false;
  std::string residual;  // symbolic residual, "0" on success
  std::string numeric_residual;

  bool ok() const { return symbolic_ok && numeric_ok; }
};

struct CombinationReport {
  int weight = 0;
  std::vector<CombinationCheck> checks;

  bool ok() const;
};

class RelationEngine {
 public:
  explicit RelationEngine(EngineConfig cfg = {});

  const EngineConfig& config() const { return cfg_; }

  /// Solves weight w once and caches the table. Throws InconsistentSystem or
  /// NumericVerificationFailure naming the relation families at fault.
  const WeightSolution& solve(int w);
  /// Reduction of a convergent descriptor (any argument order).
  Reduction reduce(const SumDescriptor& d);
  /// Numeric value of d at the engine's precision.
  BigFloat numeric(const SumDescriptor& d);
  std::string format(const BigFloat& x, int digits);
  CombinationReport verify_combination_identities(int w);

 private:
  void check_weight(int w) const;
  std::unique_ptr<WeightSolution> eliminate(int w, const std::vector<Relation>& rels);
  std::vector<std::string> faulty_families(const std::vector<Relation>& rels);
  void verify(const WeightSolution& sol, const std::vector<Relation>& rels);
  BigFloat numeric_form(const LinearForm& f);
  ZetaExpr display(const SumDescriptor& d, const ZetaExpr& canonical_value) const;

  EngineConfig cfg_;
  Evaluator eval_;
  std::recursive_mutex mutex_;
  std::map<int, std::unique_ptr<WeightSolution>> cache_;
};

/// Process-wide engine with the default configuration.
RelationEngine& default_engine();
const WeightSolution& solve(int w);
Reduction reduce(const SumDescriptor& d);
CombinationReport verify_combination_identities(int w);

}  // namespace tornheim
