#pragma once

// Executable registry of the finite and infinite summation identities.
// Exact cases compare Rationals; numeric cases compare BigFloats within the
// configured tolerance.

#include "tornheim/numerics.hpp"
#include "tornheim/rational.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tornheim {

enum class IdentityKind { Exact, Numeric };

std::string to_string(IdentityKind k);

struct Grid {
  int mu_max = 12;
  int n_max = 12;     // upper summation limit N
  int exp_max = 5;    // exponents m, n, s, t
  int weight_max = 12;
  /// Only tuples with mu = N + 1 for identities that require N < mu.
  bool boundary_only = false;
};

/// Named integer parameters of one tuple, in display order.
class Params {
 public:
  Params() = default;
  Params(std::initializer_list<std::pair<std::string, long>> v) : vals_(v) {}
  long operator[](const std::string& name) const;
  bool has(const std::string& name) const;
  void set(const std::string& name, long v);
  const std::vector<std::pair<std::string, long>>& values() const { return vals_; }
  /// "mu=3,N=2,s=1".
  std::string str() const;

 private:
  std::vector<std::pair<std::string, long>> vals_;
};

/// One side-by-side comparison inside a check. `form` names the variant
/// (the main statement is "main").
struct ExactSides {
  std::string form;
  Rational lhs, rhs;
};
struct NumericSides {
  std::string form;
  BigFloat lhs, rhs;
};

struct IdentityCase {
  std::string id;
  IdentityKind kind = IdentityKind::Exact;
  std::string domain;
  std::string statement;  // formula in plain ASCII notation
  std::string note;       // domain restrictions, corrected misprints
  std::vector<std::string> forms{"main"};
  std::function<std::vector<Params>(const Grid&)> tuples;
  std::function<std::vector<ExactSides>(const Params&)> exact;
  std::function<std::vector<NumericSides>(const Params&, Evaluator&)> numeric;
};

struct TupleResult {
  Params params;
  std::string form;
  bool pass = false;
  std::string residual;  // exact difference, or |lhs - rhs| in scientific form
};

struct IdentityReport {
  std::string id;
  IdentityKind kind = IdentityKind::Exact;
  std::string note;
  std::vector<TupleResult> results;
  double seconds = 0;
  std::string error;  // set when a check threw

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return error.empty() && failed() == 0 && !results.empty(); }
};

struct RunSummary {
  std::vector<IdentityReport> reports;
  double seconds = 0;
  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t cases_failed() const;
  bool ok() const { return cases_failed() == 0; }
};

/// The full catalog in a fixed order. Ids are stable.
const std::vector<IdentityCase>& registry();

/// Case by id. A form alias "eq-<form>" or "<id>:<form>" selects one form of
/// its parent case. Throws UnknownIdentity.
const IdentityCase& find_identity(const std::string& id);

/// Runs one case (or one form of it) over every in-domain tuple of `grid`.
IdentityReport run(const std::string& id, const Grid& grid = {}, const NumericConfig& cfg = {});

enum class KindFilter { All, ExactOnly, NumericOnly };

/// Runs every case. Cases run in parallel; reports are in registry order.
RunSummary run_all(const Grid& grid = {}, const NumericConfig& cfg = {}, KindFilter filter = KindFilter::All,
                   unsigned threads = 0);

/// Line-oriented text: one line per tuple and a per-case summary line.
void write_text(std::ostream& os, const IdentityReport& r, bool failures_only = false);
void write_text(std::ostream& os, const RunSummary& s, bool failures_only = false);
/// One JSON record per tuple: {"id","form","params","status","residual"}.
void write_json_lines(std::ostream& os, const IdentityReport& r);
void write_json_lines(std::ostream& os, const RunSummary& s);

/// Cross-reference from each statement of the source material to the
/// registry ids and library operations that exercise it.
struct CoverageRow {
  std::string statement;
  std::vector<std::string> covered_by;
};
const std::vector<CoverageRow>& coverage_table();
void write_coverage(std::ostream& os);

}  // namespace tornheim
