#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tornheim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's stated domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A Tornheim or Euler sum whose series does not converge.
class DivergentDescriptor : public Error {
 public:
  using Error::Error;
};

/// A zeta(1) term survived after a closed-form formula was expanded.
class FormulaProducesZeta1 : public Error {
 public:
  using Error::Error;
};

/// The requested tolerance cannot be met within the configured term budget.
class PrecisionUnreachable : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

/// Raised by the relation solver. `families` lists the provenance families
/// whose relations fail a numeric residual check (empty if no evaluator was
/// available to localize the fault).
class SolverFault : public Error {
 public:
  SolverFault(const std::string& what, std::vector<std::string> families)
      : Error(what), families_(std::move(families)) {}
  const std::vector<std::string>& families() const { return families_; }

 private:
  std::vector<std::string> families_;
};

/// Elimination produced 0 = nonzero.
class InconsistentSystem : public SolverFault {
 public:
  using SolverFault::SolverFault;
};

/// A solved value disagrees with its independent numeric evaluation.
class NumericVerificationFailure : public SolverFault {
 public:
  using SolverFault::SolverFault;
};

}  // namespace tornheim
