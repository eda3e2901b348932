#pragma once

#include "tornheim/rational.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tornheim {

/// Product zeta(k1) zeta(k2) ... with every k >= 2, stored sorted ascending.
/// The empty monomial is the constant 1.
class ZetaMonomial {
 public:
  ZetaMonomial() = default;
  explicit ZetaMonomial(std::vector<int> args);
  ZetaMonomial(std::initializer_list<int> args) : ZetaMonomial(std::vector<int>(args)) {}

  const std::vector<int>& args() const { return args_; }
  int weight() const;
  bool is_constant() const { return args_.empty(); }

  friend ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b);

  /// Render order: by weight, then lexicographically by arguments.
  friend bool operator<(const ZetaMonomial& a, const ZetaMonomial& b);
  friend bool operator==(const ZetaMonomial& a, const ZetaMonomial& b) = default;

 private:
  std::vector<int> args_;
};

/// A rational linear combination of zeta monomials. Zero coefficients are
/// never stored, so two expressions are equal iff their term maps are.
class ZetaExpr {
 public:
  using Terms = std::map<ZetaMonomial, Rational>;

  ZetaExpr() = default;
  ZetaExpr(const Rational& constant);  // NOLINT: a constant is an expression
  ZetaExpr(long constant) : ZetaExpr(Rational(constant)) {}  // NOLINT
  ZetaExpr(const ZetaMonomial& m, const Rational& coefficient = 1);

  /// c * zeta(k).
  static ZetaExpr zeta(int k, const Rational& c = 1);
  /// c * zeta(a) zeta(b).
  static ZetaExpr zeta2(int a, int b, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational constant() const;
  Rational coefficient(const ZetaMonomial& m) const;

  /// Weight if homogeneous (constant term counts as weight 0);
  /// nullopt for mixed weights. Throws DomainError on the zero expression.
  std::optional<int> weight() const;

  ZetaExpr& operator+=(const ZetaExpr& o);
  ZetaExpr& operator-=(const ZetaExpr& o);
  ZetaExpr& operator*=(const Rational& c);
  ZetaExpr operator-() const;

  friend ZetaExpr operator+(ZetaExpr a, const ZetaExpr& b) { return a += b; }
  friend ZetaExpr operator-(ZetaExpr a, const ZetaExpr& b) { return a -= b; }
  friend ZetaExpr operator*(ZetaExpr a, const Rational& c) { return a *= c; }
  friend ZetaExpr operator*(const Rational& c, ZetaExpr a) { return a *= c; }
  friend ZetaExpr operator*(const ZetaExpr& a, const ZetaExpr& b);
  friend bool operator==(const ZetaExpr& a, const ZetaExpr& b) = default;

  /// Canonical text, e.g. "4*z(2)*z(4) - 20/3*z(6)". Zero renders as "0".
  std::string render() const;
  /// Inverse of render. Accepts bare monomials ("z(3)") and whitespace.
  static ZetaExpr parse(std::string_view text);

 private:
  void add_term(const ZetaMonomial& m, const Rational& c);
  Terms terms_;
};

inline ZetaExpr add(const ZetaExpr& a, const ZetaExpr& b) { return a + b; }
inline ZetaExpr scale(const ZetaExpr& a, const Rational& c) { return a * c; }
inline ZetaExpr mul(const ZetaExpr& a, const ZetaExpr& b) { return a * b; }

std::ostream& operator<<(std::ostream& os, const ZetaExpr& e);

}  // namespace tornheim
