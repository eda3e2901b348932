#include "tornheim/even_zeta.hpp"

#include "tornheim/errors.hpp"

#include <mutex>
#include <vector>

namespace tornheim {

Rational even_zeta_ratio(int k) {
  if (k < 1) throw DomainError("even_zeta_ratio: k must be >= 1");
  static std::mutex mutex;
  static std::vector<Rational> c{Rational(0), Rational(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(c.size()) <= k) {
    const int s = static_cast<int>(c.size());
    Rational acc;
    for (int i = 1; i <= s - 1; ++i) acc += c[s - i] * c[i];
    c.push_back(acc * Rational(2, 2 * s + 1));
  }
  return c[k];
}

ZetaExpr zeta_even_canonical(const ZetaExpr& e) {
  ZetaExpr out;
  for (const auto& [m, coef] : e.terms()) {
    Rational c = coef;
    std::vector<int> args;
    for (int k : m.args()) {
      if (k % 2 == 0 && k > 2) {
        c *= even_zeta_ratio(k / 2);
        args.insert(args.end(), k / 2, 2);
      } else {
        args.push_back(k);
      }
    }
    out += ZetaExpr(ZetaMonomial(args), c);
  }
  return out;
}

ZetaExpr zeta_even_collapse(const ZetaExpr& e) {
  ZetaExpr out;
  const ZetaExpr canon = zeta_even_canonical(e);
  for (const auto& [m, coef] : canon.terms()) {
    std::vector<int> args;
    int twos = 0;
    for (int k : m.args()) {
      if (k == 2) {
        ++twos;
      } else {
        args.push_back(k);
      }
    }
    Rational c = coef;
    if (twos > 0) {
      c /= even_zeta_ratio(twos);
      args.push_back(2 * twos);
    }
    out += ZetaExpr(ZetaMonomial(args), c);
  }
  return out;
}

bool equal_mod_even(const ZetaExpr& a, const ZetaExpr& b) {
  return zeta_even_canonical(a - b).is_zero();
}

}  // namespace tornheim
