#include "tornheim/combinations.hpp"

#include "tornheim/closed_forms.hpp"
#include "tornheim/exact.hpp"

namespace tornheim {

namespace {

class Builder {
 public:
  Builder(std::string id, std::string params, int w) {
    c_.id = std::move(id);
    c_.params = std::move(params);
    c_.weight = w;
  }
  void e(const Rational& coef, int m, int n) {
    if (coef.is_zero()) return;
    auto& slot = c_.lhs[{m, n}];
    slot += coef;
    if (slot.is_zero()) c_.lhs.erase({m, n});
  }
  void z(const Rational& coef, int a) { rhs_.add(coef, a); }
  void z(const Rational& coef, int a, int b) { rhs_.add(coef, a, b); }
  EulerCombination done() {
    c_.rhs = rhs_.finish(c_.id);
    return c_;
  }

 private:
  EulerCombination c_;
  RawZeta rhs_;
};

std::string kv(const char* a, int x) { return std::string(a) + "=" + std::to_string(x); }
std::string kv(const char* a, int x, const char* b, int y) { return kv(a, x) + "," + kv(b, y); }

Rational frac(long p, long q) { return Rational(p, q); }
Rational C(long a, long b) { return binomial(a, b); }
long sg(long k) { return sign_power(k); }

EulerCombination sum_Ei(int s) {
  Builder b("thm-sum-Ei", kv("s", s), s + 2);
  for (int i = 2; i <= s; ++i) b.e(2, i, s - i + 2);
  b.z(s - 1, s + 2);
  for (int j = 1; j <= s - 1; ++j) b.z(1, j + 1, s - j + 1);
  return b.done();
}

EulerCombination xzc9oni(int s) {
  Builder b("thm-xzc9oni", kv("s", s), 2 * s);
  for (int i = 2; i <= s - 1; ++i) b.e(2 * C(2 * s - i - 1, s - 1), i, 2 * s - i);
  for (int i = 1; i <= s / 2; ++i) b.z(4 * C(2 * s - 2 * i - 1, s - 1), 2 * i, 2 * s - 2 * i);
  for (int i = 2; i <= s; ++i) b.z(-2 * C(2 * s - 2, s - 1) * Rational(sg(i)), i, 2 * s - i);
  b.z(-Rational(sg(s - 1)) * (C(2 * s - 2, s - 1) + Rational(sg(s - 1) - 1)), s, s);
  b.z(-Rational(sg(s - 1)) * Rational(sg(s - 1) + 1), 2 * s);
  return b.done();
}

EulerCombination tsss_combination(int s) {
  Builder b("thm-Tsss-combination", kv("s", s), 3 * s);
  for (int i = 2; i <= s; ++i) b.e(C(2 * s - i - 1, s - 1), i, 3 * s - i);
  b.z(C(2 * s - 1, s - 1) * frac(2, 2 + sg(s)), 3 * s);
  b.z(-C(2 * s - 2, s - 1) * frac(3 * s + 1, 2), 3 * s);
  for (int i = 1; i <= 3 * s - 3; ++i) b.z(C(2 * s - 2, s - 1) * frac(1, 2), 3 * s - i - 1, i + 1);
  for (int i = 1; i <= s / 2; ++i) b.z(frac(2, 2 * sg(s) + 1) * C(2 * s - 2 * i - 1, s - 1), 2 * i, 3 * s - 2 * i);
  return b.done();
}

// Shared tail of the two forms of the (s,t) theorem.
void bw_tail(Builder& b, int s, int t) {
  const Rational k = frac(2 * s + t - 1, s + t - 1) * C(s + t - 1, t - 1);
  for (int i = 1; i <= 2 * s + t - 2; ++i) b.z(k / 2, i + 1, 2 * s + t - i);
  b.z(-k * frac(2 * s + t + 2, 2), 2 * s + t + 1);
}

EulerCombination bwgw7lo(int s, int t) {
  Builder b("thm-bwgw7lo", kv("s", s, "t", t), 2 * s + t + 1);
  for (int i = 1; i <= t - 1; ++i) {
    const Rational c = C(s + i - 1, s) * frac(2 * s + i - 1, s + i - 1);
    b.e(c, t - i + 1, 2 * s + i);
    b.z(c, t - i + 1, 2 * s + i);
  }
  for (int i = 0; i <= s - 1; ++i)
    b.z(Rational(sg(s + 1 + i)) * C(t + i - 1, t - 1) * frac(t + 2 * i - 1, t + i - 1), s - i + 1, s + i + t);
  bw_tail(b, s, t);
  return b.done();
}

EulerCombination r81stqo(int s, int t) {
  Builder b("eq-r81stqo", kv("s", s, "t", t), 2 * s + t + 1);
  for (int i = 2; i <= t; ++i) {
    const Rational c = C(s + t - i, s) * frac(2 * s + t - i, s + t - i);
    b.e(c, i, 2 * s + t - i + 1);
    b.z(c, i, 2 * s + t - i + 1);
  }
  for (int i = t - s + 2; i <= t + 1; ++i)
    b.z(Rational(sg(t - s + i)) * C(2 * t - i, t - 1) * frac(3 * t - 2 * i + 1, 2 * t - i), s - t + i, s + 2 * t - i + 1);
  bw_tail(b, s, t);
  return b.done();
}

EulerCombination bw_t3(int s) {
  Builder b("cor-bwgw7lo-t3", kv("s", s), 2 * s + 4);
  b.e(2, 3, 2 * s + 1);
  b.e(2 * s + 1, 2, 2 * s + 2);
  b.z(2, 3, 2 * s + 1);
  b.z(Rational(sg(s + 1)) * frac((s + 1) * (s + 1), 2), s + 2, s + 2);
  for (int i = 1; i <= s - 1; ++i) b.z(Rational(sg(s + 1 + i) * (s - i + 1) * (s + i + 1)), s - i + 2, s + i + 2);
  return b.done();
}

EulerCombination bw_t_s_minus_1(int s) {
  Builder b("cor-bwgw7lo-t-s-1", kv("s", s), 3 * s);
  for (int i = 2; i <= s - 1; ++i) {
    const Rational c = C(2 * s - i - 1, s) * frac(3 * s - i - 1, 2 * s - i - 1);
    b.e(c, i, 3 * s - i);
    b.z(c, i, 3 * s - i);
  }
  for (int i = 2; i <= s + 1; ++i)
    b.z(Rational(sg(i)) * C(2 * s - i - 1, s - 2) * frac(3 * s - 2 * i, 2 * s - i - 1), i, 3 * s - i);
  const Rational k = frac(3 * s - 2, 4 * (s - 1)) * C(2 * s - 2, s - 2);
  for (int i = 2; i <= 3 * s - 2; ++i) b.z(k, i, 3 * s - i);
  b.z(-k * Rational(3 * s + 1), 3 * s);
  return b.done();
}

EulerCombination bw_t_s(int s) {
  Builder b("cor-bwgw7lo-t-s", kv("s", s), 3 * s + 1);
  for (int i = 2; i <= s; ++i) {
    const Rational c = C(2 * s - i, s) * frac(3 * s - i, 2 * s - i);
    b.e(c, i, 3 * s - i + 1);
    b.z(c, i, 3 * s - i + 1);
  }
  for (int i = 2; i <= s + 1; ++i)
    b.z(Rational(sg(i)) * C(2 * s - i, s - 1) * frac(3 * s - 2 * i + 1, 2 * s - i), i, 3 * s - i + 1);
  const Rational k = frac(3 * s - 1, 2 * (2 * s - 1)) * C(2 * s - 1, s - 1);
  for (int i = 2; i <= 3 * s - 1; ++i) b.z(k, i, 3 * s - i + 1);
  b.z(-k * Rational(3 * s + 2), 3 * s + 1);
  return b.done();
}

EulerCombination final_symmetric(int n, int s) {
  Builder b("final-symmetric-theorem", kv("n", n, "s", s), n + s);
  for (int i = 2; i <= n - 1; ++i) b.e(C(n + s - i - 1, s - 1), i, n + s - i);
  for (int i = 2; i <= s - 1; ++i) b.e(C(n + s - i - 1, n - 1), i, n + s - i);
  b.z(C(n + s, n) - Rational(n + s + 1) * C(n + s - 2, s - 1) - Rational(1), n + s);
  for (int i = 2; i <= n + s - 2; ++i) b.z(C(n + s - 2, s - 1), i, n + s - i);
  return b.done();
}

}  // namespace

const std::vector<std::string>& combination_identity_ids() {
  static const std::vector<std::string> ids{
      "thm-sum-Ei",         "thm-xzc9oni",       "cor-t7si22d",     "cor-ab4k60c",    "cor-weight12",
      "thm-Tsss-combination", "thm-bwgw7lo",     "eq-r81stqo",      "cor-bwgw7lo-t3", "eq-bwgw7lo-t3-w8",
      "eq-bdgdtr",          "eq-E37-plus-E46",   "cor-bwgw7lo-t-s-1", "eq-9E210-2E39", "cor-bwgw7lo-t-s",
      "final-symmetric-theorem"};
  return ids;
}

std::vector<EulerCombination> combination_identities(int w) {
  std::vector<EulerCombination> out;
  if (w - 2 >= 2) out.push_back(sum_Ei(w - 2));
  if (w % 2 == 0 && w / 2 >= 2) out.push_back(xzc9oni(w / 2));
  if (w == 6) {
    Builder b("cor-t7si22d", "", 6);
    b.e(3, 2, 4);
    b.z(3, 3, 3);
    b.z(-1, 6);
    out.push_back(b.done());
  }
  if (w == 10) {
    Builder b("cor-ab4k60c", "", 10);
    b.e(7, 2, 8);
    b.e(3, 3, 7);
    b.e(1, 4, 6);
    b.z(-12, 4, 6);
    b.z(14, 3, 7);
    b.z(7, 5, 5);
    b.z(frac(-1, 5), 10);
    out.push_back(b.done());
  }
  if (w == 12) {
    Builder b("cor-weight12", "", 12);
    b.e(126, 2, 10);
    b.e(56, 3, 9);
    b.e(21, 4, 8);
    b.e(6, 5, 7);
    b.z(-210, 4, 8);
    b.z(-125, 6, 6);
    b.z(252, 3, 9);
    b.z(252, 5, 7);
    out.push_back(b.done());
  }
  if (w % 3 == 0 && w / 3 >= 2) out.push_back(tsss_combination(w / 3));
  for (int s = 1; 2 * s + 3 <= w; ++s) {
    const int t = w - 2 * s - 1;
    out.push_back(bwgw7lo(s, t));
    out.push_back(r81stqo(s, t));
  }
  if (w % 2 == 0 && w >= 6) out.push_back(bw_t3((w - 4) / 2));
  if (w == 8) {
    Builder b("eq-bwgw7lo-t3-w8", "", 8);
    b.e(2, 3, 5);
    b.e(5, 2, 6);
    b.z(frac(-9, 2), 4, 4);
    b.z(10, 3, 5);
    out.push_back(b.done());
  }
  if (w == 10) {
    Builder b("eq-bdgdtr", "", 10);
    b.e(2, 3, 7);
    b.e(7, 2, 8);
    b.z(-15, 4, 6);
    b.z(14, 3, 7);
    b.z(8, 5, 5);
    out.push_back(b.done());
    Builder c("eq-E37-plus-E46", "", 10);
    c.e(1, 3, 7);
    c.e(1, 4, 6);
    c.z(3, 4, 6);
    c.z(-1, 5, 5);
    c.z(frac(-1, 5), 10);
    out.push_back(c.done());
  }
  if (w % 3 == 0 && w / 3 >= 3) out.push_back(bw_t_s_minus_1(w / 3));
  if (w == 12) {
    Builder b("eq-9E210-2E39", "", 12);
    b.e(9, 2, 10);
    b.e(2, 3, 9);
    b.z(50, 2, 10);
    b.z(18, 3, 9);
    b.z(29, 4, 8);
    b.z(24, 5, 7);
    b.z(frac(25, 2), 6, 6);
    b.z(frac(-325, 2), 12);
    out.push_back(b.done());
  }
  if (w % 3 == 1 && (w - 1) / 3 >= 2) out.push_back(bw_t_s((w - 1) / 3));
  for (int n = 2; n <= w - 2; ++n) {
    const int s = w - n;
    if (s < n) break;
    out.push_back(final_symmetric(n, s));
  }
  return out;
}

}  // namespace tornheim
