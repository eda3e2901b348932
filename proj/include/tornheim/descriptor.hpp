#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace tornheim {

/// Either a linear Euler sum E(m,n) = sum_nu H_{nu,m} / nu^n or a Tornheim
/// series T(r,s,t) = sum_{mu,nu} mu^-r nu^-s (mu+nu)^-t.
class SumDescriptor {
 public:
  enum class Kind { euler, tornheim };

  static SumDescriptor euler(int m, int n) { return SumDescriptor(Kind::euler, m, n, 0); }
  static SumDescriptor tornheim(int r, int s, int t) { return SumDescriptor(Kind::tornheim, r, s, t); }

  /// Accepts "E(2,4)", "T(1, 1, 1)" or space separated "T 1 1 1".
  static SumDescriptor parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_euler() const { return kind_ == Kind::euler; }
  bool is_tornheim() const { return kind_ == Kind::tornheim; }
  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }
  int weight() const { return a_ + b_ + c_; }

  /// Empty if convergent, else the first violated condition, e.g. "r+s+t>2".
  std::string divergence_reason() const;
  bool convergent() const { return divergence_reason().empty(); }
  /// Throws DivergentDescriptor("divergent: requires ...") if not convergent.
  void require_convergent() const;

  /// T(r,s,t) with r <= s; Euler sums are unchanged.
  SumDescriptor canonical() const;

  std::string str() const;

  friend auto operator<=>(const SumDescriptor&, const SumDescriptor&) = default;
  friend bool operator==(const SumDescriptor&, const SumDescriptor&) = default;

 private:
  SumDescriptor(Kind k, int a, int b, int c) : kind_(k), a_(a), b_(b), c_(c) {}
  Kind kind_;
  int a_, b_, c_;
};

}  // namespace tornheim
