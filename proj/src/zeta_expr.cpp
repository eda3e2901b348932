#include "tornheim/zeta_expr.hpp"

#include "tornheim/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>

namespace tornheim {

ZetaMonomial::ZetaMonomial(std::vector<int> args) : args_(std::move(args)) {
  for (int k : args_)
    if (k < 2) throw DomainError("zeta(" + std::to_string(k) + ") is not a valid generator");
  std::sort(args_.begin(), args_.end());
}

int ZetaMonomial::weight() const { return std::accumulate(args_.begin(), args_.end(), 0); }

ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b) {
  std::vector<int> merged;
  merged.reserve(a.args_.size() + b.args_.size());
  std::merge(a.args_.begin(), a.args_.end(), b.args_.begin(), b.args_.end(),
             std::back_inserter(merged));
  ZetaMonomial m;
  m.args_ = std::move(merged);
  return m;
}

bool operator<(const ZetaMonomial& a, const ZetaMonomial& b) {
  const int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  return a.args_ < b.args_;
}

ZetaExpr::ZetaExpr(const Rational& constant) { add_term(ZetaMonomial{}, constant); }

ZetaExpr::ZetaExpr(const ZetaMonomial& m, const Rational& coefficient) { add_term(m, coefficient); }

ZetaExpr ZetaExpr::zeta(int k, const Rational& c) { return ZetaExpr(ZetaMonomial{k}, c); }

ZetaExpr ZetaExpr::zeta2(int a, int b, const Rational& c) { return ZetaExpr(ZetaMonomial{a, b}, c); }

void ZetaExpr::add_term(const ZetaMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational ZetaExpr::constant() const { return coefficient(ZetaMonomial{}); }

Rational ZetaExpr::coefficient(const ZetaMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> ZetaExpr::weight() const {
  if (terms_.empty()) throw DomainError("the zero expression has no weight");
  const int w = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_)
    if (m.weight() != w) return std::nullopt;
  return w;
}

ZetaExpr& ZetaExpr::operator+=(const ZetaExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ZetaExpr& ZetaExpr::operator-=(const ZetaExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ZetaExpr& ZetaExpr::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

ZetaExpr ZetaExpr::operator-() const { return *this * Rational(-1); }

ZetaExpr operator*(const ZetaExpr& a, const ZetaExpr& b) {
  ZetaExpr out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

std::string ZetaExpr::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        mag = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) mag = -c;
    }
    std::string factors;
    for (int k : m.args()) factors += (factors.empty() ? "" : "*") + std::string("z(") + std::to_string(k) + ")";
    if (factors.empty())
      out += mag.str();
    else if (mag == Rational(1))
      out += factors;
    else
      out += mag.str() + "*" + factors;
    first = false;
  }
  return out;
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  ZetaExpr parse() {
    if (s_.empty()) throw ParseError("empty zeta expression");
    ZetaExpr out;
    bool first = true;
    while (pos_ < s_.size()) {
      long sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += parse_term() * Rational(sign);
      first = false;
    }
    return out;
  }

 private:
  ZetaExpr parse_term() {
    Rational coef(1);
    std::vector<int> args;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string num = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) fail("expected denominator");
        num += "/" + den;
      }
      coef = Rational::parse(num);
    } else if (!at_zeta()) {
      fail("expected a number or z(");
    } else {
      args.push_back(zeta_factor());
    }
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      args.push_back(zeta_factor());
    }
    return ZetaExpr(ZetaMonomial(args), coef);
  }

  bool at_zeta() const { return s_.compare(pos_, 2, "z(") == 0; }

  int zeta_factor() {
    if (!at_zeta()) fail("expected z(");
    pos_ += 2;
    std::string d = digits();
    if (d.empty() || pos_ >= s_.size() || s_[pos_] != ')') fail("malformed z(k)");
    ++pos_;
    const int k = std::stoi(d);
    if (k < 2) fail("z(" + d + ") is not a valid generator");
    return k;
  }

  std::string digits() {
    std::string d;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d.push_back(s_[pos_++]);
    return d;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("zeta expression: " + msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

ZetaExpr ZetaExpr::parse(std::string_view text) { return ExprParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const ZetaExpr& e) { return os << e.render(); }

}  // namespace tornheim
