#include "tornheim/rational.hpp"

#include "tornheim/errors.hpp"

#include <cctype>

namespace tornheim {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view v) {
    std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
  };
  auto to_big = [](std::string v) {
    if (!v.empty() && v[0] == '+') v.erase(0, 1);
    return BigInt(v, 10);
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw ParseError("invalid rational '" + s + "'");
    return Rational(to_big(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("invalid rational '" + s + "'");
  return Rational(to_big(num), to_big(den));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational pow(const Rational& x, long k) {
  if (k < 0) {
    if (x.is_zero()) throw DomainError("zero to a negative power");
    return Rational(1) / pow(x, -k);
  }
  Rational result(1);
  Rational base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

}  // namespace tornheim
