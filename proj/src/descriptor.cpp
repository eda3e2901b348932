#include "tornheim/descriptor.hpp"

#include "tornheim/errors.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace tornheim {

SumDescriptor SumDescriptor::parse(std::string_view text) {
  std::string head;
  std::vector<int> nums;
  std::string cur;
  bool neg = false;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur.size() > 6) throw ParseError("descriptor index too large: " + cur);
    nums.push_back((neg ? -1 : 1) * std::stoi(cur));
    cur.clear();
    neg = false;
  };
  for (char ch : text) {
    const auto u = static_cast<unsigned char>(ch);
    if (std::isdigit(u)) {
      cur.push_back(ch);
    } else if (ch == '-' && cur.empty()) {
      neg = true;
    } else if (std::isalpha(u)) {
      if (!nums.empty() || !cur.empty() || !head.empty()) throw ParseError("malformed descriptor: " + std::string(text));
      head.push_back(static_cast<char>(std::toupper(u)));
    } else if (std::isspace(u) || ch == ',' || ch == '(' || ch == ')') {
      flush();
    } else {
      throw ParseError("malformed descriptor: " + std::string(text));
    }
  }
  flush();
  if (head == "E" && nums.size() == 2) return euler(nums[0], nums[1]);
  if (head == "T" && nums.size() == 3) return tornheim(nums[0], nums[1], nums[2]);
  throw ParseError("expected E m n or T r s t, got: " + std::string(text));
}

std::string SumDescriptor::divergence_reason() const {
  if (is_euler()) {
    if (a_ < 1) return "m>=1";
    if (b_ < 2) return "n>=2";
    return {};
  }
  if (a_ < 0 || b_ < 0 || c_ < 0) return "r,s,t>=0";
  if (a_ + b_ + c_ <= 2) return "r+s+t>2";
  if (a_ + c_ <= 1) return "r+t>1";
  if (b_ + c_ <= 1) return "s+t>1";
  return {};
}

void SumDescriptor::require_convergent() const {
  const std::string why = divergence_reason();
  if (!why.empty()) throw DivergentDescriptor("divergent: requires " + why);
}

SumDescriptor SumDescriptor::canonical() const {
  if (is_tornheim() && a_ > b_) return tornheim(b_, a_, c_);
  return *this;
}

std::string SumDescriptor::str() const {
  if (is_euler()) return "E(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
  return "T(" + std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_) + ")";
}

}  // namespace tornheim
