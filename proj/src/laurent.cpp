#include "lfq/laurent.hpp"

#include "lfq/error.hpp"

#include <sstream>

namespace lfq {

namespace {

Rat rat_pow(const Rat& x, int e) {
  if (e < 0) {
    if (x == 0) throw ComputeError("Laurent evaluation at zero");
    return rat_pow(Rat(1) / x, -e);
  }
  Rat r = 1;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

}  // namespace

Laurent2 Laurent2::monomial(const Rat& c, int i, int j) {
  Laurent2 out;
  out.add_term({i, j}, c);
  return out;
}

void Laurent2::add_term(const Exponent& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Laurent2& Laurent2::operator+=(const Laurent2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent2& Laurent2::operator-=(const Laurent2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent2& Laurent2::operator*=(const Laurent2& o) {
  Laurent2 out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

Laurent2& Laurent2::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Rat Laurent2::evaluate(const Rat& l, const Rat& m) const {
  Rat out = 0;
  for (const auto& [e, c] : terms_) out += c * rat_pow(l, e.first) * rat_pow(m, e.second);
  return out;
}

std::string Laurent2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    os << (first ? "" : " + ") << "(" << to_string(c) << ")";
    if (e.first) os << "*L^" << e.first;
    if (e.second) os << "*M^" << e.second;
    first = false;
  }
  return os.str();
}

}  // namespace lfq
