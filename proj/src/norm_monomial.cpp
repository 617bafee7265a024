#include "lfq/norm_monomial.hpp"

#include "lfq/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <sstream>

namespace lfq {

NormMonomial::NormMonomial(const Rat& base, const Rat& exponent) {
  if (base == 0) throw Error("norm of zero in a norm monomial");
  if (exponent == 0) return;
  const BigInt n = abs(boost::multiprecision::numerator(base)), d = boost::multiprecision::denominator(base);
  if (n > 1) terms_.emplace_back(n, exponent);
  if (d > 1) terms_.emplace_back(d, -exponent);
}

NormMonomial& NormMonomial::operator*=(const NormMonomial& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

NormMonomial& NormMonomial::operator/=(const NormMonomial& o) { return *this *= o.pow(-1); }

NormMonomial NormMonomial::pow(const Rat& e) const {
  NormMonomial out;
  if (e == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second *= e;
  return out;
}

// Factor refinement: splitting a pair with common factor g into g, v_i/g, v_j/g strictly
// lowers the product of all bases, so the loop terminates with a coprime base.
std::vector<std::pair<BigInt, Rat>> NormMonomial::normalized() const {
  std::vector<std::pair<BigInt, Rat>> v;
  for (const auto& t : terms_)
    if (t.first > 1 && t.second != 0) v.push_back(t);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < v.size() && !changed; ++j) {
        if (v[i].first == v[j].first) {
          v[i].second += v[j].second;
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          continue;
        }
        const BigInt g = boost::multiprecision::gcd(v[i].first, v[j].first);
        if (g == 1) continue;
        const auto [bi, ei] = v[i];
        const auto [bj, ej] = v[j];
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        v.emplace_back(g, ei + ej);
        if (bi / g > 1) v.emplace_back(bi / g, ei);
        if (bj / g > 1) v.emplace_back(bj / g, ej);
        changed = true;
      }
  }
  v.erase(std::remove_if(v.begin(), v.end(), [](const auto& t) { return t.second == 0; }), v.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

bool NormMonomial::operator==(const NormMonomial& o) const { return (*this / o).is_one(); }

std::string NormMonomial::str() const {
  const auto v = normalized();
  if (v.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " * " : "") << v[k].first << "^(" << to_string(v[k].second) << ")";
  return os.str();
}

}  // namespace lfq
