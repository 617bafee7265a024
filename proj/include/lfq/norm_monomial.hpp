#pragma once
// Formal products prod ||r_i||^{e_i} of norms of nonzero rationals with rational exponents.
// Equality is decided over a coprime base, so it holds for every norm on Q at once.

#include "lfq/exact.hpp"

#include <string>
#include <vector>

namespace lfq {

class NormMonomial {
 public:
  NormMonomial() = default;
  // ||base||^exponent; throws Error for base = 0.
  NormMonomial(const Rat& base, const Rat& exponent = 1);

  NormMonomial& operator*=(const NormMonomial& o);
  NormMonomial& operator/=(const NormMonomial& o);
  NormMonomial pow(const Rat& e) const;

  // Pairwise coprime bases > 1 with nonzero exponents.
  std::vector<std::pair<BigInt, Rat>> normalized() const;
  bool is_one() const { return normalized().empty(); }
  bool operator==(const NormMonomial& o) const;
  std::string str() const;

 private:
  std::vector<std::pair<BigInt, Rat>> terms_;
};

inline NormMonomial operator*(NormMonomial a, const NormMonomial& b) { return a *= b; }
inline NormMonomial operator/(NormMonomial a, const NormMonomial& b) { return a /= b; }

}  // namespace lfq
