#pragma once
// Bivariate Laurent polynomials in (L, M) with rational coefficients.

#include "lfq/exact.hpp"

#include <map>
#include <string>
#include <utility>

namespace lfq {

class Laurent2 {
 public:
  using Exponent = std::pair<int, int>;

  Laurent2() = default;
  static Laurent2 constant(const Rat& c) { return monomial(c, 0, 0); }
  static Laurent2 monomial(const Rat& c, int i, int j);
  static Laurent2 L() { return monomial(1, 1, 0); }
  static Laurent2 M() { return monomial(1, 0, 1); }

  Laurent2& operator+=(const Laurent2& o);
  Laurent2& operator-=(const Laurent2& o);
  Laurent2& operator*=(const Laurent2& o);
  Laurent2& operator*=(const Rat& c);

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Laurent2& o) const { return terms_ == o.terms_; }
  const std::map<Exponent, Rat>& terms() const { return terms_; }
  Rat evaluate(const Rat& l, const Rat& m) const;
  std::string str() const;

 private:
  void add_term(const Exponent& e, const Rat& c);
  std::map<Exponent, Rat> terms_;
};

inline Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
inline Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }
inline Laurent2 operator*(Laurent2 a, const Laurent2& b) { return a *= b; }
inline Laurent2 operator*(const Rat& c, Laurent2 a) { return a *= c; }

}  // namespace lfq
