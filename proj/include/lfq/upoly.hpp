#pragma once
// Dense univariate polynomials over Q.

#include "lfq/exact.hpp"

#include <string>
#include <vector>

namespace lfq {

class UPoly {
 public:
  UPoly() = default;
  // Coefficients in ascending degree order.
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly monomial(const Rat& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rat& operator[](int k) const { return c_[k]; }
  const Rat& leading() const { return c_.back(); }

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rat& k);
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  UPoly derivative() const;
  Rat evaluate(const Rat& x) const;
  double evaluate(double x) const;
  std::string str(const std::string& var = "x") const;

  // Quotient and remainder of *this by d.
  void divmod(const UPoly& d, UPoly& q, UPoly& r) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

inline UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
inline UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
inline UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
inline UPoly operator*(const Rat& k, UPoly a) { return a *= k; }

UPoly monic_gcd(UPoly a, UPoly b);
// a / gcd(a, a'), made monic.
UPoly square_free_part(const UPoly& a);

// Discriminant of a z^3 + b z^2 + c z + d with polynomial coefficients.
UPoly cubic_discriminant(const UPoly& a, const UPoly& b, const UPoly& c, const UPoly& d);

// Distinct real roots by Sturm isolation and exact bisection, to absolute width tol.
std::vector<double> real_roots(const UPoly& p, double tol = 1e-13);
int sturm_count(const std::vector<UPoly>& chain, const Rat& lo, const Rat& hi);
std::vector<UPoly> sturm_chain(const UPoly& p);

}  // namespace lfq
