#pragma once
// Symbolic angles in C = R x F^x over a basis of free angle symbols.
//
// An expression sum_k coeff_k s_k + varpi * (1,-1) has dot part sum coeff_k s_k-dot + varpi
// and ddot part prod s_k-ddot^coeff_k * (-1)^varpi.

#include "lfq/exact.hpp"
#include "lfq/triangulation.hpp"

#include <string>
#include <vector>

namespace lfq {

struct AngleExpr {
  VecI coeff;  // over the free symbols of the owning family
  std::int64_t varpi = 0;

  AngleExpr() = default;
  explicit AngleExpr(Eigen::Index nfree) : coeff(VecI::Zero(nfree)) {}

  AngleExpr& operator+=(const AngleExpr& o);
  AngleExpr& operator-=(const AngleExpr& o);
  AngleExpr& operator*=(std::int64_t k);
  bool operator==(const AngleExpr& o) const { return coeff == o.coeff && varpi == o.varpi; }
  bool is_zero() const { return coeff.isZero() && varpi == 0; }
};

inline AngleExpr operator+(AngleExpr x, const AngleExpr& y) { return x += y; }
inline AngleExpr operator-(AngleExpr x, const AngleExpr& y) { return x -= y; }
inline AngleExpr operator*(std::int64_t k, AngleExpr x) { return x *= k; }

// Symbol index convention for the a/c basis: a_j -> 2j, c_j -> 2j+1.
std::string symbol_name(int symbol);
int symbol_index(const std::string& name, int num_tets);

struct AngleFamily {
  int num_tets = 0;
  std::vector<int> free_symbols;  // symbol indices, in preference order
  std::vector<AngleExpr> a, b, c;  // per tetrahedron
  AngleExpr lambda, mu;

  const AngleExpr& angle(int tet, Letter l) const;
  AngleExpr evaluate(const LinearAngle& la) const;
  std::string format(const AngleExpr& e) const;
  std::vector<std::string> free_names() const;
};

// Default preference: a_0..a_{N-1}, then c_1..c_{N-1}, then c_0.
std::vector<int> default_free_preference(int num_tets);

// Solves the edge-balancing relations (angles around each edge total 2 varpi) by exact
// elimination; dependent symbols are chosen greedily from the least preferred end.
AngleFamily balance_angles(const Triangulation& t, const std::vector<std::string>& free_order = {});

// Per-edge residual of the balancing relations (all zero for a balanced family).
std::vector<AngleExpr> balancing_residuals(const Triangulation& t, const AngleFamily& f);

// Numerical values of a symbolic family at given free-symbol values.
struct NumericAngle {
  Rat dot;
  Rat ddot;
};
struct NumericFamily {
  std::vector<NumericAngle> a, b, c;
  NumericAngle lambda, mu;
};
NumericAngle evaluate_numeric(const AngleExpr& e, const std::vector<Rat>& dots, const std::vector<Rat>& ddots);
NumericFamily evaluate_numeric(const AngleFamily& f, const std::vector<Rat>& dots, const std::vector<Rat>& ddots);

}  // namespace lfq
