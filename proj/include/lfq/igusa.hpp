#pragma once
// Integer polynomials, counts of their zeros mod p^n, and the p-adic integral
// I(s) = int_{Z_p} |x|^{s-1} dx = (1 - 1/p) / (1 - p^{-s}).

#include "lfq/exact.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lfq {

class IntPoly {
 public:
  // Parses sums/products/powers of integer constants and identifiers, e.g. "x*(x-1)", "x^2 - 3*y".
  static IntPoly parse(const std::string& text);

  const std::vector<std::string>& variables() const { return vars_; }
  std::uint64_t eval_mod(const std::vector<std::uint64_t>& x, std::uint64_t modulus) const;
  std::string str() const;

  using Monomial = std::vector<int>;
  const std::map<Monomial, BigInt>& terms() const { return terms_; }

 private:
  friend class IntPolyParser;
  std::vector<std::string> vars_;
  std::map<Monomial, BigInt> terms_;
};

inline constexpr int kMaxIgusaN = 6;
inline constexpr double kCountBudget = 1e8;

// Number of x in (Z/p^n)^k with g(x) = 0 mod p^n, by digit-by-digit lifting.
std::uint64_t count_mod_pn(const IntPoly& g, std::uint32_t p, int n);
// The same count by scanning every residue tuple.
std::uint64_t count_mod_pn_scan(const IntPoly& g, std::uint32_t p, int n);

// sum_{k<n} (1 - 1/p) p^{-k s} for integer s >= 1, exact.
Rat igusa_partial(std::uint32_t p, int s, int n);
// Closed form of the same partial sum: (1 - 1/p)(1 - p^{-n s}) / (1 - p^{-s}).
Rat igusa_partial_closed(std::uint32_t p, int s, int n);
// Limit (1 - 1/p) / (1 - p^{-s}).
Rat igusa_limit(std::uint32_t p, int s);
// Partial sum assembled from valuation shells counted with count_mod_pn on g(x) = x.
Rat igusa_shell_sum(std::uint32_t p, int s, int n);

double igusa_partial_numeric(std::uint32_t p, double s, int n);
double igusa_limit_numeric(std::uint32_t p, double s);
// Bound on the omitted tail sum_{k>=n}.
double igusa_tail_bound(std::uint32_t p, double s, int n);

struct IgusaRow {
  std::uint32_t p = 0;
  std::string s;
  int n = 0;
  std::string partial, closed, limit;  // exact rationals for integer s
  double partial_value = 0, limit_value = 0, tail_bound = 0;
  bool exact = false;
  bool agree = false;
};

// Comparison rows for each s sample (integer samples exact, others numeric).
std::vector<IgusaRow> igusa_I(std::uint32_t p, const std::vector<std::string>& s_samples, int n);

}  // namespace lfq
