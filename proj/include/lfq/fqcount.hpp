#pragma once
// Solutions of gluing systems over F_p: brute-force oracle, propagation solver,
// Jacobians, fiber histograms and the residue-level invariant.

#include "lfq/field.hpp"
#include "lfq/gluing.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lfq {

struct PointRecord {
  std::uint32_t eps = 0;
  std::vector<std::uint32_t> coords;
  std::uint32_t jacobian = 0;
  bool degenerate = false;

  bool operator==(const PointRecord& o) const { return eps == o.eps && coords == o.coords; }
  bool operator<(const PointRecord& o) const { return eps != o.eps ? eps < o.eps : coords < o.coords; }
};

enum class CountMethod { propagate, brute_force };

// Largest p^r accepted by the exhaustive scan.
inline constexpr double kBruteForceBudget = 1e9;

// True when all r equations hold at (eps, coords); coords must be units.
bool satisfies(const GluingSystem& g, const PrimeField& F, std::uint32_t eps, const std::vector<std::uint32_t>& coords);

// det of d f_i / d x_j with f_i = 1 - x_i - sigma_i eps^{m_i} prod_j x_j^{N_ij}, at a solution.
std::uint32_t jacobian(const GluingSystem& g, const PrimeField& F, std::uint32_t eps, const std::vector<std::uint32_t>& coords);

std::vector<PointRecord> brute_force_points(const GluingSystem& g, const PrimeField& F, std::uint32_t eps);
std::vector<PointRecord> enumerate_points(const GluingSystem& g, const PrimeField& F, std::uint32_t eps);
std::vector<PointRecord> find_points(const GluingSystem& g, const PrimeField& F, std::uint32_t eps, CountMethod method);

struct FiberCount {
  std::size_t nondegenerate = 0;
  std::size_t degenerate = 0;
  std::size_t total() const { return nondegenerate + degenerate; }
  bool operator==(const FiberCount& o) const { return nondegenerate == o.nondegenerate && degenerate == o.degenerate; }
};

struct CountReport {
  std::uint32_t p = 0;
  std::string s, t;  // carried symbolically; every norm is 1 at residue level
  std::map<std::uint32_t, FiberCount> fibers;
  std::vector<PointRecord> degenerate_points;
  std::size_t invariant = 0;  // nondegenerate unit points, each of weight 1
  std::size_t total_points = 0;
  double seconds = 0;

  bool same_payload(const CountReport& o) const;
};

// Single fiber (eps given) or every eps in F_p^x (eps = 0).
CountReport invariant_sum(const GluingSystem& g, const PrimeField& F, std::uint32_t eps, const std::string& s = "s",
                          const std::string& t = "t", CountMethod method = CountMethod::propagate, int threads = 1);

struct FiberHistogram {
  std::uint32_t p = 0;
  std::map<std::uint32_t, FiberCount> fibers;
  std::size_t max_nondegenerate = 0;
  std::size_t max_total = 0;
};

FiberHistogram fiber_histogram(const GluingSystem& g, const PrimeField& F, CountMethod method = CountMethod::propagate,
                               int threads = 1);

struct MirrorCheck {
  std::uint32_t p = 0;
  std::size_t points = 0;
  std::size_t failures = 0;
  bool fibers_symmetric = true;
  bool ok() const { return failures == 0 && fibers_symmetric; }
};

// (x, y, eps) on the trefoil system <=> (y, x, eps^{-1}) on it.
MirrorCheck mirror_check(const GluingSystem& g31, const PrimeField& F);
MirrorCheck mirror_check_31(std::uint32_t p);

struct ApolyCheck {
  std::uint32_t p = 0;
  std::size_t pairs = 0;
  std::size_t on_curve = 0;
  std::size_t mismatches = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> skipped;  // L M = 1
  bool identity = false;  // eliminant equals -A * L M^2 as Laurent polynomials
  bool ok() const { return mismatches == 0 && identity; }
};

// B-edge delta equations x - L - x^2 = 0 and x - (x - L)/(L M) - M = 0 share a root
// exactly on the zero set of A(L, M) = L + 1/L + (M - 1/M)^2 - M - 1/M.
ApolyCheck edge_apoly_check_41(std::uint32_t p);
std::uint32_t apoly_41(const PrimeField& F, std::uint32_t L, std::uint32_t M);
bool edge_pair_has_common_root(const PrimeField& F, std::uint32_t L, std::uint32_t M);

}  // namespace lfq
