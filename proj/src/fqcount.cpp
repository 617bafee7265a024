#include "lfq/fqcount.hpp"

#include "lfq/error.hpp"
#include "lfq/laurent.hpp"
#include "lfq/triangulation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

namespace lfq {

namespace {

// log of sigma_i eps^{m_i}: the sign enters as g^{(p-1)/2} = -1.
std::vector<std::int64_t> base_logs(const GluingSystem& g, const PrimeField& F, std::uint32_t eps) {
  if (eps == 0 || eps >= F.p()) throw Error("eps must be a nonzero residue mod p");
  std::vector<std::int64_t> out(g.r);
  for (int i = 0; i < g.r; ++i)
    out[i] = g.m(i) * static_cast<std::int64_t>(F.log(eps)) + (g.sigma[i] < 0 ? F.order() / 2 : 0);
  return out;
}

std::uint32_t det_mod_p(std::vector<std::vector<std::uint32_t>> a, const PrimeField& F) {
  const std::size_t n = a.size();
  std::uint32_t det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = F.neg(det);
    }
    det = F.mul(det, a[col][col]);
    const std::uint32_t inv = F.inv(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const std::uint32_t f = F.mul(a[r][col], inv);
      for (std::size_t c = col; c < n; ++c) a[r][c] = F.sub(a[r][c], F.mul(f, a[col][c]));
    }
  }
  return det;
}

PointRecord make_record(const GluingSystem& g, const PrimeField& F, std::uint32_t eps, std::vector<std::uint32_t> coords) {
  PointRecord rec;
  rec.eps = eps;
  rec.coords = std::move(coords);
  rec.jacobian = jacobian(g, F, eps, rec.coords);
  rec.degenerate = rec.jacobian == 0;
  return rec;
}

// Depth-first search assigning one variable per level. Equations with a single unknown are
// solved in closed form (monomial roots by discrete log, quadratics by Tonelli-Shanks);
// otherwise the search branches over F_p^x on the most constrained variable.
class Propagator {
 public:
  Propagator(const GluingSystem& g, const PrimeField& F, std::uint32_t eps)
      : g_(g), F_(F), base_(base_logs(g, F, eps)), val_(g.r, 0), lg_(g.r, 0), set_(g.r, false) {}

  std::vector<std::vector<std::uint32_t>> run() {
    search();
    return std::move(out_);
  }

 private:
  std::int64_t partial_log(int i, int skip) const {
    std::int64_t s = base_[i];
    for (int j = 0; j < g_.r; ++j)
      if (j != skip && set_[j] && g_.N(i, j) != 0) s += g_.N(i, j) * lg_[j];
    return s;
  }

  void assign(int k, std::uint32_t x) {
    val_[k] = x;
    lg_[k] = F_.log(x);
    set_[k] = true;
  }

  void try_values(int k, const std::vector<std::uint32_t>& xs) {
    for (std::uint32_t x : xs) {
      if (x == 0) continue;
      assign(k, x);
      search();
    }
    set_[k] = false;
  }

  void search() {
    const int r = g_.r;
    const std::uint32_t full = F_.order();
    int best_eq = -1, best_var = -1, scan_var = -1;
    std::uint32_t best_cost = std::numeric_limits<std::uint32_t>::max();
    std::vector<int> freq(r, 0);
    bool complete = true;
    for (int i = 0; i < r; ++i) {
      int unknown = -1, count = 0;
      for (int j = 0; j < r; ++j) {
        if (set_[j] || (j != i && g_.N(i, j) == 0)) continue;
        unknown = j;
        ++count;
        ++freq[j];
      }
      if (count == 0) {
        if (F_.sub(1, val_[i]) != F_.exp(partial_log(i, -1))) return;
        continue;
      }
      complete = false;
      if (count != 1) continue;
      std::uint32_t cost = full;
      if (unknown != i) {
        std::int64_t n = g_.N(i, unknown) % static_cast<std::int64_t>(full);
        if (n < 0) n += full;
        cost = static_cast<std::uint32_t>(std::gcd(n, static_cast<std::int64_t>(full)));
      } else {
        const auto n = g_.N(i, i);
        if (n == 0 || n == 1 || n == -1 || n == 2) cost = 2;
      }
      if (cost < full && cost < best_cost) {
        best_cost = cost;
        best_eq = i;
        best_var = unknown;
      } else if (cost >= full && scan_var < 0) {
        scan_var = unknown;
      }
    }
    if (complete) {
      out_.push_back(val_);
      return;
    }
    if (best_eq >= 0) {
      try_values(best_var, solve(best_eq, best_var));
      return;
    }
    int k = scan_var;
    if (k < 0) k = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
    for (std::uint32_t x = 1; x < F_.p(); ++x) {
      assign(k, x);
      search();
    }
    set_[k] = false;
  }

  std::vector<std::uint32_t> solve(int i, int k) const {
    const std::uint32_t C = F_.exp(partial_log(i, k));
    if (k != i) {
      const std::uint32_t lhs = F_.sub(1, val_[i]);
      if (lhs == 0) return {};
      return F_.monomial_roots(g_.N(i, k), F_.mul(lhs, F_.inv(C)));
    }
    const std::uint32_t minus1 = F_.p() - 1;
    switch (g_.N(i, i)) {
      case 0: return {F_.sub(1, C)};
      case 1: {
        const std::uint32_t d = F_.add(1, C);
        if (d == 0) return {};
        return {F_.inv(d)};
      }
      case -1: return F_.quadratic_roots(1, minus1, C);
      case 2: return F_.quadratic_roots(C, 1, minus1);
      default: throw ComputeError("unexpected univariate case");
    }
  }

  const GluingSystem& g_;
  const PrimeField& F_;
  std::vector<std::int64_t> base_;
  std::vector<std::uint32_t> val_;
  std::vector<std::int64_t> lg_;
  std::vector<bool> set_;
  std::vector<std::vector<std::uint32_t>> out_;
};

void check_system(const GluingSystem& g) {
  if (g.r <= 0 || g.N.rows() != g.r || g.N.cols() != g.r || g.m.size() != g.r ||
      static_cast<int>(g.sigma.size()) != g.r)
    throw Error("malformed gluing system");
}

std::vector<std::uint32_t> eps_range(const PrimeField& F, std::uint32_t eps) {
  std::vector<std::uint32_t> out;
  if (eps != 0) {
    if (eps >= F.p()) throw Error("eps must be a nonzero residue mod p");
    out.push_back(eps);
    return out;
  }
  for (std::uint32_t e = 1; e < F.p(); ++e) out.push_back(e);
  return out;
}

// Points per eps, computed by contiguous worker blocks and merged in eps order.
std::vector<std::vector<PointRecord>> points_by_eps(const GluingSystem& g, const PrimeField& F,
                                                    const std::vector<std::uint32_t>& eps, CountMethod method,
                                                    int threads) {
  std::vector<std::vector<PointRecord>> out(eps.size());
  const std::size_t workers = std::clamp<std::size_t>(threads < 1 ? 1 : threads, 1, eps.size());
  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) out[k] = find_points(g, F, eps[k], method);
  };
  if (workers == 1) {
    run(0, eps.size());
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (eps.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk, hi = std::min(eps.size(), lo + chunk);
    if (lo < hi) pool.emplace_back(run, lo, hi);
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace

bool satisfies(const GluingSystem& g, const PrimeField& F, std::uint32_t eps, const std::vector<std::uint32_t>& coords) {
  check_system(g);
  if (static_cast<int>(coords.size()) != g.r) throw Error("point has the wrong number of coordinates");
  const auto base = base_logs(g, F, eps);
  for (std::uint32_t x : coords)
    if (x == 0 || x >= F.p()) return false;
  for (int i = 0; i < g.r; ++i) {
    std::int64_t s = base[i];
    for (int j = 0; j < g.r; ++j) s += g.N(i, j) * static_cast<std::int64_t>(F.log(coords[j]));
    if (F.sub(1, coords[i]) != F.exp(s)) return false;
  }
  return true;
}

std::uint32_t jacobian(const GluingSystem& g, const PrimeField& F, std::uint32_t eps, const std::vector<std::uint32_t>& coords) {
  (void)eps;
  std::vector<std::vector<std::uint32_t>> J(g.r, std::vector<std::uint32_t>(g.r, 0));
  for (int i = 0; i < g.r; ++i) {
    const std::uint32_t rhs = F.sub(1, coords[i]);
    for (int j = 0; j < g.r; ++j) {
      const std::uint32_t term = F.mul(F.mul(F.from_int(g.N(i, j)), rhs), F.inv(coords[j]));
      J[i][j] = F.neg(term);
      if (i == j) J[i][j] = F.sub(J[i][j], 1);
    }
  }
  return det_mod_p(std::move(J), F);
}

std::vector<PointRecord> brute_force_points(const GluingSystem& g, const PrimeField& F, std::uint32_t eps) {
  check_system(g);
  const std::uint32_t n = F.order();
  if (std::pow(static_cast<double>(n), g.r) > kBruteForceBudget)
    throw Error("brute-force scan of (F_" + std::to_string(F.p()) + "^x)^" + std::to_string(g.r) +
                " exceeds the budget of 1e9 tuples");
  const auto base = base_logs(g, F, eps);
  std::vector<std::uint32_t> t(g.r, 0), x(g.r, 1);
  std::vector<PointRecord> out;
  while (true) {
    bool ok = true;
    for (int i = 0; i < g.r && ok; ++i) {
      std::int64_t s = base[i];
      for (int j = 0; j < g.r; ++j) s += g.N(i, j) * static_cast<std::int64_t>(t[j]);
      ok = F.sub(1, x[i]) == F.exp(s);
    }
    if (ok) out.push_back(make_record(g, F, eps, x));
    int j = g.r - 1;
    while (j >= 0 && t[j] + 1 == n) {
      t[j] = 0;
      x[j] = 1;
      --j;
    }
    if (j < 0) break;
    ++t[j];
    x[j] = F.exp(t[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointRecord> enumerate_points(const GluingSystem& g, const PrimeField& F, std::uint32_t eps) {
  check_system(g);
  std::vector<PointRecord> out;
  for (auto& c : Propagator(g, F, eps).run()) out.push_back(make_record(g, F, eps, std::move(c)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointRecord> find_points(const GluingSystem& g, const PrimeField& F, std::uint32_t eps, CountMethod method) {
  return method == CountMethod::brute_force ? brute_force_points(g, F, eps) : enumerate_points(g, F, eps);
}

bool CountReport::same_payload(const CountReport& o) const {
  return p == o.p && s == o.s && t == o.t && fibers == o.fibers && degenerate_points == o.degenerate_points &&
         invariant == o.invariant && total_points == o.total_points;
}

CountReport invariant_sum(const GluingSystem& g, const PrimeField& F, std::uint32_t eps, const std::string& s,
                          const std::string& t, CountMethod method, int threads) {
  const auto start = std::chrono::steady_clock::now();
  CountReport rep;
  rep.p = F.p();
  rep.s = s;
  rep.t = t;
  const auto range = eps_range(F, eps);
  const auto pts = points_by_eps(g, F, range, method, threads);
  for (std::size_t k = 0; k < range.size(); ++k) {
    FiberCount fc;
    for (const auto& rec : pts[k]) {
      if (rec.degenerate) {
        ++fc.degenerate;
        rep.degenerate_points.push_back(rec);
      } else {
        ++fc.nondegenerate;
      }
    }
    rep.fibers[range[k]] = fc;
    rep.invariant += fc.nondegenerate;
    rep.total_points += fc.total();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

FiberHistogram fiber_histogram(const GluingSystem& g, const PrimeField& F, CountMethod method, int threads) {
  const auto rep = invariant_sum(g, F, 0, "s", "t", method, threads);
  FiberHistogram h;
  h.p = F.p();
  h.fibers = rep.fibers;
  for (const auto& [e, fc] : h.fibers) {
    h.max_nondegenerate = std::max(h.max_nondegenerate, fc.nondegenerate);
    h.max_total = std::max(h.max_total, fc.total());
  }
  return h;
}

MirrorCheck mirror_check(const GluingSystem& g31, const PrimeField& F) {
  if (g31.r != 2) throw Error("mirror check needs a two-variable system");
  MirrorCheck mc;
  mc.p = F.p();
  std::map<std::uint32_t, std::size_t> sizes;
  for (std::uint32_t e = 1; e < F.p(); ++e) {
    const auto pts = enumerate_points(g31, F, e);
    sizes[e] = pts.size();
    for (const auto& rec : pts) {
      ++mc.points;
      if (!satisfies(g31, F, F.inv(e), {rec.coords[1], rec.coords[0]})) ++mc.failures;
    }
  }
  for (const auto& [e, n] : sizes) {
    const auto it = sizes.find(F.inv(e));
    if (it == sizes.end() || it->second != n) mc.fibers_symmetric = false;
  }
  return mc;
}

MirrorCheck mirror_check_31(std::uint32_t p) { return mirror_check(derive(*builtin("3_1")), PrimeField(p)); }

std::uint32_t apoly_41(const PrimeField& F, std::uint32_t L, std::uint32_t M) {
  const std::uint32_t Li = F.inv(L), Mi = F.inv(M), d = F.sub(M, Mi);
  return F.sub(F.add(F.add(L, Li), F.mul(d, d)), F.add(M, Mi));
}

bool edge_pair_has_common_root(const PrimeField& F, std::uint32_t L, std::uint32_t M) {
  const std::uint32_t LM = F.mul(L, M);
  for (std::uint32_t x = 0; x < F.p(); ++x) {
    const std::uint32_t p1 = F.sub(F.sub(x, L), F.mul(x, x));
    // (x - (x - L)/(L M) - M) * L M
    const std::uint32_t p2 = F.sub(F.sub(F.mul(LM, x), F.sub(x, L)), F.mul(LM, M));
    if (p1 == 0 && p2 == 0) return true;
  }
  return false;
}

ApolyCheck edge_apoly_check_41(std::uint32_t p) {
  const PrimeField F(p);
  ApolyCheck out;
  out.p = p;

  // Eliminating x = L (M^2 - 1)/(L M - 1) from the first equation, cleared by (L M - 1)^2 / L.
  const Laurent2 L = Laurent2::L(), M = Laurent2::M(), one = Laurent2::constant(1);
  const Laurent2 u = M * M - one, w = L * M - one;
  const Laurent2 eliminant = u * w - w * w - L * u * u;
  const Laurent2 Li = Laurent2::monomial(1, -1, 0), Mi = Laurent2::monomial(1, 0, -1);
  const Laurent2 A = L + Li + (M - Mi) * (M - Mi) - M - Mi;
  out.identity = eliminant == Laurent2::constant(-1) * A * L * M * M;

  for (std::uint32_t l = 1; l < p; ++l) {
    for (std::uint32_t m = 1; m < p; ++m) {
      if (F.mul(l, m) == 1) {
        out.skipped.emplace_back(l, m);
        continue;
      }
      ++out.pairs;
      const bool on_curve = apoly_41(F, l, m) == 0;
      if (on_curve) ++out.on_curve;
      if (edge_pair_has_common_root(F, l, m) != on_curve) ++out.mismatches;
    }
  }
  return out;
}

}  // namespace lfq
