#include "lfq/ident.hpp"

#include "lfq/error.hpp"
#include "lfq/quadrature.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <random>
#include <sstream>

namespace lfq {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();
constexpr std::size_t kMaxCounterexamples = 8;

}  // namespace

std::string convention_name(MinusOneConvention c) {
  switch (c) {
    case MinusOneConvention::exclude: return "exclude";
    case MinusOneConvention::one: return "one";
    case MinusOneConvention::sign: return "sign";
  }
  return "?";
}

// --- finite model ----------------------------------------------------------

FiniteModel::FiniteModel(std::uint32_t p, MinusOneConvention conv) : F_(p), conv_(conv) {
  const std::uint32_t n = F_.order();
  zeta_.resize(n);
  for (std::uint32_t k = 0; k < n; ++k) zeta_[k] = std::polar(1.0, 2 * kPi * k / n);
  tilde_.assign(static_cast<std::size_t>(n) * p, 0.0);
  for (std::uint32_t beta = 0; beta < n; ++beta)
    for (std::uint32_t y = 1; y < p; ++y) {
      CompensatedSum s;
      for (std::uint32_t alpha = 0; alpha < n; ++alpha)
        for (std::uint32_t x = 1; x < p; ++x) s.add(phi(alpha, x) / (character(alpha, y) * character(beta, x)));
      tilde_[beta * p + y] = s.value() / static_cast<double>(n);
    }
}

cplx FiniteModel::character(std::uint32_t alpha, std::uint32_t x) const {
  const std::uint64_t n = F_.order();
  return zeta_[(std::uint64_t{alpha} * F_.log(x)) % n];
}

cplx FiniteModel::phi(std::uint32_t alpha, std::uint32_t x) const {
  const std::uint32_t s = F_.add(1, x);
  if (s != 0) return character(alpha, s);
  switch (conv_) {
    case MinusOneConvention::exclude: return 0.0;
    case MinusOneConvention::one: return 1.0;
    case MinusOneConvention::sign: return std::exp(cplx(0, kPi * (alpha % 2 ? 2 : 0) / 4));
  }
  return 0.0;
}

FinitePentagonReport finite_pentagon_check(std::uint32_t p, MinusOneConvention conv) {
  if (p != 3 && p != 5 && p != 7) throw Error("finite pentagon: p must be 3, 5 or 7, got " + std::to_string(p));
  const FiniteModel M(p, conv);
  const PrimeField& F = M.field();
  const std::uint32_t n = M.n();
  FinitePentagonReport r;
  r.p = p;
  r.convention = conv;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t x = 1; x < p; ++x)
        for (std::uint32_t y = 1; y < p; ++y) {
          const cplx lhs = M.phi_tilde(a, x) * M.phi_tilde(b, y) * M.character(a, y) * M.character(b, x);
          CompensatedSum s;
          for (std::uint32_t c = 0; c < n; ++c)
            for (std::uint32_t z = 1; z < p; ++z) {
              const std::uint32_t zi = F.inv(z);
              s.add(M.phi_tilde((b + n - c) % n, F.mul(y, zi)) * M.phi_tilde(c, z) *
                    M.phi_tilde((a + n - c) % n, F.mul(x, zi)) * M.character(c, z));
            }
          const double res = std::abs(lhs - s.value() / static_cast<double>(n));
          const bool special = F.add(x, y) == 1;
          ++r.tuples;
          r.max_residual = std::max(r.max_residual, res);
          (special ? r.max_residual_special : r.max_residual_generic) =
              std::max(special ? r.max_residual_special : r.max_residual_generic, res);
          if (res > kPentagonTolerance) {
            ++r.failing_tuples;
            if (!special) r.failures_on_special_locus_only = false;
            if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back({a, b, x, y});
          }
        }
  return r;
}

std::size_t inversion_check(std::uint32_t p, std::size_t* checked) {
  const PrimeField F(p);
  const std::uint64_t n = F.order();
  std::size_t fails = 0, count = 0;
  for (std::uint64_t alpha = 0; alpha < n; ++alpha)
    for (std::uint32_t x = 1; x < p; ++x) {
      if (F.add(1, x) == 0) continue;
      // alpha(1 + x) * (-alpha)(1 + 1/x) against alpha(x), as exponents of zeta.
      const std::uint64_t lhs = (alpha * F.log(F.add(1, x)) + (n - alpha) % n * F.log(F.add(1, F.inv(x)))) % n;
      const std::uint64_t rhs = alpha * F.log(x) % n;
      ++count;
      if (lhs != rhs) ++fails;
    }
  if (checked) *checked = count;
  return fails;
}

// --- exact samples ---------------------------------------------------------

ResidueSample residue_support(const Rat& x, const Rat& y) {
  if (x == 0 || y == 0 || x == 1 || y == 1 || x + y == 1)
    throw Error("residue sample on a degenerate locus (x, y in {0, 1} or x + y = 1)");
  ResidueSample s;
  const Rat k = x + y - 1;
  s.a = x * y / k;
  // g = (N - D) / D with N = (y - z)(x - z), D = z(z - 1); N - D = xy - k z is linear.
  auto N = [&](const Rat& z) { return (y - z) * (x - z); };
  auto D = [&](const Rat& z) { return z * (z - 1); };
  s.unique = k != 0 && D(s.a) != 0;
  s.g_at_a = N(s.a) / D(s.a) - 1;
  const Rat dN = 2 * s.a - x - y, dD = 2 * s.a - 1;
  s.g_prime = (dN * D(s.a) - N(s.a) * dD) / (D(s.a) * D(s.a));
  s.a_g_prime = s.a * s.g_prime;
  s.expected = -(k * k) / ((x - 1) * (y - 1));
  s.ok = s.unique && s.g_at_a == 0 && s.a_g_prime == s.expected &&
         s.g_prime == -(k * k * k) / (x * y * (x - 1) * (y - 1));
  return s;
}

AngleSample third_angle(const AngleSample& a, const AngleSample& c) {
  if (a.ddot == 0 || c.ddot == 0) throw Error("angle ddot parts must be nonzero");
  return {1 - a.dot - c.dot, Rat(-1) / (a.ddot * c.ddot)};
}

namespace {

AngleSample add(const AngleSample& u, const AngleSample& v) { return {u.dot + v.dot, u.ddot * v.ddot}; }

NormMonomial nm(const Rat& base, const Rat& e = 1) { return NormMonomial(base, e); }

void require_nonzero(std::initializer_list<Rat> values) {
  for (const Rat& v : values)
    if (v == 0) throw Error("degenerate sample");
}

void expect(SampleResult& r, bool ok, const char* name) {
  if (!ok) r.failed.emplace_back(name);
}

}  // namespace

SampleResult angled_pentagon_sample(const std::array<AngleSample, 5>& free, const Rat& x, const Rat& y) {
  const auto& [a0, a2, a4, c0, c4] = free;
  const AngleSample a1 = add(a0, a2), a3 = add(a2, a4), c1 = add(c0, a4), c3 = add(a0, c4), c2 = add(c1, c3);
  const AngleSample b0 = third_angle(a0, c0), b2 = third_angle(a2, c2), b4 = third_angle(a4, c4);
  require_nonzero({x, y});
  const Rat zp = a0.ddot * x + a4.ddot * y + x * y / (c0.ddot * b2.ddot * c4.ddot);
  const Rat u0 = zp - a0.ddot * x, u4 = zp - a4.ddot * y, v1 = 1 - a1.ddot * x, v3 = 1 - a3.ddot * y;
  const Rat v2 = 1 - a2.ddot * zp;
  require_nonzero({zp, u0, u4, v1, v3, v2});

  SampleResult r;
  expect(r, b0.ddot * c2.ddot * b4.ddot == 1, "b0 c2 b4 ddot product");
  expect(r, b0.dot + c2.dot + b4.dot == 2, "b0 + c2 + b4 dot sum");
  const Rat k = c0.ddot * c4.ddot;
  expect(r, k * u0 * u4 == c2.ddot * v2 * x * y, "z' on the delta support");
  // k (z - a0 x)(z - a4 y) - c2 (1 - a2 z) x y == k z (z - z') as polynomials in z.
  expect(r, -k * (a0.ddot * x + a4.ddot * y) + c2.ddot * a2.ddot * x * y == -k * zp &&
                k * a0.ddot * a4.ddot * x * y - c2.ddot * x * y == 0,
         "support polynomial has roots {0, z'}");
  expect(r, v2 == v1 * v3, "1 - a2 z' factorization");
  expect(r, (y / c0.ddot) / u0 == (1 / c1.ddot) / v1, "alpha argument");
  expect(r, (x / c4.ddot) / u4 == (1 / c3.ddot) / v3, "beta argument");
  const NormMonomial lhs = nm(a0.ddot * x, c0.dot) * nm(x) / nm(u0, 1 - a0.dot) * nm(a4.ddot * y, c4.dot) * nm(y) /
                           nm(u4, 1 - a4.dot) * nm(zp, b0.dot + c2.dot + b4.dot - 2) * nm(a2.ddot, c2.dot) *
                           nm(c2.ddot) / nm(v2, -a2.dot) / nm(k);
  const NormMonomial rhs =
      nm(a1.ddot * x, c1.dot) / nm(v1, 1 - a1.dot) * nm(a3.ddot * y, c3.dot) / nm(v3, 1 - a3.dot);
  expect(r, lhs == rhs, "norm prefactor equals Psi_1 Psi_3");
  return r;
}

SampleResult weil_symmetry_sample(const AngleSample& a, const AngleSample& c, const Rat& x, const Rat& y,
                                  const Rat& z) {
  require_nonzero({x, y, z});
  if (x * y * z != 1) throw Error("precondition violation: xyz != 1");
  const AngleSample b = third_angle(a, c);
  auto arg1 = [&](const Rat& zz) { return zz * c.ddot + 1 / (x * a.ddot) - 1; };
  auto arg2 = [&](const Rat& yy) { return x * a.ddot + 1 / (yy * b.ddot) - 1; };
  auto arg3 = [&](const Rat& yy, const Rat& zz) { return yy * b.ddot + 1 / (zz * c.ddot) - 1; };
  if (arg1(z) != 0) throw Error("off-support sample: z c + 1/(x a) != 1");

  SampleResult r;
  expect(r, arg2(y) == 0, "support of g_{b,a}(y, x)");
  expect(r, arg3(y, z) == 0, "support of g_{c,b}(z, y)");
  const Rat z2 = z + 1;
  if (z2 != 0) {
    const Rat y2 = 1 / (x * z2);
    expect(r, arg2(y2) == -x * a.ddot * arg1(z2) && arg3(y2, z2) == -arg1(z2) / (z2 * c.ddot),
           "delta arguments are proportional");
  }
  // Prefactors times the Jacobians that convert each delta to delta(arg1).
  const NormMonomial p1 = nm(z * c.ddot, a.dot) / nm(x * a.ddot, c.dot);
  const NormMonomial p2 = nm(x * a.ddot, b.dot) / nm(y * b.ddot, a.dot) / nm(x * a.ddot);
  const NormMonomial p3 = nm(y * b.ddot, c.dot) / nm(z * c.ddot, b.dot) * nm(z * c.ddot);
  expect(r, p1 == p2, "prefactor g_{a,c} = g_{b,a}");
  expect(r, p1 == p3, "prefactor g_{a,c} = g_{c,b}");
  return r;
}

SampleResult symmetry_sample(const AngleSample& a, const AngleSample& c, const Rat& x) {
  const AngleSample b = third_angle(a, c);
  require_nonzero({x, 1 - a.ddot / x, 1 / c.ddot + a.ddot * x, 1 - x / b.ddot});
  SampleResult r;
  // Psi_{a,c}(-alpha, 1/x) alpha(x) = Psi-bar_{a,b}(alpha, x).
  expect(r, (1 - a.ddot / x) * c.ddot * x == (1 - x / a.ddot) / b.ddot, "symm12 character argument");
  expect(r, nm(a.ddot / x, c.dot) / nm(1 - a.ddot / x, 1 - a.dot) == nm(x / a.ddot, b.dot) / nm(1 - x / a.ddot, 1 - a.dot),
         "symm12 norm part");
  // The delta in the second relation fixes y = y' = x / (1/c + a x).
  const Rat yp = x / (1 / c.ddot + a.ddot * x);
  const Rat w = 1 - a.ddot * yp;
  require_nonzero({yp, w});
  expect(r, (yp / (c.ddot * x)) / w == 1, "symm23 support");
  expect(r, x / yp == (1 - x / b.ddot) / c.ddot, "symm23 character argument");
  const NormMonomial target = nm(x / b.ddot, c.dot) / nm(1 - x / b.ddot, 1 - b.dot);
  const NormMonomial with_jacobian = nm(a.ddot * yp, c.dot - 1) * nm(a.ddot) / nm(w, 1 - a.dot) * nm(c.ddot * x * w * w);
  expect(r, with_jacobian == target, "symm23 norm after the delta integration");
  expect(r, nm(a.ddot * yp, c.dot) * nm(w, a.dot) == target, "symm23 norm chain");
  return r;
}

// --- seeded suites ---------------------------------------------------------

namespace {

class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Rat nonzero(int range = 24) {
    std::uniform_int_distribution<int> num(-range, range - 1), den(1, range);
    int n = num(rng_);
    if (n >= 0) ++n;
    return Rat(n) / Rat(den(rng_));
  }
  Rat dot() {
    std::uniform_int_distribution<int> num(-12, 12), den(1, 12);
    return Rat(num(rng_)) / Rat(den(rng_));
  }
  AngleSample angle() { return {dot(), nonzero()}; }

 private:
  std::mt19937_64 rng_;
};

constexpr std::size_t kMaxRejections = 1000000;

template <class Draw>
SuiteReport run_suite(const std::string& name, std::size_t samples, Draw draw) {
  SuiteReport rep;
  rep.suite = name;
  while (rep.samples < samples) {
    if (rep.rejected > kMaxRejections) throw ComputeError(name + ": too many degenerate draws");
    std::string where;
    SampleResult r;
    try {
      r = draw(where);
    } catch (const Error&) {
      ++rep.rejected;
      continue;
    }
    ++rep.samples;
    if (r.failed.empty()) {
      ++rep.passed;
      continue;
    }
    for (const auto& f : r.failed) ++rep.check_failures[f];
    if (rep.counterexamples.size() < kMaxCounterexamples) rep.counterexamples.push_back(where + ": " + r.failed.front());
  }
  return rep;
}

std::string show(const AngleSample& s) { return "(" + to_string(s.dot) + ", " + to_string(s.ddot) + ")"; }

}  // namespace

SuiteReport residue_support_check(std::size_t samples, std::uint64_t seed) {
  RationalSampler rs(seed);
  return run_suite("residue", samples, [&](std::string& where) {
    const Rat x = rs.nonzero(), y = rs.nonzero();
    where = "x=" + to_string(x) + " y=" + to_string(y);
    SampleResult r;
    expect(r, residue_support(x, y).ok, "a g'(a) identity");
    return r;
  });
}

SuiteReport angled_pentagon_support_check(std::size_t samples, std::uint64_t seed) {
  RationalSampler rs(seed);
  return run_suite("angled", samples, [&](std::string& where) {
    std::array<AngleSample, 5> f;
    for (auto& s : f) s = rs.angle();
    const Rat x = rs.nonzero(), y = rs.nonzero();
    where = "a0=" + show(f[0]) + " a2=" + show(f[1]) + " a4=" + show(f[2]) + " c0=" + show(f[3]) + " c4=" + show(f[4]) +
            " x=" + to_string(x) + " y=" + to_string(y);
    return angled_pentagon_sample(f, x, y);
  });
}

SuiteReport weil_symmetry_check(std::size_t samples, std::uint64_t seed) {
  RationalSampler rs(seed);
  return run_suite("weil", samples, [&](std::string& where) {
    const AngleSample a = rs.angle(), c = rs.angle();
    const Rat x = rs.nonzero();
    if (x * a.ddot == 1) throw Error("degenerate sample");
    const Rat z = (1 - 1 / (x * a.ddot)) / c.ddot;
    if (z == 0) throw Error("degenerate sample");
    const Rat y = 1 / (x * z);
    where = "a=" + show(a) + " c=" + show(c) + " x=" + to_string(x);
    return weil_symmetry_sample(a, c, x, y, z);
  });
}

SuiteReport symm23_check(std::size_t samples, std::uint64_t seed) {
  RationalSampler rs(seed);
  return run_suite("symm", samples, [&](std::string& where) {
    const AngleSample a = rs.angle(), c = rs.angle();
    const Rat x = rs.nonzero();
    where = "a=" + show(a) + " c=" + show(c) + " x=" + to_string(x);
    return symmetry_sample(a, c, x);
  });
}

SuiteReport inversion_suite(const std::vector<std::uint32_t>& primes) {
  SuiteReport rep;
  rep.suite = "inversion";
  for (std::uint32_t p : primes) {
    std::size_t checked = 0;
    const std::size_t fails = inversion_check(p, &checked);
    rep.samples += checked;
    rep.passed += checked - fails;
    if (fails) {
      rep.check_failures["inversion relation"] += fails;
      if (rep.counterexamples.size() < kMaxCounterexamples) rep.counterexamples.push_back("p=" + std::to_string(p));
    }
  }
  return rep;
}

}  // namespace lfq
