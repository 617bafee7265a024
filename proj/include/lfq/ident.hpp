#pragma once
// Identity checks: the pentagon in a finite cyclic model of the character group, and exact
// rational checks of the delta-support algebra behind the pentagon, symmetry and Weil lemmas.

#include "lfq/exact.hpp"
#include "lfq/field.hpp"
#include "lfq/gamma.hpp"
#include "lfq/norm_monomial.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lfq {

// Value assigned to phi(alpha, -1), where 1 + x is not a unit.
enum class MinusOneConvention {
  exclude,  // the term is dropped (value 0)
  one,      // value 1 for every alpha
  sign,     // value exp(i pi (1 - (-1)^alpha) / 4)
};
std::string convention_name(MinusOneConvention c);

// Characters alpha in Z/(p-1) act on F_p^x through the discrete log:
// alpha(x) = zeta^{alpha log x}, zeta = exp(2 pi i / (p - 1)).
class FiniteModel {
 public:
  FiniteModel(std::uint32_t p, MinusOneConvention conv = MinusOneConvention::exclude);

  std::uint32_t p() const { return F_.p(); }
  std::uint32_t n() const { return F_.order(); }
  const PrimeField& field() const { return F_; }

  cplx character(std::uint32_t alpha, std::uint32_t x) const;
  // phi(alpha, x) = alpha(1 + x).
  cplx phi(std::uint32_t alpha, std::uint32_t x) const;
  // Fourier transform (1/n) sum_{alpha, x} phi(alpha, x) / (alpha(y) beta(x)).
  cplx phi_tilde(std::uint32_t beta, std::uint32_t y) const { return tilde_[beta * p() + y]; }

 private:
  PrimeField F_;
  MinusOneConvention conv_;
  std::vector<cplx> zeta_;
  std::vector<cplx> tilde_;
};

struct FinitePentagonReport {
  std::uint32_t p = 0;
  MinusOneConvention convention = MinusOneConvention::exclude;
  std::size_t tuples = 0;           // (alpha, beta, x, y)
  std::size_t failing_tuples = 0;   // residual above 1e-9
  double max_residual = 0;          // over all tuples
  double max_residual_generic = 0;  // over x + y != 1
  double max_residual_special = 0;  // over x + y == 1
  bool failures_on_special_locus_only = true;
  std::vector<std::array<std::uint32_t, 4>> counterexamples;  // first few failing tuples
};

inline constexpr double kPentagonTolerance = 1e-9;

// phi~(a,x) phi~(b,y) a(y) b(x) = (1/n) sum_{c,z} phi~(b-c, y/z) phi~(c,z) phi~(a-c, x/z) c(z),
// exhaustively over all tuples; p must be 3, 5 or 7.
FinitePentagonReport finite_pentagon_check(std::uint32_t p, MinusOneConvention conv = MinusOneConvention::exclude);

// phi(alpha, x) phi(-alpha, 1/x) = alpha(x) for all alpha and x != -1, compared on exponents
// of zeta (exact). Returns the number of failing pairs; `checked` receives the pair count.
std::size_t inversion_check(std::uint32_t p, std::size_t* checked = nullptr);

// --- exact rational suites -------------------------------------------------

struct SuiteReport {
  std::string suite;
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::size_t rejected = 0;  // degenerate draws that were redrawn
  std::map<std::string, std::size_t> check_failures;
  std::vector<std::string> counterexamples;

  bool ok() const { return samples > 0 && passed == samples && counterexamples.empty(); }
};

// Residue lemma at one sample: a = xy/(x+y-1) is the only zero of
// g(z) = (y-z)(x/z-1)/(z-1) - 1, and a g'(a) = -(x+y-1)^2 / ((x-1)(y-1)).
struct ResidueSample {
  Rat a, g_at_a, g_prime, a_g_prime, expected;
  bool unique = false;
  bool ok = false;
};
// Throws Error on x, y in {0, 1} or x + y = 1.
ResidueSample residue_support(const Rat& x, const Rat& y);

struct AngleSample {
  Rat dot, ddot;
};
// a + b + c = varpi: b-dot = 1 - a-dot - c-dot, b-ddot = -1 / (a-ddot c-ddot).
AngleSample third_angle(const AngleSample& a, const AngleSample& c);

// Named exact checks for one sample; empty vector of failures means pass.
struct SampleResult {
  std::vector<std::string> failed;
};

// Angled pentagon with a_3=a_2+a_4, c_3=a_0+c_4, c_1=c_0+a_4, a_1=a_0+a_2, c_2=c_1+c_3.
// Free data: a_0, a_2, a_4, c_0, c_4 and x, y.
SampleResult angled_pentagon_sample(const std::array<AngleSample, 5>& free, const Rat& x, const Rat& y);

// Weil transform symmetry at x, z with y = 1/(xz), on the support z c + 1/(x a) = 1.
SampleResult weil_symmetry_sample(const AngleSample& a, const AngleSample& c, const Rat& x, const Rat& y, const Rat& z);

// Both symmetry relations of Psi_{a,c} at x.
SampleResult symmetry_sample(const AngleSample& a, const AngleSample& c, const Rat& x);

SuiteReport residue_support_check(std::size_t samples, std::uint64_t seed);
SuiteReport angled_pentagon_support_check(std::size_t samples, std::uint64_t seed);
SuiteReport weil_symmetry_check(std::size_t samples, std::uint64_t seed);
SuiteReport symm23_check(std::size_t samples, std::uint64_t seed);
// Inversion relation over the finite models for the given primes.
SuiteReport inversion_suite(const std::vector<std::uint32_t>& primes);

}  // namespace lfq
