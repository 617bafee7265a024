#pragma once
// Arithmetic in F_p for odd primes small enough for full discrete-log tables.

#include <cstdint>
#include <optional>
#include <vector>

namespace lfq {

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  static constexpr std::uint32_t kMaxPrime = 1u << 22;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t order() const { return p_ - 1; }  // of the unit group
  std::uint32_t generator() const { return g_; }

  std::uint32_t from_int(std::int64_t v) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + p_ - b) % p_); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_); }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

  // Discrete log base generator(); a must be nonzero.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }
  std::uint32_t exp(std::int64_t k) const;

  bool is_square(std::uint32_t a) const;
  std::optional<std::uint32_t> sqrt(std::uint32_t a) const;

  // All x in F_p^x with x^n = c (c nonzero), ascending.
  std::vector<std::uint32_t> monomial_roots(std::int64_t n, std::uint32_t c) const;
  // Distinct roots in F_p of a x^2 + b x + c (a, b not both zero), ascending.
  std::vector<std::uint32_t> quadratic_roots(std::uint32_t a, std::uint32_t b, std::uint32_t c) const;

 private:
  std::uint32_t p_;
  std::uint32_t g_ = 0;
  std::vector<std::uint32_t> log_, exp_;
};

}  // namespace lfq
