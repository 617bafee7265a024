#include "lfq/field.hpp"

#include "lfq/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

namespace lfq {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || !is_prime(p)) throw Error("p = " + std::to_string(p) + " is not an odd prime");
  if (p > kMaxPrime) throw Error("p = " + std::to_string(p) + " exceeds the field table limit " + std::to_string(kMaxPrime));
  const auto factors = prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](std::uint64_t q) { return powmod(g, (p - 1) / q, p) != 1; })) {
      g_ = g;
      break;
    }
  }
  exp_.resize(p - 1);
  log_.assign(p, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < p - 1; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = mul(x, g_);
  }
}

std::uint32_t PrimeField::from_int(std::int64_t v) const {
  const std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw ComputeError("inverse of zero in F_" + std::to_string(p_));
  return exp_[(p_ - 1 - log_[a]) % (p_ - 1)];
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw ComputeError("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  return exp(static_cast<std::int64_t>(log_[a]) * e);
}

std::uint32_t PrimeField::exp(std::int64_t k) const {
  const std::int64_t n = p_ - 1;
  std::int64_t r = k % n;
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

bool PrimeField::is_square(std::uint32_t a) const { return a == 0 || log_[a] % 2 == 0; }

// Tonelli-Shanks; returns the smaller of the two roots.
std::optional<std::uint32_t> PrimeField::sqrt(std::uint32_t a) const {
  a %= p_;
  if (a == 0) return 0u;
  if (powmod(a, (p_ - 1) / 2, p_) != 1) return std::nullopt;
  std::uint64_t q = p_ - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p_ - 1) / 2, p_) != p_ - 1) ++z;
  std::uint64_t m = s, c = powmod(z, q, p_), t = powmod(a, q, p_), r = powmod(a, (q + 1) / 2, p_);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p_);
      ++i;
    }
    const std::uint64_t b = powmod(c, std::uint64_t{1} << (m - i - 1), p_);
    m = i;
    c = mulmod(b, b, p_);
    t = mulmod(t, c, p_);
    r = mulmod(r, b, p_);
  }
  const auto root = static_cast<std::uint32_t>(r);
  return std::min(root, p_ - root);
}

std::vector<std::uint32_t> PrimeField::monomial_roots(std::int64_t n, std::uint32_t c) const {
  if (c == 0) throw ComputeError("monomial_roots needs a unit right-hand side");
  const std::int64_t ord = p_ - 1;
  std::int64_t nn = n % ord;
  if (nn < 0) nn += ord;
  const std::int64_t L = log_[c];
  const std::int64_t d = std::gcd(nn, ord);  // gcd(0, ord) = ord
  std::vector<std::uint32_t> out;
  if (L % d != 0) return out;
  const std::int64_t mod = ord / d;
  std::int64_t t0 = 0;
  if (mod > 1) {
    // inverse of nn/d modulo mod by extended Euclid
    std::int64_t a = (nn / d) % mod, b = mod, x0 = 1, x1 = 0;
    while (b) {
      const std::int64_t q = a / b;
      std::tie(a, b) = std::make_pair(b, a - q * b);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
    }
    t0 = static_cast<std::int64_t>((static_cast<__int128>((L / d) % mod) * ((x0 % mod + mod) % mod)) % mod);
  }
  for (std::int64_t j = 0; j < d; ++j) out.push_back(exp(t0 + j * mod));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> PrimeField::quadratic_roots(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
  std::vector<std::uint32_t> out;
  if (a == 0) {
    if (b == 0) throw ComputeError("quadratic_roots: degenerate polynomial");
    out.push_back(mul(neg(c), inv(b)));
    return out;
  }
  const std::uint32_t disc = sub(mul(b, b), mul(4, mul(a, c)));
  const auto root = sqrt(disc);
  if (!root) return out;
  const std::uint32_t inv2a = inv(mul(2, a));
  out.push_back(mul(sub(*root, b), inv2a));
  if (*root != 0) out.push_back(mul(sub(neg(*root), b), inv2a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lfq
