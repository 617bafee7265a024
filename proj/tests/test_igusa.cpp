#include "oracles.hpp"

#include "lfq/error.hpp"
#include "lfq/igusa.hpp"

#include <doctest.h>

using namespace lfq;

namespace {

Rat geometric(std::uint32_t p, int s, int n) {
  Rat sum = 0, term = 1;
  Rat ps = 1;
  for (int i = 0; i < s; ++i) ps *= p;
  const Rat ratio = 1 / ps;
  for (int k = 0; k < n; ++k, term *= ratio) sum += term;
  return (1 - Rat(1) / Rat(p)) * sum;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("count_mod_pn: listed examples") {
  CHECK(count_mod_pn(IntPoly::parse("x"), 3, 2) == 1);
  CHECK(count_mod_pn(IntPoly::parse("x^2"), 3, 2) == 3);
  CHECK(count_mod_pn(IntPoly::parse("x*(x-1)"), 5, 3) == 2);
}

TEST_CASE("count_mod_pn agrees with a direct residue scan") {
  struct Case {
    const char* text;
    std::uint64_t (*g)(std::uint64_t);
  };
  const Case cases[] = {
      {"x", [](std::uint64_t x) { return x; }},
      {"x^2", [](std::uint64_t x) { return x * x; }},
      {"x^3", [](std::uint64_t x) { return x * x * x; }},
      {"x^2 + 1", [](std::uint64_t x) { return x * x + 1; }},
  };
  for (const auto& c : cases)
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
      for (int n = 1; n <= 4; ++n) {
        const std::uint64_t mod = ipow(p, n);
        CAPTURE(c.text);
        CAPTURE(p);
        CAPTURE(n);
        const IntPoly g = IntPoly::parse(c.text);
        CHECK(count_mod_pn(g, p, n) == oracle::scan_count(c.g, mod));
        CHECK(count_mod_pn_scan(g, p, n) == oracle::scan_count(c.g, mod));
      }
}

TEST_CASE("count_mod_pn: x(x-1) lifts both simple roots") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (int n = 1; n <= 4; ++n) {
      const std::uint64_t mod = ipow(p, n);
      std::uint64_t cnt = 0;
      for (std::uint64_t x = 0; x < mod; ++x)
        if (x * ((x + mod - 1) % mod) % mod == 0) ++cnt;
      CHECK(cnt == 2);
      CHECK(count_mod_pn(IntPoly::parse("x*(x-1)"), p, n) == cnt);
    }
}

TEST_CASE("count_mod_pn for x^k follows the valuation count p^(n - ceil(n/k))") {
  for (int k = 1; k <= 3; ++k)
    for (std::uint32_t p : {2u, 3u, 5u})
      for (int n = 1; n <= 4; ++n) {
        const IntPoly g = IntPoly::parse("x^" + std::to_string(k));
        CHECK(count_mod_pn(g, p, n) == ipow(p, n - (n + k - 1) / k));
      }
}

TEST_CASE("count_mod_pn: two variables") {
  const IntPoly g = IntPoly::parse("x^2 - 3*y");
  CHECK(g.variables().size() == 2);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int n = 1; n <= 3; ++n) {
      const std::uint64_t mod = ipow(p, n);
      std::uint64_t cnt = 0;
      for (std::uint64_t x = 0; x < mod; ++x)
        for (std::uint64_t y = 0; y < mod; ++y)
          if ((x * x + 3 * (mod - y)) % mod == 0) ++cnt;
      CHECK(count_mod_pn(g, p, n) == cnt);
    }
}

TEST_CASE("polynomial parser") {
  CHECK(IntPoly::parse("x*(x-1)").str() == IntPoly::parse("x^2 - x").str());
  CHECK_THROWS_AS(IntPoly::parse("x +* 2"), Error);
  CHECK_THROWS_AS(count_mod_pn(IntPoly::parse("x"), 3, kMaxIgusaN + 1), Error);
}

TEST_CASE("igusa partial sums: exact geometric series") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int s = 1; s <= 3; ++s)
      for (int n = 1; n <= kMaxIgusaN; ++n) {
        CHECK(igusa_partial(p, s, n) == geometric(p, s, n));
        CHECK(igusa_partial_closed(p, s, n) == geometric(p, s, n));
        CHECK(igusa_shell_sum(p, s, n) == geometric(p, s, n));
      }
  CHECK(igusa_limit(2, 1) == 1);
  CHECK(igusa_partial(3, 2, 4) == rat(2, 3) * (1 + rat(1, 9) + rat(1, 81) + rat(1, 729)));
}

TEST_CASE("igusa numeric: non-integer s against the closed form") {
  const double partial = igusa_partial_numeric(5, 0.5, 40), limit = igusa_limit_numeric(5, 0.5);
  CHECK(std::abs(partial - limit) <= 1e-12);
  CHECK(igusa_tail_bound(5, 0.5, 40) <= 1e-12);
  CHECK(std::abs(partial - limit) <= igusa_tail_bound(5, 0.5, 40));
}

TEST_CASE("igusa_I rows") {
  const auto rows = igusa_I(3, {"1", "2", "0.5"}, 4);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].exact);
  CHECK(rows[0].agree);
  CHECK(rows[1].partial == to_string(geometric(3, 2, 4)));
  CHECK_FALSE(rows[2].exact);
  CHECK(rows[2].agree);
}
