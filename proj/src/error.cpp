#include "lfq/error.hpp"
#include "lfq/exact.hpp"

#include <limits>

namespace lfq {

std::int64_t to_int64(const Rat& q) {
  if (!is_integer(q)) throw ComputeError("expected an integer, got " + to_string(q));
  const BigInt n = boost::multiprecision::numerator(q);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw ComputeError("integer out of 64-bit range: " + n.str());
  return static_cast<std::int64_t>(n);
}

std::string to_string(const Rat& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

namespace {

BigInt parse_decimal(std::string s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) throw Error("missing digits");
  for (char c : s)
    if (c < '0' || c > '9') throw Error("bad digit");
  const auto nz = s.find_first_not_of('0');
  BigInt v = nz == std::string::npos ? BigInt(0) : BigInt(s.substr(nz));
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw Error("empty rational literal");
  try {
    const auto slash = s.find('/');
    if (slash != std::string::npos)
      return Rat(parse_decimal(s.substr(0, slash))) / Rat(parse_decimal(s.substr(slash + 1)));
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(parse_decimal(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    if (digits == "-" || digits == "+" || digits.empty()) digits += "0";
    return Rat(parse_decimal(digits)) / Rat(den);
  } catch (const std::exception&) {
    throw Error("malformed rational literal '" + s + "'");
  }
}

}  // namespace lfq
