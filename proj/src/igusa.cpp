#include "lfq/igusa.hpp"

#include "lfq/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace lfq {

class IntPolyParser {
 public:
  explicit IntPolyParser(const std::string& text) : text_(text) {
    for (std::size_t i = 0; i < text.size();) {
      if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
        std::size_t j = i;
        while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
        const std::string id = text.substr(i, j - i);
        if (std::find(vars_.begin(), vars_.end(), id) == vars_.end()) vars_.push_back(id);
        i = j;
      } else {
        ++i;
      }
    }
  }

  IntPoly run() {
    IntPoly out;
    out.vars_ = vars_;
    out.terms_ = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (vars_.empty()) fail("polynomial has no variables");
    return out;
  }

 private:
  using Terms = std::map<IntPoly::Monomial, BigInt>;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("polynomial '" + text_ + "': " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static void add(Terms& t, const IntPoly::Monomial& m, const BigInt& c) {
    auto& v = t[m];
    v += c;
    if (v == 0) t.erase(m);
  }

  static Terms mul(const Terms& a, const Terms& b) {
    Terms out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        IntPoly::Monomial m(ma.size());
        for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
        add(out, m, ca * cb);
      }
    return out;
  }

  Terms constant(const BigInt& c) const {
    Terms t;
    if (c != 0) t[IntPoly::Monomial(vars_.size(), 0)] = c;
    return t;
  }

  Terms expr() {
    Terms acc = term();
    while (true) {
      if (eat('+')) {
        for (const auto& [m, c] : term()) add(acc, m, c);
      } else if (eat('-')) {
        for (const auto& [m, c] : term()) add(acc, m, -c);
      } else {
        return acc;
      }
    }
  }

  Terms term() {
    Terms acc = factor();
    while (eat('*')) acc = mul(acc, factor());
    return acc;
  }

  Terms factor() {
    if (eat('-')) {
      Terms t = factor();
      for (auto& [m, c] : t) c = -c;
      return t;
    }
    Terms b = base();
    if (eat('^')) {
      skip();
      std::size_t j = pos_;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      if (j == pos_) fail("exponent must be a nonnegative integer");
      const int e = std::stoi(text_.substr(pos_, j - pos_));
      pos_ = j;
      Terms r = constant(1);
      for (int k = 0; k < e; ++k) r = mul(r, b);
      return r;
    }
    return b;
  }

  Terms base() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Terms t = expr();
      if (!eat(')')) fail("missing ')'");
      return t;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = pos_;
      while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
      std::string digits = text_.substr(pos_, j - pos_);
      digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
      const BigInt v(digits);
      pos_ = j;
      return constant(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = pos_;
      while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
      const std::string id = text_.substr(pos_, j - pos_);
      pos_ = j;
      IntPoly::Monomial m(vars_.size(), 0);
      m[std::find(vars_.begin(), vars_.end(), id) - vars_.begin()] = 1;
      Terms t;
      t[m] = 1;
      return t;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
};

IntPoly IntPoly::parse(const std::string& text) { return IntPolyParser(text).run(); }

std::uint64_t IntPoly::eval_mod(const std::vector<std::uint64_t>& x, std::uint64_t modulus) const {
  if (x.size() != vars_.size()) throw Error("wrong number of polynomial arguments");
  unsigned __int128 acc = 0;
  for (const auto& [m, c] : terms_) {
    BigInt cm = c % modulus;
    if (cm < 0) cm += modulus;
    unsigned __int128 t = cm.convert_to<std::uint64_t>();
    for (std::size_t k = 0; k < m.size(); ++k)
      for (int e = 0; e < m[k]; ++e) t = t * x[k] % modulus;
    acc = (acc + t) % modulus;
  }
  return static_cast<std::uint64_t>(acc);
}

std::string IntPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const BigInt a = c < 0 ? BigInt(-c) : c;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool any = false;
    if (a != 1 || std::all_of(m.begin(), m.end(), [](int e) { return e == 0; })) {
      os << a;
      any = true;
    }
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      os << (any ? "*" : "") << vars_[k];
      if (m[k] > 1) os << "^" << m[k];
      any = true;
    }
    first = false;
  }
  return os.str();
}

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

void check_count_args(const IntPoly& g, std::uint32_t p, int n) {
  if (p < 2) throw Error("p must be a prime");
  if (n < 1 || n > kMaxIgusaN) throw Error("n must lie in [1, " + std::to_string(kMaxIgusaN) + "]");
  if (std::pow(static_cast<double>(p), n) > 4e18) throw Error("p^n overflows the residue type");
  (void)g;
}

}  // namespace

std::uint64_t count_mod_pn_scan(const IntPoly& g, std::uint32_t p, int n) {
  check_count_args(g, p, n);
  const std::uint64_t mod = ipow(p, n);
  const std::size_t k = g.variables().size();
  if (std::pow(static_cast<double>(mod), static_cast<double>(k)) > kCountBudget)
    throw Error("direct scan of (Z/" + std::to_string(mod) + ")^" + std::to_string(k) + " exceeds the counting budget");
  std::vector<std::uint64_t> x(k, 0);
  std::uint64_t count = 0;
  while (true) {
    if (g.eval_mod(x, mod) == 0) ++count;
    std::size_t j = 0;
    while (j < k && ++x[j] == mod) x[j++] = 0;
    if (j == k) break;
  }
  return count;
}

std::uint64_t count_mod_pn(const IntPoly& g, std::uint32_t p, int n) {
  check_count_args(g, p, n);
  const std::size_t k = g.variables().size();
  const std::uint64_t digits = ipow(p, static_cast<int>(k));
  double work = 0;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> x(k, 0);
  // x holds a root mod p^level; extend by one base-p digit per coordinate.
  auto lift = [&](auto&& self, int level) -> void {
    if (level == n) {
      ++count;
      return;
    }
    const std::uint64_t scale = ipow(p, level), mod = scale * p;
    const auto saved = x;
    for (std::uint64_t d = 0; d < digits; ++d) {
      if (++work > kCountBudget) throw Error("mod p^n count exceeds the counting budget");
      std::uint64_t code = d;
      for (std::size_t j = 0; j < k; ++j) {
        x[j] = saved[j] + (code % p) * scale;
        code /= p;
      }
      if (g.eval_mod(x, mod) == 0) self(self, level + 1);
    }
    x = saved;
  };
  lift(lift, 0);
  return count;
}

namespace {

Rat rpow(std::uint32_t p, int e) {
  Rat r = 1;
  for (int k = 0; k < (e < 0 ? -e : e); ++k) r *= p;
  return e < 0 ? Rat(1) / r : r;
}

}  // namespace

Rat igusa_partial(std::uint32_t p, int s, int n) {
  Rat acc = 0;
  for (int k = 0; k < n; ++k) acc += (Rat(1) - Rat(1, p)) * rpow(p, -k * s);
  return acc;
}

Rat igusa_partial_closed(std::uint32_t p, int s, int n) {
  return (Rat(1) - Rat(1, p)) * (Rat(1) - rpow(p, -n * s)) / (Rat(1) - rpow(p, -s));
}

Rat igusa_limit(std::uint32_t p, int s) { return (Rat(1) - Rat(1, p)) / (Rat(1) - rpow(p, -s)); }

// Shell v(x) = k has measure mu(v >= k) - mu(v >= k+1), with mu(v >= j) = #{x mod p^j : x = 0} / p^j.
Rat igusa_shell_sum(std::uint32_t p, int s, int n) {
  const IntPoly x = IntPoly::parse("x");
  auto measure_ge = [&](int k) -> Rat {  // measure of {v(x) >= k}
    if (k == 0) return 1;
    return Rat(static_cast<long long>(count_mod_pn(x, p, k))) / rpow(p, k);
  };
  Rat acc = 0;
  for (int k = 0; k < n; ++k) acc += (measure_ge(k) - measure_ge(k + 1)) * rpow(p, -k * (s - 1));
  return acc;
}

double igusa_partial_numeric(std::uint32_t p, double s, int n) {
  double acc = 0, c = 0;
  for (int k = 0; k < n; ++k) {
    const double y = (1.0 - 1.0 / p) * std::pow(static_cast<double>(p), -k * s) - c;
    const double t = acc + y;
    c = (t - acc) - y;
    acc = t;
  }
  return acc;
}

double igusa_limit_numeric(std::uint32_t p, double s) {
  return (1.0 - 1.0 / p) / (1.0 - std::pow(static_cast<double>(p), -s));
}

double igusa_tail_bound(std::uint32_t p, double s, int n) {
  return (1.0 - 1.0 / p) * std::pow(static_cast<double>(p), -n * s) / (1.0 - std::pow(static_cast<double>(p), -s));
}

std::vector<IgusaRow> igusa_I(std::uint32_t p, const std::vector<std::string>& s_samples, int n) {
  if (n < 1) throw Error("n must be positive");
  std::vector<IgusaRow> rows;
  for (const auto& text : s_samples) {
    const Rat s = parse_rational(text);
    if (s <= 0) throw Error("s must be positive (the integral converges only for Re s > 0)");
    IgusaRow row;
    row.p = p;
    row.s = to_string(s);
    row.n = n;
    const double sd = s.convert_to<double>();
    row.partial_value = igusa_partial_numeric(p, sd, n);
    row.limit_value = igusa_limit_numeric(p, sd);
    row.tail_bound = igusa_tail_bound(p, sd, n);
    if (is_integer(s) && n <= 64) {
      const int si = static_cast<int>(to_int64(s));
      const Rat part = igusa_partial(p, si, n), closed = igusa_partial_closed(p, si, n);
      row.exact = true;
      row.partial = to_string(part);
      row.closed = to_string(closed);
      row.limit = to_string(igusa_limit(p, si));
      row.agree = part == closed;
      if (n <= kMaxIgusaN) row.agree = row.agree && igusa_shell_sum(p, si, n) == part;
    } else {
      row.agree = std::abs(row.limit_value - row.partial_value) <= row.tail_bound + 1e-15;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lfq
