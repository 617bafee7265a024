#include "lfq/upoly.hpp"

#include "lfq/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lfq {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rat& c, int degree) {
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& k) {
  for (auto& v : c_) v *= k;
  trim();
  return *this;
}

UPoly UPoly::derivative() const {
  std::vector<Rat> out;
  for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(c_[k] * static_cast<long>(k));
  return UPoly(std::move(out));
}

Rat UPoly::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UPoly::evaluate(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

std::string UPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    const Rat a = abs(c_[k]);
    os << (c_[k] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (a != 1 || k == 0) os << to_string(a);
    if (k > 0) os << (a != 1 ? "*" : "") << var << (k > 1 ? "^" + std::to_string(k) : "");
    first = false;
  }
  return os.str();
}

void UPoly::divmod(const UPoly& d, UPoly& q, UPoly& r) const {
  if (d.is_zero()) throw ComputeError("polynomial division by zero");
  r = *this;
  std::vector<Rat> qc(std::max(0, degree() - d.degree() + 1), Rat(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int shift = r.degree() - d.degree();
    const Rat f = r.leading() / d.leading();
    qc[shift] = f;
    r -= monomial(f, shift) * d;
  }
  q = UPoly(std::move(qc));
}

UPoly monic_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rat(1) / a.leading()) * a;
}

UPoly square_free_part(const UPoly& a) {
  UPoly q, r;
  a.divmod(monic_gcd(a, a.derivative()), q, r);
  return (Rat(1) / q.leading()) * q;
}

UPoly cubic_discriminant(const UPoly& a, const UPoly& b, const UPoly& c, const UPoly& d) {
  return b * b * c * c - Rat(4) * a * c * c * c - Rat(4) * b * b * b * d - Rat(27) * a * a * d * d +
         Rat(18) * a * b * c * d;
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UPoly q, r;
    chain[chain.size() - 2].divmod(chain.back(), q, r);
    if (r.is_zero()) break;
    chain.push_back(Rat(-1) * r);
  }
  return chain;
}

namespace {

int sign_changes(const std::vector<UPoly>& chain, const Rat& x) {
  int changes = 0, prev = 0;
  for (const auto& f : chain) {
    const Rat v = f.evaluate(x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

// Number of distinct real roots in (lo, hi] of the chain's square-free head.
int sturm_count(const std::vector<UPoly>& chain, const Rat& lo, const Rat& hi) {
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

std::vector<double> real_roots(const UPoly& p, double tol) {
  if (p.degree() < 1) return {};
  const UPoly f = square_free_part(p);
  const auto chain = sturm_chain(f);
  // Cauchy bound on root moduli.
  Rat bound = 0;
  for (int k = 0; k < f.degree(); ++k) bound = std::max(bound, Rat(abs(f[k] / f.leading())));
  bound += 1;
  std::vector<std::pair<Rat, Rat>> todo{{-bound, bound}}, isolated;
  while (!todo.empty()) {
    auto [lo, hi] = todo.back();
    todo.pop_back();
    const int n = sturm_count(chain, lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    const Rat mid = (lo + hi) / 2;
    todo.emplace_back(lo, mid);
    todo.emplace_back(mid, hi);
  }
  std::vector<double> out;
  const Rat width(tol);
  for (auto [lo, hi] : isolated) {
    while (hi - lo > width) {
      const Rat mid = (lo + hi) / 2;
      if (sturm_count(chain, lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    out.push_back(((lo + hi) / 2).convert_to<double>());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lfq
