#include "lfq/angles.hpp"

#include "lfq/error.hpp"

#include <algorithm>
#include <sstream>

namespace lfq {

AngleExpr& AngleExpr::operator+=(const AngleExpr& o) {
  coeff += o.coeff;
  varpi += o.varpi;
  return *this;
}

AngleExpr& AngleExpr::operator-=(const AngleExpr& o) {
  coeff -= o.coeff;
  varpi -= o.varpi;
  return *this;
}

AngleExpr& AngleExpr::operator*=(std::int64_t k) {
  coeff *= k;
  varpi *= k;
  return *this;
}

std::string symbol_name(int symbol) {
  return std::string(1, symbol % 2 == 0 ? 'a' : 'c') + std::to_string(symbol / 2);
}

int symbol_index(const std::string& name, int num_tets) {
  if (name.size() < 2 || (name[0] != 'a' && name[0] != 'c'))
    throw Error("free symbol '" + name + "' must be a<j> or c<j>");
  int j = 0;
  try {
    j = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw Error("free symbol '" + name + "' has no tetrahedron index");
  }
  if (j < 0 || j >= num_tets) throw Error("free symbol '" + name + "' out of range");
  return 2 * j + (name[0] == 'c' ? 1 : 0);
}

const AngleExpr& AngleFamily::angle(int tet, Letter l) const {
  switch (l) {
    case Letter::a: return a.at(tet);
    case Letter::b: return b.at(tet);
    case Letter::c: return c.at(tet);
  }
  throw Error("bad letter");
}

AngleExpr AngleFamily::evaluate(const LinearAngle& la) const {
  AngleExpr out(static_cast<Eigen::Index>(free_symbols.size()));
  for (const auto& term : la.terms) {
    if (term.tet < 0 || term.tet >= num_tets) throw Error("angle term references a missing tetrahedron");
    out += term.coeff * angle(term.tet, term.letter);
  }
  out.varpi += la.varpi;
  return out;
}

std::string AngleFamily::format(const AngleExpr& e) const {
  std::ostringstream os;
  bool first = true;
  auto put = [&](std::int64_t k, const std::string& sym) {
    if (k == 0) return;
    if (first)
      os << (k < 0 ? "-" : "");
    else
      os << (k < 0 ? " - " : " + ");
    const auto m = k < 0 ? -k : k;
    if (m != 1) os << m;
    os << sym;
    first = false;
  };
  for (Eigen::Index i = 0; i < e.coeff.size(); ++i) put(e.coeff(i), symbol_name(free_symbols[i]));
  put(e.varpi, "varpi");
  if (first) os << "0";
  return os.str();
}

std::vector<std::string> AngleFamily::free_names() const {
  std::vector<std::string> out;
  for (int s : free_symbols) out.push_back(symbol_name(s));
  return out;
}

std::vector<int> default_free_preference(int num_tets) {
  std::vector<int> out;
  for (int j = 0; j < num_tets; ++j) out.push_back(2 * j);
  for (int j = 1; j < num_tets; ++j) out.push_back(2 * j + 1);
  if (num_tets > 0) out.push_back(1);
  return out;
}

namespace {

// Row over the a/c symbols plus the varpi count contributed by b = varpi - a - c.
struct EdgeRow {
  VecI coeff;
  std::int64_t varpi = 0;
};

std::vector<EdgeRow> edge_rows(const Triangulation& t) {
  const int n = t.size();
  std::vector<EdgeRow> rows(t.num_edges, EdgeRow{VecI::Zero(2 * n), 0});
  for (int j = 0; j < n; ++j) {
    for (int s = 0; s < 6; ++s) {
      auto& r = rows[t.tets[j].edges[s]];
      switch (kEdgeLetter[s]) {
        case Letter::a: r.coeff(2 * j) += 1; break;
        case Letter::c: r.coeff(2 * j + 1) += 1; break;
        case Letter::b:
          r.coeff(2 * j) -= 1;
          r.coeff(2 * j + 1) -= 1;
          r.varpi += 1;
          break;
      }
    }
  }
  return rows;
}

}  // namespace

AngleFamily balance_angles(const Triangulation& t, const std::vector<std::string>& free_order) {
  const int n = t.size();
  const int nsym = 2 * n;
  std::vector<int> pref;
  for (const auto& name : free_order) {
    const int s = symbol_index(name, n);
    if (std::find(pref.begin(), pref.end(), s) != pref.end()) throw Error("free symbol '" + name + "' listed twice");
    pref.push_back(s);
  }
  for (int s : default_free_preference(n))
    if (std::find(pref.begin(), pref.end(), s) == pref.end()) pref.push_back(s);

  const auto rows = edge_rows(t);
  MatQ aug = MatQ::Zero(static_cast<Eigen::Index>(rows.size()), nsym + 1);
  for (std::size_t e = 0; e < rows.size(); ++e) {
    for (int s = 0; s < nsym; ++s) aug(e, s) = Rat(rows[e].coeff(s));
    aug(e, nsym) = Rat(2 - rows[e].varpi);
  }
  std::vector<Eigen::Index> order(pref.rbegin(), pref.rend());
  const auto pivots = rref(aug, order);
  for (Eigen::Index r = static_cast<Eigen::Index>(pivots.size()); r < aug.rows(); ++r)
    if (aug(r, nsym) != 0) throw ComputeError("inconsistent edge balancing");

  AngleFamily f;
  f.num_tets = n;
  for (int s : pref)
    if (std::find(pivots.begin(), pivots.end(), s) == pivots.end()) f.free_symbols.push_back(s);
  const auto nfree = static_cast<Eigen::Index>(f.free_symbols.size());

  std::vector<AngleExpr> sym(nsym, AngleExpr(nfree));
  for (Eigen::Index i = 0; i < nfree; ++i) sym[f.free_symbols[i]].coeff(i) = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    AngleExpr e(nfree);
    if (!is_integer(aug(r, nsym))) throw ComputeError("edge balancing lattice is not unimodular");
    e.varpi = to_int64(aug(r, nsym));
    for (Eigen::Index i = 0; i < nfree; ++i) {
      const Rat& v = aug(r, f.free_symbols[i]);
      if (!is_integer(v)) throw ComputeError("edge balancing lattice is not unimodular");
      e.coeff(i) = -to_int64(v);
    }
    sym[pivots[r]] = e;
  }
  AngleExpr varpi(nfree);
  varpi.varpi = 1;
  for (int j = 0; j < n; ++j) {
    f.a.push_back(sym[2 * j]);
    f.c.push_back(sym[2 * j + 1]);
    f.b.push_back(varpi - sym[2 * j] - sym[2 * j + 1]);
  }
  for (const auto& res : balancing_residuals(t, f))
    if (!res.is_zero()) throw ComputeError("balancing substitution check failed");
  f.lambda = f.evaluate(t.peripheral.lambda);
  f.mu = f.evaluate(t.peripheral.mu);
  return f;
}

std::vector<AngleExpr> balancing_residuals(const Triangulation& t, const AngleFamily& f) {
  const auto nfree = static_cast<Eigen::Index>(f.free_symbols.size());
  std::vector<AngleExpr> res(t.num_edges, AngleExpr(nfree));
  for (int j = 0; j < t.size(); ++j)
    for (int s = 0; s < 6; ++s) res[t.tets[j].edges[s]] += f.angle(j, kEdgeLetter[s]);
  for (auto& r : res) r.varpi -= 2;
  return res;
}

NumericAngle evaluate_numeric(const AngleExpr& e, const std::vector<Rat>& dots, const std::vector<Rat>& ddots) {
  if (static_cast<Eigen::Index>(dots.size()) != e.coeff.size() ||
      static_cast<Eigen::Index>(ddots.size()) != e.coeff.size())
    throw Error("numeric angle data does not match the free symbols");
  NumericAngle out{Rat(e.varpi), (e.varpi % 2 == 0) ? Rat(1) : Rat(-1)};
  for (Eigen::Index i = 0; i < e.coeff.size(); ++i) {
    const auto k = e.coeff(i);
    out.dot += Rat(k) * dots[i];
    if (ddots[i] == 0) throw Error("ddot angle values must be nonzero");
    Rat p = 1;
    const Rat base = k >= 0 ? ddots[i] : Rat(1) / ddots[i];
    for (std::int64_t m = 0; m < (k >= 0 ? k : -k); ++m) p *= base;
    out.ddot *= p;
  }
  return out;
}

NumericFamily evaluate_numeric(const AngleFamily& f, const std::vector<Rat>& dots, const std::vector<Rat>& ddots) {
  NumericFamily out;
  for (int j = 0; j < f.num_tets; ++j) {
    out.a.push_back(evaluate_numeric(f.a[j], dots, ddots));
    out.b.push_back(evaluate_numeric(f.b[j], dots, ddots));
    out.c.push_back(evaluate_numeric(f.c[j], dots, ddots));
  }
  out.lambda = evaluate_numeric(f.lambda, dots, ddots);
  out.mu = evaluate_numeric(f.mu, dots, ddots);
  return out;
}

}  // namespace lfq
