#include "lfq/gluing.hpp"

#include "lfq/error.hpp"

#include <sstream>

namespace lfq {

namespace {

std::string var_name(int r, int j) {
  static const char* kNames[] = {"x", "y", "z", "w"};
  if (r <= 4) return kNames[j];
  return "x" + std::to_string(j);
}

// Solves coeff == k * base for a rational k; returns false when not proportional.
bool proportional(const VecI& coeff, const VecI& base, Rat& k) {
  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < base.size(); ++i)
    if (base(i) != 0) {
      lead = i;
      break;
    }
  if (lead < 0) {
    k = 0;
    return coeff.isZero();
  }
  k = Rat(coeff(lead)) / Rat(base(lead));
  for (Eigen::Index i = 0; i < base.size(); ++i)
    if (Rat(coeff(i)) != k * Rat(base(i))) return false;
  return true;
}

}  // namespace

bool GluingSystem::same_payload(const GluingSystem& o) const {
  return r == o.r && N == o.N && m == o.m && sigma == o.sigma && v == o.v && w == o.w &&
         t_equals_mu == o.t_equals_mu;
}

GluingSystem gluing_system(const Triangulation& t, const KinematicalData& k, const AngleFamily& f) {
  const int n = t.size();
  const auto nfree = static_cast<Eigen::Index>(f.free_symbols.size());
  GluingSystem g;
  g.name = t.name;
  g.r = n;
  g.N = MatI(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.N(i, j) = t.tets[i].sign * k.Q(i, j);

  // Coefficient of the i-th equation: (c_i^{-1} prod_j a_j^{-s_j Q_ij})^{s_i}, reduced to sigma_i lambda^{m_i}.
  g.m = VecI::Zero(n);
  g.sigma.assign(n, 1);
  for (int i = 0; i < n; ++i) {
    AngleExpr d(nfree);
    d -= f.c[i];
    for (int j = 0; j < n; ++j) d -= (t.tets[j].sign * k.Q(i, j)) * f.a[j];
    d *= t.tets[i].sign;
    Rat mi;
    if (!proportional(d.coeff, f.lambda.coeff, mi) || !is_integer(mi))
      throw ComputeError("peripheral reduction failed for equation " + std::to_string(i));
    g.m(i) = to_int64(mi);
    const std::int64_t parity = d.varpi - g.m(i) * f.lambda.varpi;
    g.sigma[i] = (parity % 2 == 0) ? 1 : -1;
  }

  // e_j = c_j - 1 - sum_i (1 - a_i) N_ij, proportional to lambda-dot up to a constant.
  for (int j = 0; j < n; ++j) {
    VecI coeff = f.c[j].coeff;
    Rat constant = Rat(f.c[j].varpi) - 1;
    for (int i = 0; i < n; ++i) {
      coeff += g.N(i, j) * f.a[i].coeff;
      constant -= Rat(g.N(i, j)) * (Rat(1) - Rat(f.a[i].varpi));
    }
    Rat vj;
    if (!proportional(coeff, f.lambda.coeff, vj))
      throw ComputeError("exponent " + std::to_string(j) + " does not reduce to lambda-dot");
    g.v.push_back(vj);
    g.w.push_back(constant - vj * Rat(f.lambda.varpi));
  }

  AngleExpr tc(nfree);
  for (int i = 0; i < n; ++i) {
    AngleExpr one_minus_a(nfree);
    one_minus_a.varpi = 1;
    one_minus_a -= f.a[i];
    tc += g.m(i) * one_minus_a;
  }
  g.t_coeff = tc;
  g.t_text = f.format(tc);
  g.t_equals_mu = tc.coeff == f.mu.coeff && tc.varpi == f.mu.varpi;
  return g;
}

GluingSystem derive(const Triangulation& t, const std::vector<std::string>& free_order) {
  const auto k = kinematical_data(t);
  const auto f = balance_angles(t, free_order.empty() ? t.free_order : free_order);
  return gluing_system(t, k, f);
}

GluingSystem make_system(std::string name, const MatI& N, const VecI& m, const std::vector<int>& sigma) {
  if (N.rows() != N.cols() || m.size() != N.rows() || static_cast<Eigen::Index>(sigma.size()) != N.rows())
    throw Error("inconsistent gluing system dimensions");
  for (int s : sigma)
    if (s != 1 && s != -1) throw Error("gluing signs must be +1 or -1");
  GluingSystem g;
  g.name = std::move(name);
  g.r = static_cast<int>(N.rows());
  g.N = N;
  g.m = m;
  g.sigma = sigma;
  return g;
}

std::string format_equation(const GluingSystem& g, int i) {
  std::ostringstream os;
  os << "1 - " << var_name(g.r, i) << " = ";
  bool any = false;
  if (g.sigma[i] < 0) os << "-";
  if (g.m(i) != 0) {
    os << "eps";
    if (g.m(i) != 1) os << "^" << g.m(i);
    any = true;
  }
  for (int j = 0; j < g.r; ++j) {
    const auto e = g.N(i, j);
    if (e == 0) continue;
    if (any) os << " ";
    os << var_name(g.r, j);
    if (e != 1) os << "^" << e;
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

std::string format_exponents(const GluingSystem& g) {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < g.v.size(); ++j) {
    if (j) os << ", ";
    const Rat& v = g.v[j];
    const Rat& w = g.w[j];
    bool wrote = false;
    if (v != 0) {
      if (v == -1)
        os << "-";
      else if (v != 1)
        os << to_string(v);
      os << "s";
      wrote = true;
    }
    if (w != 0 || !wrote) {
      if (wrote)
        os << (w < 0 ? " - " : " + ") << to_string(w < 0 ? Rat(-w) : w);
      else
        os << to_string(w);
    }
  }
  os << ")";
  return os.str();
}

}  // namespace lfq
