#pragma once
// Gluing equations 1 - x_i = sigma_i eps^{m_i} prod_j x_j^{N_ij}, eps = lambda-ddot,
// with norm exponents e_j = v_j * lambda-dot + w_j.

#include "lfq/angles.hpp"
#include "lfq/exact.hpp"
#include "lfq/kinematics.hpp"
#include "lfq/triangulation.hpp"

#include <string>
#include <vector>

namespace lfq {

struct GluingSystem {
  std::string name;
  int r = 0;
  MatI N;
  VecI m;
  std::vector<int> sigma;
  std::vector<Rat> v, w;
  // Dot part of sum_i m_i (1 - a_i), the coefficient t of the eps prefactor.
  AngleExpr t_coeff;
  std::string t_text;
  bool t_equals_mu = false;

  bool same_payload(const GluingSystem& o) const;
};

GluingSystem gluing_system(const Triangulation& t, const KinematicalData& k, const AngleFamily& f);
GluingSystem derive(const Triangulation& t, const std::vector<std::string>& free_order = {});

// A system given directly by its coefficients (no exponent data).
GluingSystem make_system(std::string name, const MatI& N, const VecI& m, const std::vector<int>& sigma);

std::string format_equation(const GluingSystem& g, int i);
std::string format_exponents(const GluingSystem& g);

}  // namespace lfq
