#include "lfq/kinematics.hpp"

#include "lfq/error.hpp"

namespace lfq {

KinematicalData kinematical_data(const Triangulation& t) {
  const int n = t.size();
  const int nf = t.num_faces;
  if (nf != 2 * n) throw Error("kinematical system needs 2N faces");
  // Augmented system [M | -R]: M acts on face variables, R on tetrahedron variables.
  MatQ aug = MatQ::Zero(2 * n, nf + n);
  for (int k = 0; k < n; ++k) {
    const auto& f = t.tets[k].faces;
    const int x0 = f[face_slot_opposite(0)], x1 = f[face_slot_opposite(1)];
    const int x2 = f[face_slot_opposite(2)], x3 = f[face_slot_opposite(3)];
    aug(2 * k, x0) += 1;
    aug(2 * k, x1) -= 1;
    aug(2 * k, x2) += 1;
    aug(2 * k + 1, x2) += 1;
    aug(2 * k + 1, x3) -= 1;
    aug(2 * k + 1, nf + k) += 1;
  }
  std::vector<Eigen::Index> order;
  for (int j = 0; j < nf; ++j) order.push_back(j);
  const auto pivots = rref(aug, order);
  if (static_cast<int>(pivots.size()) != nf)
    throw ComputeError("kinematical system not uniquely solvable");

  KinematicalData out;
  out.face_solution = MatQ::Zero(nf, n);
  for (int r = 0; r < nf; ++r)
    for (int k = 0; k < n; ++k) out.face_solution(pivots[r], k) = -aug(r, nf + k);

  out.Q = MatI::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int fi = t.tets[i].faces[face_slot_opposite(0)];
      const int fj = t.tets[j].faces[face_slot_opposite(0)];
      const Rat q = Rat(t.tets[j].sign) * out.face_solution(fj, i) + Rat(t.tets[i].sign) * out.face_solution(fi, j);
      if (!is_integer(q)) throw ComputeError("kinematical pairing is not integral");
      out.Q(i, j) = to_int64(q);
    }
  }
  return out;
}

NZMatrices nz_matrices(const Triangulation& t) {
  const int n = t.size();
  NZMatrices nz{MatI::Zero(t.num_edges, n), MatI::Zero(t.num_edges, n), MatI::Zero(t.num_edges, n)};
  for (int j = 0; j < n; ++j) {
    for (int s = 0; s < 6; ++s) {
      const int e = t.tets[j].edges[s];
      switch (kEdgeLetter[s]) {
        case Letter::a: nz.A(e, j) += 1; break;
        case Letter::b: nz.B(e, j) += 1; break;
        case Letter::c: nz.C(e, j) += 1; break;
      }
    }
  }
  return nz;
}

}  // namespace lfq
