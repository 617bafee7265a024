#pragma once

#include "lfq/exact.hpp"
#include "lfq/triangulation.hpp"

namespace lfq {

struct KinematicalData {
  MatQ face_solution;  // faces x tetrahedra: x_f = sum_k face_solution(f,k) z_k
  MatI Q;              // symmetric tetrahedra x tetrahedra
};

// Solves x0 - x1 + x2 = 0, x2 - x3 + z(T) = 0 for every tetrahedron T, where x_i is the
// face opposite vertex i, then collects the pairings <x0(T); z(T)>^{sgn T} into Q.
KinematicalData kinematical_data(const Triangulation& t);

// Shape incidence counts: A(e,j) counts slots 01/23 of tetrahedron j glued to edge e,
// B slots 02/13, C slots 03/12.
struct NZMatrices {
  MatI A, B, C;
};
NZMatrices nz_matrices(const Triangulation& t);

}  // namespace lfq
