#pragma once
// Exact scalars and dense matrices over them.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace lfq {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatI = Mat<std::int64_t>;
using VecI = Vec<std::int64_t>;
using MatQ = Mat<Rat>;
using VecQ = Vec<Rat>;

inline Rat rat(std::int64_t n, std::int64_t d = 1) { return Rat(n) / Rat(d); }
inline bool is_integer(const Rat& q) { return boost::multiprecision::denominator(q) == 1; }
std::int64_t to_int64(const Rat& q);  // throws unless q is an integer fitting in 64 bits
std::string to_string(const Rat& q);
Rat parse_rational(const std::string& s);  // "3", "-2/7", "0.25"

template <class Scalar>
Mat<Scalar> cast_matrix(const MatI& m) {
  Mat<Scalar> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Scalar(m(i, j));
  return out;
}

// Gauss-Jordan elimination in place, visiting columns in `order` (all columns when empty).
// Returns the pivot column of each pivot row, in row order.
template <class Derived>
std::vector<Eigen::Index> rref(Eigen::MatrixBase<Derived>& m, std::vector<Eigen::Index> order = {}) {
  using Scalar = typename Derived::Scalar;
  if (order.empty())
    for (Eigen::Index j = 0; j < m.cols(); ++j) order.push_back(j);
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col : order) {
    if (row == m.rows()) break;
    Eigen::Index sel = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i)
      if (m(i, col) != Scalar(0)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == Scalar(0)) continue;
      const Scalar f = m(i, col);
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace lfq
