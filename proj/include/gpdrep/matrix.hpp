#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <utility>

#include "gpdrep/rational.hpp"

namespace gpdrep {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;

namespace detail {

// Gauss-Jordan elimination without pivot magnitude heuristics: any nonzero
// pivot is exact for a field. Returns the rank and leaves `work` in reduced
// row echelon form. `companion` receives the same row operations.
template <typename Scalar>
std::size_t reduce_rows(MatrixX<Scalar>& work, MatrixX<Scalar>* companion) {
  const Eigen::Index rows = work.rows();
  const Eigen::Index cols = work.cols();
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
    Eigen::Index found = -1;
    for (Eigen::Index r = pivot_row; r < rows; ++r) {
      if (work(r, col) != Scalar(0)) {
        found = r;
        break;
      }
    }
    if (found < 0) {
      continue;
    }
    if (found != pivot_row) {
      work.row(found).swap(work.row(pivot_row));
      if (companion != nullptr) {
        companion->row(found).swap(companion->row(pivot_row));
      }
    }
    const Scalar inv = Scalar(1) / work(pivot_row, col);
    work.row(pivot_row) *= inv;
    if (companion != nullptr) {
      companion->row(pivot_row) *= inv;
    }
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == pivot_row || work(r, col) == Scalar(0)) {
        continue;
      }
      const Scalar factor = work(r, col);
      work.row(r) -= factor * work.row(pivot_row);
      if (companion != nullptr) {
        companion->row(r) -= factor * companion->row(pivot_row);
      }
    }
    ++pivot_row;
  }
  return static_cast<std::size_t>(pivot_row);
}

}  // namespace detail

template <typename Derived>
std::size_t exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> work = m;
  return detail::reduce_rows<Scalar>(work, nullptr);
}

/// Exact inverse of a square matrix, or nullopt when singular or non-square.
/// The 0x0 matrix is its own inverse.
template <typename Derived>
std::optional<MatrixX<typename Derived::Scalar>> exact_inverse(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) {
    return std::nullopt;
  }
  MatrixX<Scalar> work = m;
  MatrixX<Scalar> inv = MatrixX<Scalar>::Identity(m.rows(), m.cols());
  if (detail::reduce_rows<Scalar>(work, &inv) !=
      static_cast<std::size_t>(m.rows())) {
    return std::nullopt;
  }
  return inv;
}

template <typename Derived>
bool is_invertible(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == m.cols() &&
         exact_rank(m) == static_cast<std::size_t>(m.rows());
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (m(r, c) != Scalar(0)) {
        return false;
      }
    }
  }
  return true;
}

/// Shape-aware equality; Eigen's operator== asserts on mismatched shapes.
template <typename A, typename B>
bool same_matrix(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

}  // namespace gpdrep
