#pragma once

// Exact dense linear algebra over a field scalar (Rational, GaussianRational).
// Eigen supplies storage and expression arithmetic; elimination is done here
// because Eigen's decompositions pivot on magnitudes, which exact complex
// scalars do not have.

#include <algorithm>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "slocc/errors.hpp"
#include "slocc/scalar.hpp"

namespace slocc {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ComplexMatrix = Matrix<Complex>;
using ComplexVector = Vector<Complex>;

namespace detail {

// Forward elimination in place. Pivot for step r is the first nonzero entry
// of the first column (left to right) that still has one at or below row r.
// Returns the pivot columns; the row swaps are counted into `swaps`.
template <typename Scalar>
std::vector<Eigen::Index> eliminate(Matrix<Scalar>& m, int* swaps = nullptr) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.row(p).swap(m.row(r));
      if (swaps) ++*swaps;
    }
    const Scalar inv = Scalar(1) / m(r, c);
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      const Scalar factor = m(i, c) * inv;
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  Matrix<typename Derived::Scalar> work = m;
  return static_cast<Eigen::Index>(detail::eliminate(work).size());
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols())
    throw FormatError("determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  Matrix<Scalar> work = m;
  int swaps = 0;
  const auto pivots = detail::eliminate(work, &swaps);
  if (static_cast<Eigen::Index>(pivots.size()) < work.rows()) return Scalar(0);
  Scalar det = (swaps % 2 == 0) ? Scalar(1) : Scalar(-1);
  for (Eigen::Index i = 0; i < work.rows(); ++i) det *= work(i, i);
  return det;
}

/// Determinant of `m` with the listed rows and columns removed (0-based).
template <typename Derived>
typename Derived::Scalar minor(const Eigen::MatrixBase<Derived>& m,
                               std::vector<Eigen::Index> drop_rows,
                               std::vector<Eigen::Index> drop_cols) {
  auto keep = [](std::vector<Eigen::Index>& drop, Eigen::Index n) {
    std::sort(drop.begin(), drop.end());
    if (std::adjacent_find(drop.begin(), drop.end()) != drop.end())
      throw FormatError("minor: repeated index");
    std::vector<Eigen::Index> kept;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!std::binary_search(drop.begin(), drop.end(), i)) kept.push_back(i);
    }
    if (!drop.empty() && (drop.front() < 0 || drop.back() >= n))
      throw FormatError("minor: index out of range");
    return kept;
  };
  const auto rows = keep(drop_rows, m.rows());
  const auto cols = keep(drop_cols, m.cols());
  if (rows.size() != cols.size())
    throw FormatError("minor: remaining submatrix is not square");
  return determinant(m(rows, cols));
}

/// Throws ArithmeticError when `m` is singular.
template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw FormatError("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Matrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  const auto pivots = detail::eliminate(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots.back() >= n)
    throw ArithmeticError("inverse of a singular matrix");
  for (Eigen::Index r = n - 1; r >= 0; --r) {
    const Scalar inv = Scalar(1) / aug(r, r);
    aug.row(r) *= inv;
    for (Eigen::Index i = 0; i < r; ++i) {
      if (is_zero(aug(i, r))) continue;
      const Scalar factor = aug(i, r);
      aug.row(i) -= factor * aug.row(r);
    }
  }
  return aug.rightCols(n);
}

/// Rows forming a basis of the row space (the nonzero rows of an echelon
/// form), so that every row of `m` is a combination of them.
template <typename Derived>
Matrix<typename Derived::Scalar> row_space_basis(
    const Eigen::MatrixBase<Derived>& m) {
  Matrix<typename Derived::Scalar> work = m;
  const auto pivots = detail::eliminate(work);
  return work.topRows(static_cast<Eigen::Index>(pivots.size()));
}

/// Solves the square system `m x = b` exactly.
template <typename DerivedM, typename DerivedB>
Vector<typename DerivedM::Scalar> solve(const Eigen::MatrixBase<DerivedM>& m,
                                        const Eigen::MatrixBase<DerivedB>& b) {
  return inverse(m) * b;
}

}  // namespace slocc
