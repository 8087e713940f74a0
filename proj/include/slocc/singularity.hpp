#pragma once

// Critical points of the multilinear form F(A,x), the x°(J)-sections, the
// Hessian at a critical point, and the rank conditions that describe node
// singularities in the 2x2x2 and 3x2x2 formats.

#include <algorithm>
#include <vector>

#include "slocc/errors.hpp"
#include "slocc/linalg.hpp"
#include "slocc/tensor.hpp"

namespace slocc {

/// A set partition of the parties; blocks sorted, ordered by first element.
using Partition = std::vector<std::vector<int>>;

/// x°(J): x^(j) = e_0 for j in J and e_{k_j} (the last basis vector)
/// otherwise. `subset` holds 0-based parties.
template <typename Scalar>
PartyVectors<Scalar> xo_point(const TensorFormat& format,
                              const std::vector<int>& subset) {
  PartyVectors<Scalar> x;
  for (int j = 0; j < format.parties(); ++j) {
    Vector<Scalar> v = Vector<Scalar>::Zero(format.dim(j));
    const bool in_subset =
        std::find(subset.begin(), subset.end(), j) != subset.end();
    v(in_subset ? 0 : format.dim(j) - 1) = Scalar(1);
    x.push_back(std::move(v));
  }
  return x;
}

inline MultiIndex xo_index(const TensorFormat& format,
                           const std::vector<int>& subset) {
  MultiIndex index;
  for (int j = 0; j < format.parties(); ++j) {
    const bool in_subset =
        std::find(subset.begin(), subset.end(), j) != subset.end();
    index.push_back(in_subset ? 0 : format.dim(j) - 1);
  }
  return index;
}

/// F(A,x) = 0 and every partial derivative vanishes.
template <typename Scalar>
bool is_critical_point(const Tensor<Scalar>& a, const PartyVectors<Scalar>& x) {
  detail::require_vectors(a.format(), x);
  for (const auto& v : x)
    if (is_zero_matrix(v)) throw DomainError("critical point candidate has a zero party vector");
  if (!is_zero(multilinear_eval(a, x))) return false;
  for (const auto& g : gradient(a, x))
    if (!is_zero_matrix(g)) return false;
  return true;
}

/// Every coefficient whose multi-index is within Hamming distance 1 of the
/// index of x°(J) vanishes.
template <typename Scalar>
bool xo_section_member(const Tensor<Scalar>& a, const std::vector<int>& subset) {
  const MultiIndex centre = xo_index(a.format(), subset);
  if (!is_zero(a[centre])) return false;
  for (int j = 0; j < a.parties(); ++j) {
    MultiIndex probe = centre;
    for (int i = 0; i < a.dim(j); ++i) {
      probe[j] = i;
      if (!is_zero(a[probe])) return false;
    }
  }
  return true;
}

namespace detail {

// Second partials d^2F / dx^(j)_a dx^(j')_b over the listed coordinates;
// coords[j] lists the coordinate indices kept for party j.
template <typename Scalar>
Matrix<Scalar> hessian_over(const Tensor<Scalar>& a,
                            const PartyVectors<Scalar>& x,
                            const std::vector<std::vector<int>>& coords) {
  std::vector<Eigen::Index> offset{0};
  for (const auto& c : coords)
    offset.push_back(offset.back() + static_cast<Eigen::Index>(c.size()));
  Matrix<Scalar> h = Matrix<Scalar>::Zero(offset.back(), offset.back());
  const int n = a.parties();
  for (int j = 0; j < n; ++j) {
    for (int jp = j + 1; jp < n; ++jp) {
      // indexed by (i_j, i_jp), row-major
      const Vector<Scalar> block = contract_except(a, x, {j, jp});
      for (std::size_t r = 0; r < coords[j].size(); ++r) {
        for (std::size_t c = 0; c < coords[jp].size(); ++c) {
          const Scalar& v = block(coords[j][r] * a.dim(jp) + coords[jp][c]);
          h(offset[j] + r, offset[jp] + c) = v;
          h(offset[jp] + c, offset[j] + r) = v;
        }
      }
    }
  }
  return h;
}

template <typename Scalar>
void require_critical(const Tensor<Scalar>& a, const PartyVectors<Scalar>& x) {
  if (!is_critical_point(a, x))
    throw DomainError("Hessian requested at a point that is not critical");
}

}  // namespace detail

/// Hessian of F at a critical point x, rows and columns indexed by
/// (party j, coordinate 1..k_j) in party order. Diagonal blocks are zero
/// because F is linear in each x^(j). This is the affine chart around
/// x^(j) = e_0; for other points see chart_hessian_matrix.
template <typename Scalar>
Matrix<Scalar> hessian_matrix(const Tensor<Scalar>& a,
                              const PartyVectors<Scalar>& x) {
  detail::require_critical(a, x);
  std::vector<std::vector<int>> coords;
  for (int j = 0; j < a.parties(); ++j) {
    std::vector<int> c;
    for (int i = 1; i < a.dim(j); ++i) c.push_back(i);
    coords.push_back(std::move(c));
  }
  return detail::hessian_over(a, x, coords);
}

template <typename Scalar>
Scalar hessian_det(const Tensor<Scalar>& a, const PartyVectors<Scalar>& x) {
  return determinant(hessian_matrix(a, x));
}

/// Hessian in the affine chart transverse to x: for each party the coordinate
/// of the first nonzero entry of x^(j) is dropped. Coincides with
/// hessian_matrix whenever every x^(j)_0 != 0.
template <typename Scalar>
Matrix<Scalar> chart_hessian_matrix(const Tensor<Scalar>& a,
                                    const PartyVectors<Scalar>& x) {
  detail::require_critical(a, x);
  std::vector<std::vector<int>> coords;
  for (int j = 0; j < a.parties(); ++j) {
    int pivot = 0;
    while (is_zero(x[j](pivot))) ++pivot;
    std::vector<int> c;
    for (int i = 0; i < a.dim(j); ++i)
      if (i != pivot) c.push_back(i);
    coords.push_back(std::move(c));
  }
  return detail::hessian_over(a, x, coords);
}

/// 2x2x2: rank of the 2x4 flattening at `party` is at most 1.
template <typename Scalar>
bool node_membership_3qubit(const Tensor<Scalar>& a, int party) {
  if (a.format().dims() != std::vector<int>{2, 2, 2})
    throw FormatError("node_membership_3qubit needs format 2x2x2");
  return rank(flatten(a, {party})) <= 1;
}

/// 3x2x2: the qutrit flattening is rank deficient (all four 3x3 minors
/// vanish).
template <typename Scalar>
bool node1_membership_3x2x2(const Tensor<Scalar>& a) {
  if (a.format().dims() != std::vector<int>{3, 2, 2})
    throw FormatError("node1_membership_3x2x2 needs format 3x2x2");
  return rank(flatten(a, {0})) <= 2;
}

/// Finest partition of the parties across whose blocks A factors as a tensor
/// product. Two parties share a block iff no rank-1 cut separates them.
template <typename Scalar>
Partition separability_pattern(const Tensor<Scalar>& a) {
  if (a.is_zero()) throw DomainError("separability_pattern of the zero tensor");
  const int n = a.parties();
  // label[j]: bitmask of the rank-1 cuts containing j; equal labels <=> same block
  std::vector<unsigned> label(static_cast<std::size_t>(n), 0);
  unsigned cut_id = 0;
  for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
    if (mask & 1U) continue;  // a cut and its complement are the same cut
    std::vector<int> subset;
    for (int j = 0; j < n; ++j)
      if (mask & (1U << j)) subset.push_back(j);
    if (rank(flatten(a, subset)) == 1) {
      for (int j : subset) label[j] |= 1U << cut_id;
      ++cut_id;
    }
  }
  Partition blocks;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (int j = 0; j < n; ++j) {
    if (placed[j]) continue;
    std::vector<int> block;
    for (int k = j; k < n; ++k) {
      if (!placed[k] && label[k] == label[j]) {
        block.push_back(k);
        placed[k] = true;
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace slocc
