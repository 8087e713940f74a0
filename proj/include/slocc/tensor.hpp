#pragma once

// Dense multi-index coefficient arrays a_{i1..in} and the multilinear
// operations on them. Parties are 0-based in the API; text output converts to
// 1-based labels. Storage is row-major: the last party's index varies fastest.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "slocc/errors.hpp"
#include "slocc/linalg.hpp"
#include "slocc/scalar.hpp"

namespace slocc {

using MultiIndex = std::vector<int>;

class TensorFormat {
 public:
  TensorFormat() = default;
  explicit TensorFormat(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw FormatError("format needs at least one party");
    for (int d : dims_)
      if (d < 2) throw FormatError("every party dimension must be >= 2");
  }

  int parties() const { return static_cast<int>(dims_.size()); }
  int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }
  const std::vector<int>& dims() const { return dims_; }

  std::size_t size() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1},
                           [](std::size_t acc, int d) { return acc * d; });
  }

  /// k_max minus the sum of the other k_j (k_j = d_j - 1).
  int polygon_excess() const {
    int max_k = 0, sum_k = 0;
    for (int d : dims_) {
      max_k = std::max(max_k, d - 1);
      sum_k += d - 1;
    }
    return max_k - (sum_k - max_k);
  }
  bool hyperdet_exists() const { return polygon_excess() <= 0; }
  bool is_boundary() const { return polygon_excess() == 0; }
  bool is_interior() const { return polygon_excess() < 0; }

  std::size_t linear_index(const MultiIndex& index) const {
    if (static_cast<int>(index.size()) != parties())
      throw FormatError("multi-index length does not match format");
    std::size_t lin = 0;
    for (int j = 0; j < parties(); ++j) {
      if (index[j] < 0 || index[j] >= dims_[j])
        throw FormatError("multi-index out of range");
      lin = lin * dims_[j] + static_cast<std::size_t>(index[j]);
    }
    return lin;
  }

  MultiIndex multi_index(std::size_t linear) const {
    MultiIndex index(dims_.size());
    for (int j = parties() - 1; j >= 0; --j) {
      index[j] = static_cast<int>(linear % dims_[j]);
      linear /= dims_[j];
    }
    return index;
  }

  /// "2x2x2"
  std::string to_string() const {
    std::string out;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
      if (j) out += 'x';
      out += std::to_string(dims_[j]);
    }
    return out;
  }

  friend bool operator==(const TensorFormat&, const TensorFormat&) = default;

 private:
  std::vector<int> dims_;
};

/// Steps `index` to the next multi-index in row-major order; false after the
/// last one.
inline bool next_index(MultiIndex& index, const std::vector<int>& dims) {
  for (int j = static_cast<int>(dims.size()) - 1; j >= 0; --j) {
    if (++index[j] < dims[j]) return true;
    index[j] = 0;
  }
  return false;
}

template <typename Scalar>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(TensorFormat format)
      : format_(std::move(format)),
        coeffs_(Vector<Scalar>::Zero(static_cast<Eigen::Index>(format_.size()))) {}
  Tensor(TensorFormat format, Vector<Scalar> coeffs)
      : format_(std::move(format)), coeffs_(std::move(coeffs)) {
    if (static_cast<std::size_t>(coeffs_.size()) != format_.size())
      throw FormatError("entry count does not match format");
  }

  /// Sum of unit-coefficient basis kets, e.g. {{0,0,0},{1,1,1}} for GHZ.
  static Tensor from_kets(TensorFormat format,
                          const std::vector<MultiIndex>& kets) {
    Tensor t(std::move(format));
    for (const auto& k : kets) t[k] += Scalar(1);
    return t;
  }

  const TensorFormat& format() const { return format_; }
  int parties() const { return format_.parties(); }
  int dim(int party) const { return format_.dim(party); }
  std::size_t size() const { return format_.size(); }

  Scalar& operator[](const MultiIndex& index) {
    return coeffs_(static_cast<Eigen::Index>(format_.linear_index(index)));
  }
  const Scalar& operator[](const MultiIndex& index) const {
    return coeffs_(static_cast<Eigen::Index>(format_.linear_index(index)));
  }
  const Vector<Scalar>& coeffs() const { return coeffs_; }
  Vector<Scalar>& coeffs() { return coeffs_; }

  bool is_zero() const { return is_zero_matrix(coeffs_); }

  Tensor& operator+=(const Tensor& o) {
    require_same_format(o);
    coeffs_ += o.coeffs_;
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    require_same_format(o);
    coeffs_ -= o.coeffs_;
    return *this;
  }
  Tensor& operator*=(const Scalar& s) {
    coeffs_ *= s;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.format_ == b.format_ && a.coeffs_ == b.coeffs_;
  }

  void require_same_format(const Tensor& o) const {
    if (!(format_ == o.format_))
      throw FormatError("format mismatch: " + format_.to_string() + " vs " +
                        o.format_.to_string());
  }

 private:
  TensorFormat format_;
  Vector<Scalar> coeffs_;
};

using State = Tensor<Complex>;

/// One square d_j x d_j factor per party.
template <typename Scalar>
struct LocalOperation {
  std::vector<Matrix<Scalar>> factors;

  static LocalOperation identity(const TensorFormat& format) {
    LocalOperation op;
    for (int d : format.dims()) op.factors.push_back(Matrix<Scalar>::Identity(d, d));
    return op;
  }

  /// Identity everywhere except `matrix` on `party`.
  static LocalOperation on_party(const TensorFormat& format, int party,
                                 Matrix<Scalar> matrix) {
    LocalOperation op = identity(format);
    op.factors.at(static_cast<std::size_t>(party)) = std::move(matrix);
    return op;
  }

  /// Every factor has nonzero determinant.
  bool is_invertible() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const auto& g) { return !is_zero(determinant(g)); });
  }

  LocalOperation transpose() const {
    LocalOperation out;
    for (const auto& g : factors) out.factors.push_back(g.transpose());
    return out;
  }

  /// (G^(j))^{-T} per party: the contragredient action on the x vectors.
  LocalOperation inverse_transpose() const {
    LocalOperation out;
    for (const auto& g : factors) out.factors.push_back(inverse(g).transpose());
    return out;
  }
};

using ComplexOperation = LocalOperation<Complex>;

/// x = (x^(1), ..., x^(n)), one vector per party.
template <typename Scalar>
using PartyVectors = std::vector<Vector<Scalar>>;

namespace detail {

inline void require_proper_subset(const std::vector<int>& parties, int n) {
  if (parties.empty() || static_cast<int>(parties.size()) >= n)
    throw FormatError("party subset must be nonempty and proper");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : parties) {
    if (p < 0 || p >= n) throw FormatError("party index out of range");
    if (seen[p]) throw FormatError("repeated party index");
    seen[p] = true;
  }
}

template <typename Scalar>
void require_vectors(const TensorFormat& format, const PartyVectors<Scalar>& x) {
  if (static_cast<int>(x.size()) != format.parties())
    throw FormatError("one vector per party required");
  for (int j = 0; j < format.parties(); ++j)
    if (x[j].size() != format.dim(j))
      throw FormatError("party vector length does not match format");
}

}  // namespace detail

/// Rows are multi-indices over `parties` (in ascending party order,
/// lexicographic), columns are multi-indices over the complement.
template <typename Scalar>
Matrix<Scalar> flatten(const Tensor<Scalar>& a, std::vector<int> parties) {
  const int n = a.parties();
  detail::require_proper_subset(parties, n);
  std::sort(parties.begin(), parties.end());
  std::vector<int> rest;
  for (int j = 0; j < n; ++j)
    if (!std::binary_search(parties.begin(), parties.end(), j)) rest.push_back(j);

  Eigen::Index rows = 1, cols = 1;
  for (int p : parties) rows *= a.dim(p);
  for (int p : rest) cols *= a.dim(p);
  Matrix<Scalar> m(rows, cols);

  MultiIndex index(static_cast<std::size_t>(n), 0);
  do {
    Eigen::Index r = 0, c = 0;
    for (int p : parties) r = r * a.dim(p) + index[p];
    for (int p : rest) c = c * a.dim(p) + index[p];
    m(r, c) = a[index];
  } while (next_index(index, a.format().dims()));
  return m;
}

/// Inverse of flatten(., {party}) for a matrix whose row count may differ
/// from the original dimension of `party` (used to compress a party onto a
/// subspace).
template <typename Scalar>
Tensor<Scalar> unflatten_party(const Matrix<Scalar>& m,
                               const TensorFormat& format, int party) {
  std::vector<int> dims = format.dims();
  dims.at(static_cast<std::size_t>(party)) = static_cast<int>(m.rows());
  Tensor<Scalar> t{TensorFormat(dims)};
  MultiIndex index(dims.size(), 0);
  do {
    Eigen::Index c = 0;
    for (int j = 0; j < static_cast<int>(dims.size()); ++j)
      if (j != party) c = c * dims[j] + index[j];
    t[index] = m(index[party], c);
  } while (next_index(index, dims));
  return t;
}

/// (G.A)_{i1..in} = sum G^(1)_{i1 i1'} ... G^(n)_{in in'} A_{i1'..in'}
template <typename Scalar>
Tensor<Scalar> apply_local(const Tensor<Scalar>& a,
                           const LocalOperation<Scalar>& g) {
  const TensorFormat& format = a.format();
  if (static_cast<int>(g.factors.size()) != format.parties())
    throw FormatError("local operation needs one factor per party");
  for (int j = 0; j < format.parties(); ++j) {
    const auto& f = g.factors[j];
    if (f.rows() != format.dim(j) || f.cols() != format.dim(j))
      throw FormatError("local factor shape does not match party dimension");
  }

  Tensor<Scalar> current = a;
  for (int j = 0; j < format.parties(); ++j) {
    const auto& f = g.factors[j];
    if (f == Matrix<Scalar>::Identity(f.rows(), f.cols())) continue;
    const Matrix<Scalar> slab = f * flatten(current, {j});
    current = unflatten_party(slab, format, j);
  }
  return current;
}

/// F(A,B) = sum a_i b_i, bilinear, no conjugation.
template <typename Scalar>
Scalar pairing(const Tensor<Scalar>& a, const Tensor<Scalar>& b) {
  a.require_same_format(b);
  Scalar sum(0);
  for (Eigen::Index k = 0; k < a.coeffs().size(); ++k)
    sum += a.coeffs()(k) * b.coeffs()(k);
  return sum;
}

/// Contracts A with x^(j) for every party j not in `free_parties`; the result
/// is indexed by the free parties in ascending order. With no free party the
/// result is the 1-entry tensor holding F(A,x), returned as a scalar by
/// multilinear_eval.
template <typename Scalar>
Vector<Scalar> contract_except(const Tensor<Scalar>& a,
                               const PartyVectors<Scalar>& x,
                               std::vector<int> free_parties) {
  detail::require_vectors(a.format(), x);
  std::sort(free_parties.begin(), free_parties.end());
  Eigen::Index out_size = 1;
  for (int p : free_parties) out_size *= a.dim(p);
  Vector<Scalar> out = Vector<Scalar>::Zero(out_size);

  MultiIndex index(static_cast<std::size_t>(a.parties()), 0);
  do {
    const Scalar& coeff = a[index];
    if (is_zero(coeff)) continue;
    Scalar term = coeff;
    Eigen::Index pos = 0;
    for (int j = 0; j < a.parties() && !is_zero(term); ++j) {
      if (std::binary_search(free_parties.begin(), free_parties.end(), j))
        pos = pos * a.dim(j) + index[j];
      else
        term *= x[j](index[j]);
    }
    if (!is_zero(term)) out(pos) += term;
  } while (next_index(index, a.format().dims()));
  return out;
}

/// F(A,x) = sum a_{i1..in} x^(1)_{i1} ... x^(n)_{in}
template <typename Scalar>
Scalar multilinear_eval(const Tensor<Scalar>& a, const PartyVectors<Scalar>& x) {
  return contract_except(a, x, {})(0);
}

/// Partial derivatives dF/dx^(j)_{i}, grouped per party.
template <typename Scalar>
PartyVectors<Scalar> gradient(const Tensor<Scalar>& a,
                              const PartyVectors<Scalar>& x) {
  PartyVectors<Scalar> grad;
  for (int j = 0; j < a.parties(); ++j) grad.push_back(contract_except(a, x, {j}));
  return grad;
}

/// b_{i1..in} = x^(1)_{i1} ... x^(n)_{in}; throws DomainError on a zero vector.
template <typename Scalar>
Tensor<Scalar> segre_product(const PartyVectors<Scalar>& x) {
  std::vector<int> dims;
  for (const auto& v : x) {
    if (is_zero_matrix(v)) throw DomainError("segre_product of a zero vector");
    dims.push_back(static_cast<int>(v.size()));
  }
  Tensor<Scalar> t{TensorFormat(dims)};
  MultiIndex index(dims.size(), 0);
  do {
    Scalar v(1);
    for (std::size_t j = 0; j < dims.size(); ++j) v *= x[j](index[j]);
    t[index] = v;
  } while (next_index(index, dims));
  return t;
}

/// Party p of the result is party perm[p] of `a`.
template <typename Scalar>
Tensor<Scalar> permute_parties(const Tensor<Scalar>& a,
                               const std::vector<int>& perm) {
  const int n = a.parties();
  if (static_cast<int>(perm.size()) != n)
    throw FormatError("permutation length does not match party count");
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (int j = 0; j < n; ++j)
    if (check[j] != j) throw FormatError("not a permutation");

  std::vector<int> dims(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) dims[p] = a.dim(perm[p]);
  Tensor<Scalar> t{TensorFormat(dims)};
  MultiIndex index(static_cast<std::size_t>(n), 0), source(index);
  do {
    for (int p = 0; p < n; ++p) source[perm[p]] = index[p];
    t[index] = a[source];
  } while (next_index(index, dims));
  return t;
}

/// Stable sort of the parties by descending dimension (k1 >= k2 >= ...).
inline std::vector<int> canonical_permutation(const TensorFormat& format) {
  std::vector<int> perm(static_cast<std::size_t>(format.parties()));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return format.dim(a) > format.dim(b);
  });
  return perm;
}

}  // namespace slocc
