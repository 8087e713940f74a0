#pragma once

// Hyperdeterminant engines.
//
//  * 2x2       : a00 a11 - a01 a10
//  * 2x2x2     : Cayley's degree-4 polynomial, written out term by term
//  * 3x2x2     : boundary format, m1 m4 - m2 m3 over the 3x3 minors of the
//                3x4 qutrit flattening (m_j drops column j)
//  * 2x2x2x2   : Schlafli's construction. The first party becomes a pencil
//                parameter x = (x0, x1); Det of the 2x2x2 pencil is a binary
//                quartic whose discriminant (Sylvester form) is Det A4 up to a
//                constant.
//
// Normalization. The raw Schlafli output is the Sylvester determinant of
// (f, df/dx1) divided by the leading coefficient c_l, with no further
// constant. Against the explicit formulas it carries fixed factors:
//
//   lift over det_2x2   = -1  * det_2x2x2       (checked on random tensors)
//   lift over det_2x2x2 = 256 * P(alpha,beta,gamma,delta)
//
// where P is the product of squared linear factors that Det A4 takes on the
// one-parameter-family states
//   alpha(|0000>+|1111>) + beta(|0011>+|1100>)
//     + gamma(|0101>+|1010>) + delta(|0110>+|1001>).
// det_2x2x2x2 divides by 256 so that P appears with a plus sign and unit
// coefficient.

#include <array>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include "slocc/errors.hpp"
#include "slocc/linalg.hpp"
#include "slocc/tensor.hpp"

namespace slocc {

enum class Parallelism { Sequential, Threads };

inline constexpr int kSchlafliFactor2x2x2 = -1;
inline constexpr int kSchlafliFactor2x2x2x2 = 256;

namespace detail {

template <typename Scalar>
void require_format(const Tensor<Scalar>& a, std::vector<int> dims,
                    const char* engine) {
  if (a.format().dims() != dims)
    throw FormatError(std::string(engine) + " called on format " +
                      a.format().to_string());
}

}  // namespace detail

template <typename Scalar>
Scalar det_2x2(const Tensor<Scalar>& a) {
  detail::require_format(a, {2, 2}, "det_2x2");
  const auto& c = a.coeffs();
  return c(0) * c(3) - c(1) * c(2);
}

template <typename Scalar>
Scalar det_2x2x2(const Tensor<Scalar>& a) {
  detail::require_format(a, {2, 2, 2}, "det_2x2x2");
  // c(k) = a_{ijk} with k = 4i + 2j + k
  const auto& c = a.coeffs();
  const Scalar &a000 = c(0), &a001 = c(1), &a010 = c(2), &a011 = c(3),
               &a100 = c(4), &a101 = c(5), &a110 = c(6), &a111 = c(7);
  Scalar squares = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
                   a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
  Scalar pairs = a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 +
                 a000 * a100 * a011 * a111 + a001 * a010 * a101 * a110 +
                 a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101;
  Scalar quads = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111;
  return squares - Scalar(2) * pairs + Scalar(4) * quads;
}

/// The four 3x3 minors m1..m4 of the qutrit flattening (m_j without column j).
template <typename Scalar>
std::array<Scalar, 4> boundary_minors_3x2x2(const Tensor<Scalar>& a) {
  detail::require_format(a, {3, 2, 2}, "boundary_minors_3x2x2");
  const Matrix<Scalar> m = flatten(a, {0});
  std::array<Scalar, 4> out;
  for (Eigen::Index j = 0; j < 4; ++j) out[j] = minor(m, {}, {j});
  return out;
}

template <typename Scalar>
Scalar det_3x2x2(const Tensor<Scalar>& a) {
  detail::require_format(a, {3, 2, 2}, "det_3x2x2");
  const auto m = boundary_minors_3x2x2(a);
  return m[0] * m[3] - m[1] * m[2];
}

/// c_0 x0^l + c_1 x0^{l-1} x1 + ... + c_l x1^l
template <typename Scalar>
struct BinaryForm {
  std::vector<Scalar> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Scalar& leading() const { return coeffs.back(); }
  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!slocc::is_zero(c)) return false;
    return true;
  }

  Scalar operator()(const Scalar& x0, const Scalar& x1) const {
    Scalar sum(0);
    const int l = degree();
    for (int j = 0; j <= l; ++j)
      sum += coeffs[j] * pow(x0, static_cast<unsigned>(l - j)) *
             pow(x1, static_cast<unsigned>(j));
    return sum;
  }
};

/// Order 2l-1: l-1 shifted rows of (c_0..c_l), then l shifted rows of the
/// x1-derivative coefficients (1 c_1, 2 c_2, ..., l c_l).
template <typename Scalar>
Matrix<Scalar> sylvester_matrix(const BinaryForm<Scalar>& f) {
  const int l = f.degree();
  const int n = 2 * l - 1;
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (int r = 0; r < l - 1; ++r)
    for (int j = 0; j <= l; ++j) m(r, r + j) = f.coeffs[j];
  for (int r = 0; r < l; ++r)
    for (int j = 1; j <= l; ++j) m(l - 1 + r, r + j - 1) = Scalar(j) * f.coeffs[j];
  return m;
}

/// f(x0 + s x1, x1), a unimodular change of variables.
template <typename Scalar>
BinaryForm<Scalar> shear(const BinaryForm<Scalar>& f, const Scalar& s) {
  const int l = f.degree();
  BinaryForm<Scalar> out{std::vector<Scalar>(f.coeffs.size(), Scalar(0))};
  for (int k = 0; k <= l; ++k) {
    if (is_zero(f.coeffs[k])) continue;
    // c_k (x0 + s x1)^{l-k} x1^k
    Scalar binom(1);
    Scalar s_pow(1);
    for (int p = 0; p <= l - k; ++p) {
      out.coeffs[k + p] += f.coeffs[k] * binom * s_pow;
      binom = binom * Scalar(l - k - p) / Scalar(p + 1);
      s_pow *= s;
    }
  }
  return out;
}

/// Shears tried, in order, when the leading coefficient vanishes.
inline constexpr std::array<int, 8> kShearSequence = {1, -1, 2, -2, 3, -3, 4, -4};

/// det(sylvester_matrix(f)) / c_l. When c_l = 0 the form is first moved by
/// the shears of kShearSequence, which leave the discriminant unchanged.
/// Zero exactly when f has a repeated root on the projective line.
template <typename Scalar>
Scalar binary_discriminant(BinaryForm<Scalar> f) {
  if (f.degree() < 2) throw DomainError("binary_discriminant needs degree >= 2");
  if (f.is_zero()) throw DomainError("binary_discriminant of the zero form");
  if (is_zero(f.leading())) {
    bool found = false;
    for (int s : kShearSequence) {
      BinaryForm<Scalar> g = shear(f, Scalar(s));
      if (!is_zero(g.leading())) {
        f = std::move(g);
        found = true;
        break;
      }
    }
    // A nonzero form of degree l < 8 is nonzero at some s in the sequence.
    if (!found) return Scalar(0);
  }
  return determinant(sylvester_matrix(f)) / f.leading();
}

/// x0 A_0 + x1 A_1 for the two slices of the first party.
template <typename Scalar>
Tensor<Scalar> pencil(const Tensor<Scalar>& a, const Scalar& x0,
                      const Scalar& x1) {
  if (a.parties() < 2 || a.dim(0) != 2)
    throw FormatError("pencil needs format 2 x ...");
  std::vector<int> dims(a.format().dims().begin() + 1, a.format().dims().end());
  const Eigen::Index half = a.coeffs().size() / 2;
  Vector<Scalar> c = x0 * a.coeffs().head(half) + x1 * a.coeffs().tail(half);
  return Tensor<Scalar>(TensorFormat(dims), std::move(c));
}

/// Coefficients of Det(pencil(A, x)) as a binary form of degree `degree`,
/// recovered by exact interpolation at x = (1,0), (1,1), ..., (1,l); the
/// value at (0,1) must reproduce c_l.
template <typename Scalar, typename InnerDet>
BinaryForm<Scalar> pencil_form(const Tensor<Scalar>& a, InnerDet&& inner,
                               int degree,
                               Parallelism parallelism = Parallelism::Sequential) {
  const int points = degree + 2;
  auto sample = [&](int k) -> Scalar {
    const bool at_infinity = k == degree + 1;
    return inner(pencil(a, Scalar(at_infinity ? 0 : 1),
                        Scalar(at_infinity ? 1 : k)));
  };

  std::vector<Scalar> values(static_cast<std::size_t>(points));
  if (parallelism == Parallelism::Threads) {
    std::vector<std::future<Scalar>> futures;
    for (int k = 0; k < points; ++k)
      futures.push_back(std::async(std::launch::async, sample, k));
    for (int k = 0; k < points; ++k) values[k] = futures[k].get();
  } else {
    for (int k = 0; k < points; ++k) values[k] = sample(k);
  }

  Matrix<Scalar> vandermonde(degree + 1, degree + 1);
  Vector<Scalar> rhs(degree + 1);
  for (int t = 0; t <= degree; ++t) {
    for (int j = 0; j <= degree; ++j)
      vandermonde(t, j) = pow(Scalar(t), static_cast<unsigned>(j));
    rhs(t) = values[t];
  }
  const Vector<Scalar> c = solve(vandermonde, rhs);
  BinaryForm<Scalar> f{std::vector<Scalar>(c.data(), c.data() + c.size())};
  if (!(f.leading() == values[degree + 1]))
    throw std::logic_error("inner determinant is not homogeneous of degree " +
                           std::to_string(degree));
  return f;
}

/// Raw Schlafli construction: discriminant of Det(pencil(A, x)). An
/// identically vanishing pencil determinant gives 0.
template <typename Scalar, typename InnerDet>
Scalar schlafli_lift(const Tensor<Scalar>& a, InnerDet&& inner, int degree,
                     Parallelism parallelism = Parallelism::Sequential) {
  const BinaryForm<Scalar> f =
      pencil_form(a, std::forward<InnerDet>(inner), degree, parallelism);
  if (f.is_zero()) return Scalar(0);
  return binary_discriminant(f);
}

template <typename Scalar>
Scalar det_2x2x2x2(const Tensor<Scalar>& a,
                   Parallelism parallelism = Parallelism::Sequential) {
  detail::require_format(a, {2, 2, 2, 2}, "det_2x2x2x2");
  auto inner = [](const Tensor<Scalar>& t) { return det_2x2x2(t); };
  return schlafli_lift(a, inner, 4, parallelism) /
         Scalar(kSchlafliFactor2x2x2x2);
}

/// Degree of homogeneity of Det for a (canonically sorted) supported format,
/// 0 if unsupported.
inline int hyperdet_degree(const TensorFormat& format) {
  const auto& d = format.dims();
  if (d.size() == 2 && d[0] == d[1]) return d[0];
  if (d == std::vector<int>{2, 2, 2}) return 4;
  if (d == std::vector<int>{3, 2, 2}) return 6;
  if (d == std::vector<int>{2, 2, 2, 2}) return 24;
  return 0;
}

template <typename Scalar>
struct HyperdetResult {
  Scalar value;
  TensorFormat format;
  int degree = 0;
  /// Party order used for evaluation; identity unless the input was sorted.
  std::vector<int> permutation;
};

/// Dispatches on format. Formats are first sorted by descending dimension.
/// Throws PolygonInequalityViolated when Det does not exist and
/// NotImplemented when it exists but has no engine here.
template <typename Scalar>
HyperdetResult<Scalar> hyperdet(const Tensor<Scalar>& a,
                                Parallelism parallelism = Parallelism::Sequential) {
  if (!a.format().hyperdet_exists())
    throw PolygonInequalityViolated(
        "hyperdeterminant does not exist for format " + a.format().to_string() +
        " (polygon inequality violated)");
  const std::vector<int> perm = canonical_permutation(a.format());
  const Tensor<Scalar> b = permute_parties(a, perm);
  const TensorFormat& f = b.format();
  const int degree = hyperdet_degree(f);
  if (degree == 0)
    throw NotImplemented("no hyperdeterminant engine for format " +
                         a.format().to_string());

  Scalar value;
  if (f.parties() == 2)
    value = f.dim(0) == 2 ? det_2x2(b) : determinant(flatten(b, {0}));
  else if (f.dims() == std::vector<int>{2, 2, 2})
    value = det_2x2x2(b);
  else if (f.dims() == std::vector<int>{3, 2, 2})
    value = det_3x2x2(b);
  else
    value = det_2x2x2x2(b, parallelism);
  return {std::move(value), a.format(), degree, perm};
}

/// C^2 = 4 |Det A2|^2 on the raw (unnormalized) coefficients.
inline Rational concurrence_sq(const State& a) {
  return Rational(4) * abs_squared(det_2x2(a));
}

/// tau^2 = 16 |Det A3|^2 on the raw coefficients.
inline Rational tangle_sq(const State& a) {
  return Rational(16) * abs_squared(det_2x2x2(a));
}

/// Floating modulus of an exact squared measure, for display only.
inline double display_modulus(const Rational& squared) {
  return std::sqrt(squared.to_double());
}

}  // namespace slocc
