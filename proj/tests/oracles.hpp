#pragma once

// Test-only reference computations. Each one reaches its answer by a route
// that shares no code with the library path it checks.

#include <algorithm>
#include <numeric>
#include <vector>

#include "slocc/linalg.hpp"
#include "slocc/state_io.hpp"
#include "slocc/tensor.hpp"

namespace oracle {

using slocc::Complex;
using slocc::ComplexMatrix;

/// Leibniz permutation expansion.
inline Complex leibniz_det(const ComplexMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Complex total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Complex term(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n && !term.is_zero(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Largest k with a nonzero k x k minor, by enumeration.
inline int rank_by_minors(const ComplexMatrix& m) {
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  for (int k = std::min(rows, cols); k >= 1; --k) {
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        std::vector<Eigen::Index> ri, ci;
        for (int i = 0; i < rows; ++i) if (rsel[i]) ri.push_back(i);
        for (int j = 0; j < cols; ++j) if (csel[j]) ci.push_back(j);
        if (!leibniz_det(m(ri, ci)).is_zero()) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

inline ComplexMatrix random_matrix(slocc::SplitMix64& rng, int rows, int cols,
                                   long bound = 3) {
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = Complex(slocc::Rational(rng.symmetric(bound)),
                        slocc::Rational(rng.symmetric(bound)));
  return m;
}

inline Complex random_scalar(slocc::SplitMix64& rng, long bound = 3) {
  return {slocc::Rational(rng.symmetric(bound)), slocc::Rational(rng.symmetric(bound))};
}

inline Complex random_nonzero(slocc::SplitMix64& rng, long bound = 3) {
  Complex z;
  do z = random_scalar(rng, bound);
  while (z.is_zero());
  return z;
}

/// Coefficients of prod_i (p_i x0 + q_i x1) by direct polynomial
/// multiplication, and the root-difference form of its discriminant:
///   (-1)^{l(l-1)/2} prod_{i<j} (p_i q_j - p_j q_i)^2,
/// which equals det(Sylvester(f, df/dx1)) / c_l (sign fixed by a symbolic
/// computation for l = 2, 3, 4).
struct LinearFactors {
  std::vector<Complex> p, q;

  std::vector<Complex> coefficients() const {
    std::vector<Complex> c{Complex(1)};
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::vector<Complex> next(c.size() + 1, Complex(0));
      for (std::size_t k = 0; k < c.size(); ++k) {
        next[k] += c[k] * p[i];
        next[k + 1] += c[k] * q[i];
      }
      c = std::move(next);
    }
    return c;
  }

  Complex discriminant() const {
    const std::size_t l = p.size();
    Complex prod((l * (l - 1) / 2) % 2 ? -1 : 1);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < l; ++j) {
        const Complex d = p[i] * q[j] - p[j] * q[i];
        prod *= d * d;
      }
    return prod;
  }
};

}  // namespace oracle
