#pragma once

#include <vector>

#include "slocc/linalg.hpp"
#include "slocc/tensor.hpp"

namespace slocc {

/// Entry j is the rank of the single-party flattening at party j.
template <typename Scalar>
std::vector<int> local_ranks(const Tensor<Scalar>& a) {
  std::vector<int> ranks;
  if (a.parties() == 1) {
    ranks.push_back(a.is_zero() ? 0 : 1);
    return ranks;
  }
  for (int j = 0; j < a.parties(); ++j)
    ranks.push_back(static_cast<int>(rank(flatten(a, {j}))));
  return ranks;
}

/// Local rank of a bipartite state: A lies in S_j - S_{j-1} of the
/// rank onion.
template <typename Scalar>
int bipartite_class(const Tensor<Scalar>& a) {
  if (a.parties() != 2) throw FormatError("bipartite_class needs two parties");
  return static_cast<int>(rank(flatten(a, {0})));
}

}  // namespace slocc
