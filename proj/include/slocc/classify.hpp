#pragma once

// SLOCC orbit classes per format and the decision trees that assign them.
//
// Stable class names:
//   2x2x2, 3x2x2 : GHZ W B1 B2 B3 SEP, plus GEN322 DEG322 for 3x2x2
//   2x2x2x2      : GEN4 (Det != 0), DEG4 (Det = 0, genuinely 4-partite),
//                  PROD[..] for partially separable patterns such as
//                  PROD[1|234] or PROD[12|34], and SEP
//   d1 x d2      : S<j>, j = local rank

#include <optional>
#include <string>
#include <vector>

#include "slocc/hyperdet.hpp"
#include "slocc/singularity.hpp"
#include "slocc/tensor.hpp"

namespace slocc {

struct EntanglementClass {
  /// Canonical (descending) format the class belongs to.
  TensorFormat format;
  std::string name;
  /// Dimension of the projective orbit; for the coarse 2x2x2x2 classes the
  /// dimension of the stratum.
  int dimension = 0;

  friend bool operator==(const EntanglementClass&,
                         const EntanglementClass&) = default;
};

struct Classification {
  EntanglementClass entanglement_class;
  /// Party p of the canonical tensor is input party permutation[p].
  std::vector<int> permutation;
  /// Of the canonical tensor.
  std::vector<int> local_ranks;
  /// Of the canonical tensor.
  Partition pattern;
  /// Hyperdeterminant when the decision tree evaluated it.
  std::optional<Complex> det;
  /// False for GEN4: equivalence of two generic 4-qubit states is not decided
  /// by the coarse classes (three continuous parameters remain).
  bool equivalence_decided = true;
};

EntanglementClass classify_2x2x2(const State& a);
EntanglementClass classify_3x2x2(const State& a);
EntanglementClass classify_2x2x2x2(
    const State& a, Parallelism parallelism = Parallelism::Sequential);
EntanglementClass classify_bipartite(const State& a);

/// Sorts the parties into canonical order, routes to the per-format tree and
/// collects the diagnostic payload. Throws DomainError on the zero tensor and
/// FormatError on unsupported formats.
Classification classify(const State& a,
                        Parallelism parallelism = Parallelism::Sequential);

bool is_classifiable_format(const TensorFormat& canonical);

/// Every class of a canonical format, outermost first.
std::vector<EntanglementClass> known_classes(const TensorFormat& canonical);

/// Throws DomainError for a name that is not a class of `canonical`.
EntanglementClass find_class(const TensorFormat& canonical,
                             const std::string& name);

State representative(const EntanglementClass& c);
int class_dimension(const EntanglementClass& c);

/// alpha(|0000>+|1111>) + beta(|0011>+|1100>) + gamma(|0101>+|1010>)
///   + delta(|0110>+|1001>)
State generic_4qubit_state(const Complex& alpha, const Complex& beta,
                           const Complex& gamma, const Complex& delta);

/// Restricts `party` to the span of `basis` (rows expressed in the flattening
/// column space): the new dimension of `party` is basis.rows().
State compress_party(const State& a, int party, const ComplexMatrix& basis);

/// "PROD[12|34]" style label, 1-based parties; "SEP" for all singletons.
std::string pattern_name(const Partition& pattern);
/// "{1,2}{3,4}" style, 1-based.
std::string pattern_to_string(const Partition& pattern);

}  // namespace slocc
