#pragma once

// Degradation order of entanglement classes under noninvertible local
// operations. Edges are encoded from the known conversion statements, not
// inferred: LOCC reachability is not decidable from the invariants computed
// here. Each encoded 2x2x2, 3x2x2 and bipartite edge has a concrete witness
// operation (degradation_witness) so the encoding can be falsified.

#include <optional>
#include <string>
#include <vector>

#include "slocc/classify.hpp"
#include "slocc/tensor.hpp"

namespace slocc {

struct ClassEdge {
  std::string from;
  std::string to;
  friend bool operator==(const ClassEdge&, const ClassEdge&) = default;
};

class ClassDag {
 public:
  explicit ClassDag(const TensorFormat& canonical);

  const TensorFormat& format() const { return format_; }
  const std::vector<std::string>& nodes() const { return nodes_; }
  /// Direct (covering) edges.
  const std::vector<ClassEdge>& edges() const { return edges_; }

  bool contains(const std::string& name) const;
  /// Reflexive-transitive closure. Throws DomainError on unknown names.
  bool reaches(const std::string& from, const std::string& to) const;
  /// Everything reachable from `from`, itself included, in node order.
  std::vector<std::string> successors(const std::string& from) const;

 private:
  int node_index(const std::string& name) const;

  TensorFormat format_;
  std::vector<std::string> nodes_;
  std::vector<ClassEdge> edges_;
  std::vector<std::vector<bool>> closure_;
};

/// Formats are canonicalized (sorted) before lookup.
bool can_degrade(const TensorFormat& format, const std::string& from,
                 const std::string& to);
std::vector<std::string> degradation_targets(const TensorFormat& format,
                                             const std::string& from);
std::vector<ClassEdge> order_diagram(const TensorFormat& format);

/// "FROM -> TO" per line.
std::string order_diagram_text(const TensorFormat& format);
std::string order_diagram_dot(const TensorFormat& format);

/// A noninvertible local operation taking representative(from) into class
/// `to`, for a direct edge. Empty for the coarse 2x2x2x2 edges, which are
/// forced by local ranks only.
std::optional<ComplexOperation> degradation_witness(const TensorFormat& format,
                                                    const std::string& from,
                                                    const std::string& to);

TensorFormat canonical_format(const TensorFormat& format);

}  // namespace slocc
