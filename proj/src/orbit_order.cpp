#include "slocc/orbit_order.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <sstream>

namespace slocc {
namespace {

const std::vector<int> k222{2, 2, 2};
const std::vector<int> k322{3, 2, 2};
const std::vector<int> k2222{2, 2, 2, 2};

// Block structure of a pattern class name; singleton blocks for SEP.
Partition blocks_of(const std::string& name, int n) {
  Partition p;
  if (name == "SEP") {
    for (int j = 0; j < n; ++j) p.push_back({j});
    return p;
  }
  p.emplace_back();
  for (std::size_t i = 5; i + 1 < name.size(); ++i) {
    if (name[i] == '|')
      p.emplace_back();
    else
      p.back().push_back(name[i] - '1');
  }
  return p;
}

// q is obtained from p by splitting exactly one block in two.
bool covers(const Partition& p, const Partition& q) {
  if (q.size() != p.size() + 1) return false;
  for (const auto& qb : q) {
    const bool inside = std::any_of(p.begin(), p.end(), [&](const auto& pb) {
      return std::includes(pb.begin(), pb.end(), qb.begin(), qb.end());
    });
    if (!inside) return false;
  }
  return true;
}

std::vector<ClassEdge> tripartite_edges(bool with_qutrit_top) {
  std::vector<ClassEdge> e;
  if (with_qutrit_top) {
    for (const char* top : {"GEN322", "DEG322"})
      for (const char* mid : {"GHZ", "W"}) e.push_back({top, mid});
  }
  for (const char* mid : {"GHZ", "W"})
    for (const char* b : {"B1", "B2", "B3"}) e.push_back({mid, b});
  for (const char* b : {"B1", "B2", "B3"}) e.push_back({b, "SEP"});
  return e;
}

ComplexMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  ComplexMatrix m(n, n);
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (int v : row) m(r, c++) = Complex(v);
    ++r;
  }
  return m;
}

}  // namespace

TensorFormat canonical_format(const TensorFormat& format) {
  std::vector<int> d = format.dims();
  std::stable_sort(d.begin(), d.end(), std::greater<>());
  return TensorFormat(d);
}

ClassDag::ClassDag(const TensorFormat& canonical)
    : format_(canonical_format(canonical)) {
  for (const auto& c : known_classes(format_)) nodes_.push_back(c.name);
  const auto& d = format_.dims();
  if (d.size() == 2) {
    for (std::size_t k = 0; k + 1 < nodes_.size(); ++k)
      edges_.push_back({nodes_[k], nodes_[k + 1]});
  } else if (d == k222) {
    edges_ = tripartite_edges(false);
  } else if (d == k322) {
    edges_ = tripartite_edges(true);
  } else {
    // Genuinely 4-partite classes share local ranks (2,2,2,2) and never
    // convert into each other; they degrade to the two-block patterns, and
    // patterns degrade by splitting a block.
    for (const auto& to : nodes_) {
      if (to == "GEN4" || to == "DEG4") continue;
      const Partition q = blocks_of(to, 4);
      if (q.size() == 2) {
        edges_.push_back({"GEN4", to});
        edges_.push_back({"DEG4", to});
      }
      for (const auto& from : nodes_) {
        if (from == "GEN4" || from == "DEG4" || from == to) continue;
        if (covers(blocks_of(from, 4), q)) edges_.push_back({from, to});
      }
    }
  }

  const std::size_t n = nodes_.size();
  closure_.assign(n, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < n; ++k) closure_[k][k] = true;
  for (const auto& e : edges_)
    closure_[node_index(e.from)][node_index(e.to)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (closure_[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (closure_[k][j]) closure_[i][j] = true;
}

int ClassDag::node_index(const std::string& name) const {
  const auto it = std::find(nodes_.begin(), nodes_.end(), name);
  if (it == nodes_.end())
    throw DomainError("unknown class '" + name + "' for format " +
                      format_.to_string());
  return static_cast<int>(it - nodes_.begin());
}

bool ClassDag::contains(const std::string& name) const {
  return std::find(nodes_.begin(), nodes_.end(), name) != nodes_.end();
}

bool ClassDag::reaches(const std::string& from, const std::string& to) const {
  return closure_[node_index(from)][node_index(to)];
}

std::vector<std::string> ClassDag::successors(const std::string& from) const {
  const int i = node_index(from);
  std::vector<std::string> out;
  for (std::size_t j = 0; j < nodes_.size(); ++j)
    if (closure_[i][j]) out.push_back(nodes_[j]);
  return out;
}

bool can_degrade(const TensorFormat& format, const std::string& from,
                 const std::string& to) {
  return ClassDag(format).reaches(from, to);
}

std::vector<std::string> degradation_targets(const TensorFormat& format,
                                             const std::string& from) {
  return ClassDag(format).successors(from);
}

std::vector<ClassEdge> order_diagram(const TensorFormat& format) {
  return ClassDag(format).edges();
}

std::string order_diagram_text(const TensorFormat& format) {
  std::ostringstream os;
  for (const auto& e : order_diagram(format)) os << e.from << " -> " << e.to << '\n';
  return os.str();
}

std::string order_diagram_dot(const TensorFormat& format) {
  const ClassDag dag(format);
  std::ostringstream os;
  os << "digraph \"" << dag.format().to_string() << "\" {\n";
  for (const auto& c : known_classes(dag.format()))
    os << "  \"" << c.name << "\" [label=\"" << c.name << "\\ndim " << c.dimension
       << "\"];\n";
  for (const auto& e : dag.edges())
    os << "  \"" << e.from << "\" -> \"" << e.to << "\" [style=dashed];\n";
  os << "}\n";
  return os.str();
}

std::optional<ComplexOperation> degradation_witness(const TensorFormat& format,
                                                    const std::string& from,
                                                    const std::string& to) {
  const ClassDag dag(format);
  const TensorFormat& f = dag.format();
  const auto& edges = dag.edges();
  if (std::find(edges.begin(), edges.end(), ClassEdge{from, to}) == edges.end())
    throw DomainError("no direct edge " + from + " -> " + to);

  const auto& d = f.dims();
  if (d.size() == 2) {
    // S_j -> S_{j-1}: drop basis vector j-1 on the first party.
    const int j = std::stoi(from.substr(1));
    ComplexMatrix p = ComplexMatrix::Identity(d[0], d[0]);
    p(j - 1, j - 1) = Complex(0);
    return ComplexOperation::on_party(f, 0, p);
  }
  if (d == k2222) return std::nullopt;

  const bool qutrit = d == k322;
  // Projectors on a qubit party.
  const ComplexMatrix keep0 = mat({{1, 0}, {0, 0}});
  const ComplexMatrix merge = mat({{1, 1}, {0, 0}});
  // Same on the first party, padded for the qutrit.
  const ComplexMatrix keep0_first = qutrit ? mat({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}) : keep0;
  const ComplexMatrix merge_first = qutrit ? mat({{1, 1, 0}, {0, 0, 0}, {0, 0, 0}}) : merge;

  using Key = std::pair<std::string, std::string>;
  const std::map<Key, std::pair<int, ComplexMatrix>> table = {
      // |0>,|2> kept, |1> killed: GEN322 -> |000>+|111>, DEG322 -> |000>+|111>
      {{"GEN322", "GHZ"}, {0, mat({{1, 0, 0}, {0, 0, 1}, {0, 0, 0}})}},
      {{"DEG322", "GHZ"}, {0, mat({{1, 0, 0}, {0, 0, 1}, {0, 0, 0}})}},
      // GEN322: |0> <-> |1>, |2> killed -> |100>+|001>+|010>
      {{"GEN322", "W"}, {0, mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}})}},
      // DEG322: |2> -> |0> -> |000>+|101>+|011>
      {{"DEG322", "W"}, {0, mat({{1, 0, 1}, {0, 1, 0}, {0, 0, 0}})}},
      // GHZ: merge one party onto |0>, leaving a Bell pair on the others
      {{"GHZ", "B1"}, {0, merge_first}},
      {{"GHZ", "B2"}, {1, merge}},
      {{"GHZ", "B3"}, {2, merge}},
      // W: project one party onto |0>
      {{"W", "B1"}, {0, keep0_first}},
      {{"W", "B2"}, {1, keep0}},
      {{"W", "B3"}, {2, keep0}},
      // B1 = |001>+|010>, B2 = |001>+|100>, B3 = |010>+|100>
      {{"B1", "SEP"}, {1, keep0}},
      {{"B2", "SEP"}, {0, keep0_first}},
      {{"B3", "SEP"}, {0, keep0_first}},
  };
  const auto& [party, matrix] = table.at({from, to});
  return ComplexOperation::on_party(f, party, matrix);
}

}  // namespace slocc
