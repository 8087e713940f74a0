#include "slocc/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "slocc/ranks.hpp"

namespace slocc {
namespace {

const std::vector<int> k222{2, 2, 2};
const std::vector<int> k322{3, 2, 2};
const std::vector<int> k2222{2, 2, 2, 2};

// Projective dimension of the closure of states that factor along `pattern`.
int pattern_dimension(const TensorFormat& format, const Partition& pattern) {
  int dim = 0;
  for (const auto& block : pattern) {
    int size = 1;
    for (int p : block) size *= format.dim(p);
    dim += size - 1;
  }
  return dim;
}

// Every set partition of {0..n-1}, in restricted-growth-string order.
std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> block_of(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int j, int blocks) {
    if (j == n) {
      Partition p(static_cast<std::size_t>(blocks));
      for (int k = 0; k < n; ++k) p[block_of[k]].push_back(k);
      out.push_back(std::move(p));
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block_of[j] = b;
      rec(j + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

Partition parse_pattern_name(const std::string& name, int n) {
  // PROD[12|34]
  if (name.size() < 7 || name.rfind("PROD[", 0) != 0 || name.back() != ']')
    return {};
  Partition p(1);
  for (std::size_t i = 5; i + 1 < name.size(); ++i) {
    const char c = name[i];
    if (c == '|') {
      p.emplace_back();
    } else if (c >= '1' && c < '1' + n) {
      p.back().push_back(c - '1');
    } else {
      return {};
    }
  }
  return p;
}

EntanglementClass make(const TensorFormat& f, std::string name, int dim) {
  return {f, std::move(name), dim};
}

const std::map<std::string, int> kDims222 = {
    {"GHZ", 7}, {"W", 6}, {"B1", 4}, {"B2", 4}, {"B3", 4}, {"SEP", 3}};
const std::map<std::string, int> kDims322 = {
    {"GEN322", 11}, {"DEG322", 10}, {"GHZ", 9}, {"W", 8},
    {"B2", 6},      {"B3", 6},      {"B1", 5},  {"SEP", 4}};

void require_nonzero(const State& a) {
  if (a.is_zero()) throw DomainError("the zero tensor is not a state");
}

// Name for a 3-party separability pattern.
std::string tripartite_pattern_name(const Partition& pattern) {
  if (pattern.size() == 3) return "SEP";
  for (const auto& block : pattern)
    if (block.size() == 1) return "B" + std::to_string(block.front() + 1);
  return {};
}

}  // namespace

std::string pattern_to_string(const Partition& pattern) {
  std::string out;
  for (const auto& block : pattern) {
    out += '{';
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(block[k] + 1);
    }
    out += '}';
  }
  return out;
}

std::string pattern_name(const Partition& pattern) {
  if (std::all_of(pattern.begin(), pattern.end(),
                  [](const auto& b) { return b.size() == 1; }))
    return "SEP";
  std::string out = "PROD[";
  for (std::size_t b = 0; b < pattern.size(); ++b) {
    if (b) out += '|';
    for (int p : pattern[b]) out += std::to_string(p + 1);
  }
  return out + "]";
}

EntanglementClass classify_2x2x2(const State& a) {
  if (a.format().dims() != k222) throw FormatError("classify_2x2x2 needs format 2x2x2");
  require_nonzero(a);
  const TensorFormat& f = a.format();
  const auto r = local_ranks(a);
  const int ones = static_cast<int>(std::count(r.begin(), r.end(), 1));
  if (ones == 3) return make(f, "SEP", 3);
  if (ones == 1) {
    const auto j = std::find(r.begin(), r.end(), 1) - r.begin();
    return make(f, "B" + std::to_string(j + 1), 4);
  }
  return is_zero(det_2x2x2(a)) ? make(f, "W", 6) : make(f, "GHZ", 7);
}

State compress_party(const State& a, int party, const ComplexMatrix& basis) {
  return unflatten_party(basis, a.format(), party);
}

EntanglementClass classify_3x2x2(const State& a) {
  if (a.format().dims() != k322) throw FormatError("classify_3x2x2 needs format 3x2x2");
  require_nonzero(a);
  const TensorFormat& f = a.format();
  const auto r = local_ranks(a);
  if (r[0] == 3)
    return is_zero(det_3x2x2(a)) ? make(f, "DEG322", 10) : make(f, "GEN322", 11);
  if (std::find(r.begin(), r.end(), 1) != r.end()) {
    const std::string name = tripartite_pattern_name(separability_pattern(a));
    return make(f, name, kDims322.at(name));
  }
  // r = (2,2,2): the state lives in a 2-dimensional subspace of the qutrit.
  const State qubits = compress_party(a, 0, row_space_basis(flatten(a, {0})));
  const std::string name = classify_2x2x2(qubits).name;
  return make(f, name, kDims322.at(name));
}

EntanglementClass classify_2x2x2x2(const State& a, Parallelism parallelism) {
  if (a.format().dims() != k2222)
    throw FormatError("classify_2x2x2x2 needs format 2x2x2x2");
  require_nonzero(a);
  const TensorFormat& f = a.format();
  const Partition pattern = separability_pattern(a);
  if (pattern.size() > 1)
    return make(f, pattern_name(pattern), pattern_dimension(f, pattern));
  return is_zero(det_2x2x2x2(a, parallelism)) ? make(f, "DEG4", 14)
                                              : make(f, "GEN4", 15);
}

EntanglementClass classify_bipartite(const State& a) {
  require_nonzero(a);
  const TensorFormat& f = a.format();
  const int j = bipartite_class(a);
  return make(f, "S" + std::to_string(j), j * (f.dim(0) + f.dim(1) - j) - 1);
}

bool is_classifiable_format(const TensorFormat& canonical) {
  const auto& d = canonical.dims();
  return d.size() == 2 || d == k222 || d == k322 || d == k2222;
}

Classification classify(const State& a, Parallelism parallelism) {
  require_nonzero(a);
  Classification out;
  out.permutation = canonical_permutation(a.format());
  const State b = permute_parties(a, out.permutation);
  const auto& d = b.format().dims();
  if (!is_classifiable_format(b.format()))
    throw FormatError("classification not supported for format " +
                      a.format().to_string());

  if (d.size() == 2) {
    out.entanglement_class = classify_bipartite(b);
  } else if (d == k222) {
    out.entanglement_class = classify_2x2x2(b);
  } else if (d == k322) {
    out.entanglement_class = classify_3x2x2(b);
  } else {
    out.entanglement_class = classify_2x2x2x2(b, parallelism);
  }
  out.local_ranks = local_ranks(b);
  out.pattern = separability_pattern(b);
  if (b.format().hyperdet_exists()) out.det = hyperdet(b, parallelism).value;
  out.equivalence_decided = out.entanglement_class.name != "GEN4";
  return out;
}

std::vector<EntanglementClass> known_classes(const TensorFormat& canonical) {
  const auto& d = canonical.dims();
  std::vector<EntanglementClass> out;
  if (d.size() == 2) {
    for (int j = std::min(d[0], d[1]); j >= 1; --j)
      out.push_back(make(canonical, "S" + std::to_string(j),
                         j * (d[0] + d[1] - j) - 1));
  } else if (d == k222) {
    for (const char* n : {"GHZ", "W", "B1", "B2", "B3", "SEP"})
      out.push_back(make(canonical, n, kDims222.at(n)));
  } else if (d == k322) {
    for (const char* n : {"GEN322", "DEG322", "GHZ", "W", "B1", "B2", "B3", "SEP"})
      out.push_back(make(canonical, n, kDims322.at(n)));
  } else if (d == k2222) {
    out.push_back(make(canonical, "GEN4", 15));
    out.push_back(make(canonical, "DEG4", 14));
    auto parts = all_partitions(4);
    std::stable_sort(parts.begin(), parts.end(),
                     [](const Partition& x, const Partition& y) {
                       return x.size() < y.size();
                     });
    for (const auto& p : parts) {
      if (p.size() < 2) continue;
      out.push_back(make(canonical, pattern_name(p), pattern_dimension(canonical, p)));
    }
  } else {
    throw FormatError("no class catalogue for format " + canonical.to_string());
  }
  return out;
}

EntanglementClass find_class(const TensorFormat& canonical,
                             const std::string& name) {
  for (auto& c : known_classes(canonical))
    if (c.name == name) return c;
  throw DomainError("unknown class '" + name + "' for format " +
                    canonical.to_string());
}

State generic_4qubit_state(const Complex& alpha, const Complex& beta,
                           const Complex& gamma, const Complex& delta) {
  State s{TensorFormat(k2222)};
  s[{0, 0, 0, 0}] = alpha;
  s[{1, 1, 1, 1}] = alpha;
  s[{0, 0, 1, 1}] = beta;
  s[{1, 1, 0, 0}] = beta;
  s[{0, 1, 0, 1}] = gamma;
  s[{1, 0, 1, 0}] = gamma;
  s[{0, 1, 1, 0}] = delta;
  s[{1, 0, 0, 1}] = delta;
  return s;
}

namespace {

// |0...0> + |1...1> on each block of size >= 2, |0> on singletons.
State pattern_representative(const TensorFormat& f, const Partition& pattern) {
  State s(f);
  const int n = f.parties();
  for (unsigned mask = 0; mask < (1U << pattern.size()); ++mask) {
    MultiIndex index(static_cast<std::size_t>(n), 0);
    bool valid = true;
    for (std::size_t b = 0; b < pattern.size(); ++b) {
      const int bit = (mask >> b) & 1U;
      if (bit && pattern[b].size() == 1) valid = false;
      for (int p : pattern[b]) index[p] = bit;
    }
    if (valid) s[index] = Complex(1);
  }
  return s;
}

}  // namespace

State representative(const EntanglementClass& c) {
  const TensorFormat& f = c.format;
  const auto& d = f.dims();
  const std::string& n = c.name;
  if (d.size() == 2) {
    const int j = std::stoi(n.substr(1));
    std::vector<MultiIndex> kets;
    for (int i = 0; i < j; ++i) kets.push_back({i, i});
    return State::from_kets(f, kets);
  }
  if (d == k222 || d == k322) {
    if (n == "GEN322") return State::from_kets(f, {{0, 0, 0}, {1, 0, 1}, {1, 1, 0}, {2, 1, 1}});
    if (n == "DEG322") return State::from_kets(f, {{0, 0, 0}, {1, 0, 1}, {2, 1, 1}});
    if (n == "GHZ") return State::from_kets(f, {{0, 0, 0}, {1, 1, 1}});
    if (n == "W") return State::from_kets(f, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    if (n == "B1") return State::from_kets(f, {{0, 0, 1}, {0, 1, 0}});
    if (n == "B2") return State::from_kets(f, {{0, 0, 1}, {1, 0, 0}});
    if (n == "B3") return State::from_kets(f, {{0, 1, 0}, {1, 0, 0}});
    if (n == "SEP") return State::from_kets(f, {{0, 0, 0}});
  }
  if (d == k2222) {
    if (n == "GEN4") return generic_4qubit_state(1, 2, 3, 5);
    if (n == "DEG4") return State::from_kets(f, {{0, 0, 0, 0}, {1, 1, 1, 1}});
    if (n == "SEP") return State::from_kets(f, {{0, 0, 0, 0}});
    const Partition p = parse_pattern_name(n, 4);
    if (!p.empty()) return pattern_representative(f, p);
  }
  throw DomainError("no representative for class '" + n + "' of format " +
                    f.to_string());
}

int class_dimension(const EntanglementClass& c) {
  return find_class(c.format, c.name).dimension;
}

}  // namespace slocc
