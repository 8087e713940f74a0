#include "slocc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slocc/classify.hpp"
#include "slocc/hyperdet.hpp"
#include "slocc/orbit_order.hpp"
#include "slocc/ranks.hpp"
#include "slocc/singularity.hpp"
#include "slocc/state_io.hpp"

namespace slocc::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string file;
  std::string op_file;
  std::string point_file;
  std::string output;
  std::string class_from;
  std::string class_to;
  std::vector<int> format;
  std::uint64_t seed = 1;
  long bound = 3;
  int trials = 50;
  bool json = false;
  bool dot = false;
  bool check_invertible = false;
  bool sequential = false;
};

State load_state(const std::string& path) { return parse_state(read_text_file(path)); }

std::vector<int> one_based(std::vector<int> v) {
  for (int& x : v) ++x;
  return v;
}

json pattern_json(const Partition& p) {
  json out = json::array();
  for (const auto& block : p) out.push_back(one_based(block));
  return out;
}

json state_json(const State& a) {
  json entries = json::array();
  MultiIndex index(static_cast<std::size_t>(a.parties()), 0);
  do {
    if (!a[index].is_zero())
      entries.push_back({{"index", index}, {"value", a[index].to_string()}});
  } while (next_index(index, a.format().dims()));
  return {{"format", a.format().dims()}, {"entries", entries}};
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(v[k]);
  }
  return out;
}

bool is_identity_perm(const std::vector<int>& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != static_cast<int>(k)) return false;
  return true;
}

Parallelism parallelism(const Options& o) {
  return o.sequential ? Parallelism::Sequential : Parallelism::Threads;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_hyperdet(const Options& o, std::ostream& out) {
  const State a = load_state(o.file);
  const auto r = hyperdet(a, parallelism(o));
  const bool zero = r.value.is_zero();
  if (o.json) {
    emit(out, {{"command", "hyperdet"},
               {"format", a.format().dims()},
               {"value", r.value.to_string()},
               {"degree", r.degree},
               {"zero", zero},
               {"permutation", one_based(r.permutation)}});
  } else {
    out << "Det = " << r.value << '\n'
        << "degree = " << r.degree << '\n'
        << "verdict = " << (zero ? "zero" : "nonzero") << '\n';
  }
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const State a = load_state(o.file);
  const Classification c = classify(a, parallelism(o));
  const auto& cls = c.entanglement_class;
  if (o.json) {
    emit(out, {{"command", "classify"},
               {"format", a.format().dims()},
               {"canonical_format", cls.format.dims()},
               {"permutation", one_based(c.permutation)},
               {"class", cls.name},
               {"dimension", cls.dimension},
               {"local_ranks", c.local_ranks},
               {"separability", pattern_json(c.pattern)},
               {"det", c.det ? json(c.det->to_string()) : json(nullptr)},
               {"equivalence_decided", c.equivalence_decided}});
    return kOk;
  }
  out << cls.name << " dim=" << cls.dimension << " ranks=" << join(c.local_ranks)
      << '\n';
  out << "separability: " << pattern_to_string(c.pattern) << '\n';
  if (c.det) out << "det: " << *c.det << '\n';
  if (!is_identity_perm(c.permutation))
    out << "permutation: " << join(one_based(c.permutation))
        << " (canonical format " << cls.format.to_string() << ")\n";
  if (!c.equivalence_decided)
    out << "note: SLOCC equivalence inside GEN4 is not decided "
           "(three continuous parameters remain)\n";
  return kOk;
}

int cmd_ranks(const Options& o, std::ostream& out) {
  const State a = load_state(o.file);
  const auto r = local_ranks(a);
  if (o.json)
    emit(out, {{"command", "ranks"}, {"format", a.format().dims()}, {"local_ranks", r}});
  else
    out << "ranks=" << join(r) << '\n';
  return kOk;
}

int cmd_separability(const Options& o, std::ostream& out) {
  const State a = load_state(o.file);
  const Partition p = separability_pattern(a);
  const bool full = static_cast<int>(p.size()) == a.parties();
  if (o.json) {
    emit(out, {{"command", "separability"},
               {"format", a.format().dims()},
               {"pattern", pattern_json(p)},
               {"fully_separable", full},
               {"genuinely_entangled", p.size() == 1}});
  } else {
    out << "separability: " << pattern_to_string(p) << '\n';
  }
  return kOk;
}

int cmd_measure(const Options& o, std::ostream& out) {
  const State a = load_state(o.file);
  std::string name;
  Rational squared;
  if (a.format().dims() == std::vector<int>{2, 2}) {
    name = "C";
    squared = concurrence_sq(a);
  } else if (a.format().dims() == std::vector<int>{2, 2, 2}) {
    name = "tau";
    squared = tangle_sq(a);
  } else {
    throw FormatError("measure needs format 2x2 (concurrence) or 2x2x2 (3-tangle)");
  }
  const double modulus = display_modulus(squared);
  if (o.json) {
    emit(out, {{"command", "measure"},
               {"format", a.format().dims()},
               {"measure", name},
               {"squared", squared.to_string()},
               {"modulus", modulus}});
  } else {
    out << name << "^2 = " << squared << '\n'
        << name << " = " << std::setprecision(12) << modulus << '\n';
  }
  return kOk;
}

int cmd_apply(const Options& o, std::ostream& out) {
  const State a = load_state(o.file);
  const ComplexOperation g = parse_operation(read_text_file(o.op_file), a.format());
  const bool invertible = g.is_invertible();
  if (o.check_invertible && !invertible)
    throw DomainError("operation is not invertible (a factor has zero determinant)");
  const State b = apply_local(a, g);
  std::string text;
  if (o.json) {
    text = json{{"command", "apply"}, {"invertible", invertible}, {"state", state_json(b)}}
               .dump(2) + "\n";
  } else {
    text = serialize_state(b);
  }
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!(f << text)) throw IoError("cannot write '" + o.output + "'");
  }
  return kOk;
}

int cmd_convertible(const Options& o, std::ostream& out) {
  const TensorFormat format(o.format);
  const bool yes = can_degrade(format, o.class_from, o.class_to);
  if (o.json)
    emit(out, {{"command", "convertible"},
               {"format", canonical_format(format).dims()},
               {"from", o.class_from},
               {"to", o.class_to},
               {"convertible", yes}});
  else
    out << (yes ? "YES" : "NO") << '\n';
  return yes ? kOk : kNo;
}

int cmd_order(const Options& o, std::ostream& out) {
  const TensorFormat format = canonical_format(TensorFormat(o.format));
  if (o.json) {
    json nodes = json::array(), edges = json::array();
    for (const auto& c : known_classes(format))
      nodes.push_back({{"name", c.name}, {"dimension", c.dimension}});
    for (const auto& e : order_diagram(format))
      edges.push_back({{"from", e.from}, {"to", e.to}});
    emit(out, {{"command", "order"},
               {"format", format.dims()},
               {"nodes", nodes},
               {"edges", edges}});
  } else if (o.dot) {
    out << order_diagram_dot(format);
  } else {
    out << order_diagram_text(format);
  }
  return kOk;
}

int cmd_random(const Options& o, std::ostream& out) {
  const State a = random_state(TensorFormat(o.format), o.seed, o.bound);
  if (o.json)
    emit(out, {{"command", "random"},
               {"seed", o.seed},
               {"bound", o.bound},
               {"state", state_json(a)}});
  else
    out << serialize_state(a);
  return kOk;
}

int cmd_check_critical(const Options& o, std::ostream& out) {
  const State a = load_state(o.file);
  const auto x = parse_point(read_text_file(o.point_file), a.format());
  const bool critical = is_critical_point(a, x);
  json j{{"command", "check-critical"},
         {"format", a.format().dims()},
         {"critical", critical},
         {"value", multilinear_eval(a, x).to_string()}};
  json grad = json::array();
  for (const auto& g : gradient(a, x)) {
    json v = json::array();
    for (Eigen::Index k = 0; k < g.size(); ++k) v.push_back(g(k).to_string());
    grad.push_back(v);
  }
  j["gradient"] = grad;
  if (critical) {
    const ComplexMatrix h = hessian_matrix(a, x);
    const Complex hdet = determinant(h);
    const Complex chart_det = determinant(chart_hessian_matrix(a, x));
    j["hessian"] = matrix_json(h);
    j["hessian_det"] = hdet.to_string();
    j["cusp_condition"] = hdet.is_zero();
    j["chart_hessian_det"] = chart_det.to_string();
  } else {
    j["hessian"] = nullptr;
    j["hessian_det"] = nullptr;
    j["cusp_condition"] = nullptr;
    j["chart_hessian_det"] = nullptr;
  }
  if (o.json) {
    emit(out, j);
  } else {
    out << "F(A,x) = " << j["value"].get<std::string>() << '\n'
        << "critical: " << (critical ? "yes" : "no") << '\n';
    if (critical) {
      out << "hessian_det = " << j["hessian_det"].get<std::string>() << '\n'
          << "cusp_condition: " << (j["cusp_condition"].get<bool>() ? "yes" : "no")
          << '\n'
          << "chart_hessian_det = " << j["chart_hessian_det"].get<std::string>()
          << '\n';
    }
  }
  return kOk;
}

int cmd_invariance_check(const Options& o, std::ostream& out) {
  const State a = load_state(o.file);
  const std::string base = classify(a, parallelism(o)).entanglement_class.name;
  SplitMix64 rng(o.seed);
  int passed = 0;
  json failures = json::array();
  for (int t = 0; t < o.trials; ++t) {
    const ComplexOperation g = random_invertible_operation(a.format(), rng);
    const std::string got =
        classify(apply_local(a, g), parallelism(o)).entanglement_class.name;
    if (got == base)
      ++passed;
    else
      failures.push_back({{"trial", t}, {"class", got}});
  }
  const bool ok = passed == o.trials;
  if (o.json) {
    emit(out, {{"command", "invariance-check"},
               {"class", base},
               {"seed", o.seed},
               {"trials", o.trials},
               {"passed", passed},
               {"failures", failures},
               {"pass", ok}});
  } else {
    out << "class " << base << ": " << passed << "/" << o.trials
        << " invertible local operations preserved the class -> "
        << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kOk : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact hyperdeterminants and SLOCC classification of small tensors",
               "slocc"};
  app.require_subcommand(1);
  Options o;

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON output"); };
  auto seq_flag = [&](CLI::App* sub) {
    sub->add_flag("--sequential", o.sequential,
                  "evaluate Schlafli interpolation points on one thread");
  };

  auto* hd = app.add_subcommand("hyperdet", "hyperdeterminant value and degree");
  hd->add_option("file", o.file, "state file")->required();
  json_flag(hd);
  seq_flag(hd);

  auto* cl = app.add_subcommand("classify", "SLOCC class, dimension, local ranks");
  cl->add_option("file", o.file, "state file")->required();
  json_flag(cl);
  seq_flag(cl);

  auto* rk = app.add_subcommand("ranks", "local ranks");
  rk->add_option("file", o.file, "state file")->required();
  json_flag(rk);

  auto* sp = app.add_subcommand("separability", "finest product decomposition");
  sp->add_option("file", o.file, "state file")->required();
  json_flag(sp);

  auto* ms = app.add_subcommand("measure", "squared concurrence / 3-tangle");
  ms->add_option("file", o.file, "state file")->required();
  json_flag(ms);

  auto* ap = app.add_subcommand("apply", "apply a local operation");
  ap->add_option("file", o.file, "state file")->required();
  ap->add_option("--op", o.op_file, "operation file")->required();
  ap->add_flag("--check-invertible", o.check_invertible,
               "fail unless every factor has nonzero determinant");
  ap->add_option("-o,--output", o.output, "write the state here instead of stdout");
  json_flag(ap);

  auto* cv = app.add_subcommand("convertible", "can class A degrade to class B");
  cv->add_option("from", o.class_from, "source class")->required();
  cv->add_option("to", o.class_to, "target class")->required();
  cv->add_option("--format", o.format, "party dimensions")->required()->expected(1, 8);
  json_flag(cv);

  auto* od = app.add_subcommand("order", "degradation diagram of a format");
  od->add_option("--format", o.format, "party dimensions")->required()->expected(1, 8);
  od->add_flag("--dot", o.dot, "Graphviz DOT output");
  json_flag(od);

  auto* rd = app.add_subcommand("random", "seeded random state");
  rd->add_option("--format", o.format, "party dimensions")->required()->expected(1, 8);
  rd->add_option("--seed", o.seed, "seed")->required();
  rd->add_option("--bound", o.bound, "entry bound")->check(CLI::PositiveNumber);
  json_flag(rd);

  auto* cc = app.add_subcommand("check-critical", "critical point and Hessian report");
  cc->add_option("file", o.file, "state file")->required();
  cc->add_option("--point", o.point_file, "point file")->required();
  json_flag(cc);

  auto* ic = app.add_subcommand("invariance-check",
                                "classify under random invertible local operations");
  ic->add_option("file", o.file, "state file")->required();
  ic->add_option("--seed", o.seed, "seed")->required();
  ic->add_option("--trials", o.trials, "number of operations")->check(CLI::PositiveNumber);
  json_flag(ic);
  seq_flag(ic);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*hd) return cmd_hyperdet(o, out);
    if (*cl) return cmd_classify(o, out);
    if (*rk) return cmd_ranks(o, out);
    if (*sp) return cmd_separability(o, out);
    if (*ms) return cmd_measure(o, out);
    if (*ap) return cmd_apply(o, out);
    if (*cv) return cmd_convertible(o, out);
    if (*od) return cmd_order(o, out);
    if (*rd) return cmd_random(o, out);
    if (*cc) return cmd_check_critical(o, out);
    if (*ic) return cmd_invariance_check(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kFormat;
  } catch (const PolygonInequalityViolated& e) {
    err << "error: " << e.what() << '\n';
    return kPolygon;
  } catch (const NotImplemented& e) {
    err << "not implemented: " << e.what() << '\n';
    return kNotImplemented;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace slocc::cli
