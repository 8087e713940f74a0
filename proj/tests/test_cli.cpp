#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "slocc/cli.hpp"
#include "slocc/state_io.hpp"

namespace fs = std::filesystem;
using slocc::cli::run;
namespace code = slocc::cli;

namespace {

const fs::path data_dir = SLOCC_DATA_DIR;
const fs::path golden_dir = SLOCC_GOLDEN_DIR;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string state(const std::string& name) {
  return (data_dir / "states" / (name + ".state")).string();
}

void check_golden(const std::vector<std::string>& args, const std::string& golden) {
  CAPTURE(golden);
  const Result r = invoke(args);
  REQUIRE(r.status == code::kOk);
  const auto expected = nlohmann::json::parse(slocc::read_text_file(golden_dir / golden));
  CHECK(nlohmann::json::parse(r.out) == expected);
}

}  // namespace

TEST_CASE("classify golden files") {
  for (const char* name : {"ghz3", "w3", "b1_3", "b2_3", "b3_3", "sep3", "gen322", "deg322",
                           "ghz322", "w322", "b1_322", "b2_322", "b3_322", "sep322",
                           "gen322_permuted", "ghz4", "w4", "g4_1235", "g4_1234",
                           "pairs4", "ghz2"}) {
    check_golden({"classify", state(name), "--json"}, std::string("classify_") + name + ".json");
  }
}

TEST_CASE("hyperdet golden files") {
  for (const char* name : {"ghz3", "w3", "gen322", "ghz4", "g4_1235", "ghz2", "complex3"})
    check_golden({"hyperdet", state(name), "--json"}, std::string("hyperdet_") + name + ".json");
  check_golden({"measure", state("complex3"), "--json"}, "measure_complex3.json");
  check_golden({"order", "--format", "2", "2", "2", "--json"}, "order_222.json");
  check_golden({"order", "--format", "3", "2", "2", "--json"}, "order_322.json");
  check_golden({"check-critical", state("w3"), "--point",
                (data_dir / "points/e1e1e1.point").string(), "--json"},
               "check_critical_w3.json");
}

TEST_CASE("text output") {
  const Result c = invoke({"classify", state("ghz3")});
  CHECK(c.out.rfind("GHZ dim=7 ranks=2,2,2\n", 0) == 0);

  const Result h = invoke({"hyperdet", state("g4_1235")});
  CHECK(h.out == "Det = 2431260562500\ndegree = 24\nverdict = nonzero\n");

  const Result o = invoke({"order", "--format", "2", "2"});
  CHECK(o.out == "S2 -> S1\n");

  const Result dot = invoke({"order", "--format", "2", "2", "2", "--dot"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
}

TEST_CASE("convertible answers through the exit code") {
  CHECK(invoke({"convertible", "GHZ", "W", "--format", "2", "2", "2"}).status == code::kNo);
  CHECK(invoke({"convertible", "GHZ", "W", "--format", "2", "2", "2"}).out == "NO\n");
  CHECK(invoke({"convertible", "W", "B2", "--format", "2", "2", "2"}).status == code::kOk);
  CHECK(invoke({"convertible", "GEN322", "W", "--format", "2", "3", "2"}).status == code::kOk);
  CHECK(invoke({"convertible", "GHZ", "GEN4", "--format", "2", "2", "2"}).status ==
        code::kDomain);
}

TEST_CASE("random and apply produce parseable states") {
  const Result r1 = invoke({"random", "--format", "3", "2", "2", "--seed", "9"});
  const Result r2 = invoke({"random", "--format", "3", "2", "2", "--seed", "9"});
  CHECK(r1.status == code::kOk);
  CHECK(r1.out == r2.out);
  CHECK(slocc::parse_state(r1.out) == slocc::random_state(slocc::TensorFormat({3, 2, 2}), 9));

  const Result a = invoke({"apply", state("ghz3"), "--op",
                           (data_dir / "ops/shear_party1.op").string()});
  CHECK(a.status == code::kOk);
  CHECK(a.out == "format: 2 2 2\n0 0 0 : 1\n1 0 0 : 1\n1 1 1 : 1\n");

  const fs::path out_file = fs::temp_directory_path() / "slocc_test_apply.state";
  CHECK(invoke({"apply", state("gen322"), "--op", (data_dir / "ops/gen322_to_ghz.op").string(),
                "-o", out_file.string()})
            .status == code::kOk);
  CHECK(invoke({"classify", out_file.string()}).out.rfind("GHZ dim=9", 0) == 0);
  fs::remove(out_file);

  CHECK(invoke({"apply", state("gen322"), "--op", (data_dir / "ops/gen322_to_ghz.op").string(),
                "--check-invertible"})
            .status == code::kDomain);
}

TEST_CASE("invariance-check") {
  const Result r = invoke({"invariance-check", state("w322"), "--seed", "3", "--trials", "10",
                           "--json"});
  CHECK(r.status == code::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["passed"] == 10);
}

TEST_CASE("sequential and threaded runs agree") {
  for (const char* name : {"g4_1235", "ghz4"}) {
    CHECK(invoke({"hyperdet", state(name), "--json"}).out ==
          invoke({"hyperdet", state(name), "--json", "--sequential"}).out);
  }
}

TEST_CASE("documented exit codes") {
  CHECK(invoke({}).status == code::kUsage);
  CHECK(invoke({"frobnicate"}).status == code::kUsage);
  CHECK(invoke({"hyperdet", "/nonexistent/x.state"}).status == code::kIo);
  CHECK(invoke({"hyperdet", state("bad422")}).status == code::kPolygon);

  const fs::path bad = fs::temp_directory_path() / "slocc_test_bad.state";
  {
    std::ofstream f(bad);
    f << "format: 2 2\n0 0 : 1\n0 0 : 2\n";
  }
  const Result p = invoke({"classify", bad.string()});
  CHECK(p.status == code::kParse);
  CHECK(p.err.find("line 3") != std::string::npos);
  {
    std::ofstream f(bad);
    f << "format: 3 3 2\n0 0 0 : 1\n";
  }
  CHECK(invoke({"hyperdet", bad.string()}).status == code::kNotImplemented);
  CHECK(invoke({"classify", bad.string()}).status == code::kFormat);
  CHECK(invoke({"measure", bad.string()}).status == code::kFormat);
  {
    std::ofstream f(bad);
    f << "format: 2 2 2\n";
  }
  CHECK(invoke({"classify", bad.string()}).status == code::kDomain);
  fs::remove(bad);

  CHECK(invoke({"check-critical", state("ghz3"), "--point",
                (data_dir / "points/e0e0e0.point").string()})
            .status == code::kOk);
}
