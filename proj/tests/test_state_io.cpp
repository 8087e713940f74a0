#include <doctest.h>

#include <filesystem>

#include "slocc/errors.hpp"
#include "slocc/state_io.hpp"

using namespace slocc;

namespace {

const std::filesystem::path data_dir = SLOCC_DATA_DIR;

std::size_t error_line(std::string_view text) {
  try {
    parse_state(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse_state examples") {
  const State ghz = parse_state("format: 2 2 2\n0 0 0 : 1\n1 1 1 : 1\n");
  CHECK(ghz == State::from_kets(TensorFormat({2, 2, 2}), {{0, 0, 0}, {1, 1, 1}}));

  const State deg = parse_state("format: 3 2 2\n0 0 0 : 1\n1 0 1 : 1\n2 1 1 : 1\n");
  CHECK(deg == State::from_kets(TensorFormat({3, 2, 2}), {{0, 0, 0}, {1, 0, 1}, {2, 1, 1}}));

  const State c = parse_state("format: 2 2\n0 0 : 1/2-1/3i\n");
  CHECK(c[{0, 0}] == parse_scalar("1/2-1/3i"));
  CHECK(c[{1, 1}].is_zero());
}

TEST_CASE("comments, blank lines and CRLF") {
  const State a = parse_state(
      "# GHZ\r\n\r\nformat: 2 2   # two qubits\r\n0 0 : 1\r\n  1 1 : 1  \r\n# end\r\n");
  CHECK(a == State::from_kets(TensorFormat({2, 2}), {{0, 0}, {1, 1}}));
}

TEST_CASE("parse errors report the offending line") {
  CHECK(error_line("") == 1);
  CHECK(error_line("formt: 2 2\n") == 1);
  CHECK(error_line("format: 2 1\n") == 1);
  CHECK(error_line("format: 2 2\n0 0 : 1\n0 0 : 2\n") == 3);
  CHECK(error_line("format: 2 2\n0 2 : 1\n") == 2);
  CHECK(error_line("format: 2 2\n0 0 0 : 1\n") == 2);
  CHECK(error_line("format: 2 2\n\n0 0 : 1/0\n") == 3);
  CHECK(error_line("format: 2 2\n0 0 : 1 2\n") == 2);
  CHECK(error_line("format: 2 2\nnorm: 1\n") == 2);
  CHECK(error_line("format: 2 2\n0 0 1\n") == 2);
  CHECK_THROWS_WITH_AS(parse_state("format: 2 2\n\n0 x : 1\n"), doctest::Contains("line 3"),
                       ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  for (const auto& f : {TensorFormat({2, 2}), TensorFormat({3, 2, 2}),
                        TensorFormat({2, 2, 2, 2}), TensorFormat({2, 3})}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      State a = random_state(f, seed);
      a.coeffs()(0) = parse_scalar("-7/3+1/5i");
      CHECK(parse_state(serialize_state(a)) == a);
    }
  }
  const std::string text = serialize_state(parse_state("format: 2 2\n1 0 : -1/2\n"));
  CHECK(text == "format: 2 2\n1 0 : -1/2\n");
}

TEST_CASE("every fixture round-trips") {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir / "states")) {
    const State a = parse_state(read_text_file(entry.path()));
    CHECK(parse_state(serialize_state(a)) == a);
    ++count;
  }
  CHECK(count >= 20);
}

TEST_CASE("operation files") {
  const TensorFormat f({2, 2, 2});
  const ComplexOperation g = parse_operation(read_text_file(data_dir / "ops/shear_party1.op"), f);
  CHECK(g.factors[0](1, 0) == Complex(1));
  CHECK(g.factors[1] == ComplexMatrix::Identity(2, 2));
  CHECK(parse_operation(serialize_operation(g), f).factors == g.factors);
  CHECK_THROWS_AS(parse_operation("party 4\n1 0\n0 1\n", f), ParseError);
  CHECK_THROWS_AS(parse_operation("party 1\n1 0\n", f), ParseError);
  CHECK_THROWS_AS(parse_operation("party 1\n1 0\n0 1\nparty 1\n1 0\n0 1\n", f), ParseError);
  CHECK_THROWS_AS(parse_operation("1 0\n0 1\n", f), ParseError);
}

TEST_CASE("point files") {
  const TensorFormat f({2, 2, 2});
  const auto x = parse_point(read_text_file(data_dir / "points/e1e1e1.point"), f);
  REQUIRE(x.size() == 3);
  CHECK(x[2](1) == Complex(1));
  CHECK(x[2](0) == Complex(0));
  CHECK_THROWS_AS(parse_point("party 1\n0 1\n", f), ParseError);
}

TEST_CASE("missing files raise IoError") {
  CHECK_THROWS_AS(read_text_file(data_dir / "does-not-exist.state"), IoError);
}

TEST_CASE("SplitMix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
}

TEST_CASE("random_state is deterministic and never zero") {
  const TensorFormat f({2, 2, 2});
  CHECK(random_state(f, 1, 3) == random_state(f, 1, 3));
  CHECK_FALSE(random_state(f, 1, 3) == random_state(f, 2, 3));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const State a = random_state(TensorFormat({2, 2}), seed, 1);
    CHECK_FALSE(a.is_zero());
    for (Eigen::Index i = 0; i < a.coeffs().size(); ++i) {
      CHECK(abs(a.coeffs()(i).re().numerator()) <= 1);
      CHECK(abs(a.coeffs()(i).im().numerator()) <= 1);
    }
  }
  SplitMix64 rng(4);
  const auto g = random_invertible_operation(f, rng);
  for (const auto& m : g.factors) CHECK_FALSE(determinant(m).is_zero());
}
