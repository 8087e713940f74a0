#include <doctest.h>

#include "oracles.hpp"
#include "slocc/classify.hpp"
#include "slocc/orbit_order.hpp"

using namespace slocc;

namespace {

const TensorFormat f22({2, 2}), f33({3, 3}), f222({2, 2, 2}), f322({3, 2, 2}),
    f2222({2, 2, 2, 2});

std::string name_of(const State& a) { return classify(a).entanglement_class.name; }

ComplexMatrix singular_matrix(SplitMix64& rng, int n) {
  const int r = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
  if (r == 0) return ComplexMatrix::Zero(n, n);
  return oracle::random_matrix(rng, n, r, 2) * oracle::random_matrix(rng, r, n, 2);
}

}  // namespace

TEST_CASE("2x2x2 examples") {
  const auto ghz = classify_2x2x2(State::from_kets(f222, {{0, 0, 0}, {1, 1, 1}}));
  CHECK(ghz.name == "GHZ");
  CHECK(ghz.dimension == 7);
  const auto w = classify_2x2x2(State::from_kets(f222, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  CHECK(w.name == "W");
  CHECK(w.dimension == 6);
  CHECK(classify_2x2x2(State::from_kets(f222, {{0, 1, 0}, {1, 0, 0}})).name == "B3");
  CHECK(classify_2x2x2(State::from_kets(f222, {{0, 0, 1}, {0, 1, 0}})).name == "B1");
  CHECK(classify_2x2x2(State::from_kets(f222, {{1, 1, 1}})).name == "SEP");
  CHECK_THROWS_AS(classify_2x2x2(State(f222)), DomainError);
}

TEST_CASE("3x2x2 examples") {
  const auto gen =
      classify_3x2x2(State::from_kets(f322, {{0, 0, 0}, {1, 0, 1}, {1, 1, 0}, {2, 1, 1}}));
  CHECK(gen.name == "GEN322");
  CHECK(gen.dimension == 11);
  const auto ghz = classify_3x2x2(State::from_kets(f322, {{0, 0, 0}, {1, 1, 1}}));
  CHECK(ghz.name == "GHZ");
  CHECK(ghz.dimension == 9);
  const auto b1 = classify_3x2x2(State::from_kets(f322, {{0, 0, 1}, {0, 1, 0}}));
  CHECK(b1.name == "B1");
  CHECK(b1.dimension == 5);
  CHECK(classify_3x2x2(State::from_kets(f322, {{0, 0, 0}, {1, 0, 1}, {2, 1, 1}})).name ==
        "DEG322");
}

TEST_CASE("2x2x2x2 examples") {
  const auto gen = classify(generic_4qubit_state(1, 2, 3, 5));
  CHECK(gen.entanglement_class.name == "GEN4");
  CHECK_FALSE(gen.equivalence_decided);
  REQUIRE(gen.det.has_value());
  CHECK_FALSE(gen.det->is_zero());
  // (1,2,3,4) sits on the factor alpha - beta - gamma + delta = 0
  CHECK(name_of(generic_4qubit_state(1, 2, 3, 4)) == "DEG4");
  const auto deg = classify(State::from_kets(f2222, {{0, 0, 0, 0}, {1, 1, 1, 1}}));
  CHECK(deg.entanglement_class.name == "DEG4");
  CHECK(deg.equivalence_decided);
  CHECK(deg.local_ranks == std::vector<int>{2, 2, 2, 2});
  const auto pairs = classify(State::from_kets(f2222, {{0, 0, 0, 1}, {0, 0, 1, 0}}));
  CHECK(pairs.entanglement_class.name == "PROD[1|2|34]");
  CHECK(pairs.pattern == Partition{{0}, {1}, {2, 3}});
  CHECK(name_of(State::from_kets(f2222, {{0, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1},
                                         {1, 1, 1, 1}})) == "PROD[12|34]");
  CHECK(name_of(State::from_kets(f2222, {{0, 0, 0, 0}})) == "SEP");
}

TEST_CASE("bipartite and dispatcher examples") {
  CHECK(name_of(State::from_kets(f22, {{0, 0}, {1, 1}})) == "S2");
  CHECK(name_of(State::from_kets(f33, {{0, 0}, {1, 1}, {2, 2}})) == "S3");
  CHECK(name_of(State::from_kets(f33, {{0, 0}, {1, 1}})) == "S2");
  CHECK(classify(State::from_kets(f33, {{0, 0}, {1, 1}, {2, 2}})).entanglement_class.dimension ==
        8);

  const State permuted =
      State::from_kets(TensorFormat({2, 2, 3}), {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 2}});
  const auto c = classify(permuted);
  CHECK(c.entanglement_class.name == "GEN322");
  CHECK(c.entanglement_class.format == f322);
  CHECK(c.permutation == std::vector<int>{2, 0, 1});

  CHECK_THROWS_AS(classify(State(f222)), DomainError);
  CHECK_THROWS_AS(classify(State::from_kets(TensorFormat({3, 3, 2}), {{0, 0, 0}})),
                  FormatError);
}

TEST_CASE("representatives and dimensions") {
  const State w = representative(find_class(f222, "W"));
  CHECK(w == State::from_kets(f222, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  CHECK(class_dimension(find_class(f222, "W")) == 6);
  CHECK(representative(find_class(f322, "DEG322")) ==
        State::from_kets(f322, {{0, 0, 0}, {1, 0, 1}, {2, 1, 1}}));
  CHECK(class_dimension(find_class(f322, "DEG322")) == 10);
  CHECK(representative(find_class(f222, "SEP")) == State::from_kets(f222, {{0, 0, 0}}));
  CHECK(class_dimension(find_class(f222, "SEP")) == 3);
  CHECK_THROWS_AS(find_class(f222, "GEN322"), DomainError);
  CHECK(known_classes(f222).size() == 6);
  CHECK(known_classes(f322).size() == 8);
  CHECK(known_classes(f2222).size() == 16);
}

TEST_CASE("every representative round-trips") {
  for (const auto& f : {f22, f33, f222, f322, f2222, TensorFormat({4, 4})}) {
    for (const auto& c : known_classes(f)) {
      CAPTURE(c.name);
      CHECK(classify(representative(c)).entanglement_class == c);
    }
  }
}

TEST_CASE("classification is SLOCC invariant") {
  SplitMix64 rng(1);
  for (const auto& f : {f22, f33, f222, f322, f2222}) {
    for (const auto& c : known_classes(f)) {
      const State rep = representative(c);
      for (int t = 0; t < 3; ++t) {
        CAPTURE(c.name);
        CHECK(name_of(apply_local(rep, random_invertible_operation(f, rng))) == c.name);
      }
    }
  }
}

TEST_CASE("3x2x2 compression does not depend on the chosen basis") {
  SplitMix64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix p =
        oracle::random_matrix(rng, 3, 2, 2) * oracle::random_matrix(rng, 2, 3, 2);
    // alternate between GHZ-like and W-like inner states
    const State inner = t % 2 ? representative(find_class(f322, "W"))
                              : random_state(f322, rng);
    const State a = apply_local(inner, ComplexOperation::on_party(f322, 0, p));
    if (a.is_zero() || rank(flatten(a, {0})) != 2) continue;
    const ComplexMatrix basis = row_space_basis(flatten(a, {0}));
    ComplexMatrix mix;
    do mix = oracle::random_matrix(rng, 2, 2, 3);
    while (determinant(mix).is_zero());
    const ComplexMatrix other = mix * basis;
    const State c1 = compress_party(a, 0, basis);
    const State c2 = compress_party(a, 0, other);
    CHECK(c1.format() == f222);
    CHECK(classify_2x2x2(c1) == classify_2x2x2(c2));
    CHECK(classify_3x2x2(a).name == classify_2x2x2(c1).name);
  }
}

TEST_CASE("noninvertible operations only move down the order") {
  SplitMix64 rng(3);
  for (const auto& f : {f22, f33, f222, f322, f2222}) {
    for (const auto& c : known_classes(f)) {
      const State rep = representative(c);
      for (int t = 0; t < 4; ++t) {
        auto g = random_invertible_operation(f, rng);
        const int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(f.parties()));
        g.factors[j] = singular_matrix(rng, f.dim(j));
        const State out = apply_local(rep, g);
        if (out.is_zero()) continue;
        const std::string to = name_of(out);
        CAPTURE(c.name);
        CAPTURE(to);
        CHECK(can_degrade(f, c.name, to));
      }
    }
  }
}

TEST_CASE("pattern naming") {
  CHECK(pattern_name({{0}, {1, 2, 3}}) == "PROD[1|234]");
  CHECK(pattern_name({{0}, {1}, {2}, {3}}) == "SEP");
  CHECK(pattern_to_string({{0, 1}, {2, 3}}) == "{1,2}{3,4}");
}
