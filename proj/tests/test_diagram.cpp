#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shg/diagram.hpp"
#include "support/brute_force.hpp"

#include <algorithm>
#include <set>

using namespace shg;
using namespace shg::testing;

namespace {

ProcessVector pv(std::vector<int> blocks) {
  return ProcessVector(std::move(blocks));
}

}  // namespace

TEST_CASE("enumerate_processes matches the brute-force word filter") {
  // reference: run-length encodings of all length-r words whose running SH
  // count stays nonnegative, enumerated independently
  const std::vector<std::size_t> expected_counts{1, 1, 2, 3, 6, 10, 20, 35, 70};
  for (int r = 0; r <= 8; ++r) {
    std::set<std::vector<int>> reference;
    for (const auto& word : all_words(r))
      if (running_count_ok(word))
        reference.insert(encode_word(word).blocks());

    const auto enumerated = enumerate_processes(r);
    CHECK(enumerated.size() == expected_counts[static_cast<std::size_t>(r)]);
    CHECK(enumerated.size() == reference.size());
    for (const auto& k : enumerated) {
      CHECK(reference.count(k.blocks()) == 1);
      CHECK(k.order() == r);
      CHECK(is_admissible(k));
    }
    CHECK(std::is_sorted(enumerated.begin(), enumerated.end()));
  }
}

TEST_CASE("enumerate_processes small orders explicitly") {
  const auto r0 = enumerate_processes(0);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0].is_identity());

  const auto r2 = enumerate_processes(2);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == pv({1, 1}));
  CHECK(r2[1] == pv({2}));
}

TEST_CASE("enumerate_pairs at second order") {
  const auto pairs = enumerate_pairs(2);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].left() == ProcessVector{});
  CHECK(pairs[0].right() == pv({1, 1}));
  CHECK(pairs[0].multiplicity() == 2);
  CHECK(pairs[1].left() == pv({1}));
  CHECK(pairs[1].right() == pv({1}));
  CHECK(pairs[1].multiplicity() == 1);
  // {(), (2)} is excluded: the sides output different states
  for (const auto& pair : pairs)
    CHECK(!(pair.left().is_identity() && pair.right() == pv({2})));
}

TEST_CASE("enumerate_pairs basics") {
  const auto r0 = enumerate_pairs(0);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0].left().is_identity());
  CHECK(r0[0].right().is_identity());
  CHECK(r0[0].multiplicity() == 1);

  CHECK_THROWS_AS(enumerate_pairs(3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_pairs(-2), std::invalid_argument);
}

TEST_CASE("pairs are canonical, parity-matched and net-matched") {
  for (int total : {2, 4, 6, 8}) {
    const auto pairs = enumerate_pairs(total);
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& pair : pairs) {
      CHECK(pair.total_order() == total);
      CHECK((pair.left_order() - pair.right_order()) % 2 == 0);
      CHECK(!(pair.right() < pair.left()));
      CHECK(pair.outputs_match());
      CHECK(pair.multiplicity() == (pair.left() == pair.right() ? 1 : 2));
      CHECK(seen.insert({pair.left().blocks(), pair.right().blocks()}).second);
    }
  }
}

TEST_CASE("diagram_term reproduces the second-order law") {
  for (int n : {2, 3, 5, 9}) {
    const auto same = diagram_term(DiagramPair(pv({1}), pv({1})), n);
    CHECK(same.target_v == 1);
    CHECK(same.gamma_power == 2);
    CHECK(same.coefficient == n * (n - 1));

    const auto cross = diagram_term(DiagramPair(ProcessVector{}, pv({1, 1})), n);
    CHECK(cross.target_v == 0);
    CHECK(cross.gamma_power == 2);
    CHECK(cross.coefficient == -n * (n - 1));
  }
}

TEST_CASE("diagram_term on the twelfth-order worked pair") {
  const DiagramPair pair(pv({2, 1, 4, 1}), pv({4}));
  CHECK(!pair.is_canonical());  // hand-built pairs keep their orientation
  CHECK(pair.canonical().left() == pv({4}));
  CHECK(pair.multiplicity() == 2);
  for (int n = 10; n <= 14; ++n) {
    const auto term = diagram_term(pair, n);
    CHECK(term.target_v == 4);
    CHECK(term.gamma_power == 12);
    const Rational closed_form =
        Rational(falling_factorial(n, 4) * falling_factorial(n - 2, 8)) /
        2016;
    CHECK(term.coefficient == closed_form);
  }
  CHECK(diagram_term(pair, 10).coefficient == 100800);
  // single-diagram value before conjugate doubling
  CHECK(diagram_term(pair, 10).coefficient / pair.multiplicity() == 50400);
}

TEST_CASE("diagram_term rejects mismatched outputs and vanishes for small n") {
  CHECK_THROWS_AS(diagram_term(DiagramPair(ProcessVector{}, pv({2})), 6),
                  InvalidPair);
  const DiagramPair pair(pv({2, 1, 4, 1}), pv({4}));
  for (int n = 0; n < 10; ++n)
    CHECK(diagram_term(pair, n).coefficient == 0);
}

TEST_CASE("swapping sides leaves the contribution unchanged") {
  for (int total : {2, 4, 6}) {
    for (const auto& pair : enumerate_pairs(total)) {
      const DiagramPair swapped(pair.right(), pair.left());
      CHECK(swapped.canonical() == pair);
      for (int n : {3, 6, 11})
        CHECK(diagram_term(swapped, n).coefficient ==
              diagram_term(pair, n).coefficient);
    }
  }
}

TEST_CASE("probability_term is the nonnegative diagonal") {
  const auto p1 = probability_term(pv({1}), 4);
  CHECK(p1.target_v == 1);
  CHECK(p1.gamma_power == 2);
  CHECK(p1.coefficient == 12);

  const auto pid = probability_term(ProcessVector{}, 9);
  CHECK(pid.target_v == 0);
  CHECK(pid.gamma_power == 0);
  CHECK(pid.coefficient == 1);

  const auto p111 = probability_term(pv({1, 1, 1}), 2);
  CHECK(p111.target_v == 1);
  CHECK(p111.gamma_power == 6);
  CHECK(p111.coefficient == Rational(2) / 9);

  CHECK_THROWS_AS(probability_term(pv({1, 2}), 5), InadmissibleProcess);

  for (int r = 0; r <= 6; ++r)
    for (const auto& k : enumerate_processes(r))
      for (int n : {0, 2, 5, 12})
        CHECK(probability_term(k, n).coefficient >= 0);
}

TEST_CASE("pair slugs are stable") {
  CHECK(pair_slug(DiagramPair(pv({4}), pv({2, 1, 4, 1}))) == "R12_4__2-1-4-1");
  CHECK(pair_slug(DiagramPair(pv({2, 1, 4, 1}), pv({4})).canonical()) ==
        "R12_4__2-1-4-1");
  CHECK(pair_slug(DiagramPair(ProcessVector{}, pv({1, 1}))) == "R2_id__1-1");
  CHECK(pair_slug(DiagramPair(ProcessVector{}, ProcessVector{})) == "R0_id__id");
}
