#include <doctest.h>

#include <algorithm>
#include <random>

#include "gsx/lu_scan.hpp"
#include "support.hpp"

using namespace gsx;

namespace {

PauliString P(const char* s) { return PauliString::parse(s); }

}  // namespace

TEST_CASE("synthetic four-qubit marginals force a letter contradiction on qubit 1") {
  const std::vector<MarginalPair> pairs{
      {NodeSet{0, 1, 2, 4}, P("+ZXZIZII"), P("-YYYIYII")},
      {NodeSet{0, 3, 4, 6}, P("+ZIIXZIZ"), P("+ZIIXZIZ")},
  };
  const ScanVerdict v = scan_marginal_pairs(7, pairs);
  REQUIRE(v.inequivalent);
  REQUIRE(v.conflict);
  CHECK(v.conflict->qubit == 0);
  CHECK(v.conflict->kind == LetterConflict::Kind::Functional);
  CHECK(v.conflict->from1 == 'Z');
  CHECK(v.conflict->to1 == 'Y');
  CHECK(v.conflict->to2 == 'Z');
  CHECK(v.conflict->set1 == NodeSet{0, 1, 2, 4});
  CHECK(v.conflict->set2 == NodeSet{0, 3, 4, 6});
  CHECK(v.describe() == "qubit 1: Z->Y on {1,2,3,5} vs Z->Z on {1,4,5,7} (functional)");
  // Either marginal alone is consistent.
  CHECK_FALSE(scan_marginal_pairs(7, {pairs[0]}).inequivalent);
  CHECK_FALSE(scan_marginal_pairs(7, {pairs[1]}).inequivalent);
}

TEST_CASE("letter maps must stay injective and keep supports") {
  LetterMapAccumulator acc(2);
  CHECK_FALSE(acc.add(P("XZ"), P("ZZ"), NodeSet{0, 1}));
  const auto inj = acc.add(P("YZ"), P("ZZ"), NodeSet{0, 1});
  REQUIRE(inj);
  CHECK(inj->kind == LetterConflict::Kind::Injective);
  LetterMapAccumulator support(2);
  const auto sup = support.add(P("XI"), P("XZ"), NodeSet{0, 1});
  REQUIRE(sup);
  CHECK(sup->kind == LetterConflict::Kind::Support);
  CHECK(sup->qubit == 1);
  CHECK_THROWS_AS(support.add(P("X"), P("XX"), NodeSet{0}), Error);
}

TEST_CASE("a graph is never separated from itself or its LC walks") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const Graph g = random_connected_graph(n, rng);
    const ScanVerdict self = lu_inequivalence_scan(g, g, 6);
    REQUIRE_FALSE(self.inequivalent);
    const ScanVerdict walk = lu_inequivalence_scan(g, test::random_walk(g, 20, rng), 6);
    REQUIRE_FALSE(walk.inequivalent);
  }
}

TEST_CASE("the invariant prepass decides first") {
  const ScanVerdict v = lu_inequivalence_scan(cycle_graph(7), path_graph(7), 4);
  CHECK(v.inequivalent);
  REQUIRE(v.invariant_mismatch);
  CHECK(v.invariant_mismatch->k == 2);
  CHECK_THROWS_AS(lu_inequivalence_scan(path_graph(4), path_graph(4), 9), Error);
  CHECK_THROWS_AS(lu_inequivalence_scan(path_graph(4), path_graph(5), 3), Error);
}

TEST_CASE("marginal alignments") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const Graph g = random_connected_graph(n, rng);
    const std::vector<int> pi = test::random_permutation(n, rng);
    const Graph h = g.permuted(pi);
    const auto aligns = align_marginals(g, h, n - 1, 100000);
    REQUIRE_FALSE(aligns.empty());
    // The inverse relabeling restores g, so it must be among the solutions.
    std::vector<int> inverse(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] = i;
    REQUIRE(std::find(aligns.begin(), aligns.end(), inverse) != aligns.end());
    for (const auto& p : aligns) REQUIRE_FALSE(compare(g, h.permuted(p), Mode::Labeled, 1, n - 1).inequivalent);
  }
  CHECK(align_marginals(cycle_graph(7), path_graph(7), 2).empty());
}
