#include <doctest.h>

#include <random>

#include "gsx/analysis.hpp"
#include "support.hpp"

using namespace gsx;

TEST_CASE("staged decisions") {
  const Verdict a = decide(star_graph(4), complete_graph(4));
  CHECK(a.status == Status::LCEquivalent);
  CHECK(a.stage == Stage::LcSearch);
  CHECK_FALSE(a.invariant_witness);

  const Verdict b = decide(cycle_graph(7), path_graph(7));
  CHECK(b.status == Status::LUInequivalent);
  CHECK(b.stage == Stage::Invariants);
  REQUIRE(b.invariant_witness);
  CHECK(b.invariant_witness->k == 2);
  REQUIRE(b.stages.size() == 2);
  CHECK(b.stages[0].stage == Stage::LcSearch);

  const Verdict c = decide(path_graph(6), path_graph(6));
  CHECK(c.status == Status::LCEquivalent);
  CHECK_THROWS_AS(decide(path_graph(4), path_graph(5)), Error);
}

TEST_CASE("batch mode runs the invariants first") {
  const Verdict v = decide(cycle_graph(7), path_graph(7), PipelineOptions{.batch = true});
  CHECK(v.status == Status::LUInequivalent);
  REQUIRE(v.stages.size() == 1);
  CHECK(v.stages[0].stage == Stage::Invariants);
}

TEST_CASE("an exhausted budget is never a verdict") {
  std::mt19937_64 rng(2);
  const Graph g = random_connected_graph(8, rng);
  const Graph h = test::random_walk(g, 20, rng);
  PipelineOptions o;
  o.budget = 3;
  REQUIRE_FALSE(g == h);
  const Verdict v = decide(g, h, o);
  CHECK(v.status == Status::Inconclusive);
  CHECK_FALSE(v.stage);
  CHECK(v.stages[0].outcome.find("budget exhausted") == 0);
  CHECK_FALSE(v.invariant_witness);
  CHECK_FALSE(v.conflict);
}

TEST_CASE("unlabeled decisions") {
  std::mt19937_64 rng(5);
  PipelineOptions o;
  o.mode = Mode::Unlabeled;
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_connected_graph(7, rng);
    const Graph h = test::random_walk(g, 20, rng).permuted(test::random_permutation(7, rng));
    CHECK(decide(g, h, o).status == Status::LCEquivalent);
  }
  const Verdict v = decide(star_graph(5), path_graph(5), o);
  CHECK(v.status == Status::LUInequivalent);
  CHECK(v.stage == Stage::Invariants);
}

TEST_CASE("the scan prepass looks past the invariant k range") {
  // 1-2-3-4 and 1-4-3-2 differ first at d_{1,2}, beyond kmax = 1.
  PipelineOptions o;
  o.kmax = 1;
  const Verdict v = decide(path_graph(4), Graph(4, {{0, 3}, {3, 2}, {2, 1}}), o);
  CHECK(v.status == Status::LUInequivalent);
  CHECK(v.stage == Stage::Scan);
  REQUIRE(v.invariant_witness);
  CHECK(v.invariant_witness->k == 2);
}

TEST_CASE("tables") {
  TableRequest r;
  r.n = 6;
  r.kind = InvariantKind::List;
  const auto rows = compute_table(r);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].result.ks == std::vector<int>{2});
  CHECK(rows[2].aggregated);
  CHECK(rows[2].result.r == doctest::Approx(1.0));

  r.kind = InvariantKind::Tensor;
  CHECK(compute_table(r).size() == 2);

  r.n = 8;
  CHECK_THROWS_AS(compute_table(r), Error);
  r.db = compute_db(5, Mode::Unlabeled);
  CHECK_THROWS_AS(compute_table(r), Error);  // node count mismatch

  r.n = 5;
  r.kind = InvariantKind::List;
  r.ks = {2};
  const auto from_db = compute_table(r);
  CHECK(from_db[0].result.r == doctest::Approx(1.0));
  CHECK_FALSE(from_db[0].has_p);
  r.kind = InvariantKind::Tensor;
  CHECK_THROWS_AS(compute_table(r), Error);  // tensors need labeled orbits
}
