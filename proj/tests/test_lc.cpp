#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gsx/canonical.hpp"
#include "gsx/lc.hpp"
#include "support.hpp"

using namespace gsx;

namespace {

// 1-based label order along a 4-node path, e.g. {1,4,3,2}.
Graph labeled_path(const std::vector<int>& order) {
  Graph g(static_cast<int>(order.size()));
  for (std::size_t i = 0; i + 1 < order.size(); ++i) g.add_edge(order[i] - 1, order[i + 1] - 1);
  return g;
}

}  // namespace

TEST_CASE("local complementation on stars") {
  for (int n = 3; n <= 8; ++n) {
    CHECK(local_complement(star_graph(n), 0) == complete_graph(n));
    CHECK(local_complement(star_graph(n), n - 1) == star_graph(n));
  }
  CHECK_THROWS_AS(local_complement(star_graph(4), 4), Error);
}

TEST_CASE("local complementation is an involution that keeps graphs connected") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Graph g = random_connected_graph(n, rng);
    const int i = static_cast<int>(rng() % static_cast<unsigned>(n));
    const Graph h = local_complement(g, i);
    REQUIRE(local_complement(h, i) == g);
    REQUIRE(is_connected(h));
    // Edges at i never change.
    REQUIRE(h.neighbors(i) == g.neighbors(i));
  }
}

TEST_CASE("orbit sizes") {
  const auto star4 = lc_orbit(star_graph(4));
  CHECK(star4.size() == 5);
  CHECK(star4.front() == star_graph(4));
  CHECK(std::find(star4.begin(), star4.end(), complete_graph(4)) != star4.end());
  CHECK(lc_orbit(star_graph(7)).size() == 8);
  CHECK(lc_orbit(complete_graph(2)).size() == 1);
  CHECK_THROWS_AS(lc_orbit(path_graph(7), 10), OrbitOverflow);
}

TEST_CASE("labeled equivalence of 4-node paths") {
  const Graph l1234 = labeled_path({1, 2, 3, 4});
  CHECK(lc_equivalent(l1234, labeled_path({1, 2, 4, 3})));
  CHECK_FALSE(lc_equivalent(l1234, labeled_path({1, 4, 3, 2})));
  CHECK(lc_equivalent(l1234, l1234));
  CHECK(class_equivalent(l1234, labeled_path({1, 4, 3, 2})));
  CHECK_FALSE(class_equivalent(star_graph(4), path_graph(4)));
}

TEST_CASE("equivalence is symmetric and transitive along walks") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph a = random_connected_graph(n, rng);
    const Graph b = test::random_walk(a, 7, rng);
    const Graph c = test::random_walk(b, 7, rng);
    REQUIRE(lc_equivalent(a, b));
    REQUIRE(lc_equivalent(b, a));
    REQUIRE(lc_equivalent(a, c));
    const Graph p = c.permuted(test::random_permutation(n, rng));
    REQUIRE(class_equivalent(a, p));
    REQUIRE(class_key(a) == class_key(p));
  }
}

TEST_CASE("connected graph enumeration") {
  CHECK(enumerate_connected_graphs(2).size() == 1);
  CHECK(enumerate_connected_graphs(3).size() == 4);
  CHECK(enumerate_connected_graphs(4).size() == 38);
  CHECK(enumerate_connected_graphs(5).size() == 728);
  const auto g4 = enumerate_connected_graphs(4);
  CHECK(std::is_sorted(g4.begin(), g4.end(), [](const Graph& a, const Graph& b) { return a.code() < b.code(); }));
}

TEST_CASE("partition of the 4-node graphs") {
  const auto g4 = enumerate_connected_graphs(4);
  CHECK(partition_orbits(g4, Mode::Labeled).orbit_count == 4);
  CHECK(partition_orbits(g4, Mode::Unlabeled).orbit_count == 2);
  const UniversePartition u = partition_universe(4);
  CHECK(u.codes.size() == 38);
  CHECK(u.orbit_reps.size() == 4);
  CHECK(u.class_reps.size() == 2);
  std::multiset<std::uint64_t> sizes(u.orbit_size.begin(), u.orbit_size.end());
  CHECK(sizes == std::multiset<std::uint64_t>{5, 11, 11, 11});
}

TEST_CASE("line census") {
  std::vector<int> order{1, 2, 3, 4};
  std::set<Graph> family;
  do {
    for (const Graph& h : lc_orbit(labeled_path(order))) family.insert(h);
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(family.size() == 33);
  const std::vector<Graph> members(family.begin(), family.end());
  CHECK(partition_orbits(members, Mode::Labeled).orbit_count == 3);
  CHECK(partition_orbits(members, Mode::Unlabeled).orbit_count == 1);
  CHECK(unlabeled_orbit(path_graph(4)).size() == 4);
}

TEST_CASE("class keys separate classes at 5 nodes") {
  std::set<Graph> keys;
  for_each_connected_graph(5, [&](const Graph& g) { keys.insert(class_key(g)); });
  CHECK(keys.size() == 4);
}

TEST_CASE("unlabeled orbit cap") {
  CHECK_THROWS_AS(unlabeled_orbit(path_graph(8), 2), OrbitOverflow);
  CHECK(unlabeled_orbit(star_graph(6)).size() == 2);
}

TEST_CASE("mode names") {
  CHECK(parse_mode("labeled") == Mode::Labeled);
  CHECK(parse_mode("unlabeled") == Mode::Unlabeled);
  CHECK_THROWS_AS(parse_mode("other"), Error);
}
