#include <doctest.h>

#include <cmath>

#include "gsx/merit.hpp"

using namespace gsx;

namespace {

double round_to(double x, double step) { return std::round(x / step) * step; }

}  // namespace

TEST_CASE("small tables are perfect") {
  for (int n = 3; n <= 5; ++n) {
    const UniversePartition u = partition_universe(n);
    for (InvariantKind kind : {InvariantKind::Tensor, InvariantKind::List, InvariantKind::Eigen}) {
      const MeritResult m = figures_of_merit(u, kind, {2});
      CHECK(m.r == doctest::Approx(1.0));
      CHECK(m.p == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("six-node tables") {
  const UniversePartition u = partition_universe(6);
  const MeritResult t2 = figures_of_merit(u, InvariantKind::Tensor, {2});
  CHECK(round_to(t2.r, 0.01) == doctest::Approx(0.52));
  CHECK(round_to(t2.p, 0.01) == doctest::Approx(0.05));
  const MeritResult t3 = figures_of_merit(u, InvariantKind::Tensor, {3});
  CHECK(t3.r == doctest::Approx(1.0));
  CHECK(t3.p == doctest::Approx(0.0));

  const MeritResult l2 = figures_of_merit(u, InvariantKind::List, {2});
  CHECK(round_to(l2.r, 0.01) == doctest::Approx(0.73));
  CHECK(round_to(l2.p, 0.01) == doctest::Approx(0.01));
  const MeritResult l3 = figures_of_merit(u, InvariantKind::List, {3});
  CHECK(round_to(l3.r, 0.01) == doctest::Approx(0.82));
  CHECK(round_to(l3.p, 0.01) == doctest::Approx(0.01));
  const MeritResult lagg = figures_of_merit(u, InvariantKind::List, {2, 3});
  CHECK(lagg.r == doctest::Approx(1.0));
  CHECK(lagg.p == doctest::Approx(0.0));

  CHECK(round_to(figures_of_merit(u, InvariantKind::Eigen, {2}).r, 0.01) == doctest::Approx(0.73));
  CHECK(figures_of_merit(u, InvariantKind::Eigen, {3}).r == doctest::Approx(1.0));
  CHECK(u.class_reps.size() == 11);
}

TEST_CASE("representative ratio matches the exact one") {
  const UniversePartition u = partition_universe(6);
  std::vector<Graph> reps;
  for (auto code : u.class_reps) reps.push_back(Graph::from_code(6, code));
  const MeritResult a = ratio_from_representatives(reps, InvariantKind::List, {2});
  CHECK(a.r == doctest::Approx(figures_of_merit(u, InvariantKind::List, {2}).r));
}

TEST_CASE("Monte Carlo estimates are reproducible") {
  const MeritResult a = monte_carlo_p(6, Mode::Labeled, InvariantKind::Tensor, {2}, 400, 7);
  const MeritResult b = monte_carlo_p(6, Mode::Labeled, InvariantKind::Tensor, {2}, 400, 7);
  CHECK(a.p == b.p);
  CHECK(a.samples == 400);
  CHECK(a.stderr_p > 0.0);
  // Within five standard errors of the exact 0.05.
  CHECK(std::abs(a.p - 0.0502) < 5 * a.stderr_p + 0.01);
  CHECK(splitmix64(1) != splitmix64(2));
}
