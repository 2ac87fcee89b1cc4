#ifndef GSX_MERIT_HPP
#define GSX_MERIT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gsx/invariants.hpp"
#include "gsx/lc.hpp"

namespace gsx {

/// How random pairs are drawn when estimating p.
enum class PairMeasure {
  Graphs,  // uniform over labeled connected graphs (groups weighted by size)
  Groups,  // uniform over orbits/classes (one representative each)
};

/// Joint: P(invariants agree and groups differ). Conditional: the same event
/// conditioned on the groups differing.
enum class PEvent { Joint, Conditional };

struct MeritOptions {
  PairMeasure measure = PairMeasure::Graphs;
  PEvent event = PEvent::Joint;
};

struct MeritResult {
  int n = 0;
  Mode mode = Mode::Labeled;
  InvariantKind invariant = InvariantKind::Tensor;
  std::vector<int> ks;          // more than one k means the aggregated tuple invariant
  double r = 0.0;
  double p = 0.0;
  double stderr_p = 0.0;        // nonzero only for Monte Carlo estimates
  std::uint64_t samples = 0;    // Monte Carlo pair count, 0 when exact
  std::uint64_t seed = 0;
  std::size_t orbits = 0;
  std::size_t classes = 0;
  std::size_t distinct_values = 0;
};

/// Invariant value of one graph as comparable bytes.
std::string invariant_key(const Graph& g, InvariantKind kind, const std::vector<int>& ks);

/// Exact r and p over every connected labeled graph of the partition. Tensor
/// invariants are measured against labeled orbits, lists and eigenvalue
/// products against entanglement classes.
MeritResult figures_of_merit(const UniversePartition& universe, InvariantKind kind, const std::vector<int>& ks,
                             const MeritOptions& options = {});

/// r over a list of pairwise-inequivalent class representatives (no p).
MeritResult ratio_from_representatives(const std::vector<Graph>& reps, InvariantKind kind,
                                       const std::vector<int>& ks);

/// Monte Carlo p over uniformly random connected labeled graphs on n nodes.
/// Pair i is drawn from a generator seeded by (seed, i), so the estimate does
/// not depend on evaluation order. Group membership is decided by LC search.
MeritResult monte_carlo_p(int n, Mode mode, InvariantKind kind, const std::vector<int>& ks, std::uint64_t samples,
                          std::uint64_t seed, const MeritOptions& options = {});

/// Deterministic 64-bit mixer used to derive per-sample seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Uniform connected labeled graph on n nodes by rejection sampling.
template <typename Rng>
Graph random_connected_graph(int n, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  while (true) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) g.add_edge(i, j);
    if (is_connected(g)) return g;
  }
}

}  // namespace gsx

#endif  // GSX_MERIT_HPP
