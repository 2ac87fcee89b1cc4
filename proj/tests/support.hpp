#ifndef GSX_TESTS_SUPPORT_HPP
#define GSX_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gsx/graph.hpp"
#include "gsx/lc.hpp"
#include "gsx/merit.hpp"

namespace gsx::test {

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph random_walk(Graph g, int moves, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> node(0, g.n() - 1);
  for (int i = 0; i < moves; ++i) g = local_complement(g, node(rng));
  return g;
}

/// Uniform nonempty proper subset of the nodes with at most kmax elements.
inline NodeSet random_subset(int n, int kmax, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, std::min(kmax, n - 1));
  const int k = size(rng);
  std::vector<int> p = random_permutation(n, rng);
  NodeSet s;
  for (int i = 0; i < k; ++i) s = s.with(p[static_cast<std::size_t>(i)]);
  return s;
}

}  // namespace gsx::test

#endif
