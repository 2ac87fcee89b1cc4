#ifndef GSX_CANONICAL_HPP
#define GSX_CANONICAL_HPP

#include <vector>

#include "gsx/graph.hpp"

namespace gsx {

struct CanonicalForm {
  Graph graph;
  /// perm[v] is the canonical label of input node v; graph == input.permuted(perm).
  std::vector<int> perm;
};

inline constexpr int kDefaultCanonicalLimit = 12;

/// Canonical labeling by equitable refinement plus individualization, with
/// branches pruned by automorphisms discovered during the search. The result
/// is the lexicographically least adjacency among explored leaves, so two
/// graphs are isomorphic iff their canonical graphs compare equal.
CanonicalForm canonical_form(const Graph& g, int max_nodes = kDefaultCanonicalLimit);

inline Graph canonical_graph(const Graph& g, int max_nodes = kDefaultCanonicalLimit) {
  return canonical_form(g, max_nodes).graph;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_graph(a) == canonical_graph(b);
}

}  // namespace gsx

#endif  // GSX_CANONICAL_HPP
