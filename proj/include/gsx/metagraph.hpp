#ifndef GSX_METAGRAPH_HPP
#define GSX_METAGRAPH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gsx/graph.hpp"
#include "gsx/stabilizer.hpp"

namespace gsx {

inline constexpr int kMaxMetagraphSet = 12;

/// Type-2 node of a metagraph: one per nonempty subset of M.
struct Type2Node {
  NodeSet label;
  bool connected = false;
  int witness = -1;  // smallest outside node whose neighborhood inside M equals label
};

/// Metagraph of a node set M. type2[i - 1] carries the subset of M selected by
/// the bits of i, with bit j standing for the j-th smallest node of M.
struct Metagraph {
  int n = 0;
  NodeSet m;
  std::vector<Type2Node> type2;
  Graph inner;  // n nodes, only the edges inside M

  std::size_t connected_count() const;
};

Metagraph build_metagraph(const Graph& g, NodeSet m);

/// S_M read off the metagraph: g_L survives iff every connected type-2 node
/// meets L in an even number of nodes.
ReducedStabilizer metagraph_stabilizer(const Metagraph& mg);

/// d_M by counting the surviving subsets, without building Pauli strings.
int metagraph_dimension(const Metagraph& mg);

struct NeighborsetMap {
  NodeSet c;
  std::map<std::uint32_t, NodeSet> entries;  // only the nonempty neighborsets, keyed by B

  NodeSet at(NodeSet b) const;
  std::size_t nonempty_count() const { return entries.size(); }
};

/// N̂_B = {v outside C : N_v ∩ C = B}.
NeighborsetMap neighborsets(const Graph& g, NodeSet c);

struct Condensed {
  Graph graph;
  std::vector<int> index;  // original node -> node of the condensed graph
  int c_node = 0;
};

/// Merges C into one node placed last; the other nodes keep ascending order.
Condensed condense(const Graph& g, NodeSet c);

/// Sequential condensation of pairwise disjoint sets, smallest minimum first.
/// The index map refers to the original graph.
Condensed condense_all(const Graph& g, std::vector<NodeSet> sets);

enum class CondensationRule { TwoNodeDim1, DimCMinus1, SingleExternalNeighbor, None };
const char* to_string(CondensationRule rule);

struct CondensationVerdict {
  CondensationRule rule = CondensationRule::None;
  bool experimental = false;  // set for SingleExternalNeighbor, which is only conjectured
};

/// DimCMinus1 also covers the two-node case, so TwoNodeDim1 is never returned.
CondensationVerdict condensable(const Graph& g, NodeSet c);

/// Multiset of d_N over nonempty N ⊆ m, grouped by |N| from largest down,
/// each group sorted descending: "3:[2];2:[1,0,0];1:[0,0,0]".
std::string marginal_orbit_signature(const Graph& g, NodeSet m);

std::string to_dot(const Metagraph& mg);
/// Plain graph; labels[i] names node i (1-based numbers when empty).
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {});

}  // namespace gsx

#endif  // GSX_METAGRAPH_HPP
