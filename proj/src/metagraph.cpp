#include "gsx/metagraph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace gsx {

namespace {

void check_proper(const Graph& g, NodeSet s, const char* what) {
  check_subset(g, s);
  if (s.empty()) throw Error(std::string(what) + ": node set must be nonempty");
  if (s == g.vertices()) throw Error(std::string(what) + ": node set must be a proper subset");
}

// Spreads the low bits of `local` over the nodes of `m` in ascending order.
NodeSet expand(std::uint32_t local, const std::vector<int>& nodes) {
  std::uint32_t out = 0;
  for (std::size_t j = 0; j < nodes.size(); ++j)
    if (local >> j & 1u) out |= std::uint32_t{1} << nodes[j];
  return NodeSet(out);
}

}  // namespace

std::size_t Metagraph::connected_count() const {
  return static_cast<std::size_t>(
      std::count_if(type2.begin(), type2.end(), [](const Type2Node& t) { return t.connected; }));
}

Metagraph build_metagraph(const Graph& g, NodeSet m) {
  check_proper(g, m, "build_metagraph");
  if (m.size() > kMaxMetagraphSet)
    throw Error("metagraph of a set with " + std::to_string(m.size()) + " nodes exceeds the limit of 12");
  Metagraph mg;
  mg.n = g.n();
  mg.m = m;
  mg.inner = Graph(g.n());
  m.for_each([&](int a) {
    (g.neighbors(a) & m).for_each([&](int b) {
      if (a < b) mg.inner.add_edge(a, b);
    });
  });

  const std::vector<int> nodes = m.nodes();
  const std::size_t count = (std::size_t{1} << nodes.size()) - 1;
  mg.type2.resize(count);
  for (std::size_t i = 1; i <= count; ++i) mg.type2[i - 1].label = expand(static_cast<std::uint32_t>(i), nodes);

  // Local index of each outside node's trace on M.
  g.vertices().minus(m).for_each([&](int v) {
    const NodeSet trace = g.neighbors(v) & m;
    if (trace.empty()) return;
    std::uint32_t local = 0;
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (trace.contains(nodes[j])) local |= std::uint32_t{1} << j;
    Type2Node& t = mg.type2[local - 1];
    if (!t.connected) {
      t.connected = true;
      t.witness = v;
    }
  });
  return mg;
}

namespace {

template <typename F>
void for_each_surviving_subset(const Metagraph& mg, F&& f) {
  std::vector<std::uint32_t> walls;
  for (const Type2Node& t : mg.type2)
    if (t.connected) walls.push_back(t.label.mask());
  mg.m.for_each_subset([&](NodeSet L) {
    for (std::uint32_t w : walls)
      if (std::popcount(L.mask() & w) % 2 != 0) return;
    f(L);
  });
}

}  // namespace

ReducedStabilizer metagraph_stabilizer(const Metagraph& mg) {
  if (mg.m.size() > 20) throw Error("metagraph_stabilizer: set larger than 20 nodes");
  ReducedStabilizer out;
  out.marginal = mg.m;
  // Outside Z factors cancel for surviving L, so the inner edges alone fix letters and sign.
  for_each_surviving_subset(mg, [&](NodeSet L) { out.elements.push_back(stab_element(mg.inner, L)); });
  out.dim = std::countr_zero(static_cast<unsigned>(out.elements.size()));
  return out;
}

int metagraph_dimension(const Metagraph& mg) {
  std::uint64_t count = 0;
  for_each_surviving_subset(mg, [&](NodeSet) { ++count; });
  const int dim = std::countr_zero(count);
  if ((std::uint64_t{1} << dim) != count) throw TheoryViolation("metagraph stabilizer size is not a power of two");
  return dim;
}

NodeSet NeighborsetMap::at(NodeSet b) const {
  auto it = entries.find(b.mask());
  return it == entries.end() ? NodeSet() : it->second;
}

NeighborsetMap neighborsets(const Graph& g, NodeSet c) {
  check_proper(g, c, "neighborsets");
  NeighborsetMap out;
  out.c = c;
  g.vertices().minus(c).for_each([&](int v) {
    const NodeSet b = g.neighbors(v) & c;
    if (!b.empty()) out.entries[b.mask()] = out.entries[b.mask()].with(v);
  });
  return out;
}

Condensed condense(const Graph& g, NodeSet c) {
  check_proper(g, c, "condense");
  const int n = g.n();
  Condensed out;
  out.c_node = n - c.size();
  out.index.assign(static_cast<std::size_t>(n), out.c_node);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (!c.contains(v)) out.index[static_cast<std::size_t>(v)] = next++;
  out.graph = Graph(out.c_node + 1);
  for (auto [a, b] : g.edges()) {
    const int x = out.index[static_cast<std::size_t>(a)];
    const int y = out.index[static_cast<std::size_t>(b)];
    if (x != y && !out.graph.has_edge(x, y)) out.graph.add_edge(x, y);
  }
  return out;
}

Condensed condense_all(const Graph& g, std::vector<NodeSet> sets) {
  NodeSet seen;
  for (NodeSet s : sets) {
    check_proper(g, s, "condense_all");
    if (!(seen & s).empty()) throw Error("condense_all: condensation sets must be pairwise disjoint");
    seen = seen | s;
  }
  std::sort(sets.begin(), sets.end(), [](NodeSet a, NodeSet b) { return a.first() < b.first(); });
  Condensed out;
  out.graph = g;
  out.index.resize(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) out.index[static_cast<std::size_t>(v)] = v;
  out.c_node = -1;
  for (NodeSet s : sets) {
    NodeSet image;
    s.for_each([&](int v) { image = image.with(out.index[static_cast<std::size_t>(v)]); });
    Condensed step = condense(out.graph, image);
    for (int& v : out.index) v = step.index[static_cast<std::size_t>(v)];
    out.graph = std::move(step.graph);
    out.c_node = step.c_node;
  }
  return out;
}

const char* to_string(CondensationRule rule) {
  switch (rule) {
    case CondensationRule::TwoNodeDim1: return "two-node-dim1";
    case CondensationRule::DimCMinus1: return "dim-c-minus-1";
    case CondensationRule::SingleExternalNeighbor: return "single-external-neighbor";
    case CondensationRule::None: return "none";
  }
  return "?";
}

CondensationVerdict condensable(const Graph& g, NodeSet c) {
  check_proper(g, c, "condensable");
  CondensationVerdict out;
  if (marginal_dimension(g, c) == c.size() - 1) {
    out.rule = CondensationRule::DimCMinus1;
    return out;
  }
  bool single = true;
  c.for_each([&](int v) { single = single && g.neighbors(v).minus(c).size() <= 1; });
  if (single) {
    out.rule = CondensationRule::SingleExternalNeighbor;
    out.experimental = true;
  }
  return out;
}

std::string marginal_orbit_signature(const Graph& g, NodeSet m) {
  check_subset(g, m);
  if (m.empty()) throw Error("marginal_orbit_signature: empty set");
  if (m.size() > 3) throw Error("marginal_orbit_signature supports |M| <= 3 only");
  std::vector<std::vector<int>> by_size(static_cast<std::size_t>(m.size()) + 1);
  m.for_each_subset([&](NodeSet s) {
    if (!s.empty()) by_size[static_cast<std::size_t>(s.size())].push_back(marginal_dimension(g, s));
  });
  std::string out;
  for (int k = m.size(); k >= 1; --k) {
    auto& ds = by_size[static_cast<std::size_t>(k)];
    std::sort(ds.begin(), ds.end(), std::greater<>());
    if (!out.empty()) out += ';';
    out += std::to_string(k) + ":[";
    for (std::size_t i = 0; i < ds.size(); ++i) out += (i ? "," : "") + std::to_string(ds[i]);
    out += ']';
  }
  return out;
}

std::string to_dot(const Metagraph& mg) {
  std::ostringstream os;
  os << "graph metagraph {\n";
  mg.m.for_each([&](int v) { os << "  v" << v + 1 << " [label=\"" << v + 1 << "\"];\n"; });
  for (std::size_t i = 0; i < mg.type2.size(); ++i) {
    const Type2Node& t = mg.type2[i];
    os << "  w" << i + 1 << " [shape=box, label=\"[" << to_string(t.label) << "]\""
       << (t.connected ? "" : ", style=dashed") << "];\n";
  }
  for (auto [a, b] : mg.inner.edges()) os << "  v" << a + 1 << " -- v" << b + 1 << ";\n";
  for (std::size_t i = 0; i < mg.type2.size(); ++i) {
    const Type2Node& t = mg.type2[i];
    if (t.connected) t.label.for_each([&](int v) { os << "  w" << i + 1 << " -- v" << v + 1 << ";\n"; });
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "graph g {\n";
  for (int v = 0; v < g.n(); ++v) {
    const std::string name =
        static_cast<std::size_t>(v) < labels.size() ? labels[static_cast<std::size_t>(v)] : std::to_string(v + 1);
    os << "  v" << v + 1 << " [label=\"" << name << "\"];\n";
  }
  for (auto [a, b] : g.edges()) os << "  v" << a + 1 << " -- v" << b + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace gsx
