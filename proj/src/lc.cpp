#include "gsx/lc.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "gsx/canonical.hpp"

namespace gsx {

Graph local_complement(const Graph& g, int i) {
  check_node(g, i);
  Graph out = g;
  const NodeSet nb = g.neighbors(i);
  nb.for_each([&](int a) {
    // Toggle a's edges to every later neighbor of i.
    NodeSet later(nb.mask() & ~((std::uint32_t{2} << a) - 1));
    later.for_each([&](int b) { out.toggle_edge(a, b); });
  });
  return out;
}

namespace {

struct CodeKey {
  std::uint64_t operator()(const Graph& g) const { return g.code(); }
};
struct CanonicalKey {
  Graph operator()(const Graph& g) const { return canonical_graph(g); }
};
struct GraphKey {
  const Graph& operator()(const Graph& g) const { return g; }
};

template <typename KeyFn, typename Set>
std::vector<Graph> orbit_bfs(const Graph& g, std::size_t cap, KeyFn key, Set seen) {
  std::vector<Graph> out{g};
  seen.insert(key(g));
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Graph cur = out[head];
    for (int i = 0; i < cur.n(); ++i) {
      if (cur.degree(i) < 2) continue;  // LC at a leaf or isolated node is the identity
      Graph next = local_complement(cur, i);
      if (seen.insert(key(next)).second) {
        if (out.size() >= cap) throw OrbitOverflow(cap);
        out.push_back(next);
      }
    }
  }
  return out;
}

template <typename KeyFn, typename Set>
bool bidirectional(const Graph& a, const Graph& b, std::size_t cap, KeyFn key, Set seen_a, Set seen_b) {
  if (key(a) == key(b)) return true;
  std::vector<Graph> front_a{a};
  std::vector<Graph> front_b{b};
  seen_a.insert(key(a));
  seen_b.insert(key(b));
  while (!front_a.empty() && !front_b.empty()) {
    const bool grow_a = front_a.size() <= front_b.size();
    auto& front = grow_a ? front_a : front_b;
    auto& mine = grow_a ? seen_a : seen_b;
    auto& other = grow_a ? seen_b : seen_a;
    std::vector<Graph> next;
    for (const Graph& cur : front)
      for (int i = 0; i < cur.n(); ++i) {
        if (cur.degree(i) < 2) continue;
        Graph h = local_complement(cur, i);
        auto k = key(h);
        if (other.count(k)) return true;
        if (mine.insert(k).second) {
          if (seen_a.size() + seen_b.size() > cap) throw OrbitOverflow(cap);
          next.push_back(h);
        }
      }
    front = std::move(next);
  }
  return false;
}

}  // namespace

std::vector<Graph> lc_orbit(const Graph& g, std::size_t cap) {
  if (g.n() <= 11) return orbit_bfs(g, cap, CodeKey{}, std::unordered_set<std::uint64_t>{});
  return orbit_bfs(g, cap, GraphKey{}, std::unordered_set<Graph, GraphHash>{});
}

bool lc_equivalent(const Graph& a, const Graph& b, std::size_t cap) {
  if (a.n() != b.n()) throw Error("lc_equivalent: graphs differ in size");
  if (a.n() <= 11)
    return bidirectional(a, b, cap, CodeKey{}, std::unordered_set<std::uint64_t>{}, std::unordered_set<std::uint64_t>{});
  return bidirectional(a, b, cap, GraphKey{}, std::unordered_set<Graph, GraphHash>{},
                       std::unordered_set<Graph, GraphHash>{});
}

bool class_equivalent(const Graph& a, const Graph& b, std::size_t cap) {
  if (a.n() != b.n()) throw Error("class_equivalent: graphs differ in size");
  // LC commutes with relabeling, so the search can run on isomorphism types.
  return bidirectional(canonical_graph(a), canonical_graph(b), cap, CanonicalKey{},
                       std::unordered_set<Graph, GraphHash>{}, std::unordered_set<Graph, GraphHash>{});
}

std::vector<Graph> unlabeled_orbit(const Graph& g, std::size_t cap) {
  std::vector<Graph> out{canonical_graph(g)};
  std::unordered_set<Graph, GraphHash> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Graph cur = out[head];
    for (int i = 0; i < cur.n(); ++i) {
      if (cur.degree(i) < 2) continue;
      Graph next = canonical_graph(local_complement(cur, i));
      if (seen.insert(next).second) {
        if (out.size() >= cap) throw OrbitOverflow(cap);
        out.push_back(std::move(next));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph class_key(const Graph& g, std::size_t cap) {
  auto members = unlabeled_orbit(g, cap);
  return members.front();
}

const char* to_string(Mode m) { return m == Mode::Labeled ? "labeled" : "unlabeled"; }

Mode parse_mode(const std::string& s) {
  if (s == "labeled") return Mode::Labeled;
  if (s == "unlabeled") return Mode::Unlabeled;
  throw Error("unknown mode '" + s + "' (expected labeled|unlabeled)");
}

std::vector<std::size_t> OrbitPartition::representatives() {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < universe.size(); ++i)
    if (parent.find(i) == i) reps.push_back(i);
  return reps;
}

OrbitPartition partition_orbits(const std::vector<Graph>& graphs, Mode mode, std::size_t cap) {
  OrbitPartition part;
  if (graphs.empty()) return part;
  const int n = graphs.front().n();
  std::unordered_map<Graph, std::size_t, GraphHash> index;
  auto intern = [&](const Graph& g) {
    auto [it, fresh] = index.emplace(g, part.universe.size());
    if (fresh) {
      if (part.universe.size() >= cap) throw OrbitOverflow(cap);
      part.universe.push_back(g);
    }
    return it->second;
  };
  for (const Graph& g : graphs) {
    if (g.n() != n) throw Error("partition_orbits: graphs differ in size");
    intern(g);
  }
  // Close under LC moves, recording each move as an edge.
  std::vector<std::pair<std::size_t, std::size_t>> moves;
  for (std::size_t head = 0; head < part.universe.size(); ++head) {
    const Graph cur = part.universe[head];
    for (int i = 0; i < n; ++i) {
      if (cur.degree(i) < 2) continue;
      moves.emplace_back(head, intern(local_complement(cur, i)));
    }
  }
  part.parent = UnionFind(part.universe.size());
  for (auto [a, b] : moves) part.parent.unite(a, b);
  if (mode == Mode::Unlabeled) {
    std::map<Graph, std::size_t> first_with_form;
    for (std::size_t i = 0; i < part.universe.size(); ++i) {
      auto [it, fresh] = first_with_form.emplace(canonical_graph(part.universe[i]), i);
      if (!fresh) part.parent.unite(it->second, i);
    }
  }
  for (std::size_t i = 0; i < part.universe.size(); ++i)
    if (part.parent.find(i) == i) ++part.orbit_count;
  return part;
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 1) throw Error("enumerate_connected_graphs: n must be positive");
  if (n > kMaxEnumerationNodes)
    throw Error("exhaustive enumeration is limited to n <= 7; supply a graph6 file for larger n");
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t c = 0; c < total; ++c) {
    Graph g = Graph::from_code(n, c);
    if (is_connected(g)) visit(g);
  }
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

namespace {

// Compact union-find for the dense 2^21-entry universe.
struct DenseUnionFind {
  std::vector<std::uint32_t> parent;
  explicit DenseUnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

UniversePartition partition_universe(int n) {
  if (n < 1 || n > kMaxEnumerationNodes) throw Error("partition_universe: n must be in 1..7");
  UniversePartition u;
  u.n = n;
  const std::uint32_t total = std::uint32_t{1} << pair_count(n);
  DenseUnionFind orbits(total);
  for (std::uint32_t c = 0; c < total; ++c) {
    Graph g = Graph::from_code(n, c);
    if (!is_connected(g)) continue;
    u.codes.push_back(c);
    for (int i = 0; i < n; ++i)
      if (g.degree(i) >= 2) orbits.unite(c, static_cast<std::uint32_t>(local_complement(g, i).code()));
  }
  DenseUnionFind classes = orbits;
  // Adjacent transpositions generate the symmetric group.
  for (std::uint32_t c : u.codes) {
    Graph g = Graph::from_code(n, c);
    for (int k = 0; k + 1 < n; ++k) {
      std::vector<int> swap(n);
      std::iota(swap.begin(), swap.end(), 0);
      std::swap(swap[k], swap[k + 1]);
      classes.unite(c, static_cast<std::uint32_t>(g.permuted(swap).code()));
    }
  }

  std::unordered_map<std::uint32_t, std::uint32_t> orbit_index;
  std::unordered_map<std::uint32_t, std::uint32_t> class_index;
  u.orbit_of.reserve(u.codes.size());
  u.class_of.reserve(u.codes.size());
  for (std::uint32_t c : u.codes) {
    const std::uint32_t orep = orbits.find(c);
    const std::uint32_t crep = classes.find(c);
    auto [oit, ofresh] = orbit_index.emplace(orep, static_cast<std::uint32_t>(u.orbit_reps.size()));
    if (ofresh) {
      u.orbit_reps.push_back(orep);
      u.orbit_size.push_back(0);
      u.orbit_class.push_back(0);
    }
    auto [cit, cfresh] = class_index.emplace(crep, static_cast<std::uint32_t>(u.class_reps.size()));
    if (cfresh) {
      u.class_reps.push_back(crep);
      u.class_size.push_back(0);
    }
    u.orbit_of.push_back(oit->second);
    u.class_of.push_back(cit->second);
    ++u.orbit_size[oit->second];
    ++u.class_size[cit->second];
    u.orbit_class[oit->second] = cit->second;
  }
  return u;
}

}  // namespace gsx
