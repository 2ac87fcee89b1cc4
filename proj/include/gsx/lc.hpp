#ifndef GSX_LC_HPP
#define GSX_LC_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "gsx/graph.hpp"

namespace gsx {

inline constexpr std::size_t kDefaultOrbitCap = 10'000'000;

/// Raised when an orbit search would exceed its element cap.
class OrbitOverflow : public Error {
 public:
  explicit OrbitOverflow(std::size_t cap)
      : Error("LC orbit exceeds the cap of " + std::to_string(cap) + " graphs"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// Toggle every edge between two distinct neighbors of i.
Graph local_complement(const Graph& g, int i);

/// Breadth-first closure of {g} under all local complementations, in
/// discovery order (moves tried in ascending node order). Element 0 is g.
std::vector<Graph> lc_orbit(const Graph& g, std::size_t cap = kDefaultOrbitCap);

/// Labeled LC-equivalence by bidirectional breadth-first search.
bool lc_equivalent(const Graph& a, const Graph& b, std::size_t cap = kDefaultOrbitCap);

/// LC-equivalence up to a relabeling of nodes (same entanglement class).
bool class_equivalent(const Graph& a, const Graph& b, std::size_t cap = kDefaultOrbitCap);

/// Least canonical graph over the LC orbit: equal keys iff same class.
Graph class_key(const Graph& g, std::size_t cap = kDefaultOrbitCap);

/// Distinct canonical graphs in the orbit (the unlabeled orbit), sorted. The
/// cap bounds the number of isomorphism types visited.
std::vector<Graph> unlabeled_orbit(const Graph& g, std::size_t cap = kDefaultOrbitCap);

class UnionFind {
 public:
  UnionFind() = default;
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  std::size_t find_const(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  /// Returns true if two distinct sets were merged.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    // Smaller index stays root so roots are deterministic representatives.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }
  std::size_t set_size(std::size_t x) { return size_[find(x)]; }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

enum class Mode { Labeled, Unlabeled };

const char* to_string(Mode m);
Mode parse_mode(const std::string& s);

struct OrbitPartition {
  std::vector<Graph> universe;
  UnionFind parent;
  std::size_t orbit_count = 0;

  /// One representative (the root) per orbit, in ascending universe index.
  std::vector<std::size_t> representatives();
};

/// Partitions `graphs` into labeled LC orbits, or into entanglement classes
/// when mode is Unlabeled. The list is first closed under LC moves, so the
/// universe may grow beyond the input.
OrbitPartition partition_orbits(const std::vector<Graph>& graphs, Mode mode, std::size_t cap = kDefaultOrbitCap);

inline constexpr int kMaxEnumerationNodes = 7;

/// Every connected labeled graph on n nodes, in ascending code order.
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_connected_graphs(int n);

/// Orbit and class structure of all connected labeled graphs on n <= 7
/// nodes. Graphs are indexed by their code (the dense universe 0..2^(n(n-1)/2)).
struct UniversePartition {
  int n = 0;
  std::vector<std::uint32_t> codes;      // connected graphs, ascending
  std::vector<std::uint32_t> orbit_of;   // per entry of codes: index into orbit_reps
  std::vector<std::uint32_t> class_of;   // per entry of codes: index into class_reps
  std::vector<std::uint32_t> orbit_reps; // least code in each orbit
  std::vector<std::uint64_t> orbit_size;
  std::vector<std::uint32_t> class_reps; // least code in each class
  std::vector<std::uint64_t> class_size; // labeled graphs per class
  std::vector<std::uint32_t> orbit_class;// class index of each orbit
};

UniversePartition partition_universe(int n);

}  // namespace gsx

#endif  // GSX_LC_HPP
