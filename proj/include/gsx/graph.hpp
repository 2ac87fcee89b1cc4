#ifndef GSX_GRAPH_HPP
#define GSX_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gsx {

inline constexpr int kMaxNodes = 32;

/// Base class for every error the library reports to callers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subset of node indices 0..31 as a bitmask.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t mask) : mask_(mask) {}
  NodeSet(std::initializer_list<int> nodes) {
    for (int v : nodes) mask_ |= std::uint32_t{1} << v;
  }

  static constexpr NodeSet full(int n) {
    return NodeSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static constexpr NodeSet single(int v) { return NodeSet(std::uint32_t{1} << v); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int v) const { return (mask_ >> v) & 1u; }
  constexpr bool subset_of(NodeSet o) const { return (mask_ & ~o.mask_) == 0; }
  /// Lowest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(mask_); }

  constexpr NodeSet operator|(NodeSet o) const { return NodeSet(mask_ | o.mask_); }
  constexpr NodeSet operator&(NodeSet o) const { return NodeSet(mask_ & o.mask_); }
  constexpr NodeSet operator^(NodeSet o) const { return NodeSet(mask_ ^ o.mask_); }
  constexpr NodeSet minus(NodeSet o) const { return NodeSet(mask_ & ~o.mask_); }
  constexpr NodeSet with(int v) const { return NodeSet(mask_ | (std::uint32_t{1} << v)); }
  constexpr NodeSet without(int v) const { return NodeSet(mask_ & ~(std::uint32_t{1} << v)); }

  constexpr auto operator<=>(const NodeSet&) const = default;

  std::vector<int> nodes() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint32_t m = mask_; m; m &= m - 1) f(std::countr_zero(m));
  }

  /// Visits every subset of this set (including empty and itself).
  template <typename F>
  void for_each_subset(F&& f) const {
    std::uint32_t s = 0;
    do {
      f(NodeSet(s));
      s = (s - mask_) & mask_;
    } while (s != 0);
  }

 private:
  std::uint32_t mask_ = 0;
};

/// "{1,3,4}" with 1-based labels, matching the CLI.
std::string to_string(NodeSet s);

/// Labeled simple graph on n <= 32 nodes. Row i holds the neighborhood of i.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  NodeSet vertices() const { return NodeSet::full(n_); }
  NodeSet neighbors(int i) const { return NodeSet(rows_[i]); }
  std::uint32_t row(int i) const { return rows_[i]; }
  bool has_edge(int i, int j) const { return (rows_[i] >> j) & 1u; }
  int degree(int i) const { return std::popcount(rows_[i]); }
  int edge_count() const;

  void add_edge(int i, int j);
  void remove_edge(int i, int j);
  void toggle_edge(int i, int j);

  std::vector<std::pair<int, int>> edges() const;

  /// Node new_label[i] of the result corresponds to node i of this graph.
  Graph permuted(const std::vector<int>& new_label) const;
  Graph induced(NodeSet s) const;

  /// Upper triangle packed column-major (graph6 bit order) into one word;
  /// requires n <= 11.
  std::uint64_t code() const;
  static Graph from_code(int n, std::uint64_t code);

  bool operator==(const Graph& o) const;
  bool operator<(const Graph& o) const;
  std::size_t hash() const;

 private:
  int n_ = 0;
  std::array<std::uint32_t, kMaxNodes> rows_{};
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const { return g.hash(); }
};

inline int pair_count(int n) { return n * (n - 1) / 2; }

NodeSet neighborhood(const Graph& g, int i);
/// Nodes outside m adjacent to at least one node of m.
NodeSet set_neighborhood(const Graph& g, NodeSet m);
bool is_connected(const Graph& g);
/// True iff the subgraph induced on s is connected (empty set counts as connected).
bool is_connected_within(const Graph& g, NodeSet s);

void check_node(const Graph& g, int i);
void check_subset(const Graph& g, NodeSet s);

// Named fixtures. Node 0 is the star center.
Graph star_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Recognizes star_n, path_n, cycle_n, complete_n.
bool parse_fixture(std::string_view name, Graph& out);

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// One `i j` pair per line, 1-based; blank lines and `#` comments ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace gsx

#endif  // GSX_GRAPH_HPP
