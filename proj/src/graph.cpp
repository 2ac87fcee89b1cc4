#include "gsx/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gsx {

std::string to_string(NodeSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  });
  return out + "}";
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxNodes) throw Error("graph size " + std::to_string(n) + " outside 0..32");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [i, j] : edges) add_edge(i, j);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int i = 0; i < n_; ++i) twice += std::popcount(rows_[i]);
  return twice / 2;
}

void Graph::add_edge(int i, int j) {
  check_node(*this, i);
  check_node(*this, j);
  if (i == j) throw Error("self-loop on node " + std::to_string(i + 1));
  rows_[i] |= std::uint32_t{1} << j;
  rows_[j] |= std::uint32_t{1} << i;
}

void Graph::remove_edge(int i, int j) {
  rows_[i] &= ~(std::uint32_t{1} << j);
  rows_[j] &= ~(std::uint32_t{1} << i);
}

void Graph::toggle_edge(int i, int j) {
  rows_[i] ^= std::uint32_t{1} << j;
  rows_[j] ^= std::uint32_t{1} << i;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (std::uint32_t m = rows_[i] >> (i + 1); m; m &= m - 1) out.emplace_back(i, i + 1 + std::countr_zero(m));
  return out;
}

Graph Graph::permuted(const std::vector<int>& new_label) const {
  Graph out(n_);
  for (int i = 0; i < n_; ++i) {
    std::uint32_t r = 0;
    for (std::uint32_t m = rows_[i]; m; m &= m - 1) r |= std::uint32_t{1} << new_label[std::countr_zero(m)];
    out.rows_[new_label[i]] = r;
  }
  return out;
}

Graph Graph::induced(NodeSet s) const {
  std::vector<int> idx(n_, -1);
  int k = 0;
  s.for_each([&](int v) { idx[v] = k++; });
  Graph out(k);
  s.for_each([&](int v) {
    (neighbors(v) & s).for_each([&](int w) { out.rows_[idx[v]] |= std::uint32_t{1} << idx[w]; });
  });
  return out;
}

std::uint64_t Graph::code() const {
  std::uint64_t c = 0;
  int bit = 0;
  for (int j = 1; j < n_; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (has_edge(i, j)) c |= std::uint64_t{1} << bit;
  return c;
}

Graph Graph::from_code(int n, std::uint64_t code) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((code >> bit) & 1u) {
        g.rows_[i] |= std::uint32_t{1} << j;
        g.rows_[j] |= std::uint32_t{1} << i;
      }
  return g;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && std::equal(rows_.begin(), rows_.begin() + n_, o.rows_.begin());
}

bool Graph::operator<(const Graph& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return std::lexicographical_compare(rows_.begin(), rows_.begin() + n_, o.rows_.begin(), o.rows_.begin() + n_);
}

std::size_t Graph::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(n_);
  for (int i = 0; i < n_; ++i) {
    h ^= rows_[i];
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

void check_node(const Graph& g, int i) {
  if (i < 0 || i >= g.n()) throw Error("node " + std::to_string(i + 1) + " out of range 1.." + std::to_string(g.n()));
}

void check_subset(const Graph& g, NodeSet s) {
  if (!s.subset_of(g.vertices())) throw Error("node set " + to_string(s) + " exceeds the " + std::to_string(g.n()) + "-node graph");
}

NodeSet neighborhood(const Graph& g, int i) {
  check_node(g, i);
  return g.neighbors(i);
}

NodeSet set_neighborhood(const Graph& g, NodeSet m) {
  check_subset(g, m);
  NodeSet out;
  m.for_each([&](int v) { out = out | g.neighbors(v); });
  return out.minus(m);
}

bool is_connected_within(const Graph& g, NodeSet s) {
  if (s.empty()) return true;
  NodeSet seen = NodeSet::single(s.first());
  NodeSet frontier = seen;
  while (!frontier.empty()) {
    NodeSet next;
    frontier.for_each([&](int v) { next = next | g.neighbors(v); });
    next = (next & s).minus(seen);
    seen = seen | next;
    frontier = next;
  }
  return seen == s;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

Graph star_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

bool parse_fixture(std::string_view name, Graph& out) {
  static const std::pair<std::string_view, Graph (*)(int)> kinds[] = {
      {"star_", star_graph}, {"path_", path_graph}, {"cycle_", cycle_graph}, {"complete_", complete_graph}};
  for (auto [prefix, make] : kinds) {
    if (!name.starts_with(prefix)) continue;
    std::string_view digits = name.substr(prefix.size());
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) return false;
    if (n < 1 || n > kMaxNodes) throw Error("fixture size out of range: " + std::string(name));
    out = make(n);
    return true;
  }
  return false;
}

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", i);
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n == 63) throw ParseError("graph6: multi-byte size header (n > 62) unsupported", 0);
  if (n > kMaxNodes) throw ParseError("graph6: n = " + std::to_string(n) + " exceeds 32", 0);
  const std::size_t bits = static_cast<std::size_t>(pair_count(n));
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < 1 + body) throw ParseError("graph6: truncated edge section", text.size());
  if (text.size() > 1 + body) throw ParseError("graph6: trailing bytes", 1 + body);

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  // Padding bits in the final byte must be zero.
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(text[body]) - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("graph6: nonzero padding bits", body);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t eol = text.find('\n', offset);
    if (eol == std::string_view::npos) eol = text.size();
    std::string line(text.substr(offset, eol - offset));
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    int a = 0;
    int b = 0;
    if (in >> a) {
      std::string rest;
      if (!(in >> b) || (in >> rest)) throw ParseError("edge list: expected `i j`", offset);
      if (a < 1 || b < 1 || a > kMaxNodes || b > kMaxNodes) throw ParseError("edge list: label outside 1..32", offset);
      if (a == b) throw ParseError("edge list: self-loop", offset);
      edges.emplace_back(a - 1, b - 1);
      n = std::max({n, a, b});
    } else {
      std::string token;
      std::istringstream again(line);
      if (again >> token) throw ParseError("edge list: expected `i j`", offset);
    }
    offset = eol + 1;
  }
  if (n == 0) throw ParseError("edge list: no edges", 0);
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [i, j] : g.edges()) out += std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
  return out;
}

}  // namespace gsx
