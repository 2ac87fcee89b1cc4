#include "gsx/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace gsx {

namespace {

using Cells = std::vector<std::vector<int>>;

// Split cells by neighbor counts into each splitter cell until stable.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      std::uint32_t splitter = 0;
      for (int v : cells[s]) splitter |= std::uint32_t{1} << v;
      Cells next;
      next.reserve(cells.size() + 4);
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back(std::popcount(g.row(v) & splitter), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[start].first) {
            std::vector<int> part;
            for (std::size_t k = start; k < i; ++k) part.push_back(keyed[k].second);
            next.push_back(std::move(part));
            start = i;
          }
        }
        if (keyed.front().first != keyed.back().first) changed = true;
      }
      cells = std::move(next);
    }
  }
}

struct Search {
  Search(const Graph& graph, int size) : g(graph), n(size) {}

  const Graph& g;
  int n;
  bool have_best = false;
  std::array<std::uint32_t, kMaxNodes> best_rows{};
  std::vector<int> best_perm;
  std::vector<std::vector<int>> automorphisms;
  std::vector<int> prefix;

  void leaf(const Cells& cells) {
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[cells[k][0]] = k;
    std::array<std::uint32_t, kMaxNodes> rows{};
    for (int v = 0; v < n; ++v) {
      std::uint32_t r = 0;
      for (std::uint32_t m = g.row(v); m; m &= m - 1) r |= std::uint32_t{1} << perm[std::countr_zero(m)];
      rows[perm[v]] = r;
    }
    if (!have_best) {
      have_best = true;
      best_rows = rows;
      best_perm = perm;
      return;
    }
    const auto order = std::lexicographical_compare_three_way(rows.begin(), rows.begin() + n, best_rows.begin(),
                                                              best_rows.begin() + n);
    const int cmp = order < 0 ? -1 : (order == 0 ? 0 : 1);
    if (cmp < 0) {
      best_rows = rows;
      best_perm = perm;
    } else if (cmp == 0) {
      // best_perm^-1 o perm maps this leaf's labeling onto the best one.
      std::vector<int> best_inv(n);
      for (int v = 0; v < n; ++v) best_inv[best_perm[v]] = v;
      std::vector<int> gamma(n);
      for (int v = 0; v < n; ++v) gamma[v] = best_inv[perm[v]];
      automorphisms.push_back(std::move(gamma));
    }
  }

  int find(std::vector<int>& parent, int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  void explore(Cells cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> candidates = cells[t];
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> explored;
    for (int v : candidates) {
      if (!explored.empty() && same_orbit_as_explored(v, explored)) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != t) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      explore(std::move(child));
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  // Orbits under the automorphisms found so far that fix the current prefix.
  bool same_orbit_as_explored(int v, const std::vector<int>& explored) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    bool any = false;
    for (const auto& gamma : automorphisms) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      any = true;
      for (int u = 0; u < n; ++u) parent[find(parent, u)] = find(parent, gamma[u]);
    }
    if (!any) return false;
    const int root = find(parent, v);
    return std::any_of(explored.begin(), explored.end(), [&](int w) { return find(parent, w) == root; });
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int max_nodes) {
  const int n = g.n();
  if (n > max_nodes)
    throw Error("canonical_form: n = " + std::to_string(n) + " exceeds the limit " + std::to_string(max_nodes));
  if (n == 0) return {g, {}};

  Search search(g, n);
  // Unit partition; the first refinement splits it by degree.
  Cells cells(1);
  for (int v = 0; v < n; ++v) cells[0].push_back(v);
  search.explore(std::move(cells));

  Graph canon = g.permuted(search.best_perm);
  return {canon, search.best_perm};
}

}  // namespace gsx
