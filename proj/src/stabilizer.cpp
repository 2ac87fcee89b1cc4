#include "gsx/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "gsx/gf2.hpp"

namespace gsx {

namespace {

void check_marginal(const Graph& g, NodeSet m) {
  check_subset(g, m);
  if (m.empty()) throw Error("marginal set must be nonempty");
}

void check_brute_force_size(NodeSet m) {
  if (m.size() > kMaxBruteForceMarginal)
    throw Error("marginal of size " + std::to_string(m.size()) + " exceeds the brute-force limit of 24");
}

}  // namespace

PauliString generator(const Graph& g, int i) {
  check_node(g, i);
  return PauliString(g.n(), std::uint32_t{1} << i, g.row(i));
}

PauliString stab_element(const Graph& g, NodeSet L) {
  check_subset(g, L);
  PauliString out = PauliString::identity(g.n());
  L.for_each([&](int i) { out *= PauliString(g.n(), std::uint32_t{1} << i, g.row(i)); });
  if (!out.is_hermitian()) throw TheoryViolation("graph-state stabilizer element with imaginary phase");
  return out;
}

int marginal_dimension(const Graph& g, NodeSet m) {
  check_marginal(g, m);
  if (m == g.vertices()) return g.n();
  std::uint32_t rows[kMaxNodes];
  int k = 0;
  const std::uint32_t outside = g.vertices().minus(m).mask();
  m.for_each([&](int i) { rows[k++] = g.row(i) & outside; });
  return m.size() - gf2_rank_words(std::span<const std::uint32_t>(rows, static_cast<std::size_t>(k)));
}

ReducedStabilizer reduced_stabilizer(const Graph& g, NodeSet m) {
  check_marginal(g, m);
  check_brute_force_size(m);
  ReducedStabilizer out;
  out.marginal = m;
  std::vector<std::pair<std::uint32_t, PauliString>> found;
  m.for_each_subset([&](NodeSet L) {
    PauliString s = stab_element(g, L);
    if (s.support().subset_of(m)) found.emplace_back(L.mask(), s);
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [L, s] : found) out.elements.push_back(s);
  out.dim = std::countr_zero(static_cast<unsigned>(out.elements.size()));
  if ((std::size_t{1} << out.dim) != out.elements.size())
    throw TheoryViolation("reduced stabilizer size is not a power of two");
  return out;
}

std::uint64_t marginal_rank(const Graph& g, NodeSet m) {
  return std::uint64_t{1} << (m.size() - marginal_dimension(g, m));
}

int entanglement_entropy(const Graph& g, NodeSet m) {
  check_marginal(g, m);
  if (m == g.vertices()) throw Error("entanglement entropy needs a proper subset");
  return m.size() - marginal_dimension(g, m);
}

std::vector<PauliString> generated_group(const std::vector<PauliString>& gens, int n) {
  std::vector<PauliString> group{PauliString::identity(n)};
  std::unordered_map<std::uint64_t, int> seen{{0, 0}};
  for (const PauliString& gen : gens) {
    auto it = seen.find(gen.letters_key());
    if (it != seen.end()) {
      if (group[static_cast<std::size_t>(it->second)] != gen) throw TheoryViolation("group contains both +P and -P");
      continue;
    }
    const std::size_t before = group.size();
    for (std::size_t i = 0; i < before; ++i) {
      PauliString p = group[i] * gen;
      if (!p.is_hermitian()) throw TheoryViolation("generators do not commute");
      auto [pos, fresh] = seen.emplace(p.letters_key(), static_cast<int>(group.size()));
      if (!fresh) {
        if (group[static_cast<std::size_t>(pos->second)] != p) throw TheoryViolation("group contains both +P and -P");
        continue;
      }
      group.push_back(p);
    }
  }
  return group;
}

std::uint64_t proper_subset_group_order(const Graph& g, NodeSet m) {
  check_marginal(g, m);
  check_brute_force_size(m);
  // Every proper subset lies inside some m \ {v}, and S_N grows with N.
  std::vector<PauliString> gens;
  m.for_each([&](int v) {
    NodeSet sub = m.without(v);
    if (sub.empty()) return;
    for (const PauliString& s : reduced_stabilizer(g, sub).elements)
      if (!s.is_identity()) gens.push_back(s);
  });
  return generated_group(gens, g.n()).size();
}

bool new_structure(const Graph& g, NodeSet m) {
  if (m.size() < 2) throw Error("new_structure needs |M| >= 2");
  const std::uint64_t full = reduced_stabilizer(g, m).elements.size();
  return full > proper_subset_group_order(g, m);
}

int ell_value(const Graph& g, NodeSet m) {
  const std::uint64_t full = reduced_stabilizer(g, m).elements.size();
  const std::uint64_t sub = proper_subset_group_order(g, m);
  if (full % sub != 0) throw TheoryViolation("sub-marginal group is not a subgroup of S_M");
  const std::uint64_t ratio = full / sub;
  const int ell = std::countr_zero(ratio);
  if ((std::uint64_t{1} << ell) != ratio || ell > 2)
    throw TheoryViolation("ell = log2(" + std::to_string(ratio) + ") outside {0,1,2} for M = " + to_string(m));
  if (ell == 2 && (m.size() % 2 != 0 || sub != 1 || full != 4))
    throw TheoryViolation("ell = 2 without |M| even, trivial subgroup and |S_M| = 4 for M = " + to_string(m));
  return ell;
}

}  // namespace gsx
