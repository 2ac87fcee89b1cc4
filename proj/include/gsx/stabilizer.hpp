#ifndef GSX_STABILIZER_HPP
#define GSX_STABILIZER_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gsx/graph.hpp"
#include "gsx/pauli.hpp"

namespace gsx {

/// The elements of S(G) supported inside a marginal set M.
struct ReducedStabilizer {
  NodeSet marginal;
  std::vector<PauliString> elements;  // identity first, then ascending generator index set
  int dim = 0;                        // log2 |elements|
};

/// Signals a result that contradicts a proven structural property; always a bug.
class TheoryViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr int kMaxBruteForceMarginal = 24;

/// g_i = X_i Z_{N_i}
PauliString generator(const Graph& g, int i);

/// g_L, the product of generators over L in ascending index order.
PauliString stab_element(const Graph& g, NodeSet L);

/// d_M = |M| - rank(Gamma_{M, V\M}) over GF(2); d_V = n.
int marginal_dimension(const Graph& g, NodeSet m);

/// Every g_L with L a subset of m whose support stays inside m, found by
/// exhaustive search over L.
ReducedStabilizer reduced_stabilizer(const Graph& g, NodeSet m);

/// rank(rho_M) = 2^{|M| - d_M}
std::uint64_t marginal_rank(const Graph& g, NodeSet m);

/// Entropy of rho_M in bits, |M| - d_M. Requires a nonempty proper subset.
int entanglement_entropy(const Graph& g, NodeSet m);

/// |< union of S_N over proper subsets N of m >| by explicit closure.
std::uint64_t proper_subset_group_order(const Graph& g, NodeSet m);

/// True iff S_M is strictly larger than the group generated by its proper
/// sub-marginals.
bool new_structure(const Graph& g, NodeSet m);

/// log2(|S_M| / |<union S_N>|). Throws TheoryViolation if the result leaves
/// {0,1,2}, or if 2 occurs without |M| even, trivial subgroup and |S_M| = 4.
int ell_value(const Graph& g, NodeSet m);

/// Closure of a set of commuting Pauli strings under multiplication.
/// Throws TheoryViolation if both +P and -P appear.
std::vector<PauliString> generated_group(const std::vector<PauliString>& gens, int n);

}  // namespace gsx

#endif  // GSX_STABILIZER_HPP
