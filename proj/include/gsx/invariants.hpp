#ifndef GSX_INVARIANTS_HPP
#define GSX_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsx/graph.hpp"
#include "gsx/lc.hpp"

namespace gsx {

/// Memoized marginal dimensions for one graph. Dense storage for n <= 20.
class MarginalTable {
 public:
  explicit MarginalTable(const Graph& g);
  const Graph& graph() const { return g_; }
  int dim(NodeSet m);

 private:
  Graph g_;
  std::vector<std::int8_t> dense_;
  std::unordered_map<std::uint32_t, std::int8_t> sparse_;
};

/// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(NodeSet());
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (int v : idx) mask |= std::uint32_t{1} << v;
    f(NodeSet(mask));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Size-k node sets bucketed by marginal dimension: result[i] = D_k^i.
std::vector<std::vector<NodeSet>> fixed_dimension_sets(const Graph& g, int k);

struct RankList {
  int k = 0;
  std::vector<std::uint64_t> counts;  // counts[i] = |D_k^i|, i = 0..k
  bool operator==(const RankList&) const = default;
  auto operator<=>(const RankList&) const = default;
};

RankList rank_list(const Graph& g, int k);
RankList rank_list(MarginalTable& table, int k);

/// Supersymmetric order-k tensor of marginal dimensions, stored once per
/// sorted index tuple i1 <= ... <= ik in lexicographic order.
class RankTensor {
 public:
  RankTensor(int n, int k, std::vector<std::uint8_t> values) : n_(n), k_(k), values_(std::move(values)) {}
  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<std::uint8_t>& values() const { return values_; }
  /// Entry for an arbitrary (unsorted, possibly repeated) index tuple.
  int at(std::vector<int> indices) const;
  bool operator==(const RankTensor&) const = default;

 private:
  int n_;
  int k_;
  std::vector<std::uint8_t> values_;
};

RankTensor rank_tensor(const Graph& g, int k);
RankTensor rank_tensor(MarginalTable& table, int k);

/// What the summed tensor holds per set M. Rank (|M| - d_M, the entanglement
/// entropy of the marginal) is the default because it reproduces the published
/// class tables; Dimension holds d_M itself.
enum class TensorEntry { Rank, Dimension };

/// Product of the nonzero eigenvalues of the n x n matrix obtained by summing
/// the rank tensor over its last k-2 axes.
struct EigenProduct {
  bool exact = false;   // value computed from the integer characteristic polynomial
  __int128 value = 0;   // valid when exact
  double approx = 0.0;  // floating-point product of the eigenvalues above tolerance
  int nonzero = 0;      // number of nonzero eigenvalues

  std::string str() const;
  bool operator==(const EigenProduct& o) const;
};

/// The summed n x n matrix, row-major.
std::vector<std::int64_t> summed_tensor_matrix(MarginalTable& table, int k, TensorEntry entry = TensorEntry::Rank);
EigenProduct tensor_eigen_product(const Graph& g, int k, TensorEntry entry = TensorEntry::Rank);
EigenProduct tensor_eigen_product(MarginalTable& table, int k, TensorEntry entry = TensorEntry::Rank);

/// Marginal dimensions of every set of size 1..k in canonical order (by size,
/// then lexicographic). Two graphs share T_k iff these bytes match.
std::vector<std::uint8_t> tensor_digest(MarginalTable& table, int k);
std::uint64_t digest_hash(const std::vector<std::uint8_t>& bytes);

struct InvariantSignature {
  struct PerK {
    int k = 0;
    RankList l;
    EigenProduct t;
    std::vector<std::uint8_t> tensor;  // canonical T_k bytes
    std::uint64_t tensor_hash = 0;
  };
  std::vector<PerK> per_k;
  bool operator==(const InvariantSignature& o) const;
};

/// Signature for k = kmin..kmax. Values beyond floor(n/2) are redundant
/// through the complement identity but are accepted.
InvariantSignature signature(const Graph& g, int kmin, int kmax);

enum class InvariantKind { Tensor, List, Eigen };
const char* to_string(InvariantKind kind);
InvariantKind parse_invariant(const std::string& s);

struct InvariantVerdict {
  bool inequivalent = false;
  int k = 0;                    // first marginal size that separates the graphs
  std::optional<NodeSet> set;   // labeled mode: least set whose dimension differs
  int d1 = 0;
  int d2 = 0;
  std::string detail;           // unlabeled mode: which invariant differs
};

/// One-sided LU test: an inequivalent verdict is a proof, the other is not a claim.
InvariantVerdict compare(const Graph& a, const Graph& b, Mode mode, int kmin, int kmax);

}  // namespace gsx

#endif  // GSX_INVARIANTS_HPP
