#ifndef GSX_LU_SCAN_HPP
#define GSX_LU_SCAN_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gsx/invariants.hpp"
#include "gsx/pauli.hpp"

namespace gsx {

inline constexpr int kMaxScanSet = 8;

/// Two single-qubit letter assignments that no unitary can satisfy together.
struct LetterConflict {
  enum class Kind {
    Functional,  // one letter sent to two different letters
    Injective,   // two different letters sent to the same letter
    Support,     // identity on one side, a Pauli letter on the other
  };
  Kind kind = Kind::Functional;
  int qubit = 0;
  char from1 = 'I', to1 = 'I';  // earlier constraint
  NodeSet set1;
  char from2 = 'I', to2 = 'I';  // constraint that broke it
  NodeSet set2;

  std::string describe() const;
};
const char* to_string(LetterConflict::Kind kind);

/// Per-qubit partial maps on {X, Y, Z}, each entry remembering the marginal
/// set that imposed it.
class LetterMapAccumulator {
 public:
  explicit LetterMapAccumulator(int n);
  /// Adds P -> P' qubit by qubit; returns the first conflict, if any.
  std::optional<LetterConflict> add(const PauliString& left, const PauliString& right, NodeSet witness);
  std::size_t constraint_count() const { return constraints_; }

 private:
  struct Entry {
    char image = 0;
    NodeSet witness;
  };
  std::vector<std::array<Entry, 3>> forward_;
  std::vector<std::array<Entry, 3>> backward_;
  std::size_t constraints_ = 0;
};

struct MarginalPair {
  NodeSet m;
  PauliString left;
  PauliString right;
};

struct ScanVerdict {
  bool inequivalent = false;
  std::optional<InvariantVerdict> invariant_mismatch;  // set when the prepass decided
  std::optional<LetterConflict> conflict;
  std::size_t marginals_used = 0;  // sets with d_M = 1 on both sides that were examined

  std::string describe() const;
};

/// Feeds the pairs in the given order and stops at the first conflict.
ScanVerdict scan_marginal_pairs(int n, const std::vector<MarginalPair>& pairs);

/// Labeled LU-inequivalence test. Prepass: T_k digests for k <= kmax must
/// agree. Then every M with |M| <= kmax and d_M = 1 on both graphs pairs the
/// single nonidentity elements of S_M, in size-then-lexicographic order of M.
/// An inequivalent verdict is a proof; the other outcome claims nothing.
ScanVerdict lu_inequivalence_scan(const Graph& g1, const Graph& g2, int kmax);

/// Relabelings new_label (node i of g2 becomes new_label[i]) such that every
/// set of size <= kmax has the same marginal dimension in g1 and in the
/// relabeled g2. Stops after `limit` solutions; empty when none exist.
std::vector<std::vector<int>> align_marginals(const Graph& g1, const Graph& g2, int kmax, std::size_t limit = 1);

}  // namespace gsx

#endif  // GSX_LU_SCAN_HPP
