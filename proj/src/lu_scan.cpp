#include "gsx/lu_scan.hpp"

#include <functional>

#include "gsx/stabilizer.hpp"

namespace gsx {

namespace {

int letter_index(char c) { return c == 'X' ? 0 : c == 'Y' ? 1 : 2; }

PauliString single_nonidentity(const Graph& g, NodeSet m) {
  for (const PauliString& s : reduced_stabilizer(g, m).elements)
    if (!s.is_identity()) return s;
  throw TheoryViolation("d_M = 1 without a nonidentity element");
}

}  // namespace

const char* to_string(LetterConflict::Kind kind) {
  switch (kind) {
    case LetterConflict::Kind::Functional: return "functional";
    case LetterConflict::Kind::Injective: return "injective";
    case LetterConflict::Kind::Support: return "support";
  }
  return "?";
}

std::string LetterConflict::describe() const {
  const std::string q = "qubit " + std::to_string(qubit + 1) + ": ";
  const std::string a = std::string(1, from1) + "->" + to1 + " on " + to_string(set1);
  const std::string b = std::string(1, from2) + "->" + to2 + " on " + to_string(set2);
  if (kind == Kind::Support) return q + "letter " + b + " maps identity to a Pauli or back";
  return q + a + " vs " + b + " (" + to_string(kind) + ")";
}

LetterMapAccumulator::LetterMapAccumulator(int n)
    : forward_(static_cast<std::size_t>(n)), backward_(static_cast<std::size_t>(n)) {}

std::optional<LetterConflict> LetterMapAccumulator::add(const PauliString& left, const PauliString& right,
                                                        NodeSet witness) {
  if (left.n() != right.n() || static_cast<std::size_t>(left.n()) != forward_.size())
    throw Error("letter map: Pauli strings of the wrong length");
  for (int q = 0; q < left.n(); ++q) {
    const char a = left.letter(q);
    const char b = right.letter(q);
    if (a == 'I' && b == 'I') continue;
    if (a == 'I' || b == 'I') {
      LetterConflict c;
      c.kind = LetterConflict::Kind::Support;
      c.qubit = q;
      c.from1 = c.from2 = a;
      c.to1 = c.to2 = b;
      c.set1 = c.set2 = witness;
      return c;
    }
    ++constraints_;
    auto& fwd = forward_[static_cast<std::size_t>(q)][static_cast<std::size_t>(letter_index(a))];
    auto& bwd = backward_[static_cast<std::size_t>(q)][static_cast<std::size_t>(letter_index(b))];
    if (fwd.image != 0 && fwd.image != b) {
      return LetterConflict{LetterConflict::Kind::Functional, q, a, fwd.image, fwd.witness, a, b, witness};
    }
    if (bwd.image != 0 && bwd.image != a) {
      return LetterConflict{LetterConflict::Kind::Injective, q, bwd.image, b, bwd.witness, a, b, witness};
    }
    if (fwd.image == 0) fwd = {b, witness};
    if (bwd.image == 0) bwd = {a, witness};
  }
  return std::nullopt;
}

std::string ScanVerdict::describe() const {
  if (!inequivalent) return "inconclusive after " + std::to_string(marginals_used) + " marginals";
  if (invariant_mismatch) return "invariants differ at k=" + std::to_string(invariant_mismatch->k);
  return conflict->describe();
}

ScanVerdict scan_marginal_pairs(int n, const std::vector<MarginalPair>& pairs) {
  ScanVerdict out;
  LetterMapAccumulator acc(n);
  for (const MarginalPair& p : pairs) {
    ++out.marginals_used;
    if (auto c = acc.add(p.left, p.right, p.m)) {
      out.inequivalent = true;
      out.conflict = *c;
      return out;
    }
  }
  return out;
}

ScanVerdict lu_inequivalence_scan(const Graph& g1, const Graph& g2, int kmax) {
  if (g1.n() != g2.n()) throw Error("lu_inequivalence_scan: graphs differ in size");
  if (kmax < 1 || kmax > kMaxScanSet) throw Error("lu_inequivalence_scan: kmax must be in 1..8");
  const int n = g1.n();
  const int k = std::min(kmax, n - 1);
  ScanVerdict out;
  if (k >= 1) {
    InvariantVerdict v = compare(g1, g2, Mode::Labeled, 1, k);
    if (v.inequivalent) {
      out.inequivalent = true;
      out.invariant_mismatch = v;
      return out;
    }
  }
  MarginalTable t1(g1);
  LetterMapAccumulator acc(n);
  for (int size = 2; size <= k; ++size) {
    std::optional<ScanVerdict> done;
    for_each_k_subset(n, size, [&](NodeSet m) {
      if (done || t1.dim(m) != 1) return;
      // The prepass guarantees d_M(g2) = d_M(g1).
      ++out.marginals_used;
      if (auto c = acc.add(single_nonidentity(g1, m), single_nonidentity(g2, m), m)) {
        out.inequivalent = true;
        out.conflict = *c;
        done = out;
      }
    });
    if (done) return *done;
  }
  return out;
}

std::vector<std::vector<int>> align_marginals(const Graph& g1, const Graph& g2, int kmax, std::size_t limit) {
  if (g1.n() != g2.n()) throw Error("align_marginals: graphs differ in size");
  const int n = g1.n();
  const int k = std::min(kmax, n);
  MarginalTable t1(g1);
  MarginalTable t2(g2);
  std::vector<std::vector<int>> found;
  std::vector<int> image(static_cast<std::size_t>(n), -1);  // node of g1 -> node of g2
  std::uint32_t used = 0;

  // Every set of assigned nodes that contains the newest one must agree.
  auto consistent = [&](int last) {
    bool ok = true;
    const NodeSet before = NodeSet::full(last);
    before.for_each_subset([&](NodeSet s) {
      if (!ok || s.size() + 1 > k) return;
      const NodeSet a = s.with(last);
      NodeSet b;
      a.for_each([&](int v) { b = b.with(image[static_cast<std::size_t>(v)]); });
      if (a.size() < n && t1.dim(a) != t2.dim(b)) ok = false;
    });
    return ok;
  };

  std::function<void(int)> place = [&](int i) {
    if (found.size() >= limit) return;
    if (i == n) {
      std::vector<int> new_label(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) new_label[static_cast<std::size_t>(image[static_cast<std::size_t>(v)])] = v;
      found.push_back(std::move(new_label));
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used >> w & 1u) continue;
      image[static_cast<std::size_t>(i)] = w;
      used |= std::uint32_t{1} << w;
      if (consistent(i)) place(i + 1);
      used &= ~(std::uint32_t{1} << w);
    }
    image[static_cast<std::size_t>(i)] = -1;
  };
  place(0);
  return found;
}

}  // namespace gsx
