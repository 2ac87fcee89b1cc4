#include "gsx/invariants.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "gsx/stabilizer.hpp"

namespace gsx {

MarginalTable::MarginalTable(const Graph& g) : g_(g) {
  if (g.n() <= 20) dense_.assign(std::size_t{1} << g.n(), -1);
}

int MarginalTable::dim(NodeSet m) {
  if (!dense_.empty()) {
    auto& slot = dense_[m.mask()];
    if (slot < 0) slot = static_cast<std::int8_t>(marginal_dimension(g_, m));
    return slot;
  }
  auto [it, fresh] = sparse_.emplace(m.mask(), 0);
  if (fresh) it->second = static_cast<std::int8_t>(marginal_dimension(g_, m));
  return it->second;
}

namespace {

void check_k(const Graph& g, int k, int lo, int hi, const char* what) {
  if (k < lo || k > hi)
    throw Error(std::string(what) + ": k = " + std::to_string(k) + " outside " + std::to_string(lo) + ".." +
                std::to_string(hi) + " for n = " + std::to_string(g.n()));
}

// Sorted index tuples i1 <= ... <= ik over 0..n-1, lexicographic.
template <typename F>
void for_each_sorted_tuple(int n, int k, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - 1) --i;
    if (i < 0) return;
    const int v = ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = v;
  }
}

NodeSet tuple_set(const std::vector<int>& idx) {
  std::uint32_t m = 0;
  for (int v : idx) m |= std::uint32_t{1} << v;
  return NodeSet(m);
}

bool mul_checked(__int128 a, __int128 b, __int128& out) { return !__builtin_mul_overflow(a, b, &out); }
bool add_checked(__int128 a, __int128 b, __int128& out) { return !__builtin_add_overflow(a, b, &out); }

// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier; coefficient j
// multiplies x^j. Returns false on overflow.
bool characteristic_polynomial(const std::vector<std::int64_t>& a, int n, std::vector<__int128>& coeff) {
  coeff.assign(static_cast<std::size_t>(n) + 1, 0);
  coeff[static_cast<std::size_t>(n)] = 1;
  std::vector<__int128> mk(static_cast<std::size_t>(n * n), 0);  // M_0 = 0
  std::vector<__int128> amk(static_cast<std::size_t>(n * n), 0);
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        __int128 acc = (i == j) ? coeff[static_cast<std::size_t>(n - k + 1)] : 0;
        for (int l = 0; l < n; ++l) {
          __int128 prod;
          if (!mul_checked(a[static_cast<std::size_t>(i * n + l)], mk[static_cast<std::size_t>(l * n + j)], prod)) return false;
          if (!add_checked(acc, prod, acc)) return false;
        }
        amk[static_cast<std::size_t>(i * n + j)] = acc;
      }
    mk.swap(amk);
    // c_{n-k} = -tr(A M_k) / k
    __int128 tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        __int128 prod;
        if (!mul_checked(a[static_cast<std::size_t>(i * n + l)], mk[static_cast<std::size_t>(l * n + i)], prod)) return false;
        if (!add_checked(tr, prod, tr)) return false;
      }
    if (tr % k != 0) return false;
    coeff[static_cast<std::size_t>(n - k)] = -tr / k;
  }
  return true;
}

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string s;
  while (u) {
    s += static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  if (neg) s += '-';
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace

std::vector<std::vector<NodeSet>> fixed_dimension_sets(const Graph& g, int k) {
  check_k(g, k, 1, g.n(), "fixed_dimension_sets");
  MarginalTable table(g);
  std::vector<std::vector<NodeSet>> out(static_cast<std::size_t>(k) + 1);
  for_each_k_subset(g.n(), k, [&](NodeSet m) { out[static_cast<std::size_t>(table.dim(m))].push_back(m); });
  return out;
}

RankList rank_list(MarginalTable& table, int k) {
  check_k(table.graph(), k, 1, table.graph().n(), "rank_list");
  RankList out{k, std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0)};
  for_each_k_subset(table.graph().n(), k, [&](NodeSet m) { ++out.counts[static_cast<std::size_t>(table.dim(m))]; });
  return out;
}

RankList rank_list(const Graph& g, int k) {
  MarginalTable table(g);
  return rank_list(table, k);
}

int RankTensor::at(std::vector<int> indices) const {
  if (static_cast<int>(indices.size()) != k_) throw Error("RankTensor::at: wrong number of indices");
  std::sort(indices.begin(), indices.end());
  std::size_t pos = 0;
  std::size_t found = values_.size();
  for_each_sorted_tuple(n_, k_, [&](const std::vector<int>& t) {
    if (found == values_.size() && t == indices) found = pos;
    ++pos;
  });
  if (found == values_.size()) throw Error("RankTensor::at: index out of range");
  return values_[found];
}

RankTensor rank_tensor(MarginalTable& table, int k) {
  const Graph& g = table.graph();
  check_k(g, k, 1, g.n(), "rank_tensor");
  std::vector<std::uint8_t> values;
  for_each_sorted_tuple(g.n(), k, [&](const std::vector<int>& t) {
    values.push_back(static_cast<std::uint8_t>(table.dim(tuple_set(t))));
  });
  return RankTensor(g.n(), k, std::move(values));
}

RankTensor rank_tensor(const Graph& g, int k) {
  MarginalTable table(g);
  return rank_tensor(table, k);
}

std::vector<std::int64_t> summed_tensor_matrix(MarginalTable& table, int k, TensorEntry entry) {
  const int n = table.graph().n();
  check_k(table.graph(), k, 2, n, "tensor_eigen_product");
  // Union masks of every tuple over the k-2 summed axes.
  std::vector<std::uint32_t> tails{0};
  for (int axis = 0; axis < k - 2; ++axis) {
    std::vector<std::uint32_t> next;
    next.reserve(tails.size() * static_cast<std::size_t>(n));
    for (std::uint32_t t : tails)
      for (int v = 0; v < n; ++v) next.push_back(t | (std::uint32_t{1} << v));
    tails = std::move(next);
  }
  std::vector<std::int64_t> m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const std::uint32_t head = (std::uint32_t{1} << i) | (std::uint32_t{1} << j);
      std::int64_t sum = 0;
      for (std::uint32_t t : tails) {
        const NodeSet s(head | t);
        sum += entry == TensorEntry::Rank ? s.size() - table.dim(s) : table.dim(s);
      }
      m[static_cast<std::size_t>(i * n + j)] = sum;
      m[static_cast<std::size_t>(j * n + i)] = sum;
    }
  return m;
}

EigenProduct tensor_eigen_product(MarginalTable& table, int k, TensorEntry entry) {
  const int n = table.graph().n();
  const std::vector<std::int64_t> m = summed_tensor_matrix(table, k, entry);

  Eigen::MatrixXd dense(n, n);
  double max_norm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      dense(i, j) = static_cast<double>(m[static_cast<std::size_t>(i * n + j)]);
      max_norm = std::max(max_norm, std::abs(dense(i, j)));
    }
  EigenProduct out;
  out.approx = 1.0;
  if (max_norm > 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
    const double tol = 1e-6 * max_norm;
    for (int i = 0; i < n; ++i) {
      const double lambda = solver.eigenvalues()[i];
      if (std::abs(lambda) > tol) {
        out.approx *= lambda;
        ++out.nonzero;
      }
    }
  }

  std::vector<__int128> coeff;
  if (characteristic_polynomial(m, n, coeff)) {
    // det(xI - A) = x^z q(x) with q(0) != 0; the nonzero roots multiply to (-1)^{n-z} q(0).
    int z = 0;
    while (z < n && coeff[static_cast<std::size_t>(z)] == 0) ++z;
    const __int128 trailing = coeff[static_cast<std::size_t>(z)];
    out.exact = true;
    out.value = ((n - z) % 2 == 0) ? trailing : -trailing;
    out.nonzero = n - z;
  }
  return out;
}

EigenProduct tensor_eigen_product(const Graph& g, int k, TensorEntry entry) {
  MarginalTable table(g);
  return tensor_eigen_product(table, k, entry);
}

std::string EigenProduct::str() const {
  if (exact) return int128_to_string(value);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", approx);
  return buf;
}

bool EigenProduct::operator==(const EigenProduct& o) const {
  if (exact && o.exact) return value == o.value;
  if (nonzero != o.nonzero) return false;
  const double scale = std::max({1.0, std::abs(approx), std::abs(o.approx)});
  return std::abs(approx - o.approx) <= 1e-9 * scale;
}

std::vector<std::uint8_t> tensor_digest(MarginalTable& table, int k) {
  const int n = table.graph().n();
  check_k(table.graph(), k, 1, n, "tensor_digest");
  std::vector<std::uint8_t> out;
  for (int s = 1; s <= k; ++s)
    for_each_k_subset(n, s, [&](NodeSet m) { out.push_back(static_cast<std::uint8_t>(table.dim(m))); });
  return out;
}

std::uint64_t digest_hash(const std::vector<std::uint8_t>& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

bool InvariantSignature::operator==(const InvariantSignature& o) const {
  if (per_k.size() != o.per_k.size()) return false;
  for (std::size_t i = 0; i < per_k.size(); ++i) {
    const auto& a = per_k[i];
    const auto& b = o.per_k[i];
    if (a.k != b.k || a.l != b.l || a.tensor != b.tensor) return false;
    if (a.k >= 2 && !(a.t == b.t)) return false;
  }
  return true;
}

InvariantSignature signature(const Graph& g, int kmin, int kmax) {
  if (kmin < 1 || kmax > g.n() || kmin > kmax) throw Error("signature: invalid k range");
  MarginalTable table(g);
  InvariantSignature sig;
  for (int k = kmin; k <= kmax; ++k) {
    InvariantSignature::PerK entry;
    entry.k = k;
    entry.l = rank_list(table, k);
    if (k >= 2) entry.t = tensor_eigen_product(table, k);
    entry.tensor = tensor_digest(table, k);
    entry.tensor_hash = digest_hash(entry.tensor);
    sig.per_k.push_back(std::move(entry));
  }
  return sig;
}

const char* to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::Tensor: return "T";
    case InvariantKind::List: return "l";
    case InvariantKind::Eigen: return "t";
  }
  return "?";
}

InvariantKind parse_invariant(const std::string& s) {
  if (s == "T") return InvariantKind::Tensor;
  if (s == "l") return InvariantKind::List;
  if (s == "t") return InvariantKind::Eigen;
  throw Error("unknown invariant '" + s + "' (expected T, l or t)");
}

namespace {

std::string list_str(const RankList& l) {
  std::string s = "[";
  for (std::size_t i = 0; i < l.counts.size(); ++i) s += (i ? "," : "") + std::to_string(l.counts[i]);
  return s + "]";
}

}  // namespace

InvariantVerdict compare(const Graph& a, const Graph& b, Mode mode, int kmin, int kmax) {
  if (a.n() != b.n()) throw Error("compare: graphs differ in size");
  if (kmin < 1 || kmax > a.n() || kmin > kmax) throw Error("compare: invalid k range");
  MarginalTable ta(a);
  MarginalTable tb(b);
  InvariantVerdict v;
  if (mode == Mode::Labeled) {
    for (int s = 1; s <= kmax && !v.inequivalent; ++s)
      for_each_k_subset(a.n(), s, [&](NodeSet m) {
        if (v.inequivalent) return;
        const int da = ta.dim(m);
        const int db = tb.dim(m);
        if (da != db) {
          v.inequivalent = true;
          v.k = std::max(s, kmin);
          v.set = m;
          v.d1 = da;
          v.d2 = db;
          v.detail = "d" + to_string(m) + " = " + std::to_string(da) + " vs " + std::to_string(db);
        }
      });
    return v;
  }
  for (int k = kmin; k <= kmax; ++k) {
    const RankList la = rank_list(ta, k);
    const RankList lb = rank_list(tb, k);
    if (la != lb) {
      v.inequivalent = true;
      v.k = k;
      v.detail = "l_" + std::to_string(k) + " = " + list_str(la) + " vs " + list_str(lb);
      return v;
    }
    if (k >= 2) {
      const EigenProduct ea = tensor_eigen_product(ta, k);
      const EigenProduct eb = tensor_eigen_product(tb, k);
      if (!(ea == eb)) {
        v.inequivalent = true;
        v.k = k;
        v.detail = "t_" + std::to_string(k) + " = " + ea.str() + " vs " + eb.str();
        return v;
      }
    }
  }
  return v;
}

}  // namespace gsx
