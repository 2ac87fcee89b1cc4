#include "gsx/merit.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace gsx {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::string invariant_key(const Graph& g, InvariantKind kind, const std::vector<int>& ks) {
  MarginalTable table(g);
  std::string key;
  for (int k : ks) {
    key += static_cast<char>('0' + k);
    key += ':';
    switch (kind) {
      case InvariantKind::Tensor:
        for (std::uint8_t b : tensor_digest(table, k)) key += static_cast<char>('0' + b);
        break;
      case InvariantKind::List:
        for (std::uint64_t c : rank_list(table, k).counts) key += std::to_string(c) + ",";
        break;
      case InvariantKind::Eigen:
        key += tensor_eigen_product(table, k).str();
        break;
    }
    key += ';';
  }
  return key;
}

namespace {

void check_ks(int n, const std::vector<int>& ks, InvariantKind kind) {
  if (ks.empty()) throw Error("figures of merit need at least one k");
  const int lo = kind == InvariantKind::Eigen ? 2 : 1;
  for (int k : ks)
    if (k < lo || k > n) throw Error("figures of merit: k = " + std::to_string(k) + " out of range");
}

}  // namespace

MeritResult figures_of_merit(const UniversePartition& u, InvariantKind kind, const std::vector<int>& ks,
                             const MeritOptions& options) {
  check_ks(u.n, ks, kind);
  if (u.codes.empty()) throw Error("figures of merit: empty universe");
  MeritResult res;
  res.n = u.n;
  res.mode = kind == InvariantKind::Tensor ? Mode::Labeled : Mode::Unlabeled;
  res.invariant = kind;
  res.ks = ks;
  res.orbits = u.orbit_reps.size();
  res.classes = u.class_reps.size();

  const bool labeled = res.mode == Mode::Labeled;
  const auto& reps = labeled ? u.orbit_reps : u.class_reps;
  const auto& sizes = labeled ? u.orbit_size : u.class_size;

  struct Bucket {
    double weight = 0.0;
    double weight_sq = 0.0;
  };
  std::unordered_map<std::string, Bucket> buckets;
  double total = 0.0;
  double self_pairs = 0.0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const double w = options.measure == PairMeasure::Graphs ? static_cast<double>(sizes[i]) : 1.0;
    auto& b = buckets[invariant_key(Graph::from_code(u.n, reps[i]), kind, ks)];
    b.weight += w;
    b.weight_sq += w * w;
    total += w;
    self_pairs += w * w;
  }
  res.distinct_values = buckets.size();
  res.r = static_cast<double>(buckets.size()) / static_cast<double>(reps.size());

  double colliding = 0.0;
  for (const auto& [key, b] : buckets) colliding += b.weight * b.weight - b.weight_sq;
  const double all_pairs = total * total;
  res.p = colliding / all_pairs;
  if (options.event == PEvent::Conditional) {
    const double different = all_pairs - self_pairs;
    res.p = different > 0.0 ? colliding / different : 0.0;
  }
  return res;
}

MeritResult ratio_from_representatives(const std::vector<Graph>& reps, InvariantKind kind,
                                       const std::vector<int>& ks) {
  if (reps.empty()) throw Error("figures of merit: empty representative list");
  check_ks(reps.front().n(), ks, kind);
  MeritResult res;
  res.n = reps.front().n();
  res.mode = kind == InvariantKind::Tensor ? Mode::Labeled : Mode::Unlabeled;
  res.invariant = kind;
  res.ks = ks;
  std::unordered_set<std::string> values;
  for (const Graph& g : reps) values.insert(invariant_key(g, kind, ks));
  (res.mode == Mode::Labeled ? res.orbits : res.classes) = reps.size();
  res.distinct_values = values.size();
  res.r = static_cast<double>(values.size()) / static_cast<double>(reps.size());
  return res;
}

MeritResult monte_carlo_p(int n, Mode mode, InvariantKind kind, const std::vector<int>& ks, std::uint64_t samples,
                          std::uint64_t seed, const MeritOptions& options) {
  check_ks(n, ks, kind);
  if (samples == 0) throw Error("Monte Carlo p needs at least one sample");
  if (options.measure != PairMeasure::Graphs)
    throw Error("Monte Carlo p only samples uniformly over labeled graphs");
  MeritResult res;
  res.n = n;
  res.mode = mode;
  res.invariant = kind;
  res.ks = ks;
  res.samples = samples;
  res.seed = seed;

  std::uint64_t hits = 0;
  std::uint64_t different = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(i)));
    const Graph a = random_connected_graph(n, rng);
    const Graph b = random_connected_graph(n, rng);
    const bool same_value = invariant_key(a, kind, ks) == invariant_key(b, kind, ks);
    bool same_group = false;
    if (same_value) same_group = mode == Mode::Labeled ? lc_equivalent(a, b) : class_equivalent(a, b);
    if (!same_group) ++different;
    if (same_value && !same_group) ++hits;
  }
  const double denom = options.event == PEvent::Joint ? static_cast<double>(samples) : static_cast<double>(different);
  res.p = denom > 0 ? static_cast<double>(hits) / denom : 0.0;
  res.stderr_p = denom > 0 ? std::sqrt(res.p * (1.0 - res.p) / denom) : 0.0;
  return res;
}

}  // namespace gsx
