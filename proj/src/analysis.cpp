#include "gsx/analysis.hpp"

#include <algorithm>
#include <chrono>

namespace gsx {

const char* to_string(Status s) {
  switch (s) {
    case Status::LCEquivalent: return "LCEquivalent";
    case Status::LUInequivalent: return "LUInequivalent";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(Stage s) {
  switch (s) {
    case Stage::Invariants: return "invariants";
    case Stage::LcSearch: return "lc-search";
    case Stage::Scan: return "scan";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Returns true once the verdict is final.
bool run_invariants(const Graph& g1, const Graph& g2, const PipelineOptions& o, Verdict& v) {
  const int kmax = std::clamp(o.kmax, 1, g1.n());
  const int kmin = o.mode == Mode::Labeled ? 1 : std::min(2, kmax);
  InvariantVerdict iv = compare(g1, g2, o.mode, kmin, kmax);
  if (!iv.inequivalent) {
    v.stages.back().outcome = "signatures agree for k <= " + std::to_string(kmax);
    return false;
  }
  v.stages.back().outcome = "differ at k=" + std::to_string(iv.k) + ": " + iv.detail;
  v.status = Status::LUInequivalent;
  v.stage = Stage::Invariants;
  v.detail = iv.detail;
  v.invariant_witness = iv;
  return true;
}

bool run_lc_search(const Graph& g1, const Graph& g2, const PipelineOptions& o, Verdict& v) {
  try {
    const bool same = o.mode == Mode::Labeled ? lc_equivalent(g1, g2, o.budget) : class_equivalent(g1, g2, o.budget);
    if (same) {
      v.stages.back().outcome = o.mode == Mode::Labeled ? "same LC orbit" : "same entanglement class";
      v.status = Status::LCEquivalent;
      v.stage = Stage::LcSearch;
      v.detail = v.stages.back().outcome;
      return true;
    }
    v.stages.back().outcome = "LC-inequivalent (search complete)";
    v.detail = "LC-inequivalent; LU-equivalence not excluded";
  } catch (const OrbitOverflow& e) {
    v.stages.back().outcome = std::string("budget exhausted: ") + e.what();
  }
  return false;
}

bool run_scan(const Graph& g1, const Graph& g2, const PipelineOptions& o, Verdict& v) {
  const int k = std::clamp(o.scan_k, 1, kMaxScanSet);
  if (o.mode == Mode::Labeled) {
    ScanVerdict s = lu_inequivalence_scan(g1, g2, k);
    if (!s.inequivalent) {
      v.stages.back().outcome = s.describe();
      return false;
    }
    v.stages.back().outcome = s.describe();
    v.status = Status::LUInequivalent;
    v.stage = Stage::Scan;
    v.detail = s.describe();
    v.invariant_witness = s.invariant_mismatch;
    v.conflict = s.conflict;
    return true;
  }
  // Any LU map between the classes relabels g2 so that every marginal
  // dimension matches, so refuting each such relabeling is a proof.
  const auto aligns = align_marginals(g1, g2, g1.n() - 1, o.alignment_limit + 1);
  if (aligns.size() > o.alignment_limit) {
    v.stages.back().outcome = "more than " + std::to_string(o.alignment_limit) + " marginal alignments";
    return false;
  }
  if (aligns.empty()) {
    v.stages.back().outcome = "no relabeling matches every marginal dimension";
    v.status = Status::LUInequivalent;
    v.stage = Stage::Scan;
    v.detail = v.stages.back().outcome;
    return true;
  }
  std::optional<LetterConflict> first;
  for (const auto& perm : aligns) {
    ScanVerdict s = lu_inequivalence_scan(g1, g2.permuted(perm), k);
    if (!s.inequivalent) {
      v.stages.back().outcome = "an alignment survives: " + s.describe();
      return false;
    }
    if (!first && s.conflict) first = s.conflict;
  }
  v.stages.back().outcome = "all " + std::to_string(aligns.size()) + " alignments refuted";
  if (first) v.stages.back().outcome += "; first: " + first->describe();
  v.status = Status::LUInequivalent;
  v.stage = Stage::Scan;
  v.detail = v.stages.back().outcome;
  v.conflict = first;
  return true;
}

}  // namespace

Verdict decide(const Graph& g1, const Graph& g2, const PipelineOptions& options) {
  if (g1.n() != g2.n()) throw Error("compare: graphs differ in size");
  Verdict v;
  std::vector<Stage> order = options.batch ? std::vector<Stage>{Stage::Invariants, Stage::LcSearch, Stage::Scan}
                                           : std::vector<Stage>{Stage::LcSearch, Stage::Invariants, Stage::Scan};
  for (Stage s : order) {
    v.stages.push_back({s, "", 0.0});
    const auto t0 = Clock::now();
    bool done = false;
    switch (s) {
      case Stage::Invariants: done = run_invariants(g1, g2, options, v); break;
      case Stage::LcSearch: done = run_lc_search(g1, g2, options, v); break;
      case Stage::Scan: done = run_scan(g1, g2, options, v); break;
    }
    v.stages.back().millis = millis_since(t0);
    if (done) return v;
  }
  v.status = Status::Inconclusive;
  if (v.detail.empty()) v.detail = "no stage was decisive";
  return v;
}

namespace {

std::vector<int> default_ks(const TableRequest& r) {
  if (!r.ks.empty()) return r.ks;
  std::vector<int> ks;
  for (int k = 2; k <= r.n / 2; ++k) ks.push_back(k);
  if (ks.empty()) ks.push_back(r.n >= 2 ? 2 : 1);
  return ks;
}

}  // namespace

std::vector<TableRow> compute_table(const TableRequest& request) {
  const std::vector<int> ks = default_ks(request);
  std::vector<std::vector<int>> groups;
  for (int k : ks) groups.push_back({k});
  const bool aggregate = request.kind != InvariantKind::Tensor;
  if (aggregate) groups.push_back(ks);

  std::vector<TableRow> rows;
  if (request.n <= kMaxEnumerationNodes && !request.db) {
    const UniversePartition u = partition_universe(request.n);
    for (std::size_t i = 0; i < groups.size(); ++i) {
      TableRow row;
      row.aggregated = aggregate && i + 1 == groups.size();
      row.result = figures_of_merit(u, request.kind, groups[i], request.merit);
      rows.push_back(row);
    }
    return rows;
  }

  if (!request.db) throw Error("tables for n >= 8 need a representative database (--db)");
  const RepresentativeDb& db = *request.db;
  if (db.n != request.n) throw Error("database node count does not match --n");
  const Mode want = request.kind == InvariantKind::Tensor ? Mode::Labeled : Mode::Unlabeled;
  if (db.mode != want)
    throw Error(std::string("invariant ") + to_string(request.kind) + " needs a " + to_string(want) + " database");
  for (std::size_t i = 0; i < groups.size(); ++i) {
    TableRow row;
    row.aggregated = aggregate && i + 1 == groups.size();
    row.result = ratio_from_representatives(db.reps, request.kind, groups[i]);
    row.has_p = request.samples > 0;
    if (row.has_p) {
      MeritResult mc = monte_carlo_p(request.n, want, request.kind, groups[i], request.samples, request.seed,
                                     request.merit);
      row.result.p = mc.p;
      row.result.stderr_p = mc.stderr_p;
      row.result.samples = mc.samples;
      row.result.seed = mc.seed;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gsx
