#ifndef GSX_ANALYSIS_HPP
#define GSX_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsx/classdb.hpp"
#include "gsx/invariants.hpp"
#include "gsx/lu_scan.hpp"
#include "gsx/merit.hpp"

namespace gsx {

enum class Status { LCEquivalent, LUInequivalent, Inconclusive };
const char* to_string(Status s);

/// Stage ids are fixed whatever order the stages run in.
enum class Stage { Invariants = 1, LcSearch = 2, Scan = 3 };
const char* to_string(Stage s);

struct StageReport {
  Stage stage = Stage::Invariants;
  std::string outcome;
  double millis = 0.0;
};

struct PipelineOptions {
  Mode mode = Mode::Labeled;
  int kmax = 4;                       // invariant signatures for k <= kmax
  std::size_t budget = 1'000'000;     // cap on graphs visited by the LC search
  bool batch = false;                 // invariants before the LC search
  int scan_k = kMaxScanSet;           // largest marginal examined by the scan
  std::size_t alignment_limit = 10'000;
};

struct Verdict {
  Status status = Status::Inconclusive;
  std::optional<Stage> stage;  // the deciding stage
  std::vector<StageReport> stages;
  std::optional<InvariantVerdict> invariant_witness;
  std::optional<LetterConflict> conflict;
  std::string detail;
};

/// Staged LU/LC decision. Default order is LC search, invariants, scan; with
/// `batch` the invariants run first. The first decisive stage wins. An
/// exhausted search budget is reported in its stage, never as a verdict.
Verdict decide(const Graph& g1, const Graph& g2, const PipelineOptions& options = {});

struct TableRequest {
  int n = 0;
  InvariantKind kind = InvariantKind::Tensor;
  std::vector<int> ks;          // empty: 2..floor(n/2)
  MeritOptions merit;
  std::optional<RepresentativeDb> db;  // required for n >= 8
  std::uint64_t samples = 0;    // Monte Carlo pairs for p when n >= 8
  std::uint64_t seed = 1;
};

struct TableRow {
  bool aggregated = false;  // the tuple over all requested k
  MeritResult result;
  bool has_r = true;
  bool has_p = true;
};

/// One row per k, plus the aggregated R/P row for l and t. Exact for n <= 7.
std::vector<TableRow> compute_table(const TableRequest& request);

}  // namespace gsx

#endif  // GSX_ANALYSIS_HPP
