#ifndef GSX_CLASSDB_HPP
#define GSX_CLASSDB_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gsx/graph.hpp"
#include "gsx/lc.hpp"

namespace gsx {

/// Representatives of the entanglement classes (unlabeled) or labeled LC
/// orbits on n nodes, one graph per class.
struct RepresentativeDb {
  int n = 0;
  Mode mode = Mode::Unlabeled;
  std::vector<Graph> reps;
  std::string provenance;  // "computed:<method>" or "ingested:<path>"
  std::string checksum;    // of the graph6 text, see db_checksum
};

/// Integrity failure of an ingested database.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Class representatives on n nodes built from those on n - 1 nodes: every
/// connected graph arises from a smaller connected one by adding a vertex, and
/// LC moves on the old vertices commute with deleting the new one. Each output
/// graph is its own class key; the list is sorted.
std::vector<Graph> extend_class_representatives(const std::vector<Graph>& smaller,
                                                const std::function<void(std::size_t, std::size_t)>& progress = {});

/// Class keys for n nodes by repeated extension from the single edge.
std::vector<Graph> generate_class_representatives(int n,
                                                  const std::function<void(int, std::size_t)>& progress = {});

/// Labeled orbit or class representatives by exhaustive enumeration, n <= 7.
RepresentativeDb compute_db(int n, Mode mode);

/// FNV-1a 64-bit hash of the bytes, as 16 hex digits.
std::string db_checksum(const std::string& text);

std::string db_graph6_text(const RepresentativeDb& db);
std::string db_sidecar_json(const RepresentativeDb& db);

/// Writes <dir>/classes_n<N>.g6 (or orbits_n<N>.g6) and a .json sidecar next
/// to it; returns the graph6 path.
std::string write_db(const RepresentativeDb& db, const std::string& dir);

/// Reads a graph6 file and its sidecar (same path with .json). Checks the
/// checksum, node count and connectivity of every line, and, when `deep`,
/// that no two representatives share a class (or orbit).
RepresentativeDb ingest_db(const std::string& g6_path, bool deep = true);

/// Sidecar path for a graph6 database path.
std::string sidecar_path(const std::string& g6_path);

}  // namespace gsx

#endif  // GSX_CLASSDB_HPP
