#include "gsx/classdb.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "gsx/canonical.hpp"

namespace gsx {

std::vector<Graph> extend_class_representatives(const std::vector<Graph>& smaller,
                                                const std::function<void(std::size_t, std::size_t)>& progress) {
  if (smaller.empty()) throw Error("extend_class_representatives: empty input");
  const int m = smaller.front().n();
  const int n = m + 1;
  if (n > 12) throw Error("extend_class_representatives: canonical forms are limited to 12 nodes");
  std::unordered_map<Graph, std::size_t, GraphHash> class_of;  // canonical graph -> index in keys
  std::vector<Graph> keys;
  for (std::size_t r = 0; r < smaller.size(); ++r) {
    const Graph& base = smaller[r];
    if (base.n() != m) throw Error("extend_class_representatives: mixed node counts");
    for (std::uint32_t nb = 1; nb < (std::uint32_t{1} << m); ++nb) {
      Graph g(n);
      for (auto [a, b] : base.edges()) g.add_edge(a, b);
      NodeSet(nb).for_each([&](int v) { g.add_edge(v, m); });
      const Graph c = canonical_graph(g);
      if (class_of.count(c)) continue;
      const std::vector<Graph> members = unlabeled_orbit(c);
      for (const Graph& h : members) class_of.emplace(h, keys.size());
      keys.push_back(members.front());
    }
    if (progress) progress(r + 1, keys.size());
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<Graph> generate_class_representatives(int n, const std::function<void(int, std::size_t)>& progress) {
  if (n < 1) throw Error("generate_class_representatives: n must be positive");
  if (n == 1) return {Graph(1)};
  std::vector<Graph> reps{complete_graph(2)};
  for (int k = 3; k <= n; ++k) {
    reps = extend_class_representatives(reps);
    if (progress) progress(k, reps.size());
  }
  return reps;
}

RepresentativeDb compute_db(int n, Mode mode) {
  if (n < 2 || n > kMaxEnumerationNodes) throw Error("compute_db: exhaustive computation needs 2 <= n <= 7");
  const UniversePartition u = partition_universe(n);
  RepresentativeDb db;
  db.n = n;
  db.mode = mode;
  if (mode == Mode::Labeled) {
    for (std::uint32_t c : u.orbit_reps) db.reps.push_back(Graph::from_code(n, c));
    db.provenance = "computed:exhaustive-labeled-enumeration";
  } else {
    for (std::uint32_t c : u.class_reps) db.reps.push_back(class_key(Graph::from_code(n, c)));
    std::sort(db.reps.begin(), db.reps.end());
    db.provenance = "computed:exhaustive-labeled-enumeration";
  }
  db.checksum = db_checksum(db_graph6_text(db));
  return db;
}

std::string db_checksum(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string db_graph6_text(const RepresentativeDb& db) {
  std::string out;
  for (const Graph& g : db.reps) out += to_graph6(g) + "\n";
  return out;
}

std::string db_sidecar_json(const RepresentativeDb& db) {
  nlohmann::ordered_json j;
  j["format"] = "gsx-representatives";
  j["version"] = 1;
  j["n"] = db.n;
  j["mode"] = to_string(db.mode);
  j["count"] = db.reps.size();
  j["checksum"] = "fnv1a64:" + db_checksum(db_graph6_text(db));
  j["provenance"] = db.provenance;
  return j.dump(2) + "\n";
}

std::string sidecar_path(const std::string& g6_path) {
  return std::filesystem::path(g6_path).replace_extension(".json").string();
}

std::string write_db(const RepresentativeDb& db, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::string stem = (db.mode == Mode::Unlabeled ? "classes_n" : "orbits_n") + std::to_string(db.n);
  const std::string g6 = (std::filesystem::path(dir) / (stem + ".g6")).string();
  std::ofstream(g6, std::ios::binary) << db_graph6_text(db);
  std::ofstream(sidecar_path(g6), std::ios::binary) << db_sidecar_json(db);
  return g6;
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IntegrityError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

RepresentativeDb ingest_db(const std::string& g6_path, bool deep) {
  const std::string text = slurp(g6_path);
  nlohmann::json side;
  try {
    side = nlohmann::json::parse(slurp(sidecar_path(g6_path)));
  } catch (const nlohmann::json::exception& e) {
    throw IntegrityError("bad sidecar for " + g6_path + ": " + e.what());
  }
  const std::string want = side.value("checksum", "");
  const std::string got = "fnv1a64:" + db_checksum(text);
  if (want != got) throw IntegrityError(g6_path + ": checksum " + got + " does not match sidecar " + want);

  RepresentativeDb db;
  db.n = side.value("n", 0);
  db.mode = parse_mode(side.value("mode", "unlabeled"));
  db.provenance = "ingested:" + g6_path;
  db.checksum = db_checksum(text);

  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      throw IntegrityError(g6_path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (g.n() != db.n)
      throw IntegrityError(g6_path + ":" + std::to_string(lineno) + ": graph has " + std::to_string(g.n()) +
                           " nodes, sidecar says " + std::to_string(db.n));
    if (!is_connected(g)) throw IntegrityError(g6_path + ":" + std::to_string(lineno) + ": graph is not connected");
    db.reps.push_back(g);
  }
  if (side.contains("count") && side["count"].get<std::size_t>() != db.reps.size())
    throw IntegrityError(g6_path + ": sidecar count does not match the number of graphs");

  if (deep) {
    // Key -> first line holding it; a repeat names the clashing pair.
    std::map<std::vector<std::uint32_t>, std::size_t> owner;
    std::unordered_map<std::uint64_t, std::size_t> orbit_owner;
    for (std::size_t i = 0; i < db.reps.size(); ++i) {
      if (db.mode == Mode::Unlabeled) {
        const Graph key = class_key(db.reps[i]);
        std::vector<std::uint32_t> rows;
        for (int v = 0; v < key.n(); ++v) rows.push_back(key.row(v));
        auto [it, fresh] = owner.emplace(rows, i);
        if (!fresh)
          throw IntegrityError(g6_path + ": lines " + std::to_string(it->second + 1) + " and " +
                               std::to_string(i + 1) + " are in the same entanglement class");
      } else {
        for (const Graph& h : lc_orbit(db.reps[i])) {
          auto [it, fresh] = orbit_owner.emplace(h.code(), i);
          if (!fresh && it->second != i)
            throw IntegrityError(g6_path + ": lines " + std::to_string(it->second + 1) + " and " +
                                 std::to_string(i + 1) + " are in the same LC orbit");
        }
      }
    }
  }
  return db;
}

}  // namespace gsx
