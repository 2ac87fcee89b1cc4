// gsx: graph-state LU/LC equivalence toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gsx/analysis.hpp"
#include "gsx/canonical.hpp"
#include "gsx/classdb.hpp"
#include "gsx/metagraph.hpp"
#include "gsx/stabilizer.hpp"

using nlohmann::ordered_json;
using namespace gsx;

namespace {

constexpr int kExitError = 2;
constexpr int kExitLcEquivalent = 10;
constexpr int kExitLuInequivalent = 11;
constexpr int kExitInconclusive = 12;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file holds either graph6 (first non-blank line) or a 1-based edge list.
Graph load_graph(const std::string& input) {
  if (input.empty()) throw Error("empty graph input");
  Graph g;
  if (parse_fixture(input, g)) return g;
  if (input.front() != '@') return parse_graph6(input);
  const std::string text = read_file(input.substr(1));
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_of(" \t") != std::string::npos || line.find_first_not_of("0123456789\r") == std::string::npos)
      return parse_edge_list(text);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return parse_graph6(line);
  }
  throw Error("no graph in " + input.substr(1));
}

NodeSet parse_set(const Graph& g, const std::string& text) {
  NodeSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error("bad node '" + item + "' in --set");
    }
    if (v < 1 || v > g.n()) throw Error("node " + item + " outside 1.." + std::to_string(g.n()));
    s = s.with(v - 1);
  }
  if (s.empty()) throw Error("--set must name at least one node");
  return s;
}

std::vector<int> parse_ks(const std::string& text) {
  std::vector<int> ks;
  if (text.empty()) return ks;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    for (int k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) ks.push_back(std::stoi(item));
  return ks;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

ordered_json set_json(NodeSet s) {
  ordered_json a = ordered_json::array();
  s.for_each([&](int v) { a.push_back(v + 1); });
  return a;
}

ordered_json conflict_json(const LetterConflict& c) {
  return {{"kind", to_string(c.kind)},
          {"qubit", c.qubit + 1},
          {"first", {{"from", std::string(1, c.from1)}, {"to", std::string(1, c.to1)}, {"set", set_json(c.set1)}}},
          {"second", {{"from", std::string(1, c.from2)}, {"to", std::string(1, c.to2)}, {"set", set_json(c.set2)}}}};
}

// ---- dm -------------------------------------------------------------------

struct DmArgs {
  std::string graph;
  std::vector<std::string> sets;
  bool elements = false;
  bool json = false;
};

int run_dm(const DmArgs& a) {
  const Graph g = load_graph(a.graph);
  ordered_json out = ordered_json::array();
  for (const std::string& text : a.sets) {
    const NodeSet m = parse_set(g, text);
    const int d = marginal_dimension(g, m);
    const int entropy = m.size() - d;
    ordered_json row = {{"set", set_json(m)}, {"d", d}, {"rank", std::uint64_t{1} << entropy}, {"entropy", entropy}};
    if (a.elements) {
      ordered_json els = ordered_json::array();
      for (const PauliString& s : reduced_stabilizer(g, m).elements) els.push_back(s.str());
      row["elements"] = els;
    }
    if (!a.json) {
      std::cout << "M=" << to_string(m) << " d=" << d << " rank=" << (std::uint64_t{1} << entropy)
                << " E=" << entropy << "\n";
      if (a.elements)
        for (const auto& e : row["elements"]) std::cout << "  " << e.get<std::string>() << "\n";
    }
    out.push_back(row);
  }
  if (a.json) std::cout << out.dump(2) << "\n";
  return 0;
}

// ---- compare --------------------------------------------------------------

struct CompareArgs {
  std::string graph, graph2, mode = "labeled";
  int k = 4;
  std::size_t budget = 1'000'000;
  bool batch = false;
  bool json = false;
};

int run_compare(const CompareArgs& a) {
  const Graph g1 = load_graph(a.graph);
  const Graph g2 = load_graph(a.graph2);
  PipelineOptions o;
  o.mode = parse_mode(a.mode);
  o.kmax = a.k;
  o.budget = a.budget;
  o.batch = a.batch;
  const Verdict v = decide(g1, g2, o);
  if (a.json) {
    ordered_json j = {{"status", to_string(v.status)}};
    j["stage"] = v.stage ? ordered_json(static_cast<int>(*v.stage)) : ordered_json(nullptr);
    j["stage_name"] = v.stage ? ordered_json(to_string(*v.stage)) : ordered_json(nullptr);
    ordered_json stages = ordered_json::array();
    for (const StageReport& s : v.stages)
      stages.push_back({{"id", static_cast<int>(s.stage)}, {"name", to_string(s.stage)}, {"outcome", s.outcome}});
    j["stages"] = stages;
    if (v.status == Status::LUInequivalent) {
      ordered_json w;
      if (v.invariant_witness) {
        w["k"] = v.invariant_witness->k;
        if (v.invariant_witness->set) w["set"] = set_json(*v.invariant_witness->set);
        w["detail"] = v.invariant_witness->detail;
      }
      if (v.conflict) w["letter_conflict"] = conflict_json(*v.conflict);
      if (w.is_null()) w["detail"] = v.detail;
      j["witness"] = w;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(v.status);
    if (v.stage) std::cout << " (stage " << static_cast<int>(*v.stage) << ", " << to_string(*v.stage) << ")";
    std::cout << "\n";
    for (const StageReport& s : v.stages) {
      char ms[32];
      std::snprintf(ms, sizeof ms, "%.1f ms", s.millis);
      std::cout << "  [" << static_cast<int>(s.stage) << " " << to_string(s.stage) << ", " << ms << "] " << s.outcome
                << "\n";
    }
  }
  switch (v.status) {
    case Status::LCEquivalent: return kExitLcEquivalent;
    case Status::LUInequivalent: return kExitLuInequivalent;
    case Status::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

// ---- classes --------------------------------------------------------------

struct ClassesArgs {
  int n = 0;
  std::string mode = "unlabeled";
  std::string ingest;
  std::string out;
  bool generate = false;
  bool shallow = false;
  bool json = false;
};

int run_classes(const ClassesArgs& a) {
  RepresentativeDb db;
  ordered_json j;
  if (!a.ingest.empty()) {
    db = ingest_db(a.ingest, !a.shallow);
    if (a.n != 0 && db.n != a.n) throw Error("database holds n=" + std::to_string(db.n));
  } else {
    if (a.n < 2) throw Error("--n is required (at least 2)");
    const Mode mode = parse_mode(a.mode);
    if (a.generate || a.n > kMaxEnumerationNodes) {
      if (mode != Mode::Unlabeled) throw Error("only unlabeled databases can be generated beyond n=7");
      db.n = a.n;
      db.mode = mode;
      db.reps = generate_class_representatives(a.n, [](int k, std::size_t c) {
        std::cerr << "  n=" << k << ": " << c << " classes\n";
      });
      db.provenance = "computed:vertex-extension";
      db.checksum = db_checksum(db_graph6_text(db));
    } else {
      const UniversePartition u = partition_universe(a.n);
      j["graphs"] = u.codes.size();
      j["orbits"] = u.orbit_reps.size();
      j["classes"] = u.class_reps.size();
      db = compute_db(a.n, mode);
    }
  }
  j["n"] = db.n;
  j["mode"] = to_string(db.mode);
  j["count"] = db.reps.size();
  j["checksum"] = "fnv1a64:" + db.checksum;
  j["provenance"] = db.provenance;
  if (!a.out.empty()) j["written"] = write_db(db, a.out);
  if (a.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "n=" << db.n << " mode=" << to_string(db.mode) << " count=" << db.reps.size() << "\n";
    if (j.contains("graphs"))
      std::cout << "graphs=" << j["graphs"] << " orbits=" << j["orbits"] << " classes=" << j["classes"] << "\n";
    std::cout << "provenance=" << db.provenance << " checksum=fnv1a64:" << db.checksum << "\n";
    if (j.contains("written")) std::cout << "written " << j["written"].get<std::string>() << "\n";
  }
  return 0;
}

// ---- tables ---------------------------------------------------------------

struct TablesArgs {
  int n = 0;
  std::string invariant = "T";
  std::string ks;
  std::string db;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  bool per_group = false;
  bool conditional = false;
  bool json = false;
};

int run_tables(const TablesArgs& a) {
  TableRequest r;
  r.n = a.n;
  r.kind = parse_invariant(a.invariant);
  r.ks = parse_ks(a.ks);
  r.samples = a.samples;
  r.seed = a.seed;
  r.merit.measure = a.per_group ? PairMeasure::Groups : PairMeasure::Graphs;
  r.merit.event = a.conditional ? PEvent::Conditional : PEvent::Joint;
  if (!a.db.empty()) r.db = ingest_db(a.db, false);
  const std::vector<TableRow> rows = compute_table(r);

  ordered_json out = ordered_json::array();
  for (const TableRow& row : rows) {
    const MeritResult& m = row.result;
    ordered_json j;
    j["n"] = m.n;
    if (row.aggregated)
      j["k"] = m.ks;
    else
      j["k"] = m.ks.front();
    j["invariant"] = to_string(m.invariant);
    j["r"] = row.has_r ? ordered_json(m.r) : ordered_json(nullptr);
    j["p"] = row.has_p ? ordered_json(m.p) : ordered_json(nullptr);
    if (m.samples > 0) {
      j["stderr"] = m.stderr_p;
      j["seed"] = m.seed;
    }
    j["counts"] = {{"orbits", m.orbits}, {"classes", m.classes}, {"distinct_values", m.distinct_values}};
    out.push_back(j);
  }
  if (a.json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  for (const TableRow& row : rows) {
    const MeritResult& m = row.result;
    char buf[160];
    std::string label = row.aggregated ? "R/P" : std::string(to_string(m.invariant)) + "_" + std::to_string(m.ks[0]);
    std::snprintf(buf, sizeof buf, "n=%d %-6s r=%.4f p=", m.n, label.c_str(), m.r);
    std::cout << buf;
    if (row.has_p) {
      std::snprintf(buf, sizeof buf, "%.4f", m.p);
      std::cout << buf;
      if (m.samples > 0) {
        std::snprintf(buf, sizeof buf, " (stderr %.4f, %llu samples, seed %llu)", m.stderr_p,
                      static_cast<unsigned long long>(m.samples), static_cast<unsigned long long>(m.seed));
        std::cout << buf;
      }
    } else {
      std::cout << "n/a";
    }
    std::cout << "  distinct=" << m.distinct_values << "\n";
  }
  return 0;
}

// ---- condense -------------------------------------------------------------

struct CondenseArgs {
  std::string graph;
  std::vector<std::string> sets;
  bool strict = false;
  std::string dot;
  bool json = false;
};

int run_condense(const CondenseArgs& a) {
  const Graph g = load_graph(a.graph);
  std::vector<NodeSet> sets;
  ordered_json verdicts = ordered_json::array();
  for (const std::string& text : a.sets) {
    const NodeSet c = parse_set(g, text);
    const CondensationVerdict v = condensable(g, c);
    if (a.strict && v.rule == CondensationRule::None)
      throw Error("refusing to condense " + to_string(c) + ": no condensation rule applies (--strict)");
    verdicts.push_back({{"set", set_json(c)}, {"rule", to_string(v.rule)}, {"experimental", v.experimental}});
    sets.push_back(c);
  }
  const Condensed res = condense_all(g, sets);
  ordered_json index = ordered_json::array();
  for (int v : res.index) index.push_back(v + 1);
  if (!a.dot.empty()) write_text(a.dot, to_dot(res.graph));
  if (a.json) {
    ordered_json j = {{"rules", verdicts}, {"graph6", to_graph6(res.graph)}, {"n", res.graph.n()}, {"index_map", index}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& v : verdicts) {
    std::cout << "C=" << v["set"].dump() << " rule=" << v["rule"].get<std::string>()
              << (v["experimental"].get<bool>() ? " (experimental)" : "") << "\n";
  }
  std::cout << to_graph6(res.graph) << "\n";
  std::cout << "index map:";
  for (std::size_t i = 0; i < res.index.size(); ++i) std::cout << " " << i + 1 << "->" << res.index[i] + 1;
  std::cout << "\n";
  return 0;
}

// ---- orbit ----------------------------------------------------------------

struct OrbitArgs {
  std::string graph;
  std::string mode = "labeled";
  std::size_t cap = kDefaultOrbitCap;
  bool count_only = false;
  bool json = false;
};

int run_orbit(const OrbitArgs& a) {
  const Graph g = load_graph(a.graph);
  const Mode mode = parse_mode(a.mode);
  const std::vector<Graph> orbit = mode == Mode::Labeled ? lc_orbit(g, a.cap) : unlabeled_orbit(g, a.cap);
  if (a.json) {
    ordered_json j = {{"mode", to_string(mode)}, {"size", orbit.size()}};
    if (!a.count_only) {
      ordered_json list = ordered_json::array();
      for (const Graph& h : orbit) list.push_back(to_graph6(h));
      j["graphs"] = list;
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (!a.count_only)
    for (const Graph& h : orbit) std::cout << to_graph6(h) << "\n";
  std::cout << "# size " << orbit.size() << "\n";
  return 0;
}

// ---- metagraph ------------------------------------------------------------

struct MetagraphArgs {
  std::string graph;
  std::string set;
  std::string dot;
  bool json = false;
};

int run_metagraph(const MetagraphArgs& a) {
  const Graph g = load_graph(a.graph);
  const NodeSet m = parse_set(g, a.set);
  const Metagraph mg = build_metagraph(g, m);
  const ReducedStabilizer s = metagraph_stabilizer(mg);
  if (!a.dot.empty()) write_text(a.dot, to_dot(mg));
  ordered_json type2 = ordered_json::array();
  for (const Type2Node& t : mg.type2) {
    ordered_json node = {{"label", set_json(t.label)}, {"connected", t.connected}};
    node["witness"] = t.connected ? ordered_json(t.witness + 1) : ordered_json(nullptr);
    type2.push_back(node);
  }
  ordered_json elements = ordered_json::array();
  for (const PauliString& p : s.elements) elements.push_back(p.str());
  ordered_json j = {{"set", set_json(m)}, {"d", s.dim}, {"type2", type2}, {"stabilizer", elements}};
  if (m.size() <= 3) j["marginal_orbit_signature"] = marginal_orbit_signature(g, m);
  if (a.json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "M=" << to_string(m) << " d=" << s.dim << "\n";
  for (const Type2Node& t : mg.type2) {
    std::cout << "  [" << to_string(t.label) << "] ";
    if (t.connected)
      std::cout << "connected (witness " << t.witness + 1 << ")\n";
    else
      std::cout << "isolated\n";
  }
  std::cout << "S_M:";
  for (const PauliString& p : s.elements) std::cout << " " << p.str();
  std::cout << "\n";
  if (j.contains("marginal_orbit_signature"))
    std::cout << "marginal orbit signature: " << j["marginal_orbit_signature"].get<std::string>() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gsx: graph-state LU/LC equivalence toolkit"};
  app.require_subcommand(1);
  int code = 0;

  DmArgs dm;
  auto* c_dm = app.add_subcommand("dm", "marginal dimension, rank and entropy of node sets");
  c_dm->add_option("--graph", dm.graph, "graph6 string, @file, or fixture (star_n, path_n, cycle_n, complete_n)")
      ->required();
  c_dm->add_option("--set", dm.sets, "1-based node list, e.g. 1,3 (repeatable)")->required();
  c_dm->add_flag("--elements", dm.elements, "list the reduced stabilizer");
  c_dm->add_flag("--json", dm.json);
  c_dm->callback([&] { code = run_dm(dm); });

  CompareArgs cmp;
  auto* c_cmp = app.add_subcommand("compare", "staged LU/LC decision for two graphs");
  c_cmp->add_option("--graph", cmp.graph)->required();
  c_cmp->add_option("--graph2", cmp.graph2)->required();
  c_cmp->add_option("--mode", cmp.mode, "labeled|unlabeled")->capture_default_str();
  c_cmp->add_option("--k", cmp.k, "largest marginal size for the invariants")->capture_default_str();
  c_cmp->add_option("--budget", cmp.budget, "cap on graphs visited by the LC search")->capture_default_str();
  c_cmp->add_flag("--batch", cmp.batch, "run the invariants before the LC search");
  c_cmp->add_flag("--json", cmp.json);
  c_cmp->callback([&] { code = run_compare(cmp); });

  ClassesArgs cls;
  auto* c_cls = app.add_subcommand("classes", "compute, generate or ingest a representative database");
  c_cls->add_option("--n", cls.n);
  c_cls->add_option("--mode", cls.mode, "labeled|unlabeled")->capture_default_str();
  c_cls->add_option("--ingest", cls.ingest, "graph6 database with a .json sidecar");
  c_cls->add_option("--out", cls.out, "directory to write the database to");
  c_cls->add_flag("--generate", cls.generate, "build class keys by vertex extension");
  c_cls->add_flag("--shallow", cls.shallow, "skip the pairwise class check on ingest");
  c_cls->add_flag("--json", cls.json);
  c_cls->callback([&] { code = run_classes(cls); });

  TablesArgs tab;
  auto* c_tab = app.add_subcommand("tables", "figures of merit r and p per k");
  c_tab->add_option("--n", tab.n)->required();
  c_tab->add_option("--invariant", tab.invariant, "T|l|t")->capture_default_str();
  c_tab->add_option("--k", tab.ks, "k list (2,3) or range (2..4); default 2..n/2");
  c_tab->add_option("--db", tab.db, "representative database, required for n >= 8");
  c_tab->add_option("--samples", tab.samples, "Monte Carlo pairs for p when n >= 8");
  c_tab->add_option("--seed", tab.seed)->capture_default_str();
  c_tab->add_flag("--per-group", tab.per_group, "draw pairs uniformly over orbits/classes instead of graphs");
  c_tab->add_flag("--conditional", tab.conditional, "condition p on the pair lying in different groups");
  c_tab->add_flag("--json", tab.json);
  c_tab->callback([&] { code = run_tables(tab); });

  CondenseArgs con;
  auto* c_con = app.add_subcommand("condense", "merge node sets into single nodes");
  c_con->add_option("--graph", con.graph)->required();
  c_con->add_option("--set", con.sets, "set to condense (repeatable, pairwise disjoint)")->required();
  c_con->add_flag("--strict", con.strict, "refuse sets no condensation rule covers");
  c_con->add_option("--dot", con.dot, "write the condensed graph as DOT");
  c_con->add_flag("--json", con.json);
  c_con->callback([&] { code = run_condense(con); });

  OrbitArgs orb;
  auto* c_orb = app.add_subcommand("orbit", "stream the LC orbit as graph6");
  c_orb->add_option("--graph", orb.graph)->required();
  c_orb->add_option("--mode", orb.mode, "labeled|unlabeled")->capture_default_str();
  c_orb->add_option("--cap", orb.cap)->capture_default_str()->check(CLI::PositiveNumber);
  c_orb->add_flag("--count", orb.count_only, "print only the size");
  c_orb->add_flag("--json", orb.json);
  c_orb->callback([&] { code = run_orbit(orb); });

  MetagraphArgs mgs;
  auto* c_mg = app.add_subcommand("metagraph", "metagraph and its stabilizer for a node set");
  c_mg->add_option("--graph", mgs.graph)->required();
  c_mg->add_option("--set", mgs.set)->required();
  c_mg->add_option("--dot", mgs.dot, "write the metagraph as DOT");
  c_mg->add_flag("--json", mgs.json);
  c_mg->callback([&] { code = run_metagraph(mgs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "gsx: " << e.what() << "\n";
    return kExitError;
  }
  return code;
}
