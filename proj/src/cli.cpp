#include "pivotlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "pivotlab/code.hpp"
#include "pivotlab/error.hpp"
#include "pivotlab/hypergraph.hpp"
#include "pivotlab/orbit.hpp"
#include "pivotlab/spectral.hpp"
#include "pivotlab/suites.hpp"
#include "pivotlab/tables.hpp"

namespace pivotlab {

namespace {

using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  int threads = 0;
  bool pretty = false;
};

class Report {
 public:
  Report(std::ostream& fallback, const std::string& path, bool pretty) : os_(&fallback), pretty_(pretty) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot open " + path + " for writing");
      os_ = &file_;
    }
  }
  void emit(const json& j) { *os_ << (pretty_ ? j.dump(2) : j.dump()) << '\n'; }
  std::ostream& stream() { return *os_; }
  bool pretty() const { return pretty_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
  bool pretty_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void warn_limit(std::ostream& err, const std::string& what, int requested, int def) {
  if (requested > def)
    err << "warning: " << what << " ceiling raised from n=" << def << " to n=" << requested
        << "; wall-clock time grows steeply with n\n";
}

struct InputOptions {
  std::string anf;
  std::string graph;
  std::string hex;
  std::string file;

  void add(CLI::App* app) {
    auto* a = app->add_option("--anf", anf, "Boolean function, e.g. \"n=3; x0*x1+x1*x2\"");
    auto* g = app->add_option("--graph", graph, "graph text, lines separated by ';' (\"n=3;0 1;1 2\")");
    auto* h = app->add_option("--hex", hex, "graph in hex row format, e.g. 3:6,5,3");
    auto* f = app->add_option("--graph-file", file, "file with graph text or one hex row line");
    a->excludes(g, h, f);
    g->excludes(h, f);
    h->excludes(f);
  }

  bool any() const { return !anf.empty() || !graph.empty() || !hex.empty() || !file.empty(); }

  static Graph parse_any_graph(std::string text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty graph input");
    text = text.substr(first);
    if (text.rfind("n=", 0) == 0) return parse_graph_text(text);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    return parse_hex_rows(text);
  }

  Graph graph_value() const {
    if (!anf.empty()) return graph_from_anf(parse_anf(anf));
    if (!hex.empty()) return parse_hex_rows(hex);
    if (!graph.empty()) {
      std::string t = graph;
      std::replace(t.begin(), t.end(), ';', '\n');
      return parse_any_graph(t);
    }
    if (!file.empty()) return parse_any_graph(read_file(file));
    throw ParseError("one of --anf, --graph, --hex, --graph-file is required");
  }

  BooleanFunction function_value() const {
    if (!anf.empty()) return parse_anf(anf);
    return to_anf(graph_value());
  }
};

json edges_json(const Graph& g) {
  json e = json::array();
  for (const auto& [u, v] : g.edges()) e.push_back({u, v});
  return e;
}

json suite_json(const SuiteReport& r) {
  json parts = json::array();
  for (const auto& p : r.parts)
    parts.push_back({{"name", p.name}, {"checks", p.checks}, {"failures", p.failures}, {"examples", p.examples}});
  return {{"suite", r.suite}, {"checks", r.checks()}, {"failures", r.failures()}, {"pass", r.passed()}, {"parts", parts}};
}

std::string p_row(Mask row, int width) {
  std::string s;
  for (int c = 0; c < width; ++c) s += (row >> c) & 1U ? '1' : '0';
  return s;
}

json code_rows(const LinearCode& c) {
  json rows = json::array();
  for (Mask r : c.rows()) rows.push_back(p_row(r, c.n()));
  return rows;
}

void render_table(std::ostream& os, const TableResult& t) {
  os << "Table " << t.table << ": " << t.title << "\n";
  os << std::setw(4) << "n";
  for (const auto& c : t.columns) os << std::setw(12) << c;
  os << "\n";
  for (const auto& row : t.rows) {
    os << std::setw(4) << row.n;
    for (const auto& c : t.columns) {
      std::string text = "";
      for (const auto& cell : row.cells)
        if (cell.column == c) text = cell.display() + (cell.sampled ? "~" : "") + (cell.matches ? "" : "!");
      os << std::setw(12) << (text.empty() ? "." : text);
    }
    os << "\n";
  }
  for (const auto& m : t.inconsistencies) os << "inconsistent: " << m << "\n";
  for (const auto& m : t.mismatches) os << "mismatch: " << m << "\n";
  os << (t.ok() ? "all computed cells match\n" : "MISMATCH\n");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pivotlab: pivot and local complementation on graphs, flat spectra, orbits and codes"};
  app.require_subcommand(1);
  // Global options are accepted after the subcommand name too.
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads, "worker threads (0: PIVOTLAB_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--pretty", common.pretty, "human-readable output");

  std::function<int()> action;
  std::string out_path;

  // spectra
  auto* spectra = app.add_subcommand("spectra", "flat spectra of a Boolean function");
  spectra->require_subcommand(1);
  spectra->fallthrough();
  InputOptions sp_in;
  std::string family_text = "IH";
  std::string method = "auto";
  std::size_t witnesses = 0;
  int limit = 0;
  auto* sp_count = spectra->add_subcommand("count", "count flat spectra over a transform family");
  sp_in.add(sp_count);
  sp_count->add_option("--family", family_text, "IH, IHN or HN")->check(CLI::IsMember({"IH", "IHN", "HN"}));
  sp_count->add_option("--method", method, "auto, direct or rank")->check(CLI::IsMember({"auto", "direct", "rank"}));
  sp_count->add_option("--witnesses", witnesses, "number of flat specs to list");
  sp_count->add_option("--limit", limit, "raise the size ceiling of the direct sweep");
  sp_count->add_option("--out", out_path, "write the report to a file");
  sp_count->callback([&] {
    action = [&]() -> int {
      if (!sp_in.any()) throw ParseError("an input function or graph is required");
      const BooleanFunction p = sp_in.function_value();
      const Family family = *parse_family(family_text);
      FlatCountOptions o;
      o.threads = common.threads;
      o.max_witnesses = witnesses;
      if (limit > 0) {
        warn_limit(err, "direct sweep", limit, default_direct_limit(family));
        o.max_n = limit;
      }
      std::string used = method;
      if (used == "auto") used = p.n() <= (limit > 0 ? limit : default_direct_limit(family)) || p.degree() > 2 ? "direct" : "rank";
      FlatCount c;
      if (used == "rank") {
        if (p.degree() > 2) throw std::invalid_argument("the rank method needs a function of degree <= 2");
        c = count_flat_quadratic(graph_from_anf(strip_affine(p)), family, o);
      } else {
        c = count_flat(p, family, o);
      }
      Report rep(out, out_path, common.pretty);
      json w = json::array();
      for (const auto& s : c.witnesses) w.push_back(s.to_string());
      rep.emit({{"function", format_anf(p)}, {"family", family_text}, {"method", used}, {"count", c.count},
                {"specs", c.specs}, {"witnesses", w}});
      return kExitOk;
    };
  });
  std::string spec_text;
  auto* sp_flat = spectra->add_subcommand("flat", "whether one transform spec gives a flat spectrum");
  InputOptions fl_in;
  fl_in.add(sp_flat);
  sp_flat->add_option("--spec", spec_text, "kernel per variable, e.g. IHN")->required();
  sp_flat->add_option("--out", out_path, "write the report to a file");
  sp_flat->callback([&] {
    action = [&]() -> int {
      const BooleanFunction p = fl_in.function_value();
      const TransformSpec t = TransformSpec::parse(spec_text);
      if (t.n() != p.n()) throw DimensionError("spec length differs from the variable count");
      Report rep(out, out_path, common.pretty);
      rep.emit({{"function", format_anf(p)}, {"spec", t.to_string()}, {"flat", is_flat(apply(bipolar(p), t))}});
      return kExitOk;
    };
  });

  // pivot
  auto* pv = app.add_subcommand("pivot", "pivot on an edge of a graph or hypergraph");
  InputOptions pv_in;
  pv_in.add(pv);
  int pu = -1;
  int pvv = -1;
  std::string swap_text = "yes";
  pv->add_option("--u", pu, "first endpoint")->required();
  pv->add_option("--v", pvv, "second endpoint")->required();
  pv->add_option("--swap", swap_text, "exchange the endpoint labels (graphs only)")->check(CLI::IsMember({"yes", "no"}));
  pv->add_option("--out", out_path, "write the report to a file");
  pv->callback([&] {
    action = [&]() -> int {
      Report rep(out, out_path, common.pretty);
      if (!pv_in.anf.empty()) {
        const BooleanFunction p = parse_anf(pv_in.anf);
        const BooleanFunction q = pivot_anf(p, pu, pvv);
        rep.emit({{"function", format_anf(p)}, {"edge", {pu, pvv}}, {"result", format_anf(q)}});
        return kExitOk;
      }
      const Graph g = pv_in.graph_value();
      if (pu < 0 || pvv < 0 || pu >= g.n() || pvv >= g.n()) throw RangeError("edge endpoint outside the graph");
      if (!g.has_edge(pu, pvv)) throw NotAnEdgeError("pivot needs an edge");
      const Graph h = pivot(g, pu, pvv, swap_text == "yes" ? LabelSwap::kYes : LabelSwap::kNo);
      rep.emit({{"graph", format_hex_rows(g)}, {"edge", {pu, pvv}}, {"swap", swap_text == "yes"},
                {"result", format_hex_rows(h)}, {"edges", edges_json(h)}});
      return kExitOk;
    };
  });

  // orbit
  auto* ob = app.add_subcommand("orbit", "pivot or LC orbit of one graph");
  InputOptions ob_in;
  ob_in.add(ob);
  std::string move_text = "pivot";
  bool labelled = false;
  bool members = false;
  std::size_t max_labelled = 5'000'000;
  ob->add_option("--move", move_text, "pivot or lc")->check(CLI::IsMember({"pivot", "lc"}));
  ob->add_option("--swap", swap_text, "label swap for pivot")->check(CLI::IsMember({"yes", "no"}));
  ob->add_flag("--labelled", labelled, "also count the labelled orbit");
  ob->add_option("--max-labelled", max_labelled, "ceiling on the labelled orbit size");
  ob->add_flag("--members", members, "emit every member up to isomorphism");
  ob->add_option("--out", out_path, "write the report to a file");
  ob->callback([&] {
    action = [&]() -> int {
      const Graph g = ob_in.graph_value();
      const Move move = *parse_move(move_text);
      OrbitOptions o;
      o.swap = swap_text == "yes" ? LabelSwap::kYes : LabelSwap::kNo;
      o.labelled = labelled;
      o.max_labelled = max_labelled;
      const OrbitReport r = orbit_report(g, move, o);
      Report rep(out, out_path, common.pretty);
      json j{{"graph", format_hex_rows(g)}, {"move", move_text}, {"unlabelled_size", r.unlabelled_size}};
      if (labelled) j["labelled_size"] = r.labelled_size;
      j["representative"] = format_hex_rows(r.representative);
      j["min_edge_representative"] = format_hex_rows(r.min_edge_representative);
      j["bipartite"] = r.bipartite;
      if (r.bipartite) j["parts"] = {r.part_a, r.part_b};
      rep.emit(j);
      if (members)
        for (const Graph& m : unlabelled_orbit(g, move, o.swap)) rep.emit({{"member", format_hex_rows(m)}});
      return kExitOk;
    };
  });

  // classify
  auto* cl = app.add_subcommand("classify", "partition a graph universe into orbits");
  int cl_n = 0;
  std::string universe_text = "connected";
  std::string mode_text = "unlabelled";
  bool emit_reps = false;
  std::string db_path;
  cl->add_option("--n", cl_n, "number of vertices")->required()->check(CLI::Range(1, 31));
  cl->add_option("--move", move_text, "pivot or lc")->check(CLI::IsMember({"pivot", "lc"}));
  cl->add_option("--universe", universe_text, "all, connected, bipartite-connected or bipartite-all");
  cl->add_option("--mode", mode_text, "unlabelled or labelled")->check(CLI::IsMember({"unlabelled", "labelled"}));
  cl->add_option("--swap", swap_text, "label swap for pivot")->check(CLI::IsMember({"yes", "no"}));
  cl->add_option("--limit", limit, "raise the size ceiling");
  cl->add_flag("--reps", emit_reps, "emit one line per orbit");
  cl->add_option("--out", db_path, "write the representative database (one hex line per orbit)");
  cl->callback([&] {
    action = [&]() -> int {
      const Move move = *parse_move(move_text);
      const auto universe = parse_universe(universe_text);
      if (!universe) throw ParseError("unknown universe " + universe_text);
      const Mode mode = *parse_mode(mode_text);
      ClassifyOptions o;
      o.threads = common.threads;
      o.swap = swap_text == "yes" ? LabelSwap::kYes : LabelSwap::kNo;
      if (limit > 0) {
        warn_limit(err, "classification", limit, default_classify_limit(move, *universe, mode));
        o.max_n = limit;
      }
      const Classification c = classify(cl_n, move, *universe, mode, o);
      Report rep(out, "", common.pretty);
      if (emit_reps)
        for (std::size_t i = 0; i < c.representatives.size(); ++i)
          rep.emit({{"orbit", i}, {"representative", format_hex_rows(c.representatives[i])},
                    {"size", c.orbit_sizes[i]}});
      if (!db_path.empty()) {
        std::vector<std::string> lines;
        for (const Graph& g : c.representatives) lines.push_back(format_hex_rows(g));
        std::sort(lines.begin(), lines.end());
        std::ofstream db(db_path);
        if (!db) throw IoError("cannot open " + db_path + " for writing");
        for (const auto& l : lines) db << l << '\n';
      }
      rep.emit({{"n", cl_n}, {"move", move_text}, {"universe", std::string(universe_name(*universe))},
                {"mode", mode_text}, {"universe_size", c.universe_size}, {"count", c.count}});
      return kExitOk;
    };
  });

  // codes
  auto* codes = app.add_subcommand("codes", "binary linear codes");
  codes->require_subcommand(1);
  codes->fallthrough();
  int code_n = 0;
  bool list_codes = false;
  auto* cc = codes->add_subcommand("classify", "indecomposable codes of length n");
  cc->add_option("--n", code_n, "code length")->required()->check(CLI::Range(1, 31));
  cc->add_flag("--codes", list_codes, "emit one generator matrix per class");
  cc->add_option("--out", out_path, "write the report to a file");
  cc->callback([&] {
    action = [&]() -> int {
      const CodeClassification c = classify_codes(code_n, common.threads);
      Report rep(out, out_path, common.pretty);
      if (list_codes)
        for (const LinearCode& code : c.codes)
          rep.emit({{"n", code.n()}, {"k", code.k()}, {"rows", code_rows(code)}});
      json per_k = json::object();
      for (const auto& [k, v] : c.per_k) per_k[std::to_string(k)] = v;
      rep.emit({{"n", code_n}, {"orbits", c.orbits}, {"indecomposable", c.indecomposable}, {"isodual", c.isodual},
                {"per_k", per_k}});
      return kExitOk;
    };
  });
  std::string code_file;
  std::string other_file;
  bool brute = false;
  auto* ci = codes->add_subcommand("infosets", "number of information sets of a code");
  ci->add_option("--file", code_file, "code file: `n k` then k rows of 0/1")->required();
  ci->add_flag("--brute", brute, "also count by rank over all k-subsets");
  ci->add_option("--out", out_path, "write the report to a file");
  ci->callback([&] {
    action = [&]() -> int {
      const LinearCode c = parse_code_text(read_file(code_file));
      Report rep(out, out_path, common.pretty);
      json j{{"n", c.n()}, {"k", c.k()}, {"information_sets", information_set_count(c)}};
      if (brute) j["brute_force"] = information_set_count_brute(c);
      rep.emit(j);
      return kExitOk;
    };
  });
  auto* cs = codes->add_subcommand("standard", "standard form (I | P) and bipartite graph");
  cs->add_option("--file", code_file, "code file")->required();
  cs->add_option("--out", out_path, "write the report to a file");
  cs->callback([&] {
    action = [&]() -> int {
      const LinearCode c = parse_code_text(read_file(code_file));
      const StandardForm sf = standard_form(c);
      json p = json::array();
      for (Mask r : sf.p) p.push_back(p_row(r, sf.n - sf.k));
      Report rep(out, out_path, common.pretty);
      rep.emit({{"n", sf.n}, {"k", sf.k}, {"P", p}, {"columns", sf.columns},
                {"graph", format_hex_rows(graph_from_p(sf.k, sf.n, sf.p))}});
      return kExitOk;
    };
  });
  auto* ce = codes->add_subcommand("equivalent", "whether two codes are equivalent");
  ce->add_option("--file", code_file, "first code file")->required();
  ce->add_option("--other", other_file, "second code file")->required();
  ce->add_option("--out", out_path, "write the report to a file");
  ce->callback([&] {
    action = [&]() -> int {
      const LinearCode a = parse_code_text(read_file(code_file));
      const LinearCode b = parse_code_text(read_file(other_file));
      Report rep(out, out_path, common.pretty);
      rep.emit({{"n", a.n()}, {"k", {a.k(), b.k()}}, {"equivalent", equivalent(a, b)}});
      return kExitOk;
    };
  });

  // tables
  auto* tb = app.add_subcommand("tables", "recompute a result table and compare with the golden values");
  int table = 0;
  int max_n = 0;
  TableOptions topt;
  tb->add_option("--table", table, "table number 1..5")->required()->check(CLI::Range(1, 5));
  tb->add_option("--max-n", max_n, "largest n")->required()->check(CLI::Range(1, 31));
  tb->add_option("--min-n", topt.min_n, "smallest n")->check(CLI::Range(1, 31));
  tb->add_option("--limit", topt.override_limit, "raise every column ceiling to this n");
  tb->add_option("--samples", topt.samples, "sampled functions per n for the random column beyond exhaustion");
  tb->add_option("--seed", topt.seed, "seed for sampling");
  tb->add_option("--out", out_path, "write the report to a file");
  tb->callback([&] {
    action = [&]() -> int {
      topt.threads = common.threads;
      if (topt.override_limit > 0) {
        int def = 0;
        for (const auto& c : table_columns(table)) def = std::max(def, table_column_limit(table, c));
        warn_limit(err, "table", topt.override_limit, def);
      }
      const TableResult t = compute_table(table, max_n, topt);
      Report rep(out, out_path, common.pretty);
      if (rep.pretty()) {
        render_table(rep.stream(), t);
      } else {
        for (const auto& row : t.rows) {
          json cells = json::object();
          for (const auto& c : row.cells) {
            json cell{{"value", c.display()}, {"exact", std::to_string(c.value.num) + "/" + std::to_string(c.value.den)}};
            if (c.golden) cell["golden"] = *c.golden;
            cell["match"] = c.matches;
            if (c.sampled) cell["sampled"] = true;
            cells[c.column] = cell;
          }
          json j{{"table", t.table}, {"n", row.n}, {"cells", cells}};
          if (!row.skipped.empty()) j["skipped"] = row.skipped;
          rep.emit(j);
        }
        rep.emit({{"table", t.table}, {"title", t.title}, {"ok", t.ok()}, {"inconsistencies", t.inconsistencies},
                  {"mismatches", t.mismatches}});
      }
      return t.ok() ? kExitOk : kExitMismatch;
    };
  });

  // verify
  auto* vf = app.add_subcommand("verify", "run a property suite");
  std::string suite = "transform-identities";
  int vn = 4;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  vf->add_option("--suite", suite, "suite name or `all`")
      ->check(CLI::IsMember({"transform-identities", "pivot-spectra", "quadratic-pivot", "only-pivot", "rank-criterion",
                             "family", "clique", "information-sets", "all"}));
  vf->add_option("--n", vn, "largest number of variables or vertices")->check(CLI::Range(1, 31));
  vf->add_option("--seed", seed, "random seed");
  vf->add_option("--samples", samples, "random inputs per randomized suite");
  vf->add_option("--out", out_path, "write the report to a file");
  vf->callback([&] {
    action = [&]() -> int {
      auto guard = [](int n, int cap, const char* what) {
        if (n > cap) throw BudgetError(std::string(what) + " is limited to n <= " + std::to_string(cap));
      };
      std::vector<SuiteReport> reports;
      const bool all = suite == "all";
      if (all || suite == "transform-identities") {
        guard(vn, 10, "transform-identities");
        IdentitySuiteOptions o;
        o.exhaustive_max_n = std::min(vn, 4);
        o.random_samples = samples;
        o.random_min_n = std::min(2, vn);
        o.random_max_n = vn;
        o.seed = seed;
        reports.push_back(transform_identity_suite(o));
      }
      if (all || suite == "pivot-spectra") {
        guard(vn, 10, "pivot-spectra");
        reports.push_back(pivot_spectra_suite(samples, std::max(vn, 2), std::min(vn, 6), seed));
      }
      if (all || suite == "quadratic-pivot") {
        guard(vn, 8, "quadratic-pivot");
        reports.push_back(quadratic_pivot_suite(vn));
      }
      if (all || suite == "only-pivot") {
        guard(vn, 10, "only-pivot");
        reports.push_back(only_pivot_suite(samples, std::max(vn, 3), seed));
      }
      if (all || suite == "rank-criterion") {
        guard(vn, 6, "rank-criterion");
        reports.push_back(rank_criterion_suite(vn, common.threads));
      }
      if (all || suite == "family") {
        guard(vn, 8, "family");
        reports.push_back(family_suite(vn, std::min<std::uint64_t>(samples, 200), 3, seed));
      }
      if (all || suite == "clique") {
        guard(vn, 26, "clique");
        reports.push_back(clique_suite(std::min(vn, default_direct_limit(Family::IH)), vn));
      }
      if (all || suite == "information-sets") {
        guard(vn, 9, "information-sets");
        reports.push_back(infoset_suite(vn, common.threads));
      }
      Report rep(out, out_path, common.pretty);
      bool pass = true;
      for (const auto& r : reports) {
        rep.emit(suite_json(r));
        pass = pass && r.passed();
      }
      return pass ? kExitOk : kExitMismatch;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  auto error = [&](const char* type, const std::string& message, int code) {
    err << json{{"error", {{"type", type}, {"message", message}}}}.dump() << '\n';
    return code;
  };
  try {
    return action();
  } catch (const BudgetError& e) {
    return error("budget", e.what(), kExitBudget);
  } catch (const ParseError& e) {
    return error("parse", e.what(), kExitUsage);
  } catch (const IoError& e) {
    return error("io", e.what(), kExitFailure);
  } catch (const NotAnEdgeError& e) {
    return error("not-an-edge", e.what(), kExitUsage);
  } catch (const InadmissibleEdgeError& e) {
    return error("inadmissible-edge", e.what(), kExitUsage);
  } catch (const DimensionError& e) {
    return error("dimension", e.what(), kExitUsage);
  } catch (const std::invalid_argument& e) {
    return error("invalid-argument", e.what(), kExitUsage);
  } catch (const std::out_of_range& e) {
    return error("range", e.what(), kExitUsage);
  } catch (const std::exception& e) {
    return error("internal", e.what(), kExitFailure);
  }
}

}  // namespace pivotlab
