#include "racg/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "racg/compare.hpp"
#include "racg/error.hpp"
#include "racg/invariant.hpp"
#include "racg/jsj.hpp"
#include "racg/random_graphs.hpp"
#include "racg/serialize.hpp"
#include "racg/tangling.hpp"
#include "racg/validate.hpp"

namespace racg::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

DefiningGraph load_graph(const fs::path& p) {
  std::string text = read_file(p);
  return parse_graph(text, detect_format(text));
}

GraphOfCylinders load_goc(const fs::path& p, bool is_goc, const BuildOptions& opts) {
  if (is_goc) return parse_goc(read_file(p));
  return build_graph_of_cylinders(load_graph(p), opts);
}

std::string set_text(const std::vector<std::string>& names, const VertexSet& s) {
  std::string out;
  for (VertexId v : s) out += (out.empty() ? "" : ",") + names.at(v);
  return "{" + out + "}";
}

void print_report_text(const AssumptionReport& r, std::ostream& out) {
  out << "standing assumptions (level " << r.level << "): " << (r.passed ? "passed" : "FAILED") << "\n";
  for (const auto& c : r.checks) {
    out << "  [" << (c.passed ? "ok" : "fail") << "] " << c.id << " " << c.name;
    if (!c.passed) {
      out << ": " << c.detail << "; witness";
      for (const auto& part : c.witness) {
        std::string s;
        for (const auto& v : part) s += (s.empty() ? "" : ",") + v;
        out << " {" << s << "}";
      }
    }
    out << "\n";
  }
}

void print_goc_text(const GraphOfCylinders& goc, std::ostream& out) {
  out << "nodes:\n";
  for (const auto& n : goc.nodes) {
    out << "  " << n.id << " " << to_string(n.kind);
    if (n.kind == NodeKind::Cylinder) out << " " << to_string(n.klass);
    if (n.kind == NodeKind::Hanging) out << " " << to_string(n.source);
    out << " " << set_text(goc.generators, n.gens) << "\n";
  }
  out << "edges:\n";
  for (const auto& e : goc.edges)
    out << "  " << e.cyl << " -- " << e.other << " " << set_text(goc.generators, e.gens) << " " << to_string(e.kind)
        << "\n";
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::SelfLoop:
    case ErrorCode::IoError:
    case ErrorCode::Domain:
      return kUsageError;
    default:
      return kAnalysisFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphs of cylinders, structure invariants and QI comparison for right-angled Coxeter groups", "racg"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string file, file2;
  bool is_goc = false, density = false;
  std::uint64_t r = 0, x1 = 0, y2 = 0;
  int depth = 0;
  std::string csv;
  std::uint64_t seed = 1;
  int count = 200, max_vertices = 9;
  std::string out_dir;

  auto* analyze = app.add_subcommand("analyze", "validate a defining graph and list its graph of cylinders");
  analyze->add_option("file", file, "defining graph (edge list, DOT or JSON)")->required();
  analyze->add_option("--format", format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));

  auto* invariant = app.add_subcommand("invariant", "print the structure invariant as JSON");
  invariant->add_option("file", file)->required();
  invariant->add_flag("--density", density, "apply density refinement");
  invariant->add_flag("--goc", is_goc, "input is a serialized graph of cylinders");

  auto* cmp = app.add_subcommand("compare", "decide QI, non-QI or inconclusive");
  cmp->add_option("first", file)->required();
  cmp->add_option("second", file2)->required();
  cmp->add_flag("--goc", is_goc, "inputs are serialized graphs of cylinders");

  auto* commens = app.add_subcommand("commens", "commensurability obstruction for single-VFD inputs");
  commens->add_option("first", file)->required();
  commens->add_option("second", file2)->required();
  commens->add_flag("--goc", is_goc, "inputs are serialized graphs of cylinders");

  auto* tangle = app.add_subcommand("tangle", "simulate the tangling-edge slide algorithm");
  tangle->add_option("--r", r, "tree regularity")->required();
  tangle->add_option("--x1", x1, "tangling edges per vertex before sliding")->required();
  tangle->add_option("--y2", y2, "tangling edges per vertex after sliding")->required();
  tangle->add_option("--depth", depth, "truncation depth")->required();
  tangle->add_option("--csv", csv, "also write the per-level histogram to this CSV file");

  auto* exp = app.add_subcommand("export", "export the graph of cylinders");
  exp->add_option("file", file)->required();
  std::string exp_format = "dot";
  exp->add_option("--format", exp_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* corpus = app.add_subcommand("corpus", "check a directory of graphs against expectation sidecars");
  corpus->add_option("dir", file)->required();

  auto* random = app.add_subcommand("random", "generate random graphs passing level-1 validation");
  random->add_option("--seed", seed, "generator seed");
  random->add_option("--count", count, "number of graphs")->check(CLI::PositiveNumber);
  random->add_option("--max-vertices", max_vertices, "vertex bound")->check(CLI::Range(4, 64));
  random->add_option("--out", out_dir, "write edge-list files here instead of printing JSON");

  std::vector<std::string> argv_store{"racg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  BuildOptions opts;
  opts.rigid_cap = rigid_cap_from_env();
  try {
    if (analyze->parsed()) {
      DefiningGraph g = load_graph(file);
      AssumptionReport rep = validate(g, 3);
      if (!rep.passed) {
        if (format == "json") {
          Json j;
          j["report"] = to_json(rep);
          out << j.dump(2) << "\n";
        } else {
          print_report_text(rep, out);
        }
        return kAnalysisFailure;
      }
      GraphOfCylinders goc = build_graph_of_cylinders(g, opts);
      if (format == "json") {
        Json j;
        j["report"] = to_json(rep);
        j["graph_of_cylinders"] = to_json(goc);
        out << j.dump(2) << "\n";
      } else if (format == "dot") {
        out << to_dot(goc);
      } else {
        print_report_text(rep, out);
        print_goc_text(goc, out);
      }
    } else if (invariant->parsed()) {
      out << to_json(compute_invariant(load_goc(file, is_goc, opts), density)).dump(2) << "\n";
    } else if (cmp->parsed()) {
      out << to_json(compare(load_goc(file, is_goc, opts), load_goc(file2, is_goc, opts))).dump(2) << "\n";
    } else if (commens->parsed()) {
      out << to_json(commensurability_obstruction(load_goc(file, is_goc, opts), load_goc(file2, is_goc, opts))).dump(2)
          << "\n";
    } else if (tangle->parsed()) {
      if (depth < 0) throw Error(ErrorCode::Domain, "depth must be non-negative");
      SlideTrace t = simulate_slides(r, x1, y2, depth);
      if (!csv.empty()) {
        std::ofstream f(csv);
        if (!f) throw Error(ErrorCode::IoError, "cannot write " + csv);
        f << level_histogram_csv(t);
      }
      out << to_json(t).dump(2) << "\n";
    } else if (exp->parsed()) {
      GraphOfCylinders goc = build_graph_of_cylinders(load_graph(file), opts);
      if (exp_format == "json") out << to_json(goc).dump(2) << "\n";
      else out << to_dot(goc);
    } else if (corpus->parsed()) {
      return run_corpus(file, out, err);
    } else if (random->parsed()) {
      auto graphs = random_corpus(seed, count, max_vertices);
      if (out_dir.empty()) {
        Json all = Json::array();
        for (const auto& g : graphs) all.push_back(Json::parse(serialize_graph(g, GraphFormat::Json)));
        out << all.dump() << "\n";
      } else {
        fs::create_directories(out_dir);
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          char name[32];
          std::snprintf(name, sizeof name, "random_%03zu.txt", i);
          std::ofstream f(fs::path(out_dir) / name);
          if (!f) throw Error(ErrorCode::IoError, "cannot write into " + out_dir);
          f << serialize_graph(graphs[i], GraphFormat::EdgeList);
        }
        out << "wrote " << graphs.size() << " graphs to " << out_dir << "\n";
      }
    }
  } catch (const AssumptionsFailed& e) {
    err << e.what() << "\n";
    print_report_text(e.report(), err);
    return kAnalysisFailure;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kOk;
}

namespace {

bool is_sidecar(const fs::path& p) {
  const std::string s = p.filename().string();
  return s.size() > 12 && s.compare(s.size() - 12, 12, ".expect.json") == 0;
}

// Mismatches between a corpus entry and its expectations; empty means pass.
std::vector<std::string> check_entry(const fs::path& file, const Json& want) {
  std::vector<std::string> bad;
  DefiningGraph g;
  try {
    g = load_graph(file);
  } catch (const Error& e) {
    if (want.contains("error") && want["error"] == std::string(to_string(e.code()))) return bad;
    bad.push_back(e.what());
    return bad;
  }

  auto expect = [&bad](const char* what, const Json& got, const Json& exp) {
    if (got != exp) bad.push_back(std::string(what) + ": expected " + exp.dump() + ", got " + got.dump());
  };

  if (want.contains("essential")) expect("essential", Json(g.names_of(essential_vertices(g))), want["essential"]);
  if (want.contains("hyperbolic")) expect("hyperbolic", Json(is_hyperbolic(g)), want["hyperbolic"]);

  AssumptionReport rep = validate(g, 3);
  if (want.contains("valid")) expect("valid", Json(rep.passed), want["valid"]);
  if (want.contains("failed_checks")) {
    Json failed = Json::array();
    for (const auto& c : rep.checks)
      if (!c.passed) failed.push_back(c.id);
    expect("failed_checks", failed, want["failed_checks"]);
  }
  if (want.contains("witness")) {
    Json w = Json::array();
    for (const auto& c : rep.checks)
      if (!c.passed) w = c.witness;
    expect("witness", w, want["witness"]);
  }
  if (!rep.passed) return bad;

  try {
    BuildOptions opts;
    opts.rigid_cap = rigid_cap_from_env();
    GraphOfCylinders goc = build_graph_of_cylinders(g, opts);
    if (want.contains("cylinders")) {
      Json got = Json::object();
      for (const auto& n : goc.nodes)
        if (n.kind == NodeKind::Cylinder) {
          std::string k(to_string(n.klass));
          got[k] = got.value(k, 0) + 1;
        }
      expect("cylinders", got, want["cylinders"]);
    }
    if (want.contains("hanging")) {
      Json got = Json::array();
      for (const auto& n : goc.nodes)
        if (n.kind == NodeKind::Hanging) got.push_back(g.names_of(n.gens));
      expect("hanging", got, want["hanging"]);
    }
    if (want.contains("rigid")) {
      Json got = Json::array();
      for (const auto& n : goc.nodes)
        if (n.kind == NodeKind::Rigid) got.push_back(g.names_of(n.gens));
      expect("rigid", got, want["rigid"]);
    }
    if (want.contains("edges")) {
      Json got = Json::object();
      for (const auto& e : goc.edges) {
        std::string k(to_string(e.kind));
        got[k] = got.value(k, 0) + 1;
      }
      expect("edges", got, want["edges"]);
    }
    if (want.contains("matrix") || want.contains("densities")) {
      Json inv = to_json(compute_invariant(goc, true));
      if (want.contains("matrix")) expect("matrix", inv["matrix"], want["matrix"]);
      if (want.contains("densities")) {
        Json got = Json::array();
        for (const auto& c : inv["classes"]) got.push_back(c["density"]);
        expect("densities", got, want["densities"]);
      }
    }
  } catch (const Error& e) {
    if (!(want.contains("error") && want["error"] == std::string(to_string(e.code())))) bad.push_back(e.what());
  }
  return bad;
}

}  // namespace

int run_corpus(const fs::path& dir, std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(dir)) {
    err << "IO_ERROR: " << dir.string() << " is not a directory\n";
    return kUsageError;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && !is_sidecar(entry.path())) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  int failed = 0;
  for (const auto& f : files) {
    fs::path sidecar = f.parent_path() / (f.stem().string() + ".expect.json");
    std::vector<std::string> bad;
    try {
      Json want = Json::parse(read_file(sidecar));
      bad = check_entry(f, want);
    } catch (const Error& e) {
      bad.push_back(e.what());
    } catch (const nlohmann::json::exception& e) {
      bad.push_back(std::string("PARSE_ERROR: sidecar ") + sidecar.filename().string() + ": " + e.what());
    }
    if (bad.empty()) {
      out << "PASS " << f.filename().string() << "\n";
    } else {
      ++failed;
      out << "FAIL " << f.filename().string() << "\n";
      for (const auto& b : bad) out << "     " << b << "\n";
    }
  }
  out << files.size() - failed << " passed, " << failed << " failed\n";
  return failed == 0 ? kOk : kAnalysisFailure;
}

}  // namespace racg::cli
