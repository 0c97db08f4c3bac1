#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "config.hpp"
#include "outerstring/arrangement.hpp"
#include "outerstring/construct.hpp"
#include "outerstring/crossing_level.hpp"
#include "outerstring/io.hpp"
#include "outerstring/minor.hpp"
#include "outerstring/minor_witness.hpp"
#include "outerstring/solvers.hpp"
#include "outerstring/sparsity.hpp"
#include "outerstring/svg.hpp"
#include "outerstring/treewidth.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "suite.hpp"

namespace outerstring::tools {

namespace {

using Clock = std::chrono::steady_clock;

struct Options {
  std::string config_path;
  int threads = 0;

  std::string generate_kind;
  int m = 3;
  int alpha = 1;
  int n = 10;
  int bends = 3;
  int k = 1;
  std::uint64_t seed = 1;
  bool emit_curves = false;

  std::string input;
  std::string output;
  std::string svg;
  bool levels = false;
  bool sparsity = false;
  bool oracle = false;

  bool exact = false;
  int cap = -1;

  std::string problem;
  std::optional<int> decision_k;
  int colors = 3;
  std::string lists_path;
  bool approx = false;
  bool branch = false;

  std::string model_path;
  std::string layers;

  bool quick = false;
  bool no_repeat = false;
};

// Either an instance or a plain graph, as read from a JSON file.
struct Input {
  Json json;
  std::string digest;
  std::optional<Instance> instance;
  std::optional<std::vector<DoubleGroundedCurve>> curves;
  Graph graph;
};

Input load_input(const std::string& path) {
  Input in;
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  in.digest = sha256_hex(buffer.str());
  try {
    in.json = Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (in.json.is_object() && in.json.contains("strings")) {
    in.instance = instance_from_json(in.json);
    in.graph = intersection_graph(*in.instance);
  } else if (in.json.is_object() && in.json.contains("curves")) {
    in.curves = curves_from_json(in.json);
  } else if (in.json.is_object() && in.json.contains("n")) {
    in.graph = graph_from_json(in.json);
  } else {
    throw ParseError(path + ": expected an instance, curve family or graph");
  }
  return in;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
}

// Adds digest and timings and prints the report.
void emit(Json report, Clock::time_point start, std::ostream& out) {
  report["digest"] = report_digest(report);
  report["timings"] = {{"totalSeconds", std::chrono::duration<double>(Clock::now() - start).count()}};
  out << report.dump(2) << "\n";
}

int cmd_generate(const Options& o, const Settings& s, std::ostream& out) {
  Json j;
  if (o.generate_kind == "folk") {
    j = instance_to_json(o.alpha == 1 ? lowerbound_instance(o.m) : lowerbound_instance_alpha(o.m, o.alpha, s.epsilon_divisor));
  } else if (o.generate_kind == "random") {
    j = instance_to_json(random_instance(o.n, o.bends, o.seed));
  } else {
    const auto curves = circular_family(o.k, o.seed);
    j = o.emit_curves ? curves_to_json(curves) : instance_to_json(instance_from_family(curves));
  }
  if (o.output.empty()) {
    out << j.dump(2) << "\n";
  } else {
    write_text(o.output, j.dump(2) + "\n");
  }
  return 0;
}

Json sparsity_section(const Graph& g, const Settings& s, bool& ok) {
  const auto start = Clock::now();
  const int d = degeneracy(g).value;
  const int a = arboricity(g);
  int t = 0;
  bool complete = true;
  for (int cand = 1; cand <= g.vertex_count() / 2; ++cand) {
    if (std::chrono::duration<double, std::milli>(Clock::now() - start).count() > s.biclique_budget_ms) {
      complete = false;
      break;
    }
    if (!find_biclique(g, cand)) break;
    t = cand;
  }
  ok = ok && a <= d && (a == 0 || t < 2 * a);
  return {{"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"degeneracy", d},
          {"arboricity", a},
          {"largestBiclique", t},
          {"bicliqueSearchComplete", complete}};
}

int cmd_analyze(const Options& o, const Settings& s, std::ostream& out) {
  const auto start = Clock::now();
  const Input in = load_input(o.input);
  const bool all = !o.levels && !o.sparsity;
  Json report;
  report["command"] = "analyze";
  report["inputDigest"] = in.digest;
  bool ok = true;
  Json checks = Json::object();
  if (in.instance && (all || o.levels)) {
    const Instance& inst = *in.instance;
    const Arrangement arr = Arrangement::build(inst);
    const auto levels = crossing_levels_exact(arr);
    const LevelProfile profile = level_regions(arr, levels);
    const int a = arboricity(in.graph);
    Json gamma = Json::array();
    for (const auto& r : profile.regions) gamma.push_back(r.gamma.size());
    Json halving = Json::array();
    bool halving_ok = true;
    for (const auto& h : check_halving(profile, a)) {
      halving.push_back({{"i", h.i}, {"gammaI", h.gamma_i}, {"gammaPrev", h.gamma_prev}, {"pass", h.pass}});
      halving_ok = halving_ok && h.pass;
    }
    const long long bound = level_bound(a, static_cast<int>(inst.size()));
    report["maxLevel"] = profile.r;
    report["faces"] = arr.face_count();
    report["gammaSizes"] = gamma;
    report["halving"] = halving;
    report["levelBound"] = bound;
    report["heuristicWidth"] = treewidth_heuristic(in.graph).width();
    checks["levelBound"] = profile.r <= bound;
    checks["halving"] = halving_ok;
    ok = ok && profile.r <= bound && halving_ok;
    if (o.oracle) {
      if (static_cast<int>(inst.size()) <= s.removal_cap) {
        const bool same = crossing_levels_by_removal(arr, s.removal_cap) == levels;
        checks["removalOracle"] = same;
        ok = ok && same;
      } else {
        checks["removalOracle"] = "skipped: more strings than removal_cap";
      }
    }
    if (!o.svg.empty()) {
      SvgLayers layers;
      layers.levels = true;
      write_text(o.svg, render_svg(inst, layers));
    }
  } else if (!in.instance && o.levels) {
    throw ParseError("--levels needs an instance");
  }
  if (all || o.sparsity) {
    bool sparse_ok = true;
    report["sparsity"] = sparsity_section(in.graph, s, sparse_ok);
    checks["sparsity"] = sparse_ok;
    ok = ok && sparse_ok;
  }
  report["checks"] = checks;
  report["pass"] = ok;
  emit(report, start, out);
  return ok ? 0 : 1;
}

int cmd_treewidth(const Options& o, const Settings& s, std::ostream& out) {
  const auto start = Clock::now();
  const Input in = load_input(o.input);
  Json report;
  report["command"] = "treewidth";
  report["inputDigest"] = in.digest;
  TreeDecomposition td;
  if (o.exact) {
    const TreewidthResult r = treewidth_exact(in.graph, o.cap > 0 ? o.cap : s.treewidth_cap);
    td = r.td;
    report["treewidth"] = r.tw;
  } else {
    td = treewidth_heuristic(in.graph);
  }
  const DecompositionCheck check = validate_decomposition(in.graph, td);
  report["exact"] = o.exact;
  report["width"] = td.width();
  report["valid"] = check.valid;
  report["decomposition"] = decomposition_to_json(td);
  emit(report, start, out);
  return check.valid ? 0 : 1;
}

bool is_minimization(Problem p) {
  return p == Problem::VertexCover || p == Problem::DominatingSet || p == Problem::FeedbackVertexSet;
}

int cmd_solve(const Options& o, const Settings& s, std::ostream& out) {
  const auto start = Clock::now();
  const auto problem = parse_problem(o.problem);
  if (!problem) throw ParseError("unknown problem " + o.problem);
  const Input in = load_input(o.input);
  const Graph& g = in.graph;
  ProblemOptions opts;
  opts.colors = o.colors;
  opts.width_cap = s.width_cap;
  if (*problem == Problem::ListColoring) {
    if (!o.lists_path.empty()) {
      opts.lists = lists_from_json(read_json_file(o.lists_path));
    } else {
      opts.lists.assign(static_cast<std::size_t>(g.vertex_count()), {1, 2, 3});
    }
    if (static_cast<int>(opts.lists.size()) != g.vertex_count()) throw ParseError("one colour list per vertex required");
  }

  Solution sol;
  std::string method = "treedecomposition";
  if (o.approx && *problem == Problem::CyclePacking) {
    sol = cycle_packing_4approx(g, opts).solution;
    method = "approx4";
  } else if (o.decision_k && *problem == Problem::VertexCover) {
    sol = vc_branch(g, *o.decision_k, opts);
    method = "branching";
  } else if (o.decision_k && *problem == Problem::FeedbackVertexSet) {
    sol = fvs_branch(g, *o.decision_k, opts);
    method = "branching";
  } else if (o.branch && *problem == Problem::InducedMatching) {
    sol = induced_matching_branch(g, opts);
    method = "branching";
  } else if (o.branch && *problem == Problem::ListColoring) {
    sol = list3_branch(g, opts.lists, opts);
    method = "branching";
  } else {
    sol = solve(*problem, g, opts);
  }
  // A target k turns the optimisation problems into decisions.
  bool feasible = sol.feasible();
  const bool decision_only = *problem == Problem::Coloring || *problem == Problem::ListColoring;
  if (o.decision_k && feasible && !decision_only) {
    feasible = is_minimization(*problem) ? sol.value() <= *o.decision_k : sol.value() >= *o.decision_k;
  }

  Json report = solution_to_json(sol);
  report["command"] = "solve";
  report["problem"] = to_string(*problem);
  report["method"] = method;
  report["inputDigest"] = in.digest;
  if (o.decision_k) report["k"] = *o.decision_k;
  report["feasible"] = feasible;
  report["verified"] = !sol.feasible() || verify_solution(*problem, g, sol, opts);
  bool ok = report["verified"].get<bool>();
  if (o.oracle) {
    try {
      const Solution bf = brute_force(*problem, g, opts);
      bool expected = bf.feasible();
      if (o.decision_k && expected && !decision_only) {
        expected = is_minimization(*problem) ? bf.value() <= *o.decision_k : bf.value() >= *o.decision_k;
      }
      bool agree = expected == feasible;
      // Exact methods must also match the optimum; the approximation only
      // has to be feasible.
      if (agree && method != "approx4" && !o.decision_k && !decision_only && bf.feasible()) {
        agree = bf.value() == sol.value();
      }
      report["oracle"] = {{"agrees", agree}, {"value", bf.feasible() ? Json(bf.value()) : Json(nullptr)}};
      ok = ok && agree;
    } catch (const SizeLimitExceeded& e) {
      report["oracle"] = {{"skipped", e.what()}};
    }
  }
  emit(report, start, out);
  if (!ok) return 1;
  return feasible ? 0 : 1;
}

// The curve family for the witness command: read directly, or extracted from
// an instance with a clique-minor model (given, or found greedily).
std::vector<DoubleGroundedCurve> witness_curves(const Input& in, const Options& o, Json& report) {
  if (in.curves) return *in.curves;
  MinorModel model;
  if (!o.model_path.empty()) {
    model = model_from_json(read_json_file(o.model_path), &*in.instance);
  } else {
    model = greedy_clique_minor(in.graph);
    model.branch_sets.resize(static_cast<std::size_t>(model.size() / 4 * 4));
    report["modelSource"] = "greedy";
  }
  report["modelSize"] = model.size();
  return extract_circular_curves(*in.instance, model);
}

int cmd_witness(const Options& o, const Settings&, std::ostream& out) {
  const auto start = Clock::now();
  const Input in = load_input(o.input);
  if (!in.instance && !in.curves) throw ParseError("witness needs an instance or a curve family");
  Json report;
  report["command"] = "witness";
  report["inputDigest"] = in.digest;
  const auto curves = witness_curves(in, o, report);
  const WitnessResult w = find_witness_point(curves);
  report["k"] = w.k;
  report["kUsed"] = w.k_used;
  report["guaranteed"] = w.guaranteed;
  report["point"] = point_to_json(w.p);
  report["level"] = w.level;
  bool ok = w.level >= w.guaranteed;
  if (in.instance) {
    const Arrangement arr = Arrangement::build(*in.instance);
    report["instanceLevel"] = point_level(arr, crossing_levels_exact(arr), w.p);
    const DgcocCheck d = check_dgcoc(*in.instance, curves);
    report["dgcoc"] = {{"instanceLevel", d.instance_level}, {"familyLevel", d.family_level}, {"pass", d.pass}};
    ok = ok && d.pass;
  }
  report["pass"] = ok;
  if (!o.svg.empty()) {
    SvgLayers layers;
    layers.strings = in.instance.has_value();
    layers.witness = true;
    write_text(o.svg, render_svg(in.instance ? *in.instance : Instance{}, layers, {curves, w.p}));
  }
  emit(report, start, out);
  return ok ? 0 : 1;
}

int cmd_render(const Options& o, const Settings&, std::ostream& out) {
  const Input in = load_input(o.input);
  if (!in.instance && !in.curves) throw ParseError("render needs an instance or a curve family");
  const SvgLayers layers = parse_layers(o.layers);
  SvgOverlay overlay;
  if (layers.witness) {
    Json ignored;
    overlay.curves = witness_curves(in, o, ignored);
    overlay.witness = find_witness_point(overlay.curves).p;
  } else if (in.curves) {
    overlay.curves = *in.curves;
  }
  SvgLayers effective = layers;
  if (in.curves && !layers.witness) effective.witness = true;  // curves are drawn on the witness layer
  const std::string svg = render_svg(in.instance ? *in.instance : Instance{}, effective, overlay);
  if (o.output.empty()) {
    out << svg;
  } else {
    write_text(o.output, svg);
  }
  return 0;
}

int cmd_verify(const Options& o, const Settings& s, std::ostream& out) {
  SuiteConfig cfg;
  if (o.quick) cfg.apply_quick();
  cfg.seed = o.seed;
  cfg.threads = s.threads > 0 ? s.threads : default_threads();
  cfg.check_determinism = !o.no_repeat;
  const SuiteResult r = run_suite(cfg);
  const std::string text = r.report.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    write_text(o.output, text);
    for (const auto& c : r.report["checks"]) {
      const char* verdict = c.contains("skipped") ? "SKIP" : c["pass"].get<bool>() ? "PASS" : "FAIL";
      out << "criterion " << c["id"].get<int>() << ": " << verdict << "\n";
    }
    out << "digest " << r.digest << "\n";
  }
  return r.pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Outerstring graph toolkit: crossing levels, treewidth, minors and solvers"};
  app.require_subcommand(1);
  app.fallthrough();  // inherited: parent options may follow a subcommand
  Options o;
  app.add_option("--config", o.config_path, "key=value settings file")->check(CLI::ExistingFile);
  app.add_option("--threads", o.threads, "worker threads (overrides config and OUTERSTRING_THREADS)");

  auto* generate = app.add_subcommand("generate", "emit a generated instance as JSON");
  generate->require_subcommand(1);
  generate->add_option("-o,--output", o.output, "write to a file instead of stdout");
  auto* gen_folk = generate->add_subcommand("folk", "lower-bound family of folks");
  gen_folk->add_option("--m", o.m, "number of folks")->check(CLI::Range(1, 12));
  gen_folk->add_option("--alpha", o.alpha, "copies per string")->check(CLI::Range(1, 16));
  gen_folk->callback([&] { o.generate_kind = "folk"; });
  auto* gen_random = generate->add_subcommand("random", "random grounded polylines");
  gen_random->add_option("--n", o.n, "number of strings")->check(CLI::Range(1, 2000));
  gen_random->add_option("--seed", o.seed, "random seed");
  gen_random->add_option("--bends", o.bends, "maximum bends per string")->check(CLI::Range(0, 20));
  gen_random->callback([&] { o.generate_kind = "random"; });
  auto* gen_circular = generate->add_subcommand("circular", "circularly ordered double-grounded curves");
  gen_circular->add_option("--k", o.k, "half the number of curves")->check(CLI::Range(1, 64));
  gen_circular->add_option("--seed", o.seed, "random seed");
  gen_circular->add_flag("--curves", o.emit_curves, "emit the curve family instead of the split instance");
  gen_circular->callback([&] { o.generate_kind = "circular"; });

  auto* analyze = app.add_subcommand("analyze", "crossing levels, halving and sparsity report");
  analyze->add_option("input", o.input, "instance or graph JSON")->required();
  analyze->add_flag("--levels", o.levels, "crossing-level section only");
  analyze->add_flag("--sparsity", o.sparsity, "sparsity section only");
  analyze->add_flag("--oracle", o.oracle, "cross-check levels with the removal oracle");
  analyze->add_option("--svg", o.svg, "render strings and level faces");

  auto* treewidth = app.add_subcommand("treewidth", "tree decomposition of a graph or instance");
  treewidth->add_option("input", o.input, "graph or instance JSON")->required();
  treewidth->add_flag("--exact", o.exact, "exact treewidth instead of min-fill");
  treewidth->add_option("--cap", o.cap, "vertex cap for the exact search")->check(CLI::Range(1, 64));

  auto* solve_cmd = app.add_subcommand("solve", "solve a problem on a graph or instance");
  solve_cmd->add_option("problem", o.problem, "independentset, vertexcover, dominatingset, fvs, coloring, "
                                              "list3coloring, inducedmatching or cyclepacking")->required();
  solve_cmd->add_option("input", o.input, "graph or instance JSON")->required();
  solve_cmd->add_option("--k", o.decision_k, "decision target");
  solve_cmd->add_option("--colors", o.colors, "number of colours for coloring (at most 3)")->check(CLI::Range(1, 3));
  solve_cmd->add_option("--lists", o.lists_path, "colour lists JSON for list3coloring");
  solve_cmd->add_flag("--oracle", o.oracle, "cross-check with brute force");
  solve_cmd->add_flag("--approx", o.approx, "4-approximation for cyclepacking");
  solve_cmd->add_flag("--branch", o.branch, "branching algorithm for inducedmatching and list3coloring");

  auto* witness = app.add_subcommand("witness", "witness point of high crossing-level");
  witness->add_option("input", o.input, "instance or curve-family JSON")->required();
  witness->add_option("--model", o.model_path, "clique-minor model JSON");
  witness->add_option("--svg", o.svg, "render curves and the witness point");

  auto* render = app.add_subcommand("render", "SVG rendering");
  render->add_option("input", o.input, "instance or curve-family JSON")->required();
  render->add_option("-o,--output", o.output, "SVG file (stdout if omitted)");
  render->add_option("--layers", o.layers, "comma-separated: strings,levels,witness,folks");
  render->add_option("--model", o.model_path, "clique-minor model JSON for the witness layer");

  auto* verify = app.add_subcommand("verify", "run the acceptance battery");
  verify->add_flag("--quick", o.quick, "reduced sweep");
  verify->add_option("--seed", o.seed, "suite seed");
  verify->add_option("-o,--output", o.output, "write the JSON report to a file");
  verify->add_flag("--no-repeat", o.no_repeat, "skip the determinism rerun");

  std::vector<std::string> storage;
  storage.emplace_back("outerstring");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    Settings settings = o.config_path.empty() ? Settings{} : load_settings(o.config_path);
    if (o.threads > 0) settings.threads = o.threads;
    if (*generate) return cmd_generate(o, settings, out);
    if (*analyze) return cmd_analyze(o, settings, out);
    if (*treewidth) return cmd_treewidth(o, settings, out);
    if (*solve_cmd) return cmd_solve(o, settings, out);
    if (*witness) return cmd_witness(o, settings, out);
    if (*render) return cmd_render(o, settings, out);
    if (*verify) return cmd_verify(o, settings, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateInput& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const WidthLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotAModel& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionViolated& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace outerstring::tools
