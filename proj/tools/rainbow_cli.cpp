// rainbow: generate instances, analyze graphs, build and verify rainbow
// colorings. Output is JSON on stdout; --pretty switches to "key: value" text.
//
// Exit codes: 0 success (and verified), 1 usage or input error, 2 coloring
// does not verify, 3 bound not met / search cut short.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/coloring.hpp"
#include "rainbow/connectivity.hpp"
#include "rainbow/diameter_builder.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/io.hpp"
#include "rainbow/planar.hpp"

using nlohmann::ordered_json;
using namespace rainbow;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnverified = 2;
constexpr int kExitBound = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

void print_pretty(const ordered_json& j, const std::string& prefix) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it.value().is_object()) {
      print_pretty(it.value(), key);
    } else {
      std::cout << key << ": " << it.value().dump() << '\n';
    }
  }
}

void emit(const ordered_json& j, bool pretty) {
  if (pretty) {
    print_pretty(j, "");
  } else {
    std::cout << j.dump() << '\n';
  }
}

std::uint64_t default_work_cap() {
  if (const char* env = std::getenv("RAINBOW_WORK_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("RAINBOW_WORK_CAP is not a number: " + std::string(env));
    }
  }
  return 100'000'000ULL;
}

ordered_json input_summary(const Graph& g, bool with_kappa) {
  const Metrics mt = metrics(g);
  ordered_json j;
  j["n"] = g.n();
  j["m"] = g.m();
  j["connected"] = mt.connected;
  if (with_kappa) j["kappa"] = vertex_connectivity(g);
  j["diam"] = mt.connected ? ordered_json(mt.diameter) : ordered_json(nullptr);
  j["girth"] = mt.girth == kInfinite ? ordered_json(nullptr) : ordered_json(mt.girth);
  return j;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct GenArgs {
  std::string family;
  int kappa = 3;
  int layers = 1;
  int n = 0;
  std::uint64_t seed = 1;
  std::string name;
  int chords = 0;
  int extra_percent = 20;
  std::string out;
  std::string rotation_out;
};

int run_gen(const GenArgs& a, bool pretty) {
  std::optional<PlanarEmbedding> emb;
  Graph g;
  if (a.family == "clique-tower") {
    g = clique_tower(a.kappa, a.layers);
    if (a.chords > 0) g = add_random_chords(g, a.chords, a.seed);
  } else if (a.family == "stacked") {
    emb = stacked_triangulation(a.n, a.seed);
  } else if (a.family == "random") {
    g = random_connected_graph(a.n, a.extra_percent, 100, a.seed);
  } else {
    auto inst = named(a.name);
    if (auto* e = std::get_if<PlanarEmbedding>(&inst)) {
      emb = *e;
    } else {
      g = std::get<Graph>(inst);
    }
  }
  if (emb) g = emb->graph();
  write_file(a.out, emit_edge_list(g));
  if (!a.rotation_out.empty()) {
    if (!emb) throw InputError("family " + a.family + " has no embedding");
    write_file(a.rotation_out, emit_rotation(*emb));
  }
  ordered_json j;
  j["command"] = "gen";
  j["family"] = a.family;
  j["n"] = g.n();
  j["m"] = g.m();
  j["out"] = a.out;
  if (!a.rotation_out.empty()) j["rotation_out"] = a.rotation_out;
  emit(j, pretty);
  return kExitOk;
}

struct InputArgs {
  std::string graph;
  std::string rotation;
};

// Exactly one of --graph / --rotation.
std::pair<Graph, std::optional<PlanarEmbedding>> load_input(const InputArgs& in) {
  if (in.graph.empty() == in.rotation.empty()) {
    throw InputError("give exactly one of --graph and --rotation");
  }
  if (!in.rotation.empty()) {
    PlanarEmbedding emb = parse_rotation(read_file(in.rotation));
    Graph g = emb.graph();
    return {std::move(g), std::move(emb)};
  }
  return {parse_edge_list(read_file(in.graph)), std::nullopt};
}

int run_analyze(const InputArgs& in, bool pretty) {
  const auto start = std::chrono::steady_clock::now();
  auto [g, emb] = load_input(in);
  const Metrics mt = metrics(g);
  ordered_json j;
  j["command"] = "analyze";
  j["n"] = g.n();
  j["m"] = g.m();
  j["connected"] = mt.connected;
  if (mt.connected) {
    j["diameter"] = mt.diameter;
    j["radius"] = mt.radius;
  }
  j["girth"] = mt.girth == kInfinite ? ordered_json(nullptr) : ordered_json(mt.girth);
  j["min_degree"] = mt.min_degree;
  j["kappa"] = vertex_connectivity(g);
  if (emb) {
    const PlanarityReport pr = validate_maximal_planar(*emb);
    j["faces"] = pr.faces;
    j["maximal"] = pr.maximal;
  }
  j["seconds"] = seconds_since(start);
  emit(j, pretty);
  return kExitOk;
}

struct ConstructArgs {
  std::string mode;
  InputArgs input;
  std::string coloring_out;
  std::string dot_out;
  bool serial = false;
};

int run_construct(const ConstructArgs& a, bool pretty) {
  const auto start = std::chrono::steady_clock::now();
  auto [g, emb] = load_input(a.input);
  ordered_json j;
  j["command"] = "construct --mode " + a.mode;
  j["input"] = input_summary(g, true);
  EdgeColoring coloring;
  std::optional<PathSystem> paths;
  bool verified = false;
  bool bound_met = false;
  ordered_json outcome;
  if (a.mode == "diameter") {
    const int kappa = vertex_connectivity(g);
    if (kappa < 3) throw InputError("diameter mode needs a 3-connected graph, kappa = " +
                                    std::to_string(kappa));
    ConstructionOptions options;
    options.throw_on_failure = false;
    options.parallel_verify = !a.serial;
    const DiameterConstruction dc = kappa == 3 ? construct_k3(g, options) : construct_k4(g, options);
    coloring = dc.coloring;
    paths = dc.paths;
    verified = dc.verified();
    bound_met = dc.bound_met();
    outcome["palette"] = dc.palette;
    outcome["bound"] = dc.claimed_bound;
    j["report"] = diameter_report(dc);
  } else {
    if (!emb) throw InputError("planar mode needs --rotation");
    const PlanarConstruction pc = construct_planar(*emb, !a.serial);
    coloring = pc.coloring;
    verified = pc.verified();
    bound_met = pc.bound_met();
    outcome["palette"] = pc.palette;
    outcome["bound"] = pc.proof_bound.ceil();
    j["report"] = planar_report(pc);
  }
  outcome["bound_met"] = bound_met;
  outcome["verified"] = verified;
  j["outcome"] = outcome;
  if (!a.coloring_out.empty()) {
    write_file(a.coloring_out, emit_coloring_json(coloring_document(g, coloring, paths)));
  }
  if (!a.dot_out.empty()) write_file(a.dot_out, emit_coloring_dot(g, coloring));
  j["seconds"] = seconds_since(start);
  emit(j, pretty);
  if (!verified) return kExitUnverified;
  return bound_met ? kExitOk : kExitBound;
}

int run_verify(const InputArgs& in, const std::string& coloring_path, bool serial, bool pretty) {
  const auto start = std::chrono::steady_clock::now();
  auto [g, emb] = load_input(in);
  const EdgeColoring col = to_edge_coloring(g, parse_coloring_json(read_file(coloring_path)));
  VerifyOptions options;
  options.parallel = !serial;
  const VerificationReport report = is_rainbow_connected(g, col, options);
  ordered_json j;
  j["command"] = "verify";
  j["input"] = input_summary(g, false);
  j["palette"] = col.palette_size();
  j["verified"] = report.rainbow_connected;
  if (report.failing_pair) {
    j["failing_pair"] = {report.failing_pair->first, report.failing_pair->second};
  }
  j["seconds"] = seconds_since(start);
  emit(j, pretty);
  return report.rainbow_connected ? kExitOk : kExitUnverified;
}

int run_rc_exact(const InputArgs& in, int budget, std::uint64_t work_cap, bool pretty) {
  const auto start = std::chrono::steady_clock::now();
  auto [g, emb] = load_input(in);
  RcOptions options;
  options.budget = budget;
  options.work_cap = work_cap;
  const RcResult r = rc_exact(g, options);
  ordered_json j;
  j["command"] = "rc-exact";
  j["input"] = input_summary(g, false);
  j["budget"] = budget;
  j["work_cap"] = work_cap;
  switch (r.status) {
    case RcStatus::kFound:
      j["status"] = "found";
      j["rc"] = r.value;
      break;
    case RcStatus::kExceeded:
      j["status"] = "exceeded";
      break;
    case RcStatus::kBudgetTooSmall:
      j["status"] = "budget_too_small";
      break;
  }
  j["steps"] = r.steps;
  j["seconds"] = seconds_since(start);
  emit(j, pretty);
  return r.status == RcStatus::kFound ? kExitOk : kExitBound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow connection: constructions, verifier and exact oracle"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", gen.family, "clique-tower, stacked, random or named")
      ->required()
      ->check(CLI::IsMember({"clique-tower", "stacked", "random", "named"}));
  gen_cmd->add_option("--kappa", gen.kappa, "Clique size of a tower");
  gen_cmd->add_option("--layers", gen.layers, "Tower layers beyond the first clique");
  gen_cmd->add_option("--n", gen.n, "Vertex count (stacked, random)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--name", gen.name, "K<n>, P<n>, C<n>, star<n>, petersen, octahedron, icosahedron");
  gen_cmd->add_option("--chords", gen.chords, "Random chords added to a tower");
  gen_cmd->add_option("--extra-percent", gen.extra_percent, "Extra edge probability (random)");
  gen_cmd->add_option("--out", gen.out, "Edge-list output file")->required();
  gen_cmd->add_option("--rotation-out", gen.rotation_out, "Rotation-system output file");

  InputArgs analyze_in;
  auto* analyze_cmd = app.add_subcommand("analyze", "Metrics and vertex connectivity");
  analyze_cmd->add_option("--graph", analyze_in.graph, "Edge-list file");
  analyze_cmd->add_option("--rotation", analyze_in.rotation, "Rotation-system file");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build a rainbow coloring");
  construct_cmd->add_option("--mode", construct.mode, "diameter or planar")
      ->required()
      ->check(CLI::IsMember({"diameter", "planar"}));
  construct_cmd->add_option("--graph", construct.input.graph, "Edge-list file");
  construct_cmd->add_option("--rotation", construct.input.rotation, "Rotation-system file");
  construct_cmd->add_option("--coloring-out", construct.coloring_out, "Coloring JSON output");
  construct_cmd->add_option("--dot-out", construct.dot_out, "Graphviz output");
  construct_cmd->add_flag("--serial", construct.serial, "Verify without OpenMP");

  InputArgs verify_in;
  std::string coloring_path;
  bool verify_serial = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring for rainbow connectivity");
  verify_cmd->add_option("--graph", verify_in.graph, "Edge-list file");
  verify_cmd->add_option("--rotation", verify_in.rotation, "Rotation-system file");
  verify_cmd->add_option("--coloring", coloring_path, "Coloring JSON")->required();
  verify_cmd->add_flag("--serial", verify_serial, "Verify without OpenMP");

  InputArgs rc_in;
  int budget = 16;
  std::uint64_t work_cap = 0;
  auto* rc_cmd = app.add_subcommand("rc-exact", "Exact rainbow connection number");
  rc_cmd->add_option("--graph", rc_in.graph, "Edge-list file");
  rc_cmd->add_option("--rotation", rc_in.rotation, "Rotation-system file");
  rc_cmd->add_option("--budget", budget, "Largest color count tried")->check(CLI::Range(1, 64));
  rc_cmd->add_option("--work-cap", work_cap,
                     "Search step limit (default RAINBOW_WORK_CAP or 100000000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen, pretty);
    if (*analyze_cmd) return run_analyze(analyze_in, pretty);
    if (*construct_cmd) return run_construct(construct, pretty);
    if (*verify_cmd) return run_verify(verify_in, coloring_path, verify_serial, pretty);
    if (*rc_cmd) return run_rc_exact(rc_in, budget, work_cap ? work_cap : default_work_cap(), pretty);
  } catch (const std::exception& e) {
    std::cerr << "rainbow: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
