#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rigikit/canonical.hpp"
#include "rigikit/constructions.hpp"
#include "rigikit/enumeration.hpp"
#include "rigikit/errors.hpp"
#include "rigikit/harness.hpp"
#include "rigikit/rigidity.hpp"

namespace {

using namespace rigikit;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUnresolved = 2;
constexpr int kExitUsage = 3;

struct Globals {
  int dim = 3;
  std::uint64_t seed = kDefaultSeed;
  int trials = 2;
  std::string partition = "0/1";
  std::string format = "text";
  std::string input;
};

std::vector<Graph> read_graphs(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw RangeError("cannot open " + path);
    in = &file;
  }
  std::vector<Graph> out;
  std::string line;
  while (std::getline(*in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

int exit_for(Status s) {
  switch (s) {
    case Status::kPass:
      return kExitPass;
    case Status::kFail:
      return kExitFail;
    case Status::kUnresolved:
      return kExitUnresolved;
  }
  return kExitFail;
}

int exit_for(Tri t) {
  return t == Tri::kTrue ? kExitPass : t == Tri::kFalse ? kExitFail : kExitUnresolved;
}

// "1,2,3" -> {1, 2, 3}
std::vector<Vertex> parse_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw RangeError("bad vertex list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

Edge parse_edge(const std::string& text) {
  const auto vs = parse_list(text);
  if (vs.size() != 2) throw RangeError("an edge is written u,v");
  return Edge(vs[0], vs[1]);
}

AnalysisOptions analysis_options(const Globals& g) {
  AnalysisOptions o;
  o.seed = g.seed;
  o.trials = g.trials;
  return o;
}

json roles_json(const LabeledConstruction& c) {
  json roles = json::object();
  for (const auto& [name, vs] : c.vertex_roles) roles[name] = vs;
  for (const auto& [name, e] : c.edge_roles) roles[name] = {e.u, e.v};
  return roles;
}

void emit_graph(const Globals& g, const Graph& graph, const json& roles = json()) {
  if (g.format == "json") {
    json j = {{"graph6", to_graph6(graph)}, {"vertices", graph.order()}, {"edges", graph.size()}};
    if (!roles.is_null()) j["roles"] = roles;
    std::cout << j.dump() << "\n";
  } else if (g.format == "text") {
    std::cout << to_graph6(graph) << "  " << to_string(graph) << "\n";
    if (!roles.is_null()) std::cout << "roles " << roles.dump() << "\n";
  } else {
    std::cout << to_graph6(graph) << "\n";
  }
}

int cmd_rank(const Globals& g) {
  for (const Graph& graph : read_graphs(g.input)) {
    const MatroidVerdict v = analyze(graph, g.dim, analysis_options(g));
    if (g.format == "json") {
      std::cout << verdict_to_json(graph, v).dump() << "\n";
    } else {
      std::cout << to_graph6(graph) << " d=" << v.d << " rank>=" << v.rank_lb
                << " count_ub=" << v.count_ub << " certificate=" << to_string(v.certificate)
                << " independent=" << to_string(v.flags.independent)
                << " rigid=" << to_string(v.flags.rigid)
                << " circuit=" << to_string(v.flags.circuit)
                << " flexible_circuit=" << to_string(v.flags.flexible_circuit) << "\n";
    }
  }
  return kExitPass;
}

int cmd_check(const Globals& g, const std::string& predicate, int k) {
  int worst = kExitPass;
  for (const Graph& graph : read_graphs(g.input)) {
    Tri value = Tri::kUnresolved;
    json detail = json::object();
    if (predicate == "independent" || predicate == "rigid" || predicate == "circuit" ||
        predicate == "flexible-circuit") {
      const MatroidVerdict v = analyze(graph, g.dim, analysis_options(g));
      value = predicate == "independent" ? v.flags.independent
              : predicate == "rigid"     ? v.flags.rigid
              : predicate == "circuit"   ? v.flags.circuit
                                         : v.flags.flexible_circuit;
      detail = verdict_to_json(graph, v);
    } else if (predicate == "sparse" || predicate == "tight") {
      const SparsityReport r = is_d_sparse(graph, g.dim);
      value = (predicate == "sparse" ? r.sparse : r.tight) ? Tri::kTrue : Tri::kFalse;
      detail = {{"sparse", r.sparse}, {"tight", r.tight}, {"violator", r.violator},
                {"excess", r.excess}};
    } else if (predicate == "k-connected") {
      const ConnectivityResult r = is_k_connected(graph, k);
      value = r.connected ? Tri::kTrue : Tri::kFalse;
      detail = {{"k", k}};
      if (r.separator) detail["separator"] = *r.separator;
    } else if (predicate == "cut") {
      const auto w = dependent_by_cut(graph, g.dim);
      value = w ? Tri::kTrue : Tri::kFalse;
      if (w) detail = {{"separator", w->separator}, {"rank_bound", w->rank_bound}};
    } else {
      throw RangeError("unknown predicate '" + predicate + "'");
    }
    if (g.format == "json") {
      std::cout << json{{"graph6", to_graph6(graph)}, {"predicate", predicate},
                        {"value", to_string(value)}, {"detail", detail}}
                       .dump()
                << "\n";
    } else {
      std::cout << to_graph6(graph) << " " << predicate << "=" << to_string(value) << "\n";
    }
    worst = std::max(worst, exit_for(value));
  }
  return worst;
}

struct FamilyArgs {
  std::string name;
  int t = 2;
  int n = 0;
  int s = 0;
};

int cmd_family(const Globals& g, const FamilyArgs& a) {
  if (a.name == "B") {
    const LabeledConstruction c = build_B(g.dim, a.t);
    emit_graph(g, c.graph, roles_json(c));
  } else if (a.name == "Bplus") {
    for (const auto& c : enumerate_Bplus(g.dim)) emit_graph(g, c.graph, roles_json(c));
  } else if (a.name == "complete") {
    emit_graph(g, complete_graph(a.n));
  } else if (a.name == "bipartite") {
    emit_graph(g, complete_bipartite(a.s, a.n));
  } else if (a.name == "cycle") {
    emit_graph(g, cycle_graph(a.n));
  } else {
    throw RangeError("unknown family '" + a.name + "'");
  }
  return kExitPass;
}

struct OpArgs {
  std::string name;
  std::string neighbors;
  std::string edge;
  std::string edge2;
  std::string hinge;
  std::string part1;
  std::string shared;
  std::string shared2;
  int vertex = 0;
};

int cmd_op(const Globals& g, const OpArgs& a) {
  const std::vector<Graph> in = read_graphs(g.input);
  auto need = [&](std::size_t count) {
    if (in.size() < count) {
      throw RangeError("operation '" + a.name + "' needs " + std::to_string(count) +
                       " graph6 input line(s)");
    }
  };
  need(1);
  const Graph& first = in[0];
  if (a.name == "zero-extension") {
    emit_graph(g, zero_extension(first, g.dim, parse_list(a.neighbors)));
  } else if (a.name == "one-extension") {
    emit_graph(g, one_extension(first, g.dim, parse_list(a.neighbors), parse_edge(a.edge)));
  } else if (a.name == "vertex-split") {
    emit_graph(g, vertex_split(first, g.dim, a.vertex, parse_list(a.hinge), parse_list(a.part1)));
  } else if (a.name == "cone") {
    emit_graph(g, cone(first));
  } else if (a.name == "complement") {
    emit_graph(g, complement(first));
  } else if (a.name == "contract") {
    const Edge e = parse_edge(a.edge);
    emit_graph(g, contract_edge(first, e.u, e.v));
  } else if (a.name == "canonical") {
    const CanonicalLabeling c = canonical_labeling(first);
    emit_graph(g, relabel(first, c.permutation), json{{"permutation", c.permutation}});
  } else if (a.name == "two-sum") {
    need(2);
    const Edge e1 = parse_edge(a.edge);
    const Edge e2 = a.edge2.empty() ? e1 : parse_edge(a.edge2);
    const LabeledConstruction c = two_sum(first, in[1], e1, e2);
    emit_graph(g, c.graph, roles_json(c));
  } else if (a.name == "t-sum") {
    need(2);
    const auto s1 = parse_list(a.shared);
    const auto s2 = a.shared2.empty() ? s1 : parse_list(a.shared2);
    const LabeledConstruction c = t_sum(first, in[1], s1, s2, parse_edge(a.edge));
    emit_graph(g, c.graph, roles_json(c));
  } else {
    throw RangeError("unknown operation '" + a.name + "'");
  }
  return kExitPass;
}

struct EnumArgs {
  std::string kind;
  int n = 0;
  int k = 0;
  int dmin = 0;
  int dmax = -1;
  int emin = 0;
  int emax = -1;
  int sparse = 0;
  int connectivity = 0;
};

int cmd_enumerate(const Globals& g, const EnumArgs& a) {
  const Partition part = Partition::parse(g.partition);
  json list = json::array();
  auto sink = [&](const Graph& graph) {
    if (g.format == "json") {
      list.push_back(to_graph6(graph));
    } else {
      std::cout << to_graph6(graph) << "\n";
    }
    return true;
  };
  EnumerationStats stats;
  if (a.kind == "regular") {
    stats = enumerate_regular(a.n, a.k, sink, part);
  } else if (a.kind == "constrained") {
    SearchSpec spec;
    spec.n = a.n;
    spec.degree_min = a.dmin;
    spec.degree_max = a.dmax;
    spec.edge_min = a.emin;
    spec.edge_max = a.emax;
    if (a.sparse > 0) spec.d_sparse_filter = a.sparse;
    if (a.connectivity > 0) spec.connectivity_min = a.connectivity;
    stats = enumerate_constrained(spec, sink, part);
  } else {
    throw RangeError("enumerate expects 'regular' or 'constrained'");
  }
  if (g.format == "json") {
    std::cout << json{{"graphs", list}, {"count", stats.emitted}, {"partition", g.partition}}.dump()
              << "\n";
  } else if (g.format == "text") {
    std::cerr << stats.emitted << " graphs\n";
  }
  return kExitPass;
}

struct VerifyArgs {
  std::string claim;
  bool no_timing = false;
  bool long_running = false;
  int n_max = 0;
};

void print_report(const Globals& g, const VerificationReport& r, bool timing) {
  if (g.format == "json") {
    std::cout << to_json(r, timing).dump(2) << "\n";
    return;
  }
  std::cout << r.claim << ": " << to_string(r.status) << " (" << r.instances.size()
            << " instances";
  if (timing) std::cout << ", " << r.wall_time_seconds << " s";
  std::cout << ")\n";
  for (const auto& i : r.instances) {
    std::cout << "  [" << to_string(i.status) << "] " << i.label;
    if (!i.detail.empty()) std::cout << ": " << i.detail;
    std::cout << "\n";
  }
  for (const auto& g6 : r.graphs) std::cout << "  graph " << g6 << "\n";
}

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  std::vector<VerificationReport> reports;
  if (a.claim == "all") {
    for (const auto& c : claim_ids()) reports.push_back(run_claim(c, g.seed));
  } else if (a.claim == "classify") {
    ClassifyOptions o;
    o.seed = g.seed;
    o.allow_long_running = a.long_running;
    o.partition = Partition::parse(g.partition);
    reports.push_back(classify_flexible_circuits(g.dim, a.n_max > 0 ? a.n_max : g.dim + 6, o));
  } else {
    reports.push_back(run_claim(a.claim, g.seed));
  }
  Status overall = Status::kPass;
  for (const auto& r : reports) {
    print_report(g, r, !a.no_timing);
    overall = combine(overall, r.status);
  }
  return exit_for(overall);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RIGIKIT_SEED")) {
    try {
      return std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      std::cerr << "ignoring unparsable RIGIKIT_SEED\n";
    }
  }
  return kDefaultSeed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation in the generic d-dimensional rigidity matroid"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  Globals g;
  g.seed = default_seed();
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim,-d", g.dim, "Dimension d")->capture_default_str();
    sub->add_option("--seed", g.seed, "Random seed (default from RIGIKIT_SEED)");
    sub->add_option("--trials", g.trials, "Random evaluations per rank")->check(CLI::PositiveNumber);
    sub->add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "g6", "text"}))
        ->capture_default_str();
    sub->add_option("--input,-i", g.input, "graph6 file (default stdin)");
  };

  auto* rank = app.add_subcommand("rank", "Generic rank and matroid flags of graph6 input");
  add_common(rank);

  std::string predicate;
  int k = 1;
  auto* check = app.add_subcommand("check", "Decide a predicate for graph6 input");
  add_common(check);
  check->add_option("predicate", predicate,
                    "independent|rigid|circuit|flexible-circuit|sparse|tight|k-connected|cut")
      ->required();
  check->add_option("--k", k, "k for k-connected");

  FamilyArgs fam;
  auto* family = app.add_subcommand("family", "Build a named graph family");
  add_common(family);
  family->add_option("name", fam.name, "B|Bplus|complete|bipartite|cycle")->required();
  family->add_option("--t", fam.t, "Overlap t for B_{d,t}");
  family->add_option("--n", fam.n, "Vertex count (second part size for bipartite)");
  family->add_option("--s", fam.s, "First part size for bipartite");

  OpArgs op;
  auto* opcmd = app.add_subcommand("op", "Apply a graph operation to graph6 input");
  add_common(opcmd);
  opcmd->add_option("name", op.name,
                    "zero-extension|one-extension|vertex-split|cone|complement|contract|"
                    "canonical|two-sum|t-sum")
      ->required();
  opcmd->add_option("--neighbors", op.neighbors, "Comma-separated neighbour list");
  opcmd->add_option("--edge", op.edge, "Edge u,v (removed, contracted or glued)");
  opcmd->add_option("--edge2", op.edge2, "Glued edge of the second summand");
  opcmd->add_option("--vertex", op.vertex, "Vertex to split");
  opcmd->add_option("--hinge", op.hinge, "Hinge vertices for a split");
  opcmd->add_option("--part1", op.part1, "Neighbours kept by the first split vertex");
  opcmd->add_option("--shared", op.shared, "Shared clique in the first summand");
  opcmd->add_option("--shared2", op.shared2, "Shared clique in the second summand");

  EnumArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate graphs up to isomorphism");
  add_common(enumerate);
  enumerate->add_option("kind", en.kind, "regular|constrained")->required();
  enumerate->add_option("--n", en.n, "Vertex count")->required();
  enumerate->add_option("--k", en.k, "Degree for regular graphs");
  enumerate->add_option("--degree-min", en.dmin, "Minimum degree");
  enumerate->add_option("--degree-max", en.dmax, "Maximum degree");
  enumerate->add_option("--edge-min", en.emin, "Minimum edge count");
  enumerate->add_option("--edge-max", en.emax, "Maximum edge count");
  enumerate->add_option("--sparse", en.sparse, "Keep only d-sparse graphs for this d");
  enumerate->add_option("--connectivity", en.connectivity, "Keep only k-connected graphs");
  enumerate->add_option("--partition", g.partition, "Shard i/m")->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification claim");
  add_common(verify);
  verify->add_option("claim", va.claim, "all|classify|" + [] {
    std::string s;
    for (const auto& c : claim_ids()) s += (s.empty() ? "" : "|") + c;
    return s;
  }())->required();
  verify->add_flag("--no-timing", va.no_timing, "Omit wall time for byte-identical reports");
  verify->add_flag("--long-running", va.long_running, "Allow the d = 4 classification");
  verify->add_option("--n-max", va.n_max, "Largest vertex count for classify");
  verify->add_option("--partition", g.partition, "Shard i/m for classify")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*rank) return cmd_rank(g);
    if (*check) return cmd_check(g, predicate, k);
    if (*family) return cmd_family(g, fam);
    if (*opcmd) return cmd_op(g, op);
    if (*enumerate) return cmd_enumerate(g, en);
    if (*verify) return cmd_verify(g, va);
  } catch (const rigikit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
