#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "harness_internal.hpp"
#include "rigikit/canonical.hpp"
#include "rigikit/constructions.hpp"
#include "rigikit/enumeration.hpp"
#include "rigikit/random.hpp"
#include "rigikit/rigidity.hpp"

namespace rigikit {

namespace internal {

Status status_of(Tri value, bool expected) {
  if (value == Tri::kUnresolved) return Status::kUnresolved;
  return (value == Tri::kTrue) == expected ? Status::kPass : Status::kFail;
}

namespace {

void partitions(int remaining, int min_part, std::vector<int>& parts,
                std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(parts);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    parts.push_back(p);
    partitions(remaining - p, p, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::set<std::string> two_regular_complement_codes(int n, int* partition_count) {
  std::vector<std::vector<int>> all;
  std::vector<int> parts;
  partitions(n, 3, parts, all);
  if (partition_count) *partition_count = static_cast<int>(all.size());
  std::set<std::string> codes;
  for (const auto& p : all) {
    std::vector<Edge> edges;
    int base = 0;
    for (int len : p) {
      for (int i = 0; i < len; ++i) edges.emplace_back(base + i, base + (i + 1) % len);
      base += len;
    }
    codes.insert(canonical_code(complement(Graph(n, edges))));
  }
  return codes;
}

std::vector<Graph> expected_flexible_circuits(int d, int n_max) {
  std::vector<Graph> out;
  auto keep = [&](const Graph& g) {
    if (g.order() <= n_max) out.push_back(g);
  };
  keep(build_B(d, d - 1).graph);
  if (d >= 4) keep(build_B(d, d - 2).graph);
  if (d + 6 <= n_max) {
    for (const auto& c : enumerate_Bplus(d)) keep(c.graph);
  }
  return out;
}

struct Pool {
  std::string name;
  Graph graph;
};

namespace {

std::vector<Pool> circuit_pool(int d) {
  std::vector<Pool> pool;
  pool.push_back({"K_" + std::to_string(d + 2), complete_graph(d + 2)});
  for (int t = 2; t <= d - 1; ++t) {
    pool.push_back({"B_" + std::to_string(d) + "," + std::to_string(t), build_B(d, t).graph});
  }
  pool.push_back({"K_" + std::to_string(d + 2) + "," + std::to_string(d + 2),
                  complete_bipartite(d + 2, d + 2)});
  int i = 0;
  for (const auto& c : enumerate_Bplus(d)) {
    pool.push_back({"B+_" + std::to_string(d) + "#" + std::to_string(i++), c.graph});
  }
  return pool;
}

std::vector<Pool> independent_pool(int d, Rng& rng) {
  std::vector<Pool> pool;
  pool.push_back({"K_" + std::to_string(d + 1), complete_graph(d + 1)});
  pool.push_back({"K_" + std::to_string(d + 2) + "-e", complete_graph(d + 2).without_edge(0, 1)});
  const Graph b = build_B(d, d - 1).graph;
  const Edge e = b.edges()[rng.below(b.edges().size())];
  pool.push_back({"B_" + std::to_string(d) + "," + std::to_string(d - 1) + "-edge",
                  b.without_edge(e.u, e.v)});
  return pool;
}

}  // namespace

std::vector<InstanceVerdict> two_sum_instances(std::uint64_t seed, int random_count) {
  std::vector<InstanceVerdict> out;
  const std::pair<int, int> identities[] = {{3, 2}, {4, 2}};
  for (auto [d, t] : identities) {
    const Graph k = complete_graph(d + 2);
    const Graph sum = two_sum(k, k, 0, 1).graph;
    const Graph b = build_B(d, t).graph;
    InstanceVerdict v;
    v.label = "two_sum(K_" + std::to_string(d + 2) + ",K_" + std::to_string(d + 2) +
              ") ~ B_" + std::to_string(d) + "," + std::to_string(t);
    v.graph6 = to_graph6(sum);
    v.status = canonical_code(sum) == canonical_code(b) ? Status::kPass : Status::kFail;
    out.push_back(std::move(v));
  }

  Rng rng(derive_seed(seed, 0x2500));
  AnalysisOptions opts;
  opts.seed = seed;
  auto random_edge = [&](const Graph& g) { return g.edges()[rng.below(g.edges().size())]; };
  for (int i = 0; i < 2 * random_count; ++i) {
    const bool both_circuits = i < random_count;
    const int d = 3 + (i % 2);
    const auto circuits = circuit_pool(d);
    const Pool& a = circuits[rng.below(circuits.size())];
    Pool b;
    if (both_circuits) {
      b = circuits[rng.below(circuits.size())];
    } else {
      const auto indep = independent_pool(d, rng);
      b = indep[rng.below(indep.size())];
    }
    const Graph sum = two_sum(a.graph, b.graph, random_edge(a.graph), random_edge(b.graph)).graph;
    const MatroidVerdict verdict = analyze(sum, d, opts);
    InstanceVerdict v;
    v.label = "d=" + std::to_string(d) + " two_sum(" + a.name + "," + b.name + ")";
    v.graph6 = to_graph6(sum);
    v.status = status_of(verdict.flags.circuit, both_circuits);
    if (both_circuits && v.status == Status::kPass) {
      // Converse direction: the summands of a circuit 2-sum are circuits.
      for (const Graph* part : {&a.graph, static_cast<const Graph*>(&b.graph)}) {
        v.status = combine(v.status, status_of(analyze(*part, d, opts).flags.circuit, true));
      }
    }
    v.detail = "circuit=" + to_string(verdict.flags.circuit) +
               (both_circuits ? " (both summands circuits)" : " (one summand independent)");
    v.data = verdict_to_json(sum, verdict);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace internal

namespace {

using internal::Pool;
using internal::status_of;

Graph random_graph(Rng& rng, int n, int num, int den) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.chance(num, den)) edges.emplace_back(a, b);
    }
  }
  return Graph(n, edges);
}

std::vector<Vertex> random_permutation(Rng& rng, int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  rng.shuffle(std::span<Vertex>(p));
  return p;
}

// Random distinct vertices from the mask.
std::vector<Vertex> pick(Rng& rng, std::uint64_t mask, int count) {
  std::vector<Vertex> pool;
  for (std::uint64_t m = mask; m; m &= m - 1) pool.push_back(std::countr_zero(m));
  rng.shuffle(std::span<Vertex>(pool));
  pool.resize(static_cast<std::size_t>(std::min<int>(count, static_cast<int>(pool.size()))));
  return pool;
}

std::uint64_t all_vertices(int n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

// Explicit isomorphism search, independent of the canonical form.
bool brute_isomorphic(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::uint64_t used = 0;
  std::function<bool(int)> place = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used & vertex_bit(w)) continue;
      if (a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = a.has_edge(u, v) == b.has_edge(map[static_cast<std::size_t>(u)], w);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = w;
      used |= vertex_bit(w);
      if (place(v + 1)) return true;
      used &= ~vertex_bit(w);
    }
    return false;
  };
  return place(0);
}

struct Tally {
  int cases = 0;
  int failures = 0;
  int unresolved = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what;
    }
  }
  void check(Status s, const std::string& what) {
    if (s == Status::kUnresolved) {
      ++cases;
      ++unresolved;
      if (first_failure.empty()) first_failure = "unresolved: " + what;
      return;
    }
    check(s == Status::kPass, what);
  }

  InstanceVerdict verdict(const std::string& name) const {
    InstanceVerdict v;
    v.label = name;
    v.status = failures ? Status::kFail : unresolved ? Status::kUnresolved : Status::kPass;
    std::ostringstream os;
    os << cases << " cases";
    if (failures) os << ", " << failures << " failed";
    if (unresolved) os << ", " << unresolved << " unresolved";
    if (!first_failure.empty()) os << "; first: " << first_failure;
    v.detail = os.str();
    v.data = {{"cases", cases}, {"failures", failures}, {"unresolved", unresolved}};
    return v;
  }
};

AnalysisOptions options_for(std::uint64_t seed) {
  AnalysisOptions o;
  o.seed = seed;
  return o;
}

// Random R_d-independent graph, grown edge by edge from a random order.
Graph random_independent(Rng& rng, int n, int d, std::uint64_t seed) {
  const Graph full = complete_graph(n);
  std::vector<Edge> order = full.edges();
  rng.shuffle(std::span<Edge>(order));
  const int target = rng.range(0, std::min(full.size(), rigid_rank(n, d)));
  std::vector<Edge> kept;
  for (const Edge& e : order) {
    if (static_cast<int>(kept.size()) == target) break;
    kept.push_back(e);
    if (analyze(Graph(n, kept), d, options_for(seed)).flags.independent != Tri::kTrue) {
      kept.pop_back();
    }
  }
  return Graph(n, kept);
}

// Minimally rigid graph on n >= d+1 vertices from K_{d+1} on 0..d by random
// 0-extensions and, when allowed, 1-extensions.
Graph random_minimally_rigid(Rng& rng, int n, int d, bool one_extensions = true) {
  Graph g = complete_graph(d + 1);
  while (g.order() < n) {
    const int m = g.order();
    if (one_extensions && rng.chance(1, 2) && g.size() > 0) {
      const Edge xy = g.edges()[rng.below(g.edges().size())];
      std::vector<Vertex> nb{xy.u, xy.v};
      for (Vertex x : pick(rng, all_vertices(m) & ~vertex_bit(xy.u) & ~vertex_bit(xy.v), d - 1)) {
        nb.push_back(x);
      }
      if (static_cast<int>(nb.size()) == d + 1) {
        g = one_extension(g, d, nb, xy);
        continue;
      }
    }
    g = zero_extension(g, d, pick(rng, all_vertices(m), d));
  }
  return g;
}

InstanceVerdict suite_complement(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(rng, rng.range(0, 12), rng.range(0, 4), 4);
    const Graph c = complement(g);
    const int n = g.order();
    t.check(complement(c) == g && c.size() + g.size() == n * (n - 1) / 2, to_string(g));
  }
  return t.verdict("complement-involution");
}

InstanceVerdict suite_contraction(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int i = 0; t.cases < 50 && i < 500; ++i) {
    const Graph g = random_graph(rng, rng.range(2, 12), 1, 2);
    if (g.size() == 0) continue;
    const Edge e = g.edges()[rng.below(g.edges().size())];
    const Graph h = contract_edge(g, e.u, e.v);
    t.check(h.order() == g.order() - 1 && h.size() <= g.size(), to_string(g));
  }
  return t.verdict("contraction-counts");
}

InstanceVerdict suite_canonical_invariance(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(rng, rng.range(1, 10), rng.range(1, 3), 4);
    const CanonicalLabeling base = canonical_labeling(g);
    t.check(adjacency_code(relabel(g, base.permutation)) == base.code,
            "labeling reproduces code for " + to_string(g));
    for (int j = 0; j < 200; ++j) {
      const Graph h = relabel(g, random_permutation(rng, g.order()));
      t.check(canonical_code(h) == base.code, to_string(g));
    }
  }
  return t.verdict("canonical-invariance");
}

InstanceVerdict suite_canonical_vs_isomorphism(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  int iso = 0;
  for (int i = 0; i < 300; ++i) {
    const int n = rng.range(1, 8);
    const Graph g = random_graph(rng, n, 1, 2);
    Graph h = relabel(g, random_permutation(rng, n));
    if (n >= 2 && rng.chance(1, 2)) {
      const int a = rng.range(0, n - 1);
      int b = rng.range(0, n - 2);
      if (b >= a) ++b;
      h = h.has_edge(a, b) ? h.without_edge(a, b) : h.with_edge(a, b);
    }
    const bool brute = brute_isomorphic(g, h);
    iso += brute ? 1 : 0;
    t.check((canonical_code(g) == canonical_code(h)) == brute, to_string(g) + " vs " + to_string(h));
  }
  InstanceVerdict v = t.verdict("canonical-vs-isomorphism");
  v.data["isomorphic_pairs"] = iso;
  return v;
}

InstanceVerdict suite_deg23(std::uint64_t) {
  Tally t;
  nlohmann::json counts = nlohmann::json::object();
  for (int n : {11, 12}) {
    SearchSpec spec;
    spec.n = n;
    spec.degree_min = 2;
    spec.degree_max = 3;
    int subjects = 0;
    enumerate_constrained(spec, [&](const Graph& g) {
      const DegreeProfile p = degree_profile(g);
      if (p.min_degree != 2 || p.max_degree != 3) return true;
      ++subjects;
      const auto w = find_deg23_witness(g);
      bool ok = w.has_value();
      if (ok) {
        const auto dist = distance(g, w->first, w->second);
        ok = g.degree(w->first) == 2 && g.degree(w->second) == 3 && (!dist || *dist >= 3);
      }
      t.check(ok, to_graph6(g));
      return true;
    });
    counts[std::to_string(n)] = subjects;
  }
  InstanceVerdict v = t.verdict("deg23-exhaustive");
  v.data["subjects"] = counts;
  return v;
}

InstanceVerdict suite_specialization(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int i = 0; i < 100; ++i) {
    const int d = rng.range(1, 4);
    const Graph g = random_graph(rng, rng.range(2, 9), rng.range(1, 4), 4);
    const std::uint64_t s = rng.next();
    int previous = -1;
    for (int trials = 1; trials <= 3; ++trials) {
      AnalysisOptions o = options_for(s);
      o.trials = trials;
      const MatroidVerdict v = analyze(g, d, o);
      t.check(v.rank_lb <= v.count_ub && v.rank_lb >= previous, to_string(g));
      previous = v.rank_lb;
    }
    for (int k = 0; k < 3; ++k) {
      const int r = matrix_rank(rigidity_matrix(g, random_realization(g, d, rng.next())));
      t.check(r <= std::min(g.size(), rigid_rank(g.order(), d)), to_string(g));
    }
  }
  return t.verdict("specialization-monotonicity");
}

InstanceVerdict suite_field_agreement(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int i = 0; i < 30; ++i) {
    const int d = rng.range(1, 4);
    const Graph g = random_graph(rng, rng.range(2, 8), rng.range(1, 4), 4);
    const Realization q = random_realization(g, d, rng.next(), Field::rationals(1000));
    const int exact = matrix_rank(rigidity_matrix(g, q));
    const int modular = matrix_rank(rigidity_matrix(g, q.reduced_mod(kDefaultPrime)));
    t.check(exact == modular, to_string(g));
  }
  return t.verdict("field-agreement");
}

InstanceVerdict suite_edge_deletion(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int i = 0; t.cases < 50 && i < 500; ++i) {
    const int d = rng.range(1, 4);
    const Graph g = random_graph(rng, rng.range(2, 9), rng.range(1, 3), 4);
    if (g.size() == 0) continue;
    const Edge e = g.edges()[rng.below(g.edges().size())];
    const int r = analyze(g, d, options_for(seed)).rank_lb;
    const int r2 = analyze(g.without_edge(e.u, e.v), d, options_for(seed)).rank_lb;
    t.check(r2 == r || r2 == r - 1, to_string(g));
  }
  return t.verdict("edge-deletion-monotonicity");
}

InstanceVerdict suite_cycle_matroid(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(rng, rng.range(1, 12), rng.range(1, 3), 6);
    const MatroidVerdict v = analyze(g, 1, options_for(seed));
    t.check(v.rank_lb == g.order() - component_count(g), to_string(g));
  }
  return t.verdict("cycle-matroid-d1");
}

InstanceVerdict suite_circuit_rank_law(std::uint64_t seed) {
  Tally t;
  std::vector<std::pair<Graph, int>> subjects;
  for (int d = 1; d <= 5; ++d) subjects.emplace_back(complete_graph(d + 2), d);
  for (int d = 3; d <= 5; ++d) {
    for (int s = 2; s <= d - 1; ++s) subjects.emplace_back(build_B(d, s).graph, d);
  }
  for (const auto& c : enumerate_Bplus(3)) subjects.emplace_back(c.graph, 3);
  subjects.emplace_back(complete_bipartite(5, 5), 3);
  subjects.emplace_back(cycle_graph(7), 1);
  subjects.emplace_back(complete_bipartite(3, 4).without_edge(0, 3), 2);
  int circuits = 0;
  for (const auto& [g, d] : subjects) {
    const MatroidVerdict v = analyze(g, d, options_for(seed));
    if (v.flags.circuit != Tri::kTrue) continue;
    ++circuits;
    bool ok = v.rank_lb == g.size() - 1;
    for (const Edge& e : g.edges()) {
      ok = ok && analyze(g.without_edge(e.u, e.v), d, options_for(seed)).flags.independent == Tri::kTrue;
    }
    t.check(ok, to_string(g));
  }
  InstanceVerdict v = t.verdict("circuit-rank-law");
  v.data["circuits"] = circuits;
  if (circuits < 10) v.status = Status::kFail;
  return v;
}

InstanceVerdict suite_count_bound(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int i = 0; i < 60; ++i) {
    const int d = rng.range(1, 5);
    const Graph g = random_graph(rng, rng.range(d + 2, 11), rng.range(2, 4), 4);
    const MatroidVerdict v = analyze(g, d, options_for(seed));
    t.check(v.rank_lb <= d * g.order() - (d + 1) * d / 2, to_string(g));
  }
  return t.verdict("count-bound");
}

InstanceVerdict suite_b_sparsity(std::uint64_t) {
  Tally t;
  for (int d = 3; d <= 6; ++d) {
    for (int s = 2; s <= d - 1; ++s) {
      const SparsityReport r = is_d_sparse(build_B(d, s).graph, d);
      t.check(r.sparse && r.tight == (s == d - 1),
              "B_" + std::to_string(d) + "," + std::to_string(s));
    }
  }
  return t.verdict("b-family-sparsity");
}

InstanceVerdict suite_b_flexible(std::uint64_t seed) {
  Tally t;
  for (int d = 3; d <= 6; ++d) {
    for (int s : {d - 1, d - 2}) {
      if (s < 2) continue;
      const MatroidVerdict v = analyze(build_B(d, s).graph, d, options_for(seed));
      t.check(status_of(v.flags.flexible_circuit, true),
              "B_" + std::to_string(d) + "," + std::to_string(s));
    }
  }
  return t.verdict("b-family-flexible-circuits");
}

InstanceVerdict suite_two_sum(std::uint64_t seed) {
  Tally t;
  for (const auto& v : internal::two_sum_instances(seed, 10)) t.check(v.status, v.label);
  return t.verdict("two-sum-closure");
}

// t-sums of small circuits and non-circuits at d = 3: a circuit t-sum has
// circuit summands, and two circuit summands give a graph with a unique
// circuit covering every edge outside the shared clique.
InstanceVerdict suite_t_sum(std::uint64_t seed) {
  Tally t;
  const int d = 3;
  std::vector<Pool> summands;
  for (int a = 4; a <= 7; ++a) summands.push_back({"K_" + std::to_string(a), complete_graph(a)});
  summands.push_back({"K_5-e", complete_graph(5).without_edge(3, 4)});
  summands.push_back({"B_3,2", build_B(3, 2).graph});
  int circuit_sums = 0;
  int unique_checks = 0;
  const AnalysisOptions opts = options_for(seed);
  for (const auto& a : summands) {
    for (const auto& b : summands) {
      const Tri ca = analyze(a.graph, d, opts).flags.circuit;
      const Tri cb = analyze(b.graph, d, opts).flags.circuit;
      for (int s = 2; s <= 4; ++s) {
        std::vector<Vertex> shared(static_cast<std::size_t>(s));
        std::iota(shared.begin(), shared.end(), 0);
        const LabeledConstruction c = t_sum(a.graph, b.graph, shared, Edge(0, 1));
        const Graph& g = c.graph;
        const std::string what = a.name + " +_" + std::to_string(s) + " " + b.name;
        const MatroidVerdict v = analyze(g, d, opts);
        if (v.flags.circuit == Tri::kUnresolved) {
          t.check(Status::kUnresolved, what);
          continue;
        }
        if (v.flags.circuit == Tri::kTrue) {
          ++circuit_sums;
          t.check(ca == Tri::kTrue && cb == Tri::kTrue, "circuit sum with non-circuit summand: " + what);
        }
        if (ca != Tri::kTrue || cb != Tri::kTrue) continue;
        // Unique circuit: nullity exactly one and a proven dependence.
        ++unique_checks;
        if (v.flags.independent != Tri::kFalse || v.rank_lb != g.size() - 1) {
          t.check(v.flags.independent == Tri::kUnresolved ? Status::kUnresolved : Status::kFail,
                  "nullity of " + what);
          continue;
        }
        std::set<Edge> support;
        for (int k = 0; k < 3; ++k) {
          const RigidityMatrix m = rigidity_matrix(g, random_realization(g, d, derive_seed(seed, 77 + k)));
          const auto kernel = left_nullspace(m);
          if (kernel.size() != 1) continue;
          for (int row = 0; row < g.size(); ++row) {
            if (kernel[0][static_cast<std::size_t>(row)] != 0) {
              support.insert(g.edges()[static_cast<std::size_t>(row)]);
            }
          }
        }
        bool covered = true;
        for (const Edge& e : g.edges()) {
          const bool in_shared = e.u < s && e.v < s;
          if (!in_shared && !support.count(e)) covered = false;
        }
        t.check(covered, "circuit does not cover non-shared edges: " + what);
      }
    }
  }
  InstanceVerdict v = t.verdict("t-sum-circuits");
  v.data["circuit_sums"] = circuit_sums;
  v.data["unique_circuit_checks"] = unique_checks;
  if (circuit_sums == 0 || unique_checks == 0) v.status = Status::kFail;
  return v;
}

InstanceVerdict suite_rigid_union(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int i = 0; i < 20; ++i) {
    const int d = 3 + (i % 2);
    const int m = rng.range(d + 1, d + 5);
    const Graph base = random_minimally_rigid(rng, m, d);
    std::vector<Vertex> attach[3];
    std::uint64_t reach = 0;
    do {
      reach = 0;
      for (auto& a : attach) {
        a = pick(rng, all_vertices(m), d - 1);
        for (Vertex x : a) reach |= vertex_bit(x);
      }
    } while (std::popcount(reach) < d);
    std::vector<Edge> edges = base.edges();
    for (int k = 0; k < 3; ++k) {
      for (Vertex x : attach[k]) edges.emplace_back(m + k, x);
      for (int l = k + 1; l < 3; ++l) edges.emplace_back(m + k, m + l);
    }
    const Graph g(m + 3, edges);
    const MatroidVerdict v = analyze(g, d, options_for(seed));
    const bool base_ok = analyze(base, d, options_for(seed)).flags.independent == Tri::kTrue &&
                         base.size() == rigid_rank(m, d);
    t.check(base_ok && v.flags.independent == Tri::kTrue && v.flags.rigid == Tri::kTrue,
            to_string(g));
  }
  return t.verdict("rigid-union");
}

InstanceVerdict suite_gluing(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  const AnalysisOptions opts = options_for(seed);
  for (int i = 0; i < 30; ++i) {
    const int d = rng.range(2, 4);
    const int kind = i % 3;
    // Without 1-extensions both keep K_{d+1} on labels 0..d, so sharing a
    // prefix of those labels gives a complete, hence rigid, intersection.
    const Graph g1 = random_minimally_rigid(rng, rng.range(d + 1, d + 4), d, kind != 1);
    const Graph g2 = random_minimally_rigid(rng, rng.range(d + 1, d + 4), d, kind != 1);
    int shared_count = 0;
    if (kind == 0) shared_count = d;
    if (kind == 1) shared_count = rng.range(1, d + 1);
    if (kind == 2) shared_count = rng.range(0, d - 1);
    const int n1 = g1.order();
    std::vector<Vertex> map(static_cast<std::size_t>(g2.order()));
    for (int v = 0; v < g2.order(); ++v) {
      map[static_cast<std::size_t>(v)] = v < shared_count ? v : n1 + v - shared_count;
    }
    std::set<Edge> edges(g1.edges().begin(), g1.edges().end());
    for (const Edge& e : g2.edges()) edges.insert(Edge(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]));
    const int n = n1 + g2.order() - shared_count;
    const Graph g(n, std::vector<Edge>(edges.begin(), edges.end()));
    const std::string what = "kind " + std::to_string(kind) + " " + to_string(g);
    if (kind == 0) {
      t.check(status_of(analyze(g, d, opts).flags.rigid, true), what);
    } else if (kind == 1) {
      t.check(status_of(analyze(g, d, opts).flags.independent, true), what);
    } else {
      const Vertex u = shared_count;  // in g1 only
      const Vertex v = n - 1;         // in g2 only
      if (u >= n1 || v < n1) continue;
      const MatroidVerdict before = analyze(g, d, opts);
      const MatroidVerdict after = analyze(g.with_edge(u, v), d, opts);
      const bool certain = before.rank_failure_bound_log2 <= opts.threshold_log2 &&
                           after.rank_failure_bound_log2 <= opts.threshold_log2;
      const bool ok = after.rank_lb == before.rank_lb + 1;
      t.check(certain ? (ok ? Status::kPass : Status::kFail) : Status::kUnresolved, what);
    }
  }
  return t.verdict("gluing");
}

InstanceVerdict suite_extensions(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  const AnalysisOptions opts = options_for(seed);
  for (int op = 0; op < 3; ++op) {
    int done = 0;
    for (int attempt = 0; done < 30 && attempt < 600; ++attempt) {
      const int d = rng.range(2, 4);
      const int n = rng.range(d + 1, 8);
      const Graph g = random_independent(rng, n, d, seed);
      Graph h;
      std::string name;
      if (op == 0) {
        h = zero_extension(g, d, pick(rng, all_vertices(n), d));
        name = "0-extension";
      } else if (op == 1) {
        if (g.size() == 0) continue;
        const Edge xy = g.edges()[rng.below(g.edges().size())];
        std::vector<Vertex> nb{xy.u, xy.v};
        for (Vertex x : pick(rng, all_vertices(n) & ~vertex_bit(xy.u) & ~vertex_bit(xy.v), d - 1)) {
          nb.push_back(x);
        }
        if (static_cast<int>(nb.size()) != d + 1) continue;
        h = one_extension(g, d, nb, xy);
        name = "1-extension";
      } else {
        const Vertex v = rng.range(0, n - 1);
        if (g.degree(v) < d - 1) continue;
        const std::vector<Vertex> hinge = pick(rng, g.neighbors(v), d - 1);
        std::uint64_t rest = g.neighbors(v);
        for (Vertex x : hinge) rest &= ~vertex_bit(x);
        std::vector<Vertex> part1;
        for (std::uint64_t m = rest; m; m &= m - 1) {
          if (rng.chance(1, 2)) part1.push_back(std::countr_zero(m));
        }
        h = vertex_split(g, d, v, hinge, part1);
        name = "vertex split";
      }
      ++done;
      t.check(h.order() == g.order() + 1 && h.size() == g.size() + d &&
                  analyze(h, d, opts).flags.independent == Tri::kTrue,
              name + " of " + to_string(g));
    }
  }
  return t.verdict("extension-independence");
}

InstanceVerdict suite_cone(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  const AnalysisOptions opts = options_for(seed);
  for (int i = 0; i < 30; ++i) {
    const int d = rng.range(1, 4);
    const Graph g = rng.chance(1, 2) ? random_independent(rng, rng.range(2, 8), d, seed)
                                     : random_graph(rng, rng.range(2, 8), rng.range(1, 3), 4);
    const Tri a = analyze(g, d, opts).flags.independent;
    const Tri b = analyze(cone(g), d + 1, opts).flags.independent;
    if (a == Tri::kUnresolved || b == Tri::kUnresolved) {
      t.check(Status::kUnresolved, to_string(g));
      continue;
    }
    t.check(a == b && cone(g).size() == g.size() + g.order(), to_string(g));
  }
  return t.verdict("cone-independence-transfer");
}

InstanceVerdict suite_operation_counts(std::uint64_t seed) {
  Rng rng(seed);
  Tally t;
  for (int i = 0; i < 40; ++i) {
    const int d = rng.range(2, 4);
    const int n = rng.range(d + 2, 9);
    const Graph g = random_graph(rng, n, 1, 2);
    const Graph z = zero_extension(g, d, pick(rng, all_vertices(n), d));
    t.check(z.order() == n + 1 && z.size() == g.size() + d, "0-extension");
    const Graph c = cone(g);
    t.check(c.order() == n + 1 && c.size() == g.size() + n, "cone");
    const int a = rng.range(3, 7);
    const int b = rng.range(3, 7);
    const int s = rng.range(2, std::min(a, b));
    std::vector<Vertex> shared(static_cast<std::size_t>(s));
    std::iota(shared.begin(), shared.end(), 0);
    const Graph ts = t_sum(complete_graph(a), complete_graph(b), shared, Edge(0, 1)).graph;
    t.check(ts.order() == a + b - s &&
                ts.size() == a * (a - 1) / 2 + b * (b - 1) / 2 - s * (s - 1) / 2 - 1,
            "t-sum");
    const Graph two = two_sum(complete_graph(a), complete_graph(b), 0, 1).graph;
    t.check(two.order() == a + b - 2 && two.size() == a * (a - 1) / 2 + b * (b - 1) / 2 - 2,
            "2-sum");
    if (g.size() > 0) {
      const Edge xy = g.edges()[rng.below(g.edges().size())];
      std::vector<Vertex> nb{xy.u, xy.v};
      for (Vertex x : pick(rng, all_vertices(n) & ~vertex_bit(xy.u) & ~vertex_bit(xy.v), d - 1)) {
        nb.push_back(x);
      }
      const Graph o = one_extension(g, d, nb, xy);
      t.check(o.order() == n + 1 && o.size() == g.size() + d && o.degree(n) == d + 1,
              "1-extension");
    }
  }
  return t.verdict("operation-counts");
}

InstanceVerdict suite_enumeration_distinct(std::uint64_t) {
  Tally t;
  auto distinct = [&](const std::vector<Graph>& gs, const std::string& what) {
    std::unordered_set<std::string> codes;
    for (const Graph& g : gs) codes.insert(canonical_code(g));
    t.check(codes.size() == gs.size(), what);
  };
  distinct(enumerate_regular(10, 6), "regular 10,6");
  distinct(enumerate_regular(15, 12), "regular 15,12");
  SearchSpec spec;
  spec.n = 8;
  spec.degree_min = 4;
  spec.d_sparse_filter = 3;
  distinct(enumerate_constrained(spec), "n=8, degree >= 4, 3-sparse");
  return t.verdict("enumeration-distinct");
}

// Labelled k-regular graphs by backtracking over vertex pairs.
void labelled_regular(int n, int k, std::vector<std::uint64_t>& adj, int a, int b,
                      std::vector<int>& deg, const std::function<void()>& emit) {
  if (a == n) {
    emit();
    return;
  }
  if (b == n) {
    if (deg[static_cast<std::size_t>(a)] == k) labelled_regular(n, k, adj, a + 1, a + 2, deg, emit);
    return;
  }
  const auto ia = static_cast<std::size_t>(a);
  const auto ib = static_cast<std::size_t>(b);
  if (deg[ia] < k && deg[ib] < k) {
    adj[ia] |= vertex_bit(b);
    adj[ib] |= vertex_bit(a);
    ++deg[ia];
    ++deg[ib];
    labelled_regular(n, k, adj, a, b + 1, deg, emit);
    adj[ia] &= ~vertex_bit(b);
    adj[ib] &= ~vertex_bit(a);
    --deg[ia];
    --deg[ib];
  }
  if (deg[ia] + (n - 1 - b) >= k) labelled_regular(n, k, adj, a, b + 1, deg, emit);
}

InstanceVerdict suite_regular_brute_force(std::uint64_t) {
  Tally t;
  nlohmann::json counts = nlohmann::json::object();
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      if ((n * k) % 2) continue;
      std::set<std::string> codes;
      std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
      std::vector<int> deg(static_cast<std::size_t>(n), 0);
      labelled_regular(n, k, adj, 0, 1, deg,
                       [&] { codes.insert(canonical_code(Graph::from_adjacency(adj))); });
      const auto got = enumerate_regular(n, k);
      counts[std::to_string(n) + "," + std::to_string(k)] = got.size();
      t.check(got.size() == codes.size(), std::to_string(n) + "," + std::to_string(k));
    }
  }
  InstanceVerdict v = t.verdict("regular-counts-brute-force");
  v.data["counts"] = counts;
  return v;
}

InstanceVerdict suite_complement_duality(std::uint64_t) {
  Tally t;
  int parts = 0;
  const auto oracle = internal::two_regular_complement_codes(15, &parts);
  std::set<std::string> got;
  for (const Graph& g : enumerate_regular(15, 12)) got.insert(canonical_code(g));
  t.check(parts == 17 && oracle.size() == 17 && got == oracle, "12-regular on 15");
  return t.verdict("complement-duality");
}

InstanceVerdict suite_sparse_filter(std::uint64_t) {
  Tally t;
  const std::string b32 = canonical_code(build_B(3, 2).graph);
  bool found = false;
  SearchSpec spec;
  spec.n = 8;
  spec.degree_min = 4;
  spec.d_sparse_filter = 3;
  for (const Graph& g : enumerate_constrained(spec)) {
    t.check(is_d_sparse(g, 3).sparse, to_graph6(g));
    found = found || canonical_code(g) == b32;
  }
  t.check(found, "B_3,2 among the 3-sparse graphs with minimum degree 4 on 8 vertices");
  return t.verdict("sparse-filter");
}

}  // namespace

const std::vector<PropertySuite>& property_suites() {
  static const std::vector<PropertySuite> suites = {
      {"complement-involution", suite_complement},
      {"contraction-counts", suite_contraction},
      {"canonical-invariance", suite_canonical_invariance},
      {"canonical-vs-isomorphism", suite_canonical_vs_isomorphism},
      {"deg23-exhaustive", suite_deg23},
      {"specialization-monotonicity", suite_specialization},
      {"field-agreement", suite_field_agreement},
      {"edge-deletion-monotonicity", suite_edge_deletion},
      {"cycle-matroid-d1", suite_cycle_matroid},
      {"circuit-rank-law", suite_circuit_rank_law},
      {"count-bound", suite_count_bound},
      {"b-family-sparsity", suite_b_sparsity},
      {"b-family-flexible-circuits", suite_b_flexible},
      {"two-sum-closure", suite_two_sum},
      {"t-sum-circuits", suite_t_sum},
      {"rigid-union", suite_rigid_union},
      {"gluing", suite_gluing},
      {"extension-independence", suite_extensions},
      {"cone-independence-transfer", suite_cone},
      {"operation-counts", suite_operation_counts},
      {"enumeration-distinct", suite_enumeration_distinct},
      {"regular-counts-brute-force", suite_regular_brute_force},
      {"complement-duality", suite_complement_duality},
      {"sparse-filter", suite_sparse_filter},
  };
  return suites;
}

}  // namespace rigikit
