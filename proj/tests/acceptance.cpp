// Runs each acceptance criterion end to end and prints one line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "rigikit/canonical.hpp"
#include "rigikit/constructions.hpp"
#include "rigikit/enumeration.hpp"
#include "rigikit/harness.hpp"
#include "rigikit/rigidity.hpp"

using namespace rigikit;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

std::string canonical_graph6(const Graph& g) {
  return to_graph6(relabel(g, canonical_labeling(g).permutation));
}

// Exact rank at a random integer point: a lower bound on the generic rank.
int exact_rank_lower_bound(const Graph& g, int d, std::mt19937_64& rng) {
  return oracle::generic_rank(g, d, rng);
}

int partitions_min_part(int n, int min_part) {
  if (n == 0) return 1;
  int total = 0;
  for (int p = min_part; p <= n; ++p) total += partitions_min_part(n - p, p);
  return total;
}

Outcome regular(RegularPart part, int n, int k, int d, std::size_t classes) {
  Outcome o;
  const VerificationReport r = verify_regular(part);
  o.require(r.status == Status::kPass, "harness report " + to_string(r.status));
  const auto graphs = enumerate_regular(n, k);
  o.require(graphs.size() == classes, std::to_string(graphs.size()) + " classes");
  std::set<std::string> codes;
  std::mt19937_64 rng(n * 100 + k);
  for (const Graph& g : graphs) {
    codes.insert(canonical_code(g));
    const int target = d * n - d * (d + 1) / 2;
    o.require(g.size() == target, "edge count differs from rigid rank");
    o.require(exact_rank_lower_bound(g, d, rng) == target, "exact rank below |E|");
    const MatroidVerdict v = analyze(g, d);
    o.require(v.certificate == CertificateKind::kDeterministicIndependent, "not deterministic");
  }
  o.require(codes.size() == classes, "duplicate classes");
  if (n == 15) {
    o.require(partitions_min_part(15, 3) == 17, "partition count");
  }
  o.note = o.ok ? std::to_string(graphs.size()) + " classes, all independent with rank " +
                      std::to_string(n * k / 2)
                : o.note;
  return o;
}

Outcome families() {
  Outcome o;
  struct Case {
    int d, t, n, e, rank;
  };
  std::mt19937_64 rng(3);
  auto check_flexible = [&](const Graph& g, int d, const std::string& name) {
    const MatroidVerdict v = analyze(g, d);
    o.require(v.flags.flexible_circuit == Tri::kTrue, name + " not a flexible circuit");
    o.require(v.certificate == CertificateKind::kDeterministicDependentByCut, name + " lacks a cut certificate");
    o.require(v.flexibility_cut.has_value(), name + " lacks a flexibility separator");
    o.require(std::isinf(v.failure_bound_log2) || v.failure_bound_log2 <= -80.0, name + " bound");
  };
  for (const Case c : {Case{3, 2, 8, 18, 17}, Case{4, 3, 9, 26, 25}, Case{4, 2, 10, 28, 27}}) {
    const std::string name = "B_" + std::to_string(c.d) + "," + std::to_string(c.t);
    const Graph g = build_B(c.d, c.t).graph;
    o.require(g.order() == c.n && g.size() == c.e, name + " size");
    o.require(analyze(g, c.d).rank_lb == c.rank, name + " rank");
    o.require(exact_rank_lower_bound(g, c.d, rng) == c.rank, name + " exact rank");
    check_flexible(g, c.d, name);
  }
  int members = 0;
  for (int d = 3; d <= 5; ++d) {
    for (const auto& c : enumerate_Bplus(d)) {
      ++members;
      check_flexible(c.graph, d, "B+ member at d=" + std::to_string(d));
    }
  }
  o.require(run_claim("families").status == Status::kPass, "families report");
  if (o.ok) o.note = "3 B graphs and " + std::to_string(members) + " B+ members certified by cuts";
  return o;
}

Outcome two_sums() {
  Outcome o;
  const Graph k5 = complete_graph(5);
  o.require(canonical_code(two_sum(k5, k5, Edge(0, 1), Edge(0, 1)).graph) ==
                canonical_code(build_B(3, 2).graph),
            "two_sum(K5,K5) differs from B_3,2");
  const VerificationReport r = verify_two_sums();
  int positive = 0;
  int negative = 0;
  for (const auto& v : r.instances) {
    if (v.detail.find("both summands circuits") != std::string::npos) ++positive;
    if (v.detail.find("one summand independent") != std::string::npos) ++negative;
    o.require(v.status == Status::kPass, v.label);
  }
  o.require(positive == 20 && negative == 20, "instance counts");
  if (o.ok) o.note = "identity holds, 20 circuit sums and 20 non-circuit sums as expected";
  return o;
}

Outcome classification() {
  Outcome o;
  std::set<std::string> expected{canonical_graph6(build_B(3, 2).graph)};
  for (const auto& c : enumerate_Bplus(3)) expected.insert(canonical_graph6(c.graph));
  const VerificationReport r = classify_flexible_circuits(3, 9);
  const std::set<std::string> got(r.graphs.begin(), r.graphs.end());
  o.require(got.size() == r.graphs.size(), "duplicates in output");
  o.require(got == expected, "set differs from B_3,2 and B+_3,2");
  o.require(r.status == Status::kPass, "harness report");
  if (o.ok) o.note = std::to_string(got.size()) + " flexible circuits, set equal to B_3,2 and B+_3,2";
  return o;
}

Outcome edge_bound() {
  Outcome o;
  for (int d = 3; d <= 8; ++d) {
    o.require(build_B(d, d - 1).graph.size() == d * (d + 9) / 2, "count at d=" + std::to_string(d));
  }
  for (const std::string& g6 : classify_flexible_circuits(3, 9).graphs) {
    o.require(from_graph6(g6).size() >= 18, "flexible circuit with fewer than 18 edges");
  }
  o.require(run_claim("edge-bound").status == Status::kPass, "harness report");
  if (o.ok) o.note = "d(d+9)/2 for d=3..8, no d=3 flexible circuit below 18 edges";
  return o;
}

Outcome cone_ladder() {
  Outcome o;
  Graph g = complete_bipartite(6, 6);
  const MatroidVerdict base = analyze(g, 4);
  o.require(base.rank_lb == 35, "K_6,6 rank");
  for (int d = 4; d <= 7; ++d) {
    const MatroidVerdict v = analyze(g, d);
    const std::string at = " at d=" + std::to_string(d);
    o.require(g.order() == d + 8, "vertex count" + at);
    o.require(v.flags.flexible_circuit == Tri::kTrue, "not a flexible circuit" + at);
    o.require(v.failure_bound_log2 <= -80.0, "Monte Carlo bound" + at);
    g = cone(g);
  }
  o.require(run_claim("cone-ladder").status == Status::kPass, "harness report");
  if (o.ok) o.note = "K_6,6 and 3 cones are flexible circuits on d+8 vertices";
  return o;
}

Outcome properties() {
  Outcome o;
  const VerificationReport r = run_claim("structure");
  for (const auto& v : r.instances) o.require(v.status == Status::kPass, v.label + ": " + v.detail);
  if (o.ok) o.note = std::to_string(r.instances.size()) + " property suites pass";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"6-regular graphs on 10 vertices are 4-independent",
       [] { return regular(RegularPart::kSixRegularTen, 10, 6, 4, 21); }},
      {"12-regular graphs on 15 vertices are 9-independent",
       [] { return regular(RegularPart::kTwelveRegularFifteen, 15, 12, 9, 17); }},
      {"B and B+ families are flexible circuits", families},
      {"2-sum closure", two_sums},
      {"flexible circuit classification at d=3", classification},
      {"edge bound for B_d,d-1", edge_bound},
      {"coning ladder from K_6,6", cone_ladder},
      {"property suites", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %zu: %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.note.c_str(), secs);
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
