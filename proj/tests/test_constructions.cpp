#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rigikit/canonical.hpp"
#include "rigikit/constructions.hpp"
#include "rigikit/errors.hpp"
#include "rigikit/rigidity.hpp"

using namespace rigikit;

TEST_CASE("B family sizes and roles") {
  struct Case {
    int d, t, n, e;
  };
  for (const Case c : {Case{3, 2, 8, 18}, Case{4, 3, 9, 26}, Case{4, 2, 10, 28}, Case{5, 4, 10, 35}}) {
    CAPTURE(c.d);
    CAPTURE(c.t);
    const LabeledConstruction b = build_B(c.d, c.t);
    CHECK(b.graph.order() == c.n);
    CHECK(b.graph.size() == c.e);
    const auto& shared = b.vertex_roles.at("shared");
    CHECK(static_cast<int>(shared.size()) == c.t);
    const Edge e = b.edge_roles.at("e");
    CHECK_FALSE(b.graph.has_edge(e.u, e.v));
    // Each side plus e is a complete graph on d+2 vertices.
    for (const char* side : {"G1", "G2"}) {
      const Graph h = induced_subgraph(b.graph.with_edge(e.u, e.v), b.vertex_roles.at(side));
      CHECK(h == complete_graph(c.d + 2));
    }
  }
  CHECK_THROWS_AS(build_B(2, 2), RangeError);
  CHECK_THROWS_AS(build_B(4, 4), RangeError);
  CHECK_THROWS_AS(build_B(4, 1), RangeError);
}

TEST_CASE("B+ members") {
  const int expected[] = {3, 8, 13};
  for (int d = 3; d <= 5; ++d) {
    CAPTURE(d);
    const auto members = enumerate_Bplus(d);
    CHECK(static_cast<int>(members.size()) == expected[d - 3]);
    std::set<std::string> codes;
    for (const LabeledConstruction& c : members) {
      codes.insert(canonical_code(c.graph));
      CHECK(c.graph.order() == d + 6);
      CHECK(c.graph.size() == rigid_rank(d + 6, d));
      const SparsityReport s = is_d_sparse(c.graph, d);
      CHECK(s.tight);
      for (const char* role : {"e", "f", "g"}) {
        const Edge x = c.edge_roles.at(role);
        CHECK_FALSE(c.graph.has_edge(x.u, x.v));
      }
    }
    CHECK(codes.size() == members.size());
  }
  CHECK_THROWS_AS(enumerate_Bplus(2), RangeError);
}

TEST_CASE("zero and one extensions") {
  const Graph k3 = complete_graph(3);
  const std::vector<Vertex> nb{0, 1};
  const Graph z = zero_extension(k3, 2, nb);
  CHECK(z == complete_graph(4).without_edge(2, 3));

  const std::vector<Vertex> bad{0, 0};
  CHECK_THROWS_AS(zero_extension(k3, 2, bad), DuplicateNeighborError);
  CHECK_THROWS_AS(zero_extension(k3, 3, nb), RangeError);

  const Graph k4 = complete_graph(4);
  const std::vector<Vertex> nb3{0, 1, 2};
  const Graph o = one_extension(k4, 2, nb3, Edge(0, 1));
  CHECK(o.order() == 5);
  CHECK(o.size() == k4.size() + 2);
  CHECK_FALSE(o.has_edge(0, 1));
  CHECK_THROWS_AS(one_extension(k4, 2, nb3, Edge(0, 3)), RangeError);
  CHECK_THROWS_AS(one_extension(k4.without_edge(0, 1), 2, nb3, Edge(0, 1)), EdgeAbsentError);

  std::mt19937_64 rng(41);
  for (int d = 2; d <= 4; ++d) {
    Graph g = complete_graph(d + 1);
    for (int step = 0; step < 4; ++step) {
      std::vector<Vertex> n(static_cast<std::size_t>(g.order()));
      std::iota(n.begin(), n.end(), 0);
      std::shuffle(n.begin(), n.end(), rng);
      n.resize(static_cast<std::size_t>(d));
      g = zero_extension(g, d, n);
      CHECK(oracle::generic_rank(g, d, rng) == g.size());
    }
  }
}

TEST_CASE("vertex split and cone") {
  const Graph tri = complete_graph(3);
  const std::vector<Vertex> hinge{1};
  const std::vector<Vertex> part1{2};
  const Graph s = vertex_split(tri, 2, 0, hinge, part1);
  CHECK(s.order() == 4);
  CHECK(s.size() == 5);
  CHECK(is_isomorphic(s, complete_graph(4).without_edge(0, 1)));
  CHECK(s.has_edge(0, 3));

  const std::vector<Vertex> not_neighbor{0};
  CHECK_THROWS_AS(vertex_split(tri, 2, 0, not_neighbor, part1), HingeError);

  for (int n = 1; n <= 6; ++n) CHECK(cone(complete_graph(n)) == complete_graph(n + 1));
  const Graph c = cone(cycle_graph(5));
  CHECK(c.degree(5) == 5);
}

TEST_CASE("two-sums and t-sums") {
  const LabeledConstruction a = two_sum(complete_graph(5), complete_graph(5), Edge(3, 4), Edge(3, 4));
  CHECK(is_isomorphic(a.graph, build_B(3, 2).graph));
  const LabeledConstruction b = two_sum(complete_graph(6), complete_graph(6), 4, 5);
  CHECK(is_isomorphic(b.graph, build_B(4, 2).graph));

  const std::vector<Vertex> shared{2, 3, 4};
  const LabeledConstruction t = t_sum(complete_graph(5), complete_graph(5), shared, Edge(3, 4));
  CHECK(t.graph.order() == 7);
  CHECK(t.graph.size() == 16);
  CHECK(is_circuit(t.graph, 3).value == Tri::kTrue);

  CHECK_THROWS_AS(two_sum(complete_graph(5), cycle_graph(5), Edge(0, 2), Edge(0, 2)),
                  SharedEdgeError);
  const Graph k5e = complete_graph(5).without_edge(2, 3);
  CHECK_THROWS_AS(t_sum(k5e, complete_graph(5), shared, Edge(3, 4)), SharedCliqueError);
  CHECK_THROWS_AS(t_sum(complete_graph(5), complete_graph(5), shared, Edge(0, 1)), SharedEdgeError);
}
