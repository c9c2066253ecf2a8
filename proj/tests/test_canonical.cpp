#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rigikit/canonical.hpp"
#include "rigikit/enumeration.hpp"

using namespace rigikit;

namespace {

std::vector<Vertex> shuffled(std::mt19937_64& rng, int n) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("canonical code is the greatest row-order triangle string") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 7, 0.2 + 0.1 * (i % 6));
    CHECK(oracle::code_bits(canonical_code(g)) == oracle::max_triangle(g));
  }
  // Highly symmetric inputs stress the automorphism pruning.
  for (const Graph& g : {complete_bipartite(3, 4), cycle_graph(7), complement(cycle_graph(7)),
                         disjoint_union(cycle_graph(3), cycle_graph(4)), Graph(7)}) {
    CHECK(oracle::code_bits(canonical_code(g)) == oracle::max_triangle(g));
  }
}

TEST_CASE("canonical labelling reproduces the code") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 12, 0.35);
    const CanonicalLabeling c = canonical_labeling(g);
    CHECK(adjacency_code(relabel(g, c.permutation)) == c.code);
    CHECK(canon::is_canonical(relabel(g, c.permutation).adjacency()));
  }
}

TEST_CASE("canonical code is invariant under relabelling") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + i % 9, 0.45);
    const std::string code = canonical_code(g);
    for (int j = 0; j < 200; ++j) {
      CHECK(canonical_code(relabel(g, shuffled(rng, g.order()))) == code);
    }
  }
}

TEST_CASE("equal codes coincide with explicit isomorphism") {
  std::mt19937_64 rng(24);
  int iso = 0;
  int non_iso = 0;
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 7;
    const Graph g = oracle::random_graph(rng, n, 0.5);
    Graph h = relabel(g, shuffled(rng, n));
    if (n >= 2 && i % 2) {
      const Edge e(0, n - 1);
      h = h.has_edge(e.u, e.v) ? h.without_edge(e.u, e.v) : h.with_edge(e.u, e.v);
    }
    const bool same = oracle::isomorphic(g, h);
    (same ? iso : non_iso)++;
    CHECK((canonical_code(g) == canonical_code(h)) == same);
    CHECK(is_isomorphic(g, h) == same);
  }
  CHECK(iso > 50);
  CHECK(non_iso > 50);
  CHECK_FALSE(is_isomorphic(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST_CASE("is_canonical agrees with the brute-force greatest string") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng, 2 + i % 5, 0.5);
    const std::vector<Vertex> id = [&] {
      std::vector<Vertex> p(static_cast<std::size_t>(g.order()));
      std::iota(p.begin(), p.end(), 0);
      return p;
    }();
    const bool expect = oracle::triangle(oracle::matrix(g), id) == oracle::max_triangle(g);
    CHECK(canon::is_canonical(g.adjacency()) == expect);
  }
}

TEST_CASE("the 21 six-regular graphs on ten vertices have distinct codes") {
  std::set<std::string> codes;
  for (const Graph& g : enumerate_regular(10, 6)) codes.insert(canonical_code(g));
  CHECK(codes.size() == 21);
}
