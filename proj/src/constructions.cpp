#include "rigikit/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <bit>
#include <unordered_set>

#include "rigikit/canonical.hpp"
#include "rigikit/errors.hpp"

namespace rigikit {

namespace {

// Mutable adjacency used while assembling a construction.
class Builder {
 public:
  explicit Builder(int n) : adj_(static_cast<std::size_t>(n), 0) {}
  explicit Builder(const Graph& g) : adj_(g.adjacency().begin(), g.adjacency().end()) {}

  int order() const { return static_cast<int>(adj_.size()); }
  Vertex add_vertex() {
    adj_.push_back(0);
    return order() - 1;
  }
  void add(Vertex a, Vertex b) {
    adj_[static_cast<std::size_t>(a)] |= vertex_bit(b);
    adj_[static_cast<std::size_t>(b)] |= vertex_bit(a);
  }
  void remove(Vertex a, Vertex b) {
    adj_[static_cast<std::size_t>(a)] &= ~vertex_bit(b);
    adj_[static_cast<std::size_t>(b)] &= ~vertex_bit(a);
  }
  void add_clique(std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) add(vs[i], vs[j]);
    }
  }
  void remove_vertex_edges(Vertex v) {
    for (auto& row : adj_) row &= ~vertex_bit(v);
    adj_[static_cast<std::size_t>(v)] = 0;
  }
  Graph build() const { return Graph::from_adjacency(adj_); }

 private:
  std::vector<std::uint64_t> adj_;
};

std::vector<Vertex> iota_labels(Vertex from, Vertex to_exclusive) {
  std::vector<Vertex> out(static_cast<std::size_t>(std::max(0, to_exclusive - from)));
  std::iota(out.begin(), out.end(), from);
  return out;
}

void check_vertices(const Graph& g, std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order()) {
      throw InvalidGraphError("vertex " + std::to_string(v) + " out of range");
    }
  }
}

void check_distinct(std::span<const Vertex> vs) {
  std::vector<Vertex> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DuplicateNeighborError("neighbour list contains a repeated vertex");
  }
}

bool share_endpoint(Edge a, Edge b) {
  return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

bool common_endpoint(Edge a, Edge b, Edge c) {
  for (Vertex x : {a.u, a.v}) {
    if ((b.u == x || b.v == x) && (c.u == x || c.v == x)) return true;
  }
  return false;
}

}  // namespace

LabeledConstruction build_B(int d, int t) {
  if (d < 3 || t < 2 || t > d - 1) {
    throw RangeError("B_{d,t} needs d >= 3 and 2 <= t <= d-1, got d=" +
                     std::to_string(d) + ", t=" + std::to_string(t));
  }
  const int n = 2 * (d + 2) - t;
  const std::vector<Vertex> g1 = iota_labels(0, d + 2);
  const std::vector<Vertex> shared = iota_labels(d + 2 - t, d + 2);
  std::vector<Vertex> g2 = shared;
  for (Vertex v = d + 2; v < n; ++v) g2.push_back(v);
  Builder b(n);
  b.add_clique(g1);
  b.add_clique(g2);
  const Edge e(shared[0], shared[1]);
  b.remove(e.u, e.v);
  LabeledConstruction out{b.build(), {}, {}};
  out.vertex_roles["G1"] = g1;
  out.vertex_roles["G2"] = g2;
  out.vertex_roles["shared"] = shared;
  out.edge_roles["e"] = e;
  return out;
}

std::vector<LabeledConstruction> enumerate_Bplus(int d) {
  if (d < 3) throw RangeError("B+ family needs d >= 3");
  const int n = d + 6;
  const std::vector<Vertex> g1 = iota_labels(0, d + 3);
  const std::vector<Vertex> shared = iota_labels(4, d + 3);
  std::vector<Vertex> g2 = shared;
  for (Vertex v = d + 3; v < n; ++v) g2.push_back(v);

  auto in_shared = [&](Edge x) { return x.u >= 4 && x.v <= d + 2; };
  std::vector<Edge> g1_edges;
  for (Vertex a = 0; a < d + 3; ++a) {
    for (Vertex c = a + 1; c < d + 3; ++c) g1_edges.emplace_back(a, c);
  }

  std::vector<LabeledConstruction> out;
  std::unordered_set<std::string> seen;
  for (const Edge& e : g1_edges) {
    if (!in_shared(e)) continue;
    for (std::size_t i = 0; i < g1_edges.size(); ++i) {
      const Edge f = g1_edges[i];
      if (f == e) continue;
      for (std::size_t j = i + 1; j < g1_edges.size(); ++j) {
        const Edge g = g1_edges[j];
        if (g == e) continue;
        if (common_endpoint(e, f, g)) continue;
        if (!in_shared(f) && !in_shared(g) && share_endpoint(f, g)) continue;
        Builder b(n);
        b.add_clique(g1);
        b.add_clique(g2);
        b.remove(e.u, e.v);
        b.remove(f.u, f.v);
        b.remove(g.u, g.v);
        Graph graph = b.build();
        if (!seen.insert(canonical_code(graph)).second) continue;
        LabeledConstruction c{std::move(graph), {}, {}};
        c.vertex_roles["G1"] = g1;
        c.vertex_roles["G2"] = g2;
        c.vertex_roles["shared"] = shared;
        c.edge_roles["e"] = e;
        c.edge_roles["f"] = f;
        c.edge_roles["g"] = g;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

Graph zero_extension(const Graph& g, int d, std::span<const Vertex> neighbors) {
  if (static_cast<int>(neighbors.size()) != d) {
    throw RangeError("0-extension needs exactly d neighbours");
  }
  check_vertices(g, neighbors);
  check_distinct(neighbors);
  Builder b(g);
  const Vertex v = b.add_vertex();
  for (Vertex x : neighbors) b.add(v, x);
  return b.build();
}

Graph one_extension(const Graph& g, int d, std::span<const Vertex> neighbors,
                    Edge removed) {
  if (static_cast<int>(neighbors.size()) != d + 1) {
    throw RangeError("1-extension needs exactly d+1 neighbours");
  }
  check_vertices(g, neighbors);
  check_distinct(neighbors);
  auto listed = [&](Vertex x) {
    return std::find(neighbors.begin(), neighbors.end(), x) != neighbors.end();
  };
  if (!listed(removed.u) || !listed(removed.v)) {
    throw RangeError("removed edge must join two of the new neighbours");
  }
  if (!g.has_edge(removed.u, removed.v)) {
    throw EdgeAbsentError("edge " + std::to_string(removed.u) + "-" +
                          std::to_string(removed.v) + " is not in the graph");
  }
  Builder b(g);
  b.remove(removed.u, removed.v);
  const Vertex v = b.add_vertex();
  for (Vertex x : neighbors) b.add(v, x);
  return b.build();
}

Graph vertex_split(const Graph& g, int d, Vertex v, std::span<const Vertex> hinge,
                   std::span<const Vertex> part1) {
  check_vertices(g, std::span<const Vertex>(&v, 1));
  check_vertices(g, hinge);
  check_vertices(g, part1);
  if (static_cast<int>(hinge.size()) != d - 1) {
    throw HingeError("hinge must have exactly d-1 vertices");
  }
  const std::uint64_t nb = g.neighbors(v);
  std::uint64_t hinge_mask = 0;
  for (Vertex x : hinge) {
    if (!(nb & vertex_bit(x))) {
      throw HingeError("hinge vertex " + std::to_string(x) + " is not a neighbour of " +
                       std::to_string(v));
    }
    if (hinge_mask & vertex_bit(x)) throw HingeError("hinge vertices must be distinct");
    hinge_mask |= vertex_bit(x);
  }
  std::uint64_t part1_mask = 0;
  for (Vertex x : part1) {
    if (!(nb & vertex_bit(x)) || (hinge_mask & vertex_bit(x))) {
      throw HingeError("part1 must lie in N(v) outside the hinge");
    }
    part1_mask |= vertex_bit(x);
  }
  const std::uint64_t part2_mask = nb & ~hinge_mask & ~part1_mask;
  Builder b(g);
  b.remove_vertex_edges(v);
  const Vertex v1 = v;
  const Vertex v2 = b.add_vertex();
  b.add(v1, v2);
  for (Vertex x : hinge) {
    b.add(v1, x);
    b.add(v2, x);
  }
  for (std::uint64_t m = part1_mask; m; m &= m - 1) b.add(v1, std::countr_zero(m));
  for (std::uint64_t m = part2_mask; m; m &= m - 1) b.add(v2, std::countr_zero(m));
  return b.build();
}

Graph cone(const Graph& g) {
  Builder b(g);
  const Vertex apex = b.add_vertex();
  for (Vertex v = 0; v < apex; ++v) b.add(apex, v);
  return b.build();
}

LabeledConstruction t_sum(const Graph& g1, const Graph& g2,
                          std::span<const Vertex> shared1,
                          std::span<const Vertex> shared2, Edge e) {
  const int t = static_cast<int>(shared1.size());
  if (t < 2 || shared2.size() != shared1.size()) {
    throw SharedCliqueError("t-sum needs two shared lists of equal size t >= 2");
  }
  check_vertices(g1, shared1);
  check_vertices(g2, shared2);
  check_distinct(shared1);
  check_distinct(shared2);
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      const auto a = static_cast<std::size_t>(i);
      const auto c = static_cast<std::size_t>(j);
      if (!g1.has_edge(shared1[a], shared1[c]) || !g2.has_edge(shared2[a], shared2[c])) {
        throw SharedCliqueError("shared vertices do not induce a clique in both summands");
      }
    }
  }
  const auto pos_u = std::find(shared1.begin(), shared1.end(), e.u);
  const auto pos_v = std::find(shared1.begin(), shared1.end(), e.v);
  if (pos_u == shared1.end() || pos_v == shared1.end() || e.u == e.v) {
    throw SharedEdgeError("deleted edge must lie inside the shared clique");
  }

  const int n1 = g1.order();
  std::vector<Vertex> map(static_cast<std::size_t>(g2.order()), -1);
  for (int i = 0; i < t; ++i) {
    map[static_cast<std::size_t>(shared2[static_cast<std::size_t>(i)])] =
        shared1[static_cast<std::size_t>(i)];
  }
  Vertex next = n1;
  for (auto& m : map) {
    if (m < 0) m = next++;
  }
  Builder b(next);
  for (const Edge& x : g1.edges()) b.add(x.u, x.v);
  for (const Edge& x : g2.edges()) {
    b.add(map[static_cast<std::size_t>(x.u)], map[static_cast<std::size_t>(x.v)]);
  }
  b.remove(e.u, e.v);
  LabeledConstruction out{b.build(), {}, {}};
  out.vertex_roles["G1"] = iota_labels(0, n1);
  std::vector<Vertex> g2_labels = map;
  std::sort(g2_labels.begin(), g2_labels.end());
  out.vertex_roles["G2"] = g2_labels;
  out.vertex_roles["shared"] = std::vector<Vertex>(shared1.begin(), shared1.end());
  out.vertex_roles["g2_map"] = map;
  out.edge_roles["e"] = e;
  return out;
}

LabeledConstruction t_sum(const Graph& g1, const Graph& g2,
                          std::span<const Vertex> shared, Edge e) {
  return t_sum(g1, g2, shared, shared, e);
}

LabeledConstruction two_sum(const Graph& g1, const Graph& g2, Edge e1, Edge e2) {
  if (e1.u == e1.v || e2.u == e2.v) throw SharedEdgeError("glued pair must be distinct");
  check_vertices(g1, std::vector<Vertex>{e1.u, e1.v});
  check_vertices(g2, std::vector<Vertex>{e2.u, e2.v});
  if (!g1.has_edge(e1.u, e1.v) || !g2.has_edge(e2.u, e2.v)) {
    throw SharedEdgeError("2-sum needs the glued pair to be an edge of both summands");
  }
  const std::vector<Vertex> s1{e1.u, e1.v};
  const std::vector<Vertex> s2{e2.u, e2.v};
  return t_sum(g1, g2, s1, s2, e1);
}

LabeledConstruction two_sum(const Graph& g1, const Graph& g2, Vertex u, Vertex v) {
  if (u == v) throw SharedEdgeError("glued pair must be distinct");
  // Keep the caller's orientation: u is glued to u and v to v.
  const std::vector<Vertex> s{u, v};
  if (u < 0 || v < 0 || u >= g1.order() || v >= g1.order() || u >= g2.order() ||
      v >= g2.order() || !g1.has_edge(u, v) || !g2.has_edge(u, v)) {
    throw SharedEdgeError("2-sum needs uv to be an edge of both summands");
  }
  return t_sum(g1, g2, s, s, Edge(u, v));
}

}  // namespace rigikit
