#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rigikit {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable once built: every
// operation that changes structure returns a new Graph. The edge list is kept
// sorted so structurally equal graphs compare equal.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  // Builds from adjacency bitmasks (bit j of adj[i] set iff ij is an edge).
  static Graph from_adjacency(std::span<const std::uint64_t> adj);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const std::uint64_t> adjacency() const { return adj_; }

  bool has_edge(Vertex a, Vertex b) const;
  std::uint64_t neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const;
  std::vector<Vertex> neighbor_list(Vertex v) const;

  Graph with_edge(Vertex a, Vertex b) const;
  Graph without_edge(Vertex a, Vertex b) const;
  Graph without_edges(std::span<const Edge> removed) const;
  // Appends `count` isolated vertices.
  Graph with_vertices(int count) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void rebuild_adjacency();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> degrees;
};

struct ConnectivityResult {
  bool connected = false;
  // A minimum separating vertex set when `connected` is false and one exists
  // (no separator exists when the graph is complete).
  std::optional<std::vector<Vertex>> separator;
};

Graph complete_graph(int n);
Graph complete_bipartite(int s, int t);
Graph cycle_graph(int n);
Graph path_graph(int n);

Graph complement(const Graph& g);
Graph contract_edge(const Graph& g, Vertex u, Vertex v);
// Vertex i of g becomes perm[i].
Graph relabel(const Graph& g, std::span<const Vertex> perm);
// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Graph disjoint_union(const Graph& a, const Graph& b);

// Shortest-path edge count, nullopt when y is unreachable from x.
std::optional<int> distance(const Graph& g, Vertex x, Vertex y);
DegreeProfile degree_profile(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
// Connectivity of g restricted to the vertex mask `alive`.
bool is_connected_within(const Graph& g, std::uint64_t alive);
ConnectivityResult is_k_connected(const Graph& g, int k);

// A pair (x, y) with deg x = 2, deg y = 3 and dist(x, y) >= 3 (unreachable
// counts), if one exists.
std::optional<std::pair<Vertex, Vertex>> find_deg23_witness(const Graph& g);

// graph6 (n <= 62). Decoding accepts an optional ">>graph6<<" header.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

std::string to_string(const Graph& g);

inline std::uint64_t vertex_bit(Vertex v) { return std::uint64_t{1} << v; }

}  // namespace rigikit
