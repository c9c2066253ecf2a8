#include "rigikit/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

#include "rigikit/errors.hpp"

namespace rigikit {

namespace {

void check_order(int n) {
  if (n < 0 || n > Graph::kMaxVertices) {
    throw InvalidGraphError("vertex count " + std::to_string(n) +
                            " outside 0.." +
                            std::to_string(Graph::kMaxVertices));
  }
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw InvalidGraphError("vertex " + std::to_string(v) +
                            " out of range for graph on " +
                            std::to_string(g.order()) + " vertices");
  }
}

// Calls visit(mask) for every subset of `universe` with exactly k bits, in
// increasing numeric order; stops early when visit returns true.
template <typename Visit>
bool for_each_subset(std::uint64_t universe, int k, Visit&& visit) {
  std::vector<int> members;
  for (std::uint64_t m = universe; m; m &= m - 1) {
    members.push_back(std::countr_zero(m));
  }
  const int n = static_cast<int>(members.size());
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= vertex_bit(members[static_cast<std::size_t>(i)]);
    if (visit(mask)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  check_order(n);
  edges_.assign(edges.begin(), edges.end());
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw InvalidGraphError("loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v >= n) {
      throw InvalidGraphError("edge endpoint out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidGraphError("parallel edge");
  }
  rebuild_adjacency();
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::from_adjacency(std::span<const std::uint64_t> adj) {
  const int n = static_cast<int>(adj.size());
  check_order(n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t row = adj[static_cast<std::size_t>(i)];
    if (row & vertex_bit(i)) throw InvalidGraphError("loop in adjacency");
    for (std::uint64_t m = row >> i; m; m &= m - 1) {
      const int j = i + std::countr_zero(m);
      if (j >= n || !(adj[static_cast<std::size_t>(j)] & vertex_bit(i))) {
        throw InvalidGraphError("adjacency is not symmetric");
      }
      edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

void Graph::rebuild_adjacency() {
  adj_.assign(static_cast<std::size_t>(n_), 0);
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)] |= vertex_bit(e.v);
    adj_[static_cast<std::size_t>(e.v)] |= vertex_bit(e.u);
  }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  return (adj_[static_cast<std::size_t>(a)] & vertex_bit(b)) != 0;
}

int Graph::degree(Vertex v) const {
  check_vertex(*this, v);
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

std::vector<Vertex> Graph::neighbor_list(Vertex v) const {
  check_vertex(*this, v);
  std::vector<Vertex> out;
  for (std::uint64_t m = adj_[static_cast<std::size_t>(v)]; m; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

Graph Graph::with_edge(Vertex a, Vertex b) const {
  check_vertex(*this, a);
  check_vertex(*this, b);
  if (has_edge(a, b)) return *this;
  std::vector<Edge> edges = edges_;
  edges.emplace_back(a, b);
  return Graph(n_, edges);
}

Graph Graph::without_edge(Vertex a, Vertex b) const {
  if (!has_edge(a, b)) {
    throw EdgeAbsentError("edge " + std::to_string(a) + "-" +
                          std::to_string(b) + " is not present");
  }
  const Edge target(a, b);
  std::vector<Edge> edges;
  edges.reserve(edges_.size() - 1);
  for (const Edge& e : edges_) {
    if (e != target) edges.push_back(e);
  }
  return Graph(n_, edges);
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  Graph g = *this;
  for (const Edge& e : removed) g = g.without_edge(e.u, e.v);
  return g;
}

Graph Graph::with_vertices(int count) const {
  return Graph(n_ + count, edges_);
}

Graph complete_graph(int n) {
  check_order(n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph complete_bipartite(int s, int t) {
  if (s < 0 || t < 0) throw InvalidGraphError("negative part size");
  check_order(s + t);
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
  }
  return Graph(s + t, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidGraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j) {
      if (!g.has_edge(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(g.order(), edges);
}

Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
  if (u == v || !g.has_edge(u, v)) {
    throw EdgeAbsentError("cannot contract absent edge " + std::to_string(u) +
                          "-" + std::to_string(v));
  }
  const Vertex keep = std::min(u, v);
  const Vertex drop = std::max(u, v);
  auto image = [&](Vertex w) {
    if (w == drop) return keep;
    return w > drop ? w - 1 : w;
  };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = image(e.u);
    const Vertex b = image(e.v);
    if (a != b) edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(g.order() - 1, edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw InvalidGraphError("permutation size does not match vertex count");
  }
  std::vector<bool> seen(perm.size(), false);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || seen[static_cast<std::size_t>(p)]) {
      throw InvalidGraphError("not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    edges.emplace_back(perm[static_cast<std::size_t>(e.u)],
                       perm[static_cast<std::size_t>(e.v)]);
  }
  return Graph(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(g, vertices[i]);
    if (index[static_cast<std::size_t>(vertices[i])] != -1) {
      throw InvalidGraphError("repeated vertex in induced subgraph");
    }
    index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = index[static_cast<std::size_t>(e.u)];
    const int b = index[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) {
    edges.emplace_back(e.u + a.order(), e.v + a.order());
  }
  return Graph(a.order() + b.order(), edges);
}

std::optional<int> distance(const Graph& g, Vertex x, Vertex y) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (x == y) return 0;
  std::uint64_t seen = vertex_bit(x);
  std::uint64_t frontier = vertex_bit(x);
  for (int dist = 1; frontier; ++dist) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1) {
      next |= g.neighbors(std::countr_zero(m));
    }
    next &= ~seen;
    if (next & vertex_bit(y)) return dist;
    seen |= next;
    frontier = next;
  }
  return std::nullopt;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    p.degrees[static_cast<std::size_t>(v)] = std::popcount(g.neighbors(v));
  }
  if (!p.degrees.empty()) {
    const auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  return p;
}

namespace {

std::uint64_t reach(const Graph& g, Vertex start, std::uint64_t alive) {
  std::uint64_t seen = vertex_bit(start);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1) {
      next |= g.neighbors(std::countr_zero(m));
    }
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::uint64_t all_vertices(const Graph& g) {
  return g.order() == 64 ? ~std::uint64_t{0}
                         : (std::uint64_t{1} << g.order()) - 1;
}

}  // namespace

int component_count(const Graph& g) {
  std::uint64_t left = all_vertices(g);
  int count = 0;
  while (left) {
    left &= ~reach(g, std::countr_zero(left), all_vertices(g));
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_connected_within(const Graph& g, std::uint64_t alive) {
  if (!alive) return true;
  return reach(g, std::countr_zero(alive), alive) == alive;
}

ConnectivityResult is_k_connected(const Graph& g, int k) {
  if (k < 1) throw RangeError("connectivity parameter must be at least 1");
  const int n = g.order();
  const std::uint64_t all = all_vertices(g);
  ConnectivityResult result;
  // Separators of size s exist only when s <= n - 2.
  const int largest = std::min(k - 1, n - 2);
  for (int s = 0; s <= largest; ++s) {
    std::uint64_t found = 0;
    const bool hit = for_each_subset(all, s, [&](std::uint64_t cut) {
      if (!is_connected_within(g, all & ~cut)) {
        found = cut;
        return true;
      }
      return false;
    });
    if (hit) {
      std::vector<Vertex> sep;
      for (std::uint64_t m = found; m; m &= m - 1) sep.push_back(std::countr_zero(m));
      result.separator = std::move(sep);
      return result;
    }
  }
  result.connected = n > k;
  return result;
}

std::optional<std::pair<Vertex, Vertex>> find_deg23_witness(const Graph& g) {
  const int n = g.order();
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) != 2) continue;
    // Vertices within distance 2 of x.
    std::uint64_t near = vertex_bit(x) | g.neighbors(x);
    for (std::uint64_t m = g.neighbors(x); m; m &= m - 1) {
      near |= g.neighbors(std::countr_zero(m));
    }
    for (Vertex y = 0; y < n; ++y) {
      if (g.degree(y) == 3 && !(near & vertex_bit(y))) {
        return std::make_pair(x, y);
      }
    }
  }
  return std::nullopt;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw Graph6Error("graph6 output supports at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bits = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) {
    acc <<= (6 - bits);
    out.push_back(static_cast<char>(acc + 63));
  }
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Graph6Error("empty graph6 string");
  const int first = static_cast<unsigned char>(text[0]);
  if (first == 126) throw Graph6Error("graph6 input limited to 62 vertices");
  if (first < 63 || first > 125) throw Graph6Error("bad graph6 size byte");
  const int n = first - 63;
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (pairs + 5) / 6;
  if (text.size() != expected) {
    throw Graph6Error("graph6 length " + std::to_string(text.size()) +
                      " does not match " + std::to_string(n) + " vertices");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if (byte < 0 || byte > 63) throw Graph6Error("bad graph6 data byte");
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  if (pairs % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    if (last < 0 || last > 63) throw Graph6Error("bad graph6 data byte");
    const int pad = static_cast<int>(6 - pairs % 6);
    if (last & ((1 << pad) - 1)) throw Graph6Error("nonzero graph6 padding");
  }
  return Graph(n, edges);
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.order() << ", edges=[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : " ") << e.u << '-' << e.v;
    first = false;
  }
  os << "])";
  return os.str();
}

}  // namespace rigikit
