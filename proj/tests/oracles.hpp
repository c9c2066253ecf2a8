#pragma once

// Slow, direct reference implementations used to cross-check the library.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "rigikit/graph.hpp"

namespace oracle {

using rigikit::Edge;
using rigikit::Graph;

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return Graph(n, edges);
}

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (const Edge& e : g.edges()) {
    m[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = true;
    m[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = true;
  }
  return m;
}

// Row-order upper triangle of g after vertex i is renamed perm[i].
inline std::string triangle(const std::vector<std::vector<bool>>& m, const std::vector<int>& perm) {
  const int n = static_cast<int>(m.size());
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  std::string s;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      s.push_back(m[static_cast<std::size_t>(inv[static_cast<std::size_t>(a)])]
                   [static_cast<std::size_t>(inv[static_cast<std::size_t>(b)])] ? '1' : '0');
    }
  }
  return s;
}

// Greatest row-order triangle string over all relabellings.
inline std::string max_triangle(const Graph& g) {
  const auto m = matrix(g);
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    best = std::max(best, triangle(m, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Unpacks a canonical code (byte n, then bits MSB first) into a '0'/'1' string.
inline std::string code_bits(const std::string& code) {
  const int n = static_cast<unsigned char>(code[0]);
  const int len = n * (n - 1) / 2;
  std::string s;
  for (int i = 0; i < len; ++i) {
    const auto byte = static_cast<unsigned char>(code[1 + static_cast<std::size_t>(i / 8)]);
    s.push_back(((byte >> (7 - i % 8)) & 1) ? '1' : '0');
  }
  return s;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const auto ma = matrix(a);
  const auto mb = matrix(b);
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  const std::vector<int> id = perm;
  const std::string target = triangle(mb, id);
  do {
    if (triangle(ma, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline int integer_rank(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

// Rigidity matrix at integer coordinates coords[v*d + k], built from the
// definition.
inline int rigidity_rank(const Graph& g, int d, const std::vector<long>& coords) {
  std::vector<std::vector<mpz_class>> m;
  for (const Edge& e : g.edges()) {
    std::vector<mpz_class> row(static_cast<std::size_t>(d * g.order()), 0);
    for (int k = 0; k < d; ++k) {
      const long diff = coords[static_cast<std::size_t>(e.u * d + k)] -
                        coords[static_cast<std::size_t>(e.v * d + k)];
      row[static_cast<std::size_t>(e.u * d + k)] = diff;
      row[static_cast<std::size_t>(e.v * d + k)] = -diff;
    }
    m.push_back(std::move(row));
  }
  return integer_rank(std::move(m));
}

// Rank at a random integer point; equals the generic rank with high
// probability for coordinates drawn from a wide range.
inline int generic_rank(const Graph& g, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coord(-1000000, 1000000);
  std::vector<long> coords(static_cast<std::size_t>(d * g.order()));
  int best = 0;
  for (int t = 0; t < 2; ++t) {
    for (auto& x : coords) x = coord(rng);
    best = std::max(best, rigidity_rank(g, d, coords));
  }
  return best;
}

inline int components(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  int count = g.order();
  for (const Edge& e : g.edges()) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --count;
    }
  }
  return count;
}

inline std::vector<int> bfs(const Graph& g, int s) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(s)] = 0;
  q.push(s);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w = 0; w < g.order(); ++w) {
      if (g.has_edge(v, w) && dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

// Smallest vertex set whose removal disconnects g (n when g is complete).
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  int best = std::max(0, n - 1);
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size >= best || size > n - 2) continue;
    std::vector<int> keep;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) keep.push_back(v);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      if (!(mask >> e.u & 1) && !(mask >> e.v & 1)) {
        const auto iu = std::find(keep.begin(), keep.end(), e.u) - keep.begin();
        const auto iv = std::find(keep.begin(), keep.end(), e.v) - keep.begin();
        edges.emplace_back(static_cast<int>(iu), static_cast<int>(iv));
      }
    }
    if (components(Graph(static_cast<int>(keep.size()), edges)) > 1) best = size;
  }
  return best;
}

// Largest excess |E(S)| - (d|S| - C(d+1,2)) over |S| >= d+2.
inline int sparsity_excess(const Graph& g, int d) {
  const int n = g.order();
  int worst = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size < d + 2) continue;
    int inside = 0;
    for (const Edge& e : g.edges()) {
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++inside;
    }
    worst = std::max(worst, inside - (d * size - d * (d + 1) / 2));
  }
  return worst;
}

}  // namespace oracle
