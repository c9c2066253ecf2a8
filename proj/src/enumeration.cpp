#include "rigikit/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <unordered_set>

#include "rigikit/canonical.hpp"
#include "rigikit/errors.hpp"
#include "rigikit/rigidity.hpp"

namespace rigikit {

namespace {

// Nodes at this edge count are dealt round-robin to shards; shallower nodes
// belong to shard 0.
constexpr int kSplitDepth = 6;

struct Bounds {
  int n;
  int dmin;
  int dmax;
  int emin;
  int emax;
};

// Orderly generation: edges are added in row order (0,1), (0,2), ..., (1,2),
// ... after the last edge present, and a child is kept only when its labelling
// is canonical. Canonical graphs are closed under deleting their last edge,
// so every class is reached exactly once.
class Orderly {
 public:
  Orderly(Bounds b, Partition part, std::function<bool(const std::vector<std::uint64_t>&)> emit)
      : b_(b), part_(part), emit_(std::move(emit)) {
    adj_.assign(static_cast<std::size_t>(b_.n), 0);
    deg_.assign(static_cast<std::size_t>(b_.n), 0);
  }

  std::uint64_t run() {
    if (b_.n == 0) {
      if (part_.index == 0 && b_.emin == 0) emit_(adj_);
      return 1;
    }
    visit(0, -1, -1);
    return nodes_;
  }

 private:
  // Remaining row-order positions touching v after position (r, c).
  int capacity(int v, int r, int c) const {
    const int n = b_.n;
    if (r < 0) return n - 1;
    if (v < r) return 0;
    if (v == r) return n - 1 - c;
    return (v - r - 1) + (v > c ? 1 : 0) + (n - 1 - v);
  }

  bool feasible(int edges, int r, int c) const {
    int room = 0;
    for (int v = 0; v < b_.n; ++v) {
      const int d = deg_[static_cast<std::size_t>(v)];
      const int cap = capacity(v, r, c);
      if (d + cap < b_.dmin) return false;
      room += std::min(cap, b_.dmax - d);
    }
    return edges + room / 2 >= b_.emin;
  }

  bool emittable(int edges) const {
    if (edges < b_.emin) return false;
    for (int d : deg_) {
      if (d < b_.dmin) return false;
    }
    return true;
  }

  // Returns false when the sink asked to stop.
  bool visit(int edges, int r, int c) {
    ++nodes_;
    if (edges == kSplitDepth) {
      const bool mine = shard_counter_++ % static_cast<std::uint64_t>(part_.count) ==
                        static_cast<std::uint64_t>(part_.index);
      if (!mine) return true;
    }
    const bool owned = edges >= kSplitDepth || part_.index == 0;
    if (owned && emittable(edges) && !emit_(adj_)) return false;
    if (edges == b_.emax) return true;

    const int n = b_.n;
    int a = r;
    int bcol = c;
    if (a < 0) {
      a = 0;
      bcol = 0;
    }
    // Iterate positions strictly after (r, c).
    while (true) {
      ++bcol;
      if (bcol >= n) {
        ++a;
        bcol = a + 1;
        if (bcol >= n) break;
      }
      const auto ia = static_cast<std::size_t>(a);
      const auto ib = static_cast<std::size_t>(bcol);
      if (deg_[ia] >= b_.dmax || deg_[ib] >= b_.dmax) continue;
      adj_[ia] |= vertex_bit(bcol);
      adj_[ib] |= vertex_bit(a);
      ++deg_[ia];
      ++deg_[ib];
      bool keep = feasible(edges + 1, a, bcol);
      if (keep) {
        // Label 0 must carry a maximum degree in the canonical form.
        for (int v = 1; v < n && keep; ++v) keep = deg_[static_cast<std::size_t>(v)] <= deg_[0];
      }
      if (keep) keep = canon::is_canonical(adj_);
      bool cont = true;
      if (keep) cont = visit(edges + 1, a, bcol);
      adj_[ia] &= ~vertex_bit(bcol);
      adj_[ib] &= ~vertex_bit(a);
      --deg_[ia];
      --deg_[ib];
      if (!cont) return false;
      // Once vertex a can no longer reach degree_min, later positions are
      // hopeless too.
      if (bcol == n - 1 && deg_[ia] < b_.dmin) break;
    }
    return true;
  }

  Bounds b_;
  Partition part_;
  std::function<bool(const std::vector<std::uint64_t>&)> emit_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> deg_;
  std::uint64_t nodes_ = 0;
  std::uint64_t shard_counter_ = 0;
};

void check_partition(Partition p) {
  if (p.count < 1 || p.index < 0 || p.index >= p.count) {
    throw RangeError("partition index must satisfy 0 <= i < m");
  }
}

Bounds resolve(const SearchSpec& spec) {
  const int n = spec.n;
  if (n < 0 || n > 32) throw InfeasibleSpecError("n must lie in 0..32");
  const int pairs = n * (n - 1) / 2;
  Bounds b{n, std::max(0, spec.degree_min),
           spec.degree_max < 0 ? std::max(0, n - 1) : std::min(spec.degree_max, n - 1),
           std::max(0, spec.edge_min), spec.edge_max < 0 ? pairs : std::min(spec.edge_max, pairs)};
  if (b.dmin > b.dmax) throw InfeasibleSpecError("degree_min exceeds degree_max");
  if (b.emin > b.emax) throw InfeasibleSpecError("edge_min exceeds edge_max");
  if (n * b.dmin > 2 * b.emax) throw InfeasibleSpecError("n * degree_min exceeds 2 * edge_max");
  if (n * b.dmax < 2 * b.emin) throw InfeasibleSpecError("n * degree_max is below 2 * edge_min");
  if (b.dmin == b.dmax && (n * b.dmin) % 2 != 0) {
    throw InfeasibleSpecError("no graph has all degrees equal to an odd value on an odd vertex count");
  }
  return b;
}

}  // namespace

Partition Partition::parse(const std::string& text) {
  const auto slash = text.find('/');
  Partition p;
  if (slash == std::string::npos) throw RangeError("partition must look like i/m");
  const char* begin = text.data();
  const char* mid = begin + slash;
  const char* end = begin + text.size();
  auto r1 = std::from_chars(begin, mid, p.index);
  auto r2 = std::from_chars(mid + 1, end, p.count);
  if (r1.ec != std::errc() || r1.ptr != mid || r2.ec != std::errc() || r2.ptr != end) {
    throw RangeError("partition must look like i/m");
  }
  check_partition(p);
  return p;
}

EnumerationStats enumerate_constrained(const SearchSpec& spec, const GraphSink& sink,
                                       Partition partition) {
  check_partition(partition);
  const Bounds b = resolve(spec);
  const int n = b.n;
  const int pairs = n * (n - 1) / 2;
  // Dense requests are generated as complements of sparse ones.
  const bool flip = n > 0 && (n - 1 - b.dmin) < b.dmax;
  const Bounds gen = flip ? Bounds{n, n - 1 - b.dmax, n - 1 - b.dmin, pairs - b.emax, pairs - b.emin}
                          : b;

  EnumerationStats stats;
  std::unordered_set<std::string> seen;
  bool stopped = false;
  Orderly orderly(gen, partition, [&](const std::vector<std::uint64_t>& adj) {
    Graph g = Graph::from_adjacency(adj);
    if (flip) g = complement(g);
    if (spec.d_sparse_filter && !is_d_sparse(g, *spec.d_sparse_filter).sparse) return true;
    if (spec.connectivity_min && !is_k_connected(g, *spec.connectivity_min).connected) {
      return true;
    }
    if (!seen.insert(canonical_code(g)).second) return true;
    ++stats.emitted;
    if (!sink(g)) {
      stopped = true;
      return false;
    }
    return true;
  });
  stats.nodes = orderly.run();
  (void)stopped;
  return stats;
}

std::vector<Graph> enumerate_constrained(const SearchSpec& spec, Partition partition) {
  std::vector<Graph> out;
  enumerate_constrained(spec, [&](const Graph& g) {
    out.push_back(g);
    return true;
  }, partition);
  return out;
}

EnumerationStats enumerate_regular(int n, int k, const GraphSink& sink, Partition partition) {
  if (n < 0 || k < 0 || (n > 0 && k >= n)) {
    throw RangeError("regular graphs need 0 <= k < n");
  }
  if ((n * k) % 2 != 0) {
    throw ParityError("no " + std::to_string(k) + "-regular graph on " + std::to_string(n) +
                      " vertices: n*k is odd");
  }
  SearchSpec spec;
  spec.n = n;
  spec.degree_min = k;
  spec.degree_max = k;
  spec.edge_min = n * k / 2;
  spec.edge_max = n * k / 2;
  return enumerate_constrained(spec, sink, partition);
}

std::vector<Graph> enumerate_regular(int n, int k, Partition partition) {
  std::vector<Graph> out;
  enumerate_regular(n, k, [&](const Graph& g) {
    out.push_back(g);
    return true;
  }, partition);
  return out;
}

}  // namespace rigikit
