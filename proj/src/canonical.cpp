#include "rigikit/canonical.hpp"

#include <bit>
#include <numeric>

namespace rigikit {

namespace {

constexpr std::size_t kMaxStoredAutomorphisms = 512;

// Bits for canonical labels are stored MSB first: label j is bit 63 - j, so a
// row compares lexicographically by plain integer comparison.
std::uint64_t label_bit(int j) { return std::uint64_t{1} << (63 - j); }

// Mask of labels [p, p + count).
std::uint64_t label_run(int p, int count) {
  auto from = [](int q) { return q >= 64 ? 0 : ~std::uint64_t{0} >> q; };
  return from(p) & ~from(p + count);
}

// Branch-and-bound over vertex orderings. At depth k the unplaced vertices
// are kept as an ordered partition by adjacency pattern to the placed prefix;
// the next vertex must come from the first cell and must maximise its row.
// Subtrees are skipped when an automorphism fixing the prefix (or a twin
// transposition) maps them onto one already searched.
class CanonSearch {
 public:
  enum class Mode { kFindGreatest, kTestIdentity };

  CanonSearch(std::span<const std::uint64_t> adj, Mode mode)
      : n_(static_cast<int>(adj.size())), adj_(adj), mode_(mode) {
    prefix_.resize(static_cast<std::size_t>(n_));
    rows_.resize(static_cast<std::size_t>(n_));
    twin_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      twin_[static_cast<std::size_t>(v)] = v;
      for (int u = 0; u < v; ++u) {
        if ((row(u) & ~vertex_bit(v)) == (row(v) & ~vertex_bit(u))) {
          twin_[static_cast<std::size_t>(v)] = twin_[static_cast<std::size_t>(u)];
          break;
        }
      }
    }
    if (mode_ == Mode::kTestIdentity) {
      target_.resize(static_cast<std::size_t>(n_));
      for (int k = 0; k < n_; ++k) {
        std::uint64_t r = 0;
        for (int j = k + 1; j < n_; ++j) {
          if (row(k) & vertex_bit(j)) r |= label_bit(j);
        }
        target_[static_cast<std::size_t>(k)] = r;
      }
    }
  }

  void run() {
    std::vector<std::uint64_t> cells;
    if (n_ > 0) {
      cells.push_back(n_ == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << n_) - 1);
    }
    search(0, cells);
  }

  bool found_greater() const { return found_greater_; }
  const std::vector<int>& best_order() const { return best_; }
  const std::vector<std::uint64_t>& best_rows() const { return best_rows_; }

 private:
  std::uint64_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  std::uint64_t row_for(int k, int v, const std::vector<std::uint64_t>& cells) const {
    std::uint64_t r = 0;
    int p = k + 1;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::uint64_t members = c == 0 ? cells[c] & ~vertex_bit(v) : cells[c];
      const int hits = std::popcount(row(v) & members);
      r |= label_run(p, hits);
      p += std::popcount(members);
    }
    return r;
  }

  // -1, 0, +1 comparing rows_[0..k] with best_rows_[0..k].
  int compare_with_best(int k) const {
    for (int i = 0; i <= k; ++i) {
      const auto a = rows_[static_cast<std::size_t>(i)];
      const auto b = best_rows_[static_cast<std::size_t>(i)];
      if (a != b) return a < b ? -1 : 1;
    }
    return 0;
  }

  void record_automorphism(std::vector<int> sigma) {
    bool identity = true;
    for (int i = 0; i < n_ && identity; ++i) {
      identity = sigma[static_cast<std::size_t>(i)] == i;
    }
    if (!identity && automorphisms_.size() < kMaxStoredAutomorphisms) {
      automorphisms_.push_back(std::move(sigma));
    }
  }

  void leaf() {
    if (mode_ == Mode::kTestIdentity) {
      record_automorphism(prefix_);
      return;
    }
    if (!have_best_ || compare_with_best(n_ - 1) > 0) {
      best_ = prefix_;
      best_rows_ = rows_;
      have_best_ = true;
      return;
    }
    std::vector<int> sigma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      sigma[static_cast<std::size_t>(best_[static_cast<std::size_t>(i)])] =
          prefix_[static_cast<std::size_t>(i)];
    }
    record_automorphism(std::move(sigma));
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  bool equivalent_to_explored(int k, int v, const std::vector<int>& explored) const {
    for (int u : explored) {
      if (twin_[static_cast<std::size_t>(u)] == twin_[static_cast<std::size_t>(v)]) {
        return true;
      }
    }
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    bool any = false;
    for (const auto& sigma : automorphisms_) {
      bool fixes_prefix = true;
      for (int i = 0; i < k && fixes_prefix; ++i) {
        const int p = prefix_[static_cast<std::size_t>(i)];
        fixes_prefix = sigma[static_cast<std::size_t>(p)] == p;
      }
      if (!fixes_prefix) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int a = find(parent, x);
        const int b = find(parent, sigma[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
      }
    }
    if (!any) return false;
    const int root = find(parent, v);
    for (int u : explored) {
      if (find(parent, u) == root) return true;
    }
    return false;
  }

  void search(int k, const std::vector<std::uint64_t>& cells) {
    if (k == n_) {
      leaf();
      return;
    }
    const std::uint64_t first = cells.front();
    std::uint64_t best_row = 0;
    std::vector<std::pair<int, std::uint64_t>> candidates;
    for (std::uint64_t m = first; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const std::uint64_t r = row_for(k, v, cells);
      candidates.emplace_back(v, r);
      if (r > best_row) best_row = r;
    }
    rows_[static_cast<std::size_t>(k)] = best_row;
    if (mode_ == Mode::kTestIdentity) {
      const std::uint64_t t = target_[static_cast<std::size_t>(k)];
      if (best_row > t) {
        found_greater_ = true;
        return;
      }
      if (best_row < t) return;
    }

    std::vector<int> explored;
    for (const auto& [v, r] : candidates) {
      if (r != best_row) continue;
      if (mode_ == Mode::kFindGreatest && have_best_) {
        // The incumbent may have changed inside an earlier sibling.
        rows_[static_cast<std::size_t>(k)] = best_row;
        if (compare_with_best(k) < 0) return;
      }
      if (equivalent_to_explored(k, v, explored)) continue;

      std::vector<std::uint64_t> next;
      next.reserve(cells.size() + 1);
      const std::uint64_t nb = row(v);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const std::uint64_t members = c == 0 ? cells[c] & ~vertex_bit(v) : cells[c];
        if (members & nb) next.push_back(members & nb);
        if (members & ~nb) next.push_back(members & ~nb);
      }
      prefix_[static_cast<std::size_t>(k)] = v;
      rows_[static_cast<std::size_t>(k)] = best_row;
      search(k + 1, next);
      if (found_greater_) return;
      explored.push_back(v);
    }
  }

  int n_;
  std::span<const std::uint64_t> adj_;
  Mode mode_;
  std::vector<int> prefix_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> twin_;
  std::vector<std::uint64_t> target_;
  std::vector<int> best_;
  std::vector<std::uint64_t> best_rows_;
  bool have_best_ = false;
  bool found_greater_ = false;
  std::vector<std::vector<int>> automorphisms_;
};

std::string pack_rows(int n, std::span<const std::uint64_t> rows) {
  std::string code;
  code.push_back(static_cast<char>(n));
  unsigned acc = 0;
  int bits = 0;
  for (int k = 0; k < n; ++k) {
    for (int j = k + 1; j < n; ++j) {
      acc = (acc << 1) | ((rows[static_cast<std::size_t>(k)] & label_bit(j)) ? 1u : 0u);
      if (++bits == 8) {
        code.push_back(static_cast<char>(acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) code.push_back(static_cast<char>(acc << (8 - bits)));
  return code;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  CanonSearch search(g.adjacency(), CanonSearch::Mode::kFindGreatest);
  search.run();
  CanonicalLabeling out;
  const int n = g.order();
  out.permutation.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.permutation[static_cast<std::size_t>(search.best_order()[static_cast<std::size_t>(i)])] = i;
  }
  out.code = pack_rows(n, search.best_rows());
  return out;
}

std::string canonical_code(const Graph& g) { return canonical_labeling(g).code; }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

std::string adjacency_code(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    for (int j = k + 1; j < n; ++j) {
      if (g.has_edge(k, j)) rows[static_cast<std::size_t>(k)] |= label_bit(j);
    }
  }
  return pack_rows(n, rows);
}

namespace canon {

bool is_canonical(std::span<const std::uint64_t> adj) {
  CanonSearch search(adj, CanonSearch::Mode::kTestIdentity);
  search.run();
  return !search.found_greater();
}

}  // namespace canon

}  // namespace rigikit
