#include "rigikit/rigidity.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "rigikit/errors.hpp"
#include "rigikit/random.hpp"

namespace rigikit {

namespace {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return derive_seed(seed, trial);
}

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double mc_log2(int d, int n, std::uint64_t p, int trials) {
  if (d * n == 0 || trials == 0) return kNegInf;
  return trials * (std::log2(static_cast<double>(d) * n) -
                   std::log2(static_cast<double>(p)));
}

int choose2(int k) { return k * (k - 1) / 2; }

int rank_prime(int rows, int cols, std::vector<std::uint64_t> a, std::uint64_t p) {
  int rank = 0;
  const auto at = [&](int r, int c) -> std::uint64_t& {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(c)];
  };
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const std::uint64_t inv = modp::inv(at(rank, c), p);
    for (int r = rank + 1; r < rows; ++r) {
      if (at(r, c) == 0) continue;
      const std::uint64_t factor = modp::mul(at(r, c), inv, p);
      for (int j = c; j < cols; ++j) {
        at(r, j) = modp::sub(at(r, j), modp::mul(factor, at(rank, j), p), p);
      }
    }
    ++rank;
  }
  return rank;
}

int rank_rational(int rows, int cols, const std::vector<std::int64_t>& entries) {
  std::vector<mpq_class> a(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    a[i] = mpq_class(static_cast<long>(entries[i]));
  }
  const auto at = [&](int r, int c) -> mpq_class& {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
             static_cast<std::size_t>(c)];
  };
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (sgn(at(r, c)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = c; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    for (int r = rank + 1; r < rows; ++r) {
      if (sgn(at(r, c)) == 0) continue;
      const mpq_class factor = at(r, c) / at(rank, c);
      for (int j = c; j < cols; ++j) at(r, j) -= factor * at(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::int64_t> select_rows(const RigidityMatrix& m, std::span<const int> rows) {
  std::vector<std::int64_t> out;
  out.reserve(rows.size() * static_cast<std::size_t>(m.cols));
  for (int r : rows) {
    const auto begin = m.entries.begin() + static_cast<std::ptrdiff_t>(r) * m.cols;
    out.insert(out.end(), begin, begin + m.cols);
  }
  return out;
}

int rank_of(const RigidityMatrix& m, int rows, std::vector<std::int64_t> entries) {
  if (m.field.kind == Field::Kind::kRational) return rank_rational(rows, m.cols, entries);
  std::vector<std::uint64_t> a(entries.begin(), entries.end());
  return rank_prime(rows, m.cols, std::move(a), m.field.prime);
}

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

int internal_edges(const Graph& g, std::uint64_t mask) {
  int twice = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    twice += std::popcount(g.neighbors(std::countr_zero(m)) & mask);
  }
  return twice / 2;
}

std::vector<Vertex> members(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (std::uint64_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::uint64_t component_of(const Graph& g, Vertex start, std::uint64_t alive) {
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

// Visits every vertex set of size <= max_size whose removal leaves a
// disconnected graph, smallest sets first.
template <typename Visit>
void for_each_small_separator(const Graph& g, int max_size, Visit&& visit) {
  const int n = g.order();
  const std::uint64_t all = full_mask(n);
  for (int s = 0; s <= std::min(max_size, n - 2); ++s) {
    // Gosper's hack over s-subsets of n bits.
    if (s == 0) {
      if (!is_connected_within(g, all)) {
        if (visit(std::uint64_t{0})) return;
      }
      continue;
    }
    std::uint64_t set = (std::uint64_t{1} << s) - 1;
    while (set <= all && !(set & ~all)) {
      const std::uint64_t rest = all & ~set;
      if (rest && !is_connected_within(g, rest)) {
        if (visit(set)) return;
      }
      const std::uint64_t c = set & -set;
      const std::uint64_t r = set + c;
      if (r == 0) break;
      set = (((r ^ set) >> 2) / c) | r;
    }
  }
}

struct SeparatorSummary {
  std::optional<std::vector<Vertex>> first;
  std::optional<CutWitness> best;
};

SeparatorSummary summarize_separators(const Graph& g, int d) {
  SeparatorSummary out;
  const int n = g.order();
  if (d < 1 || n < d + 2) return out;
  const std::uint64_t all = full_mask(n);
  const int flexible_cap = rigid_rank(n, d) - 1;
  for_each_small_separator(g, d - 1, [&](std::uint64_t sep) {
    if (!out.first) out.first = members(sep);
    const std::uint64_t rest = all & ~sep;
    const std::uint64_t comp = component_of(g, std::countr_zero(rest), rest);
    const std::uint64_t side_a = comp | sep;
    const std::uint64_t side_b = (rest & ~comp) | sep;
    const int s = std::popcount(sep);
    const int missing_in_sep = choose2(s) - internal_edges(g, sep);
    auto side_bound = [&](std::uint64_t side) {
      const int e = internal_edges(g, side) + missing_in_sep;
      return std::min(e, rigid_rank(std::popcount(side), d));
    };
    int bound = side_bound(side_a) + side_bound(side_b) - choose2(s);
    bound = std::min({bound, flexible_cap, g.size()});
    if (!out.best || bound < out.best->rank_bound) {
      out.best = CutWitness{members(sep), members(side_a), members(side_b), bound};
    }
    return false;
  });
  return out;
}

}  // namespace

std::string to_string(Tri t) {
  switch (t) {
    case Tri::kFalse:
      return "false";
    case Tri::kTrue:
      return "true";
    case Tri::kUnresolved:
      return "unresolved";
  }
  return "unresolved";
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::kDeterministicIndependent:
      return "DeterministicIndependent";
    case CertificateKind::kDeterministicDependentByCount:
      return "DeterministicDependentByCount";
    case CertificateKind::kDeterministicDependentByCut:
      return "DeterministicDependentByCut";
    case CertificateKind::kMonteCarlo:
      return "MonteCarlo";
  }
  return "MonteCarlo";
}

Realization::Realization(int dimension, Field field, std::vector<std::int64_t> coords)
    : dimension_(dimension), field_(field), coords_(std::move(coords)) {
  if (dimension_ < 1) throw RangeError("dimension must be at least 1");
  if (coords_.size() % static_cast<std::size_t>(dimension_) != 0) {
    throw DimensionMismatchError("coordinate count is not a multiple of d");
  }
  if (field_.kind == Field::Kind::kPrime) {
    for (auto& x : coords_) x = static_cast<std::int64_t>(modp::from_signed(x, field_.prime));
  }
}

std::span<const std::int64_t> Realization::point(Vertex v) const {
  if (v < 0 || v >= vertex_count()) throw RangeError("vertex outside realization");
  return std::span<const std::int64_t>(coords_).subspan(
      static_cast<std::size_t>(v) * static_cast<std::size_t>(dimension_),
      static_cast<std::size_t>(dimension_));
}

Realization Realization::reduced_mod(std::uint64_t p) const {
  return Realization(dimension_, Field::prime_field(p), coords_);
}

Realization random_realization(const Graph& g, int d, std::uint64_t seed,
                               const Field& field) {
  if (d < 1) throw RangeError("dimension must be at least 1");
  Rng rng(seed);
  std::vector<std::int64_t> coords(static_cast<std::size_t>(g.order()) *
                                   static_cast<std::size_t>(d));
  for (auto& x : coords) {
    if (field.kind == Field::Kind::kPrime) {
      x = static_cast<std::int64_t>(rng.below(field.prime));
    } else {
      const auto width = static_cast<std::uint64_t>(2 * field.sample_bound + 1);
      x = static_cast<std::int64_t>(rng.below(width)) - field.sample_bound;
    }
  }
  return Realization(d, field, std::move(coords));
}

RigidityMatrix rigidity_matrix(const Graph& g, const Realization& r) {
  if (r.vertex_count() != g.order()) {
    throw DimensionMismatchError("realization covers " +
                                 std::to_string(r.vertex_count()) +
                                 " vertices, graph has " + std::to_string(g.order()));
  }
  const int d = r.dimension();
  RigidityMatrix m;
  m.rows = g.size();
  m.cols = d * g.order();
  m.field = r.field();
  m.entries.assign(static_cast<std::size_t>(m.rows) * static_cast<std::size_t>(m.cols), 0);
  const bool prime = m.field.kind == Field::Kind::kPrime;
  const std::uint64_t p = m.field.prime;
  for (int row = 0; row < m.rows; ++row) {
    const Edge& e = g.edges()[static_cast<std::size_t>(row)];
    const auto pu = r.point(e.u);
    const auto pv = r.point(e.v);
    for (int k = 0; k < d; ++k) {
      std::int64_t forward;
      std::int64_t backward;
      if (prime) {
        const auto a = static_cast<std::uint64_t>(pu[static_cast<std::size_t>(k)]);
        const auto b = static_cast<std::uint64_t>(pv[static_cast<std::size_t>(k)]);
        forward = static_cast<std::int64_t>(modp::sub(a, b, p));
        backward = static_cast<std::int64_t>(modp::sub(b, a, p));
      } else {
        forward = pu[static_cast<std::size_t>(k)] - pv[static_cast<std::size_t>(k)];
        backward = -forward;
      }
      const std::size_t base = static_cast<std::size_t>(row) * static_cast<std::size_t>(m.cols);
      m.entries[base + static_cast<std::size_t>(e.u * d + k)] = forward;
      m.entries[base + static_cast<std::size_t>(e.v * d + k)] = backward;
    }
  }
  return m;
}

int matrix_rank(const RigidityMatrix& m) { return rank_of(m, m.rows, m.entries); }

int matrix_rank(const RigidityMatrix& m, std::span<const int> row_subset) {
  return rank_of(m, static_cast<int>(row_subset.size()), select_rows(m, row_subset));
}

std::vector<std::vector<std::uint64_t>> left_nullspace(const RigidityMatrix& m) {
  if (m.field.kind != Field::Kind::kPrime) {
    throw RangeError("left_nullspace is implemented over prime fields only");
  }
  const std::uint64_t p = m.field.prime;
  const int rows = m.rows;
  const int width = m.cols + rows;
  std::vector<std::uint64_t> a(static_cast<std::size_t>(rows) * static_cast<std::size_t>(width), 0);
  const auto at = [&](int r, int c) -> std::uint64_t& {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(width) +
             static_cast<std::size_t>(c)];
  };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < m.cols; ++c) at(r, c) = static_cast<std::uint64_t>(m.at(r, c));
    at(r, m.cols + r) = 1;
  }
  int rank = 0;
  for (int c = 0; c < m.cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = 0; j < width; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const std::uint64_t inv = modp::inv(at(rank, c), p);
    for (int r = rank + 1; r < rows; ++r) {
      if (at(r, c) == 0) continue;
      const std::uint64_t factor = modp::mul(at(r, c), inv, p);
      for (int j = c; j < width; ++j) {
        at(r, j) = modp::sub(at(r, j), modp::mul(factor, at(rank, j), p), p);
      }
    }
    ++rank;
  }
  std::vector<std::vector<std::uint64_t>> basis;
  for (int r = rank; r < rows; ++r) {
    std::vector<std::uint64_t> v(static_cast<std::size_t>(rows));
    for (int j = 0; j < rows; ++j) v[static_cast<std::size_t>(j)] = at(r, m.cols + j);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rigid_rank(int vertices, int d) {
  if (vertices >= d + 2) return d * vertices - choose2(d + 1);
  return choose2(vertices);
}

MatroidVerdict analyze(const Graph& g, int d, const AnalysisOptions& options) {
  if (d < 1) throw RangeError("dimension must be at least 1");
  if (options.trials < 1) throw RangeError("trials must be at least 1");
  const int n = g.order();
  const int e = g.size();
  const int target = rigid_rank(n, d);
  const Field field = Field::prime_field(options.prime);

  MatroidVerdict v;
  v.d = d;
  v.vertices = n;
  v.edges = e;
  v.count_ub = std::min(e, target);
  v.threshold_log2 = options.threshold_log2;

  // Rank lower bound from random specialisations; stop once it meets the
  // best proven upper bound.
  int upper = v.count_ub;
  bool separators_done = false;
  SeparatorSummary seps;
  int best = -1;
  std::optional<Realization> best_realization;
  int trials = 0;
  for (int t = 0; t < options.trials; ++t) {
    Realization real = random_realization(g, d, trial_seed(options.seed, static_cast<std::uint64_t>(t)), field);
    const int r = matrix_rank(rigidity_matrix(g, real));
    ++trials;
    v.field_primes.push_back(options.prime);
    if (r > best) {
      best = r;
      best_realization = std::move(real);
    }
    if (best >= upper) break;
    if (!separators_done) {
      seps = summarize_separators(g, d);
      separators_done = true;
      if (seps.best) upper = std::min(upper, seps.best->rank_bound);
      if (best >= upper) break;
    }
  }
  if (!separators_done) seps = summarize_separators(g, d);
  v.rank_lb = best;
  v.trials = trials;
  v.flexibility_cut = seps.first;
  if (seps.best && seps.best->rank_bound < e) v.dependence_cut = seps.best;

  // A rank meeting a proven upper bound is exact.
  const double rank_bound =
      best >= upper ? kNegInf : mc_log2(d, n, options.prime, trials);
  v.rank_failure_bound_log2 = rank_bound;
  const bool mc_ok = rank_bound <= options.threshold_log2;
  double used = kNegInf;
  auto monte_carlo = [&](double bound, Tri claim) {
    used = std::max(used, bound);
    return bound <= options.threshold_log2 ? claim : Tri::kUnresolved;
  };

  // Independence.
  bool dependent_det = false;
  if (best == e) {
    v.certificate = CertificateKind::kDeterministicIndependent;
    v.flags.independent = Tri::kTrue;
  } else if (e > v.count_ub) {
    v.certificate = CertificateKind::kDeterministicDependentByCount;
    v.flags.independent = Tri::kFalse;
    dependent_det = true;
  } else if (v.dependence_cut) {
    v.certificate = CertificateKind::kDeterministicDependentByCut;
    v.flags.independent = Tri::kFalse;
    dependent_det = true;
  } else {
    v.certificate = CertificateKind::kMonteCarlo;
    v.flags.independent = monte_carlo(rank_bound, Tri::kFalse);
  }

  // Rigidity.
  if (best == target) {
    v.flags.rigid = Tri::kTrue;
  } else if (e < target || v.flexibility_cut ||
             (seps.best && seps.best->rank_bound < target)) {
    v.flags.rigid = Tri::kFalse;
  } else {
    v.flags.rigid = monte_carlo(rank_bound, Tri::kFalse);
  }

  // Circuit: rank exactly |E| - 1 and every single-edge deletion independent.
  if (v.flags.independent == Tri::kTrue) {
    v.flags.circuit = Tri::kFalse;
  } else if (best < e - 1) {
    const bool proven_low = std::min(upper, v.count_ub) < e - 1;
    v.flags.circuit = proven_low ? Tri::kFalse : monte_carlo(rank_bound, Tri::kFalse);
  } else {
    // best == e - 1: read off which rows the unique dependency uses.
    std::vector<int> pending;
    const RigidityMatrix m = rigidity_matrix(g, *best_realization);
    const auto kernel = left_nullspace(m);
    for (int row = 0; row < e; ++row) {
      if (kernel.empty() || kernel.front()[static_cast<std::size_t>(row)] == 0) {
        pending.push_back(row);
      }
    }
    const int retries = std::max(options.trials, 2);
    int attempts = 1;
    for (int a = 0; a < retries && !pending.empty(); ++a) {
      Realization real = random_realization(
          g, d, trial_seed(options.seed, 1000 + static_cast<std::uint64_t>(a)), field);
      const RigidityMatrix ma = rigidity_matrix(g, real);
      ++attempts;
      std::vector<int> still;
      for (int row : pending) {
        std::vector<int> keep;
        keep.reserve(static_cast<std::size_t>(e - 1));
        for (int j = 0; j < e; ++j) {
          if (j != row) keep.push_back(j);
        }
        if (matrix_rank(ma, keep) != e - 1) still.push_back(row);
      }
      pending = std::move(still);
    }
    if (!pending.empty()) {
      v.flags.circuit = monte_carlo(mc_log2(d, n, options.prime, attempts), Tri::kFalse);
    } else if (dependent_det) {
      v.flags.circuit = Tri::kTrue;
    } else {
      v.flags.circuit = mc_ok ? monte_carlo(rank_bound, Tri::kTrue) : Tri::kUnresolved;
      used = std::max(used, rank_bound);
    }
  }

  // Flexible circuit: a circuit has rank |E| - 1, rigid iff that meets the
  // rigid rank.
  switch (v.flags.circuit) {
    case Tri::kTrue:
      v.flags.flexible_circuit = (e - 1 < target) ? Tri::kTrue : Tri::kFalse;
      break;
    case Tri::kFalse:
      v.flags.flexible_circuit = Tri::kFalse;
      break;
    case Tri::kUnresolved:
      v.flags.flexible_circuit = Tri::kUnresolved;
      break;
  }
  v.failure_bound_log2 = used;
  return v;
}

MatroidVerdict generic_rank(const Graph& g, int d, int trials, std::uint64_t seed) {
  AnalysisOptions options;
  options.trials = trials;
  options.seed = seed;
  return analyze(g, d, options);
}

PredicateResult is_independent(const Graph& g, int d, const AnalysisOptions& options) {
  PredicateResult r{Tri::kUnresolved, analyze(g, d, options)};
  r.value = r.verdict.flags.independent;
  return r;
}

PredicateResult is_rigid(const Graph& g, int d, const AnalysisOptions& options) {
  PredicateResult r{Tri::kUnresolved, analyze(g, d, options)};
  r.value = r.verdict.flags.rigid;
  return r;
}

PredicateResult is_circuit(const Graph& g, int d, const AnalysisOptions& options) {
  PredicateResult r{Tri::kUnresolved, analyze(g, d, options)};
  r.value = r.verdict.flags.circuit;
  return r;
}

PredicateResult is_flexible_circuit(const Graph& g, int d, const AnalysisOptions& options) {
  PredicateResult r{Tri::kUnresolved, analyze(g, d, options)};
  r.value = r.verdict.flags.flexible_circuit;
  return r;
}

std::optional<CutWitness> dependent_by_cut(const Graph& g, int d) {
  if (d < 1) throw RangeError("dimension must be at least 1");
  SeparatorSummary s = summarize_separators(g, d);
  if (s.best && s.best->rank_bound < g.size()) return s.best;
  return std::nullopt;
}

SparsityReport is_d_sparse(const Graph& g, int d) {
  if (d < 1) throw RangeError("dimension must be at least 1");
  const int n = g.order();
  if (n > 30) throw RangeError("exhaustive sparsity check limited to 30 vertices");
  SparsityReport report;
  const int base = choose2(d + 1);
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  bool found = false;
  std::uint64_t worst_mask = 0;
  for (int size = n; size >= d + 2; --size) {
    const int allowed = d * size - base;
    std::uint64_t set = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (set < limit) {
      int degree_room = 0;
      for (std::uint64_t m = set; m; m &= m - 1) {
        degree_room += std::min(deg[static_cast<std::size_t>(std::countr_zero(m))], size - 1);
      }
      if (degree_room / 2 > allowed) {
        const int excess = internal_edges(g, set) - allowed;
        if (excess > 0 && (!found || excess > report.excess)) {
          found = true;
          report.excess = excess;
          worst_mask = set;
        }
      }
      const std::uint64_t c = set & -set;
      const std::uint64_t r = set + c;
      set = (((r ^ set) >> 2) / c) | r;
    }
  }
  report.sparse = !found;
  if (found) report.violator = members(worst_mask);
  report.tight = report.sparse && n >= d + 2 && g.size() == d * n - base;
  return report;
}

}  // namespace rigikit
