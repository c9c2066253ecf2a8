#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rigikit/field.hpp"
#include "rigikit/graph.hpp"

namespace rigikit {

// Where realization coordinates live. Prime mode samples residues uniformly
// from [0, p); rational mode samples integers uniformly from
// [-sample_bound, sample_bound] and computes ranks exactly over Q.
struct Field {
  enum class Kind { kPrime, kRational };

  Kind kind = Kind::kPrime;
  std::uint64_t prime = kDefaultPrime;
  std::int64_t sample_bound = 1000;

  static Field prime_field(std::uint64_t p = kDefaultPrime) {
    return Field{Kind::kPrime, p, 0};
  }
  static Field rationals(std::int64_t bound = 1000) {
    return Field{Kind::kRational, 0, bound};
  }
};

// A placement p: V -> F^d, stored vertex-major (d coordinates per vertex).
class Realization {
 public:
  Realization(int dimension, Field field, std::vector<std::int64_t> coords);

  int dimension() const { return dimension_; }
  int vertex_count() const { return static_cast<int>(coords_.size()) / dimension_; }
  const Field& field() const { return field_; }
  std::span<const std::int64_t> coords() const { return coords_; }
  std::span<const std::int64_t> point(Vertex v) const;

  // Integer coordinates reinterpreted as residues mod p.
  Realization reduced_mod(std::uint64_t p) const;

 private:
  int dimension_;
  Field field_;
  std::vector<std::int64_t> coords_;
};

Realization random_realization(const Graph& g, int d, std::uint64_t seed,
                               const Field& field = Field::prime_field());

// |E| x d|V| matrix, row-major. In prime mode entries are residues in [0, p).
struct RigidityMatrix {
  int rows = 0;
  int cols = 0;
  Field field;
  std::vector<std::int64_t> entries;

  std::int64_t at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                   static_cast<std::size_t>(c)];
  }
};

RigidityMatrix rigidity_matrix(const Graph& g, const Realization& r);

int matrix_rank(const RigidityMatrix& m);
// Rank of the submatrix made of the listed rows.
int matrix_rank(const RigidityMatrix& m, std::span<const int> row_subset);

// Basis of {lambda : lambda^T M = 0} over the prime field of m.
std::vector<std::vector<std::uint64_t>> left_nullspace(const RigidityMatrix& m);

enum class Tri { kFalse, kTrue, kUnresolved };

std::string to_string(Tri t);

enum class CertificateKind {
  kDeterministicIndependent,
  kDeterministicDependentByCount,
  kDeterministicDependentByCut,
  kMonteCarlo,
};

std::string to_string(CertificateKind k);

// A vertex separator of size at most d-1 together with the rank bound it
// implies. Gluing two sides along a set of at most d-1 vertices can never be
// rigid; adding the complete graph on the separator to both sides and using
// submodularity gives an explicit upper bound on r_d.
struct CutWitness {
  std::vector<Vertex> separator;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  int rank_bound = 0;
};

struct MatroidFlags {
  Tri independent = Tri::kUnresolved;
  Tri rigid = Tri::kUnresolved;
  Tri circuit = Tri::kUnresolved;
  Tri flexible_circuit = Tri::kUnresolved;
};

struct MatroidVerdict {
  int d = 0;
  int vertices = 0;
  int edges = 0;
  // Best observed rank: a proven lower bound on the generic rank.
  int rank_lb = 0;
  // min(|E|, d|V| - C(d+1,2)) when |V| >= d+2, else |E|.
  int count_ub = 0;
  int trials = 0;
  std::vector<std::uint64_t> field_primes;
  // Certificate for the independence / dependence status of the edge set.
  CertificateKind certificate = CertificateKind::kMonteCarlo;
  // log2 of the largest Monte Carlo failure probability any flag relies on;
  // -infinity when every flag is deterministic.
  double failure_bound_log2 = 0.0;
  // log2 of (d|V| / p)^trials for the rank claim itself.
  double rank_failure_bound_log2 = 0.0;
  double threshold_log2 = -80.0;
  MatroidFlags flags;
  // Separator certifying that the graph is not rigid, if one exists.
  std::optional<std::vector<Vertex>> flexibility_cut;
  // Separator whose rank bound certifies dependence, if one applies.
  std::optional<CutWitness> dependence_cut;
};

struct AnalysisOptions {
  int trials = 2;
  std::uint64_t seed = 0x7269676964697479ULL;
  double threshold_log2 = -80.0;
  std::uint64_t prime = kDefaultPrime;
};

// Rigid rank d|V| - C(d+1,2) for |V| >= d+2, C(|V|,2) otherwise.
int rigid_rank(int vertices, int d);

// Full analysis: rank lower bound from random specialisations, upper bounds
// from counting and separators, and the four tri-state predicates.
MatroidVerdict analyze(const Graph& g, int d, const AnalysisOptions& options = {});

MatroidVerdict generic_rank(const Graph& g, int d, int trials, std::uint64_t seed);

struct PredicateResult {
  Tri value = Tri::kUnresolved;
  MatroidVerdict verdict;
};

PredicateResult is_independent(const Graph& g, int d, const AnalysisOptions& options = {});
PredicateResult is_rigid(const Graph& g, int d, const AnalysisOptions& options = {});
PredicateResult is_circuit(const Graph& g, int d, const AnalysisOptions& options = {});
PredicateResult is_flexible_circuit(const Graph& g, int d,
                                    const AnalysisOptions& options = {});

// Deterministic proof of dependence from a separator of size <= d-1. For
// d-tight graphs this exists exactly when such a separator exists.
std::optional<CutWitness> dependent_by_cut(const Graph& g, int d);

struct SparsityReport {
  bool sparse = true;
  bool tight = false;
  // Vertex set with the largest excess |E'| - (d|V'| - C(d+1,2)) when not
  // sparse.
  std::vector<Vertex> violator;
  int excess = 0;
};

SparsityReport is_d_sparse(const Graph& g, int d);

}  // namespace rigikit
