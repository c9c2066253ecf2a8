#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rigikit/graph.hpp"

namespace rigikit {

// Canonical form of a graph: the relabelling whose upper-triangular adjacency
// bit string, read row by row, is lexicographically greatest over all n!
// relabellings. Because it is a global extremum the code is a complete
// isomorphism invariant.
struct CanonicalLabeling {
  // permutation[v] is the canonical label of vertex v.
  std::vector<Vertex> permutation;
  // Byte 0 is n, then the row-order upper triangle packed MSB first.
  std::string code;
};

CanonicalLabeling canonical_labeling(const Graph& g);
std::string canonical_code(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// Row-order upper triangle of g under its current labels, packed the same way
// as CanonicalLabeling::code.
std::string adjacency_code(const Graph& g);

namespace canon {

// True iff the labelling given by `adj` already attains the canonical
// (greatest) row string. This is the test used by orderly generation.
bool is_canonical(std::span<const std::uint64_t> adj);

}  // namespace canon

}  // namespace rigikit
