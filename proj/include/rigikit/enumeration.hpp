#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rigikit/graph.hpp"

namespace rigikit {

// Constraints for enumerate_constrained. A negative degree_max or edge_max
// means "no bound".
struct SearchSpec {
  int n = 0;
  int degree_min = 0;
  int degree_max = -1;
  int edge_min = 0;
  int edge_max = -1;
  // Keep only d-sparse graphs for this d.
  std::optional<int> d_sparse_filter;
  // Keep only k-connected graphs for this k.
  std::optional<int> connectivity_min;
};

// Deterministic split of the search tree: shard `index` of `count`.
struct Partition {
  int index = 0;
  int count = 1;

  static Partition parse(const std::string& text);  // "i/m"
};

// Return false to stop the enumeration early.
using GraphSink = std::function<bool(const Graph&)>;

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t emitted = 0;
};

// One representative per isomorphism class of k-regular graphs on n vertices.
EnumerationStats enumerate_regular(int n, int k, const GraphSink& sink,
                                   Partition partition = {});
std::vector<Graph> enumerate_regular(int n, int k, Partition partition = {});

// One representative per isomorphism class meeting the spec.
EnumerationStats enumerate_constrained(const SearchSpec& spec, const GraphSink& sink,
                                       Partition partition = {});
std::vector<Graph> enumerate_constrained(const SearchSpec& spec,
                                         Partition partition = {});

}  // namespace rigikit
