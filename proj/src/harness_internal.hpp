#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rigikit/harness.hpp"

namespace rigikit::internal {

// Canonical codes of complements of the 2-regular graphs on n vertices, built
// from the partitions of n into parts >= 3.
std::set<std::string> two_regular_complement_codes(int n, int* partition_count);

// Fixed 2-sum identities followed by `random_count` randomized 2-sums of
// circuit pairs and `random_count` with one independent summand.
std::vector<InstanceVerdict> two_sum_instances(std::uint64_t seed, int random_count);

// Expected flexible circuits in dimension d on at most n_max vertices.
std::vector<Graph> expected_flexible_circuits(int d, int n_max);

Status status_of(Tri value, bool expected);

}  // namespace rigikit::internal
