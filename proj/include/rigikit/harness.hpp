#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigikit/enumeration.hpp"
#include "rigikit/graph.hpp"
#include "rigikit/rigidity.hpp"

namespace rigikit {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 0x7269676964697479ULL;

enum class Status { kPass, kFail, kUnresolved };

std::string to_string(Status s);
// Fail dominates unresolved, which dominates pass.
Status combine(Status a, Status b);

struct InstanceVerdict {
  std::string label;
  std::string graph6;  // empty for instances that are not a single graph
  Status status = Status::kPass;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
};

struct VerificationReport {
  std::string claim;
  Status status = Status::kPass;
  std::vector<InstanceVerdict> instances;
  // Graphs produced by the claim (classification output), as graph6.
  std::vector<std::string> graphs;
  double wall_time_seconds = 0.0;
  std::uint64_t seed = kDefaultSeed;
  std::string version = kVersion;

  void add(InstanceVerdict v);
};

// Timing is left out when include_timing is false so reports can be compared
// byte for byte.
nlohmann::json to_json(const VerificationReport& report, bool include_timing = true);
nlohmann::json verdict_to_json(const Graph& g, const MatroidVerdict& v);

enum class RegularPart { kSixRegularTen, kTwelveRegularFifteen };

// Optional hook applied to every enumerated graph before it is checked.
using Mutation = std::function<Graph(int index, const Graph& g)>;

// Enumerates the regular family, checks the class count and that every
// member is d-sparse with a deterministic independence certificate.
VerificationReport verify_regular(RegularPart part, const Mutation& mutate = {},
                                  std::uint64_t seed = kDefaultSeed);

// B_{d,d-1}, B_{d,d-2}, every B+ member and K_{d+2,d+2} for d = 3..d_max.
VerificationReport verify_families(int d_max, std::uint64_t seed = kDefaultSeed);

struct ClassifyOptions {
  // Required for d = 4.
  bool allow_long_running = false;
  Partition partition;
  std::uint64_t seed = kDefaultSeed;
};

// Exhaustive search for flexible circuits on at most n_max vertices, compared
// against the B families. d = 3 is supported directly; d = 4 needs
// allow_long_running.
VerificationReport classify_flexible_circuits(int d, int n_max,
                                              const ClassifyOptions& options = {});

// |E(B_{d,d-1})| = d(d+9)/2 for d = 3..d_max, and the d = 3 classification
// has no flexible circuit with fewer edges.
VerificationReport verify_edge_bound(int d_max, std::uint64_t seed = kDefaultSeed);

// K_{6,6} at d = 4 and `steps` successive cones, each a flexible circuit.
VerificationReport verify_cone_ladder(int steps = 3, std::uint64_t seed = kDefaultSeed);

// two_sum(K_5, K_5) against B_{3,2} plus randomized 2-sums at d = 3, 4.
VerificationReport verify_two_sums(std::uint64_t seed = kDefaultSeed);

// Every property suite, one instance per suite.
VerificationReport verify_structure_properties(std::uint64_t seed = kDefaultSeed);

// Claim ids accepted by run_claim.
std::vector<std::string> claim_ids();
VerificationReport run_claim(const std::string& claim, std::uint64_t seed = kDefaultSeed);

// Individual property suites, exposed for tests.
struct PropertySuite {
  std::string name;
  std::function<InstanceVerdict(std::uint64_t seed)> run;
};
const std::vector<PropertySuite>& property_suites();

}  // namespace rigikit
