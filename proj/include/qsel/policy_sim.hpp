#pragma once

#include <cstdint>
#include <vector>

#include "qsel/monte_carlo.hpp"
#include "qsel/rng.hpp"
#include "qsel/summary.hpp"
#include "qsel/tables.hpp"

namespace qsel {

enum class Mode { kStream, kShortcut };

struct StreamConfig {
  std::uint64_t seed = 42;
  std::uint64_t replications = 1;
  Mode mode = Mode::kShortcut;
};

// Walk state of the threshold policy: k selections made, X at the last
// selection, observation clock, and the current acceptance-window length
// lambda = t[n-k] * (1 - last_value).
struct PolicyState {
  int selections = 0;
  double last_value = 0.0;
  std::uint64_t time = 0;
  double lambda = 0.0;
};

// Opt-in per-replication record of selection times and selected values.
struct PolicyTrace {
  std::vector<std::uint64_t> times;
  std::vector<double> values;
};

// Per-replication safety cap; hitting it means the table or indexing is
// broken, not that the policy is slow.
inline constexpr std::uint64_t kObservationCap = 1'000'000'000ULL;

// Direct policy execution: draws uniforms one at a time, accepts X when it
// lands inside [last, last + t[n-k](1-last)], returns the index of the n-th
// acceptance. O(1) memory, expected time beta(n) draws.
std::uint64_t simulate_stream(int n, const BetaThresholdTable& table,
                              UniformRng& rng, PolicyTrace* trace = nullptr,
                              std::uint64_t observation_cap = kObservationCap);

// Equal-in-distribution sampler that skips the rejected draws: each gap to
// the next acceptance is geometric with success probability
// lambda_k = t[n-k](1-x), and the accepted value is uniform on the window.
// O(n) time per replication independent of beta(n).
std::uint64_t simulate_shortcut(int n, const BetaThresholdTable& table,
                                UniformRng& rng);

// Completion times for cfg.replications independent replications, one
// derived RNG stream each, in replication order. OpenMP-parallel; the result
// is bit-identical for any thread count.
std::vector<double> sample_completion_times(int n,
                                            const BetaThresholdTable& table,
                                            const StreamConfig& cfg);

// Pooled summary of sample_completion_times (canonical merge order).
SimulationSummary monte_carlo(int n, const BetaThresholdTable& table,
                              const StreamConfig& cfg);

// Serial reference for monte_carlo; bit-identical results, kept for tests
// and benchmarks.
SimulationSummary monte_carlo_serial(int n, const BetaThresholdTable& table,
                                     const StreamConfig& cfg);

}  // namespace qsel
