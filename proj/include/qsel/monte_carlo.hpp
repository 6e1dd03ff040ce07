#pragma once

#include <cstdint>
#include <vector>

#include "qsel/rng.hpp"
#include "qsel/summary.hpp"

namespace qsel {

// Runs `replications` independent replications of `body`, one derived RNG
// stream each. Slot r depends only on (seed, r), so the result vector is
// identical for any thread count and any schedule.
template <class Body>  // Body: (UniformRng&) -> double
std::vector<double> replicate(std::uint64_t seed, std::uint64_t replications,
                              Body body) {
  std::vector<double> out(replications);
  const std::int64_t n = static_cast<std::int64_t>(replications);
#pragma omp parallel for schedule(dynamic, 512)
  for (std::int64_t r = 0; r < n; ++r) {
    UniformRng rng(derive_stream_seed(seed, static_cast<std::uint64_t>(r)));
    out[static_cast<std::size_t>(r)] = body(rng);
  }
  return out;
}

// Serial reference for the kernel above; kept for testing and benchmarks.
template <class Body>
std::vector<double> replicate_serial(std::uint64_t seed,
                                     std::uint64_t replications, Body body) {
  std::vector<double> out(replications);
  for (std::uint64_t r = 0; r < replications; ++r) {
    UniformRng rng(derive_stream_seed(seed, r));
    out[r] = body(rng);
  }
  return out;
}

// Canonical-order pooling: accumulates in replication-index order, so two
// runs of the same configuration produce bit-identical summaries.
inline SimulationSummary summarize(std::span<const double> samples) {
  return SimulationSummary::from_samples(samples);
}

}  // namespace qsel
