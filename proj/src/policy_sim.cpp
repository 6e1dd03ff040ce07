#include "qsel/policy_sim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsel {
namespace {

void check_n(int n, const BetaThresholdTable& table, const char* who) {
  if (n < 1 || n > table.n_max) {
    throw std::out_of_range(std::string(who) + ": n = " + std::to_string(n) +
                            " outside table range 1.." +
                            std::to_string(table.n_max));
  }
}

// Geometric gap with success probability lambda via inverse CDF,
// ceil(log(U)/log(1-lambda)) for U uniform on (0,1).
std::uint64_t geometric_gap(double lambda, UniformRng& rng) {
  if (lambda >= 1.0) return 1;
  const double u = rng.next_unit_open();
  const double g = std::ceil(std::log(u) / std::log1p(-lambda));
  return g < 1.0 ? 1 : static_cast<std::uint64_t>(g);
}

}  // namespace

std::uint64_t simulate_stream(int n, const BetaThresholdTable& table,
                              UniformRng& rng, PolicyTrace* trace,
                              std::uint64_t observation_cap) {
  check_n(n, table, "simulate_stream");
  PolicyState state;
  state.lambda = table.t[static_cast<std::size_t>(n)];
  while (state.selections < n) {
    if (state.time >= observation_cap) {
      throw std::runtime_error(
          "simulate_stream: observation cap hit; table or indexing is broken");
    }
    ++state.time;
    const double x = rng.next_unit();
    // closed interval per the acceptance rule; ties have probability zero
    if (x >= state.last_value && x <= state.last_value + state.lambda) {
      state.last_value = x;
      ++state.selections;
      if (trace != nullptr) {
        trace->times.push_back(state.time);
        trace->values.push_back(x);
      }
      if (state.selections < n) {
        state.lambda = table.t[static_cast<std::size_t>(n - state.selections)] *
                       (1.0 - state.last_value);
      }
    }
  }
  return state.time;
}

std::uint64_t simulate_shortcut(int n, const BetaThresholdTable& table,
                                UniformRng& rng) {
  check_n(n, table, "simulate_shortcut");
  double last = 0.0;
  std::uint64_t total = 0;
  for (int k = 0; k < n; ++k) {
    const double lambda = table.t[static_cast<std::size_t>(n - k)] * (1.0 - last);
    if (!(lambda > 0.0)) {
      throw std::runtime_error(
          "simulate_shortcut: degenerate acceptance window; corrupted table");
    }
    total += geometric_gap(lambda, rng);
    last += rng.next_unit() * lambda;
  }
  return total;
}

std::vector<double> sample_completion_times(int n,
                                            const BetaThresholdTable& table,
                                            const StreamConfig& cfg) {
  check_n(n, table, "sample_completion_times");
  if (cfg.replications < 1) {
    throw std::invalid_argument("sample_completion_times: replications must be >= 1");
  }
  const Mode mode = cfg.mode;
  return replicate(cfg.seed, cfg.replications, [&](UniformRng& rng) {
    return mode == Mode::kStream
               ? static_cast<double>(simulate_stream(n, table, rng))
               : static_cast<double>(simulate_shortcut(n, table, rng));
  });
}

SimulationSummary monte_carlo(int n, const BetaThresholdTable& table,
                              const StreamConfig& cfg) {
  const std::vector<double> samples = sample_completion_times(n, table, cfg);
  return summarize(samples);
}

SimulationSummary monte_carlo_serial(int n, const BetaThresholdTable& table,
                                     const StreamConfig& cfg) {
  check_n(n, table, "monte_carlo_serial");
  if (cfg.replications < 1) {
    throw std::invalid_argument("monte_carlo_serial: replications must be >= 1");
  }
  const Mode mode = cfg.mode;
  const std::vector<double> samples =
      replicate_serial(cfg.seed, cfg.replications, [&](UniformRng& rng) {
        return mode == Mode::kStream
                   ? static_cast<double>(simulate_stream(n, table, rng))
                   : static_cast<double>(simulate_shortcut(n, table, rng));
      });
  return summarize(samples);
}

}  // namespace qsel
