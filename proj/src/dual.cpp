#include "qsel/dual.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qsel/monte_carlo.hpp"

namespace qsel {
namespace {

// Shared acceptance predicate of the threshold policy, on rescaled values.
bool window_accepts(double last, double window, double y) {
  return y >= last && y <= last + window;
}

std::uint64_t blocking_replication(const BlockingConfig& cfg,
                                   const BetaThresholdTable& table,
                                   UniformRng& rng) {
  const double block_width = 1.0 / static_cast<double>(cfg.m);
  std::uint64_t total = 0;
  for (int block = 0; block < cfg.m; ++block) {
    const double lo = static_cast<double>(block) * block_width;
    double last = 0.0;  // state rescaled to [0,1] within the block
    int selections = 0;
    while (selections < cfg.n) {
      if (total >= kObservationCap) {
        throw std::runtime_error(
            "simulate_blocking: observation cap hit; table or indexing is broken");
      }
      ++total;
      const double x = rng.next_unit();
      if (x < lo || x >= lo + block_width) continue;  // infeasible for this block
      const double y = (x - lo) * static_cast<double>(cfg.m);
      const double window =
          table.t[static_cast<std::size_t>(cfg.n - selections)] * (1.0 - last);
      if (window_accepts(last, window, y)) {
        last = y;
        ++selections;
      }
    }
  }
  return total;
}

}  // namespace

SimulationSummary simulate_blocking(const BlockingConfig& cfg,
                                    const BetaThresholdTable& table) {
  if (cfg.m < 1 || cfg.n < 1) {
    throw std::invalid_argument("simulate_blocking: m and n must be >= 1");
  }
  if (cfg.n > table.n_max) {
    throw std::out_of_range("simulate_blocking: n exceeds table n_max");
  }
  if (cfg.replications < 1) {
    throw std::invalid_argument("simulate_blocking: replications must be >= 1");
  }
  const std::vector<double> samples =
      replicate(cfg.seed, cfg.replications, [&](UniformRng& rng) {
        return static_cast<double>(blocking_replication(cfg, table, rng));
      });
  return summarize(samples);
}

namespace {

void check_dp_args(int horizon, int grid_size) {
  if (horizon < 1) {
    throw std::invalid_argument("size_focused_dp: horizon must be >= 1");
  }
  if (grid_size < 2) {
    throw std::invalid_argument("size_focused_dp: grid_size must be >= 2");
  }
}

SizeFocusedValueGrid make_grid(int horizon, int grid_size) {
  SizeFocusedValueGrid grid;
  grid.grid_size = grid_size;
  grid.horizon = horizon;
  grid.values.assign(static_cast<std::size_t>(horizon) + 1,
                     std::vector<double>(static_cast<std::size_t>(grid_size), 0.0));
  grid.ell.assign(static_cast<std::size_t>(horizon) + 1, 0.0);
  return grid;
}

}  // namespace

SizeFocusedValueGrid size_focused_dp(int horizon, int grid_size) {
  check_dp_args(horizon, grid_size);
  SizeFocusedValueGrid grid = make_grid(horizon, grid_size);
  const int g = grid_size;
  const double h = 1.0 / static_cast<double>(g - 1);

  std::vector<double> accept(static_cast<std::size_t>(g));  // 1 + u_{i-1}
  std::vector<double> suffix(static_cast<std::size_t>(g));  // trapezoid of accept on [y_k, 1]
  for (int i = 1; i <= horizon; ++i) {
    const std::vector<double>& prev = grid.values[static_cast<std::size_t>(i - 1)];
    std::vector<double>& cur = grid.values[static_cast<std::size_t>(i)];
    for (int k = 0; k < g; ++k) {
      accept[static_cast<std::size_t>(k)] = 1.0 + prev[static_cast<std::size_t>(k)];
    }
    suffix[static_cast<std::size_t>(g - 1)] = 0.0;
    for (int k = g - 2; k >= 0; --k) {
      suffix[static_cast<std::size_t>(k)] =
          suffix[static_cast<std::size_t>(k + 1)] +
          0.5 * h * (accept[static_cast<std::size_t>(k)] +
                     accept[static_cast<std::size_t>(k + 1)]);
    }

    // Accepting dominates while 1 + u_{i-1}(y) >= u_{i-1}(x_j); `accept` is
    // nonincreasing, so the crossover index is found by binary search and the
    // trapezoid sum splits into a suffix-integral part and a constant tail.
#pragma omp parallel for schedule(static)
    for (int j = 0; j < g; ++j) {
      const double reject = prev[static_cast<std::size_t>(j)];
      double integral;
      if (j == g - 1) {
        integral = 0.0;
      } else {
        // first index > j whose accept value falls below `reject`; never j
        // itself because 1 + u >= u
        const auto begin = accept.begin() + j + 1;
        const auto cross = std::partition_point(
            begin, accept.end(), [reject](double a) { return a >= reject; });
        const int kc = static_cast<int>(cross - accept.begin());
        if (kc >= g) {
          integral = suffix[static_cast<std::size_t>(j)];
        } else {
          integral = suffix[static_cast<std::size_t>(j)] -
                     suffix[static_cast<std::size_t>(kc - 1)] +
                     0.5 * h * (accept[static_cast<std::size_t>(kc - 1)] + reject) +
                     h * static_cast<double>(g - 1 - kc) * reject;
        }
      }
      cur[static_cast<std::size_t>(j)] =
          static_cast<double>(j) * h * reject + integral;
    }
    grid.ell[static_cast<std::size_t>(i)] = cur[0];
  }
  return grid;
}

SizeFocusedValueGrid size_focused_dp_serial(int horizon, int grid_size) {
  check_dp_args(horizon, grid_size);
  SizeFocusedValueGrid grid = make_grid(horizon, grid_size);
  const int g = grid_size;
  const double h = 1.0 / static_cast<double>(g - 1);

  for (int i = 1; i <= horizon; ++i) {
    const std::vector<double>& prev = grid.values[static_cast<std::size_t>(i - 1)];
    std::vector<double>& cur = grid.values[static_cast<std::size_t>(i)];
    for (int j = 0; j < g; ++j) {
      const double reject = prev[static_cast<std::size_t>(j)];
      double integral = 0.0;
      for (int k = j; k + 1 < g; ++k) {
        const double fk = std::max(1.0 + prev[static_cast<std::size_t>(k)], reject);
        const double fk1 = std::max(1.0 + prev[static_cast<std::size_t>(k + 1)], reject);
        integral += 0.5 * h * (fk + fk1);
      }
      cur[static_cast<std::size_t>(j)] =
          static_cast<double>(j) * h * reject + integral;
    }
    grid.ell[static_cast<std::size_t>(i)] = cur[0];
  }
  return grid;
}

SimulationSummary simulate_size_focused(int horizon,
                                        const SizeFocusedValueGrid& grid,
                                        const StreamConfig& cfg) {
  if (horizon < 1 || horizon > grid.horizon) {
    throw std::out_of_range("simulate_size_focused: horizon outside grid range");
  }
  if (cfg.replications < 1) {
    throw std::invalid_argument("simulate_size_focused: replications must be >= 1");
  }
  const int g = grid.grid_size;
  const auto nearest = [g](double x) {
    return static_cast<std::size_t>(
        std::lround(x * static_cast<double>(g - 1)));
  };
  const std::vector<double> samples =
      replicate(cfg.seed, cfg.replications, [&](UniformRng& rng) {
        double last = 0.0;
        int selected = 0;
        for (int remaining = horizon; remaining >= 1; --remaining) {
          const double y = rng.next_unit();
          if (y <= last) continue;  // strict increase required
          const std::vector<double>& u =
              grid.values[static_cast<std::size_t>(remaining - 1)];
          if (1.0 + u[nearest(y)] >= u[nearest(last)]) {
            last = y;
            ++selected;
          }
        }
        return static_cast<double>(selected);
      });
  return summarize(samples);
}

double chebyshev_lower_bound(int n, const BetaThresholdTable& table) {
  double best = 0.0;
  for (int r = 1; r <= table.n_max; ++r) {
    const double beta_r = table.beta[static_cast<std::size_t>(r)];
    if (!(beta_r < static_cast<double>(n))) break;  // beta is increasing
    const double slack = static_cast<double>(n) - beta_r;
    const double bound = static_cast<double>(r) *
                         (1.0 - table.v[static_cast<std::size_t>(r)] / (slack * slack));
    best = std::max(best, bound);
  }
  return best;
}

bool check_blocking_inequality(int m, int n, const BetaThresholdTable& table) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("check_blocking_inequality: m and n must be >= 1");
  }
  if (m > table.n_max || n > table.n_max || m * n > table.n_max) {
    throw std::out_of_range("check_blocking_inequality: m*n exceeds table n_max");
  }
  const double lhs = table.beta[static_cast<std::size_t>(m * n)];
  const double rhs =
      std::min(static_cast<double>(m) * static_cast<double>(m) *
                   table.beta[static_cast<std::size_t>(n)],
               static_cast<double>(n) * static_cast<double>(n) *
                   table.beta[static_cast<std::size_t>(m)]);
  return lhs <= rhs * (1.0 + 1e-9);
}

}  // namespace qsel
