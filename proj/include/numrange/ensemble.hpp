#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numrange/matrix.hpp"

namespace numrange {

struct EnsembleConfig {
  std::vector<int> sizes{10, 100};
  int trials = 1000;
  std::uint64_t seed = 1;
  double entry_range = 4.0;  // entries uniform on [-range, range]^2
  int threads = 0;           // 0 = all hardware threads
};

// Mean bound/||T|| ratios over one matrix size.
struct EnsembleRow {
  int size = 0;
  int trials = 0;
  double kittaneh_power = 0;
  double kittaneh_mean = 0;
  double octagon = 0;
};

// Random dense matrix with independent uniform real and imaginary parts
// on [-range, range], in row-major draw order.
ComplexMatrix<double> random_uniform_matrix(int size, std::uint64_t seed,
                                            double range);

// Per-trial seed, stable across trial execution order.
std::uint64_t trial_seed(std::uint64_t seed, int size, int trial);

// Averages the three ratio columns of bound_report over config.trials
// random matrices per size.  Trial k of size m always uses
// trial_seed(seed, m, k), so the result is independent of the thread
// count and bit-reproducible for a fixed seed.
std::vector<EnsembleRow> run_ensemble(const EnsembleConfig& config);

std::string ensemble_json(const std::vector<EnsembleRow>& rows);
std::string ensemble_csv(const std::vector<EnsembleRow>& rows);

}  // namespace numrange
