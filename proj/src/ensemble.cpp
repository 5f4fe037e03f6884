#include "numrange/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "numrange/bounds.hpp"
#include "numrange/matrix_io.hpp"
#include "numrange/rng.hpp"

namespace numrange {

ComplexMatrix<double> random_uniform_matrix(int size, std::uint64_t seed,
                                            double range) {
  Rng rng(seed);
  ComplexMatrix<double> m(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      double re = rng.uniform(-range, range);
      double im = rng.uniform(-range, range);
      m(i, j) = {re, im};
    }
  }
  return m;
}

std::uint64_t trial_seed(std::uint64_t seed, int size, int trial) {
  return mix_seed(mix_seed(seed, static_cast<std::uint64_t>(size)),
                  static_cast<std::uint64_t>(trial));
}

namespace {

struct TrialRatios {
  double power = 0, mean = 0, octagon = 0;
};

}  // namespace

std::vector<EnsembleRow> run_ensemble(const EnsembleConfig& config) {
  if (config.trials < 1) throw Error("run_ensemble: trials must be positive");
  for (int m : config.sizes) {
    if (m < 1) throw Error("run_ensemble: sizes must be positive");
  }
  int threads = config.threads;
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
  }
  threads = std::clamp(threads, 1, config.trials);

  std::vector<EnsembleRow> rows;
  for (int m : config.sizes) {
    // Every trial writes its own slot; the reduction below runs in index
    // order, so sums do not depend on how trials were scheduled.
    std::vector<TrialRatios> slots(static_cast<std::size_t>(config.trials));
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (int k = next.fetch_add(1); k < config.trials; k = next.fetch_add(1)) {
        auto t = random_uniform_matrix(m, trial_seed(config.seed, m, k),
                                       config.entry_range);
        auto report = bound_report(t);
        slots[static_cast<std::size_t>(k)] = {report.ratios.kittaneh_power,
                                              report.ratios.kittaneh_mean,
                                              report.ratios.octagon};
      }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    EnsembleRow row;
    row.size = m;
    row.trials = config.trials;
    for (const auto& s : slots) {
      row.kittaneh_power += s.power;
      row.kittaneh_mean += s.mean;
      row.octagon += s.octagon;
    }
    row.kittaneh_power /= config.trials;
    row.kittaneh_mean /= config.trials;
    row.octagon /= config.trials;
    rows.push_back(row);
  }
  return rows;
}

std::string ensemble_json(const std::vector<EnsembleRow>& rows) {
  std::ostringstream out;
  out << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const EnsembleRow& r = rows[i];
    out << "  {\"m\": " << r.size << ", \"trials\": " << r.trials
        << ", \"kittaneh_power\": " << io::format_sig12(r.kittaneh_power)
        << ", \"kittaneh_mean\": " << io::format_sig12(r.kittaneh_mean)
        << ", \"corollary\": " << io::format_sig12(r.octagon) << "}"
        << (i + 1 < rows.size() ? ",\n" : "\n");
  }
  out << "]";
  return out.str();
}

std::string ensemble_csv(const std::vector<EnsembleRow>& rows) {
  std::ostringstream out;
  out << "m,trials,kittaneh_power,kittaneh_mean,corollary\n";
  for (const EnsembleRow& r : rows) {
    out << r.size << ',' << r.trials << ',' << io::format_sig12(r.kittaneh_power)
        << ',' << io::format_sig12(r.kittaneh_mean) << ','
        << io::format_sig12(r.octagon) << '\n';
  }
  return out.str();
}

}  // namespace numrange
