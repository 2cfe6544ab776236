#include "core/error_analysis.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace iafa {

int worker_count() {
  if (const char *env = std::getenv("IAFA_WORKERS")) {
    const int n = std::atoi(env);
    if (n >= 1)
      return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

ErrorReport exhaustive_metrics(const RcaConfig &config) {
  validate_config(config);
  if (config.n > 12)
    throw std::invalid_argument(
        "exhaustive enumeration is limited to n <= 12 (2^(2n) pairs); "
        "sample instead for wider adders");

  // Per-bit lookup table indexed by (a << 2) | (b << 1) | carry, holding
  // 2 * cout + sum.
  std::array<std::uint8_t, 8> approx_lut{};
  for (int i = 0; i < 8; ++i) {
    auto [s, co] = behavioral_cell(config.cell, (i >> 2) & 1, (i >> 1) & 1, i & 1);
    approx_lut[i] = static_cast<std::uint8_t>(2 * co + s);
  }

  const std::uint64_t side = std::uint64_t(1) << config.n;
  const int n = config.n;
  const int m = config.approx_lsbs;

  auto sweep_range = [&](std::uint64_t a_begin, std::uint64_t a_end,
                         std::uint64_t &ed_sum, std::uint64_t &errors) {
    ed_sum = 0;
    errors = 0;
    for (std::uint64_t a = a_begin; a < a_end; ++a) {
      for (std::uint64_t b = 0; b < side; ++b) {
        std::uint64_t out = 0;
        Bit carry = 0;
        for (int i = 0; i < n; ++i) {
          const unsigned ai = (a >> i) & 1;
          const unsigned bi = (b >> i) & 1;
          if (i < m) {
            const std::uint8_t v = approx_lut[(ai << 2) | (bi << 1) | carry];
            out |= std::uint64_t(v & 1) << i;
            carry = v >> 1;
          } else {
            out |= std::uint64_t(ai ^ bi ^ carry) << i;
            carry = static_cast<Bit>((ai & bi) | (ai & carry) | (bi & carry));
          }
        }
        out |= std::uint64_t(carry) << n;
        const std::uint64_t exact = a + b;
        const std::uint64_t ed = out > exact ? out - exact : exact - out;
        ed_sum += ed;
        errors += ed != 0;
      }
    }
  };

  const int workers =
      static_cast<int>(std::min<std::uint64_t>(worker_count(), side));
  std::vector<std::uint64_t> ed_sums(workers, 0);
  std::vector<std::uint64_t> error_counts(workers, 0);
  if (workers <= 1) {
    sweep_range(0, side, ed_sums[0], error_counts[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = side * w / workers;
      const std::uint64_t end = side * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        sweep_range(begin, end, ed_sums[w], error_counts[w]);
      });
    }
    for (std::thread &t : threads)
      t.join();
  }

  ErrorReport report;
  report.sample_count = side * side;
  report.max_output = 2 * (side - 1);
  for (int w = 0; w < workers; ++w) {
    report.total_ed += ed_sums[w];
    report.error_count += error_counts[w];
  }
  report.med = static_cast<double>(report.total_ed) /
               static_cast<double>(report.sample_count);
  report.nmed = report.med / static_cast<double>(report.max_output);
  report.er = static_cast<double>(report.error_count) /
              static_cast<double>(report.sample_count);
  return report;
}

CellErrorMetrics cell_metrics(CellKind kind) {
  return score_table(cell_truth_table(kind));
}

} // namespace iafa
