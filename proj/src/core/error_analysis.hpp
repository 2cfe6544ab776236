#pragma once

#include <cstdint>

#include "core/designer.hpp"
#include "core/rca.hpp"

namespace iafa {

struct ErrorReport {
  double er = 0;   // fraction of operand pairs with any output error
  double med = 0;  // mean |approx - exact| over the operand space
  double nmed = 0; // med / max_output
  std::uint64_t max_output = 0;   // 2 * (2^n - 1), the exact adder maximum
  std::uint64_t sample_count = 0; // 2^(2n) operand pairs
  std::uint64_t total_ed = 0;     // exact integer sum of EDs
  std::uint64_t error_count = 0;
};

/// Enumerates all 2^(2n) operand pairs with carry-in 0 and accumulates the
/// error distances with exact integer sums. Partitioned across
/// IAFA_WORKERS threads (order-independent). Refuses n > 12.
ErrorReport exhaustive_metrics(const RcaConfig &config);

/// Single-cell metrics of the cell's transcribed truth table.
CellErrorMetrics cell_metrics(CellKind kind);

/// Worker count from the IAFA_WORKERS environment variable (>=1), falling
/// back to the hardware concurrency.
int worker_count();

} // namespace iafa
