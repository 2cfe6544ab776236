#pragma once

#include <cstdint>
#include <vector>

#include "core/cells.hpp"
#include "core/logic.hpp"

namespace iafa {

/// n-bit ripple-carry adder with approximate cells in the least significant
/// positions and behavioural exact cells above them. Scenarios 1/2/3 of the
/// 8-bit evaluation structure correspond to approx_lsbs = 3/4/5.
struct RcaConfig {
  int n = 8;
  int approx_lsbs = 0;
  CellKind cell = CellKind::Ecis;
};

/// Config for one of the three 8-bit evaluation scenarios (1, 2 or 3).
RcaConfig scenario_config(CellKind cell, int scenario);

struct AdderResult {
  std::uint64_t sum = 0; // (n+1)-bit value, carry-out in bit n
  /// Micro-op traces of the approximate LSB cells, when requested. The
  /// exact MSB cells are behavioural and leave no trace.
  std::vector<ExecutionTrace> cell_traces;
};

AdderResult rca_add(const RcaConfig &config, std::uint64_t a, std::uint64_t b,
                    Bit carry_in, bool with_traces = false);

/// Total computational steps of the serial n-bit adder.
int step_count(const RcaConfig &config);

/// Memristors of the serial n-bit adder row: 2n + 3.
int memristor_count(int n);

/// Energy estimate in nJ from the per-cell reference energies.
double energy_estimate_nj(const RcaConfig &config);

void validate_config(const RcaConfig &config); // throws std::invalid_argument

} // namespace iafa
