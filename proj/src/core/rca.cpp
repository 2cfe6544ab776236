#include "core/rca.hpp"

#include <stdexcept>
#include <string>

namespace iafa {

RcaConfig scenario_config(CellKind cell, int scenario) {
  if (scenario < 1 || scenario > 3)
    throw std::invalid_argument("scenario must be 1, 2 or 3");
  return RcaConfig{8, scenario + 2, cell};
}

void validate_config(const RcaConfig &config) {
  if (config.n < 1 || config.n > 63)
    throw std::invalid_argument("adder width must be in 1..63, got " +
                                std::to_string(config.n));
  if (config.approx_lsbs < 0 || config.approx_lsbs > config.n)
    throw std::invalid_argument("approx_lsbs must be in 0..n, got " +
                                std::to_string(config.approx_lsbs));
}

AdderResult rca_add(const RcaConfig &config, std::uint64_t a, std::uint64_t b,
                    Bit carry_in, bool with_traces) {
  validate_config(config);
  const std::uint64_t limit = std::uint64_t(1) << config.n;
  if (a >= limit || b >= limit)
    throw std::invalid_argument("operand does not fit in " +
                                std::to_string(config.n) + " bits");

  AdderResult result;
  Bit carry = carry_in & 1;
  for (int i = 0; i < config.n; ++i) {
    const Bit ai = (a >> i) & 1;
    const Bit bi = (b >> i) & 1;
    Bit sum;
    if (i < config.approx_lsbs) {
      if (with_traces && config.cell != CellKind::Exact) {
        ExecutionTrace trace =
            run_program(cell_program(config.cell), ai, bi, carry);
        sum = trace.sum;
        carry = trace.cout;
        result.cell_traces.push_back(std::move(trace));
      } else {
        auto [s, co] = behavioral_cell(config.cell, ai, bi, carry);
        sum = s;
        carry = co;
      }
    } else {
      sum = ai ^ bi ^ carry;
      carry = static_cast<Bit>((ai & bi) | (ai & carry) | (bi & carry));
    }
    result.sum |= std::uint64_t(sum) << i;
  }
  result.sum |= std::uint64_t(carry) << config.n;
  return result;
}

int step_count(const RcaConfig &config) {
  validate_config(config);
  const int approx_cells = config.approx_lsbs;
  const int exact_cells = config.n - config.approx_lsbs;
  const int alpha = cell_info(config.cell).steps;
  return alpha * approx_cells + cell_info(CellKind::Exact).steps * exact_cells;
}

int memristor_count(int n) {
  if (n < 1)
    throw std::invalid_argument("adder width must be positive");
  return 2 * n + 3;
}

double energy_estimate_nj(const RcaConfig &config) {
  validate_config(config);
  const int approx_cells = config.approx_lsbs;
  const int exact_cells = config.n - config.approx_lsbs;
  const double beta = cell_info(config.cell).energy_nj;
  return beta * approx_cells +
         cell_info(CellKind::Exact).energy_nj * exact_cells;
}

} // namespace iafa
