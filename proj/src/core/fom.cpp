#include "core/fom.hpp"

#include <stdexcept>

namespace iafa {

double fom1(const FomInputs &inputs) {
  if (inputs.psnr_avg_db <= 0)
    throw std::invalid_argument("fom1 is undefined for PSNR <= 0");
  if (inputs.nmed < 0 || inputs.nmed >= 1)
    throw std::invalid_argument("NMED must lie in [0, 1)");
  const double edp = inputs.energy_nj * inputs.steps;
  return edp / ((1.0 - inputs.nmed) * inputs.psnr_avg_db);
}

double fom2(const FomInputs &inputs) {
  if (inputs.baseline_steps <= 0 || inputs.baseline_energy_nj <= 0)
    throw std::invalid_argument("fom2 needs positive baselines");
  const double energy_saving =
      (inputs.baseline_energy_nj - inputs.energy_nj) / inputs.baseline_energy_nj;
  const double delay_saving =
      (inputs.baseline_steps - inputs.steps) / inputs.baseline_steps;
  return energy_saving * delay_saving * inputs.psnr_avg_db * inputs.psnr_avg_db;
}

} // namespace iafa
