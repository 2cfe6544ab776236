#pragma once

namespace iafa {

struct FomInputs {
  double energy_nj = 0;   // adder energy estimate
  double steps = 0;       // adder computational steps
  double nmed = 0;        // scenario NMED
  double psnr_avg_db = 0; // mean application PSNR
  // Exact serial 8-bit adder baseline.
  double baseline_steps = 176.0;
  double baseline_energy_nj = 15.26872;
};

/// EDP / ((1 - NMED) * PSNR), with EDP taken as energy in nJ times the raw
/// step count. Lower is better.
double fom1(const FomInputs &inputs);

/// Energy saving * delay saving * PSNR^2, savings relative to the exact
/// baseline. Higher is better.
double fom2(const FomInputs &inputs);

} // namespace iafa
