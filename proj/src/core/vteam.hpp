#pragma once

#include <string>
#include <vector>

#include "core/cells.hpp"
#include "core/logic.hpp"

namespace iafa {

/// Threshold-type memristor model parameters plus the drive/read settings
/// of the serial IMPLY row. Defaults are the reference setup: the state
/// variable w runs from w_off = 0 nm (HRS) to w_on = 3 nm (LRS), positive
/// device voltage above v_off grows w (SET), negative voltage below v_on
/// shrinks it (RESET).
struct VteamParams {
  double v_off = 0.7;    // V
  double v_on = -10e-3;  // V
  double alpha_off = 3.0;
  double alpha_on = 3.0;
  double r_off = 1e6;        // ohm
  double r_on = 10e3;        // ohm
  double k_on_nm_s = -0.5;   // nm/s
  double k_off_nm_s = 1e7;   // nm/s (1 cm/s)
  double w_off_nm = 0.0;
  double w_on_nm = 3.0;
  double w_c_nm = 0.107;     // 107 pm
  double a_off_nm = 3.0;
  double a_on_nm = 0.0;
  double v_set = 1.0;    // V
  double v_reset = 1.0;  // V
  double v_cond = 0.9;   // V
  double r_g = 40e3;     // ohm
  double t_pulse_s = 30e-6;

  // Simulator settings (not part of the device setup).
  double dt_s = 10e-9;       // fixed explicit integration step
  double r_read = 300e3;     // R below this reads as logic 1
  double read_guard = 2.0;   // ambiguous when r_read/guard < R < r_read*guard

  double w_min() const { return w_off_nm < w_on_nm ? w_off_nm : w_on_nm; }
  double w_max() const { return w_off_nm < w_on_nm ? w_on_nm : w_off_nm; }
};

/// State-variable velocity in nm/s. Zero between the two thresholds,
/// including at the thresholds themselves.
double vteam_dwdt(const VteamParams &params, double w_nm, double v);

/// Linear resistance map: r_on at w_on, r_off at w_off.
double vteam_resistance(const VteamParams &params, double w_nm);

struct DeviceState {
  double w_nm = 0;
  double energy_j = 0; // accumulated dissipation of this device
};

DeviceState device_from_logic(const VteamParams &params, Bit value);
Bit read_logic(const VteamParams &params, double r_ohm);
bool read_ambiguous(const VteamParams &params, double r_ohm);

/// One IMPLY pulse: v_cond drives p and v_set drives q, both into the
/// common node terminated by r_g. Both devices integrate over t_pulse and
/// accumulate their own v*i energy (r_g dissipation is not charged to the
/// devices).
void imply_gate_transient(const VteamParams &params, DeviceState &p,
                          DeviceState &q);

/// One FALSE pulse: v_reset applied across the device with reverse
/// polarity, driving it to HRS.
void false_transient(const VteamParams &params, DeviceState &device);

struct AnalogSample {
  double t_s;
  std::vector<double> w_nm;
  std::vector<double> r_ohm;
  std::vector<double> v_v;   // device voltage (0 for floating devices)
  std::vector<double> i_a;
  std::vector<double> energy_j; // cumulative per device
};

struct AnalogRunResult {
  std::string program_name;
  std::vector<std::string> registers;
  Bit sum = 0;
  Bit cout = 0;
  bool sum_ambiguous = false;
  bool cout_ambiguous = false;
  double total_energy_j = 0;
  std::vector<double> device_energy_j;
  std::vector<double> final_resistance;
  std::vector<AnalogSample> waveform;

  /// CSV columns: time_s, reg_name, w_nm, r_ohm, v_v, i_a, energy_j.
  std::string to_csv() const;
};

/// Transient simulation of a whole micro-op program; inputs are written as
/// full HRS/LRS states and work registers start at HRS. Waveform samples
/// are kept every `sample_every` integration steps (0 disables recording).
AnalogRunResult run_program_analog(const MicroProgram &program, Bit a, Bit b,
                                   Bit c, const VteamParams &params = {},
                                   int sample_every = 64);

/// Mean transient energy of a cell over the 8 input states, in nJ.
double average_cell_energy_nj(CellKind kind, const VteamParams &params = {});

} // namespace iafa
