#include "core/vteam.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace iafa {

double vteam_dwdt(const VteamParams &params, double w_nm, double v) {
  if (v > params.v_off) {
    const double window =
        std::exp(-std::exp((w_nm - params.a_off_nm) / params.w_c_nm));
    return params.k_off_nm_s *
           std::pow(v / params.v_off - 1.0, params.alpha_off) * window;
  }
  if (v < params.v_on) {
    const double window =
        std::exp(-std::exp(-(w_nm - params.a_on_nm) / params.w_c_nm));
    return params.k_on_nm_s * std::pow(v / params.v_on - 1.0, params.alpha_on) *
           window;
  }
  return 0.0;
}

double vteam_resistance(const VteamParams &params, double w_nm) {
  const double t = (w_nm - params.w_off_nm) / (params.w_on_nm - params.w_off_nm);
  return params.r_off + (params.r_on - params.r_off) * t;
}

DeviceState device_from_logic(const VteamParams &params, Bit value) {
  return DeviceState{(value & 1) ? params.w_on_nm : params.w_off_nm, 0.0};
}

Bit read_logic(const VteamParams &params, double r_ohm) {
  return r_ohm < params.r_read ? 1 : 0;
}

bool read_ambiguous(const VteamParams &params, double r_ohm) {
  return r_ohm > params.r_read / params.read_guard &&
         r_ohm < params.r_read * params.read_guard;
}

namespace {

double clamp_w(const VteamParams &params, double w) {
  if (w < params.w_min())
    return params.w_min();
  if (w > params.w_max())
    return params.w_max();
  return w;
}

struct StepVoltages {
  double v_p = 0;
  double v_q = 0;
};

// One integration substep of an IMPLY pulse; returns the device voltages
// used (for waveform recording).
StepVoltages imply_substep(const VteamParams &params, DeviceState &p,
                           DeviceState &q, double dt) {
  const double g_p = 1.0 / vteam_resistance(params, p.w_nm);
  const double g_q = 1.0 / vteam_resistance(params, q.w_nm);
  const double g_g = 1.0 / params.r_g;
  const double v_node =
      (params.v_cond * g_p + params.v_set * g_q) / (g_p + g_q + g_g);
  const double v_p = params.v_cond - v_node;
  const double v_q = params.v_set - v_node;
  p.energy_j += v_p * v_p * g_p * dt;
  q.energy_j += v_q * v_q * g_q * dt;
  p.w_nm = clamp_w(params, p.w_nm + vteam_dwdt(params, p.w_nm, v_p) * dt);
  q.w_nm = clamp_w(params, q.w_nm + vteam_dwdt(params, q.w_nm, v_q) * dt);
  return {v_p, v_q};
}

double false_substep(const VteamParams &params, DeviceState &device,
                     double dt) {
  const double v = -params.v_reset;
  device.energy_j += v * v / vteam_resistance(params, device.w_nm) * dt;
  device.w_nm =
      clamp_w(params, device.w_nm + vteam_dwdt(params, device.w_nm, v) * dt);
  return v;
}

long substeps_per_pulse(const VteamParams &params) {
  const long n = std::lround(params.t_pulse_s / params.dt_s);
  if (n < 1)
    throw std::invalid_argument("integration step exceeds the pulse width");
  return n;
}

} // namespace

void imply_gate_transient(const VteamParams &params, DeviceState &p,
                          DeviceState &q) {
  const long n = substeps_per_pulse(params);
  for (long i = 0; i < n; ++i)
    imply_substep(params, p, q, params.dt_s);
}

void false_transient(const VteamParams &params, DeviceState &device) {
  const long n = substeps_per_pulse(params);
  for (long i = 0; i < n; ++i)
    false_substep(params, device, params.dt_s);
}

std::string AnalogRunResult::to_csv() const {
  std::ostringstream out;
  out << "time_s,reg_name,w_nm,r_ohm,v_v,i_a,energy_j\n";
  char buf[160];
  for (const AnalogSample &sample : waveform) {
    for (std::size_t reg = 0; reg < registers.size(); ++reg) {
      std::snprintf(buf, sizeof(buf), "%.9g,%s,%.9g,%.9g,%.9g,%.9g,%.9g\n",
                    sample.t_s, registers[reg].c_str(), sample.w_nm[reg],
                    sample.r_ohm[reg], sample.v_v[reg], sample.i_a[reg],
                    sample.energy_j[reg]);
      out << buf;
    }
  }
  return out.str();
}

AnalogRunResult run_program_analog(const MicroProgram &program, Bit a, Bit b,
                                   Bit c, const VteamParams &params,
                                   int sample_every) {
  ValidationReport validation = validate_program(program);
  if (!validation.valid)
    throw std::invalid_argument("program '" + program.name +
                                "' failed validation");

  const std::size_t nregs = program.registers.size();
  std::vector<DeviceState> devices(nregs);
  for (std::size_t i = 0; i < nregs; ++i)
    devices[i] = device_from_logic(params, 0);
  devices[program.input_a] = device_from_logic(params, a);
  devices[program.input_b] = device_from_logic(params, b);
  devices[program.input_c] = device_from_logic(params, c);

  AnalogRunResult result;
  result.program_name = program.name;
  result.registers = program.registers;

  const long substeps = substeps_per_pulse(params);
  double t = 0.0;

  auto record = [&](int active_p, int active_q, double v_p, double v_q) {
    AnalogSample sample;
    sample.t_s = t;
    sample.w_nm.resize(nregs);
    sample.r_ohm.resize(nregs);
    sample.v_v.assign(nregs, 0.0);
    sample.i_a.assign(nregs, 0.0);
    sample.energy_j.resize(nregs);
    for (std::size_t i = 0; i < nregs; ++i) {
      sample.w_nm[i] = devices[i].w_nm;
      sample.r_ohm[i] = vteam_resistance(params, devices[i].w_nm);
      sample.energy_j[i] = devices[i].energy_j;
    }
    if (active_p >= 0) {
      sample.v_v[active_p] = v_p;
      sample.i_a[active_p] = v_p / sample.r_ohm[active_p];
    }
    if (active_q >= 0) {
      sample.v_v[active_q] = v_q;
      sample.i_a[active_q] = v_q / sample.r_ohm[active_q];
    }
    result.waveform.push_back(std::move(sample));
  };

  if (sample_every > 0)
    record(-1, -1, 0.0, 0.0);

  for (const MicroOp &op : program.ops) {
    for (long i = 0; i < substeps; ++i) {
      double v_p = 0.0, v_q = 0.0;
      if (op.kind == OpKind::False) {
        v_q = false_substep(params, devices[op.target], params.dt_s);
      } else {
        StepVoltages v =
            imply_substep(params, devices[op.source], devices[op.target],
                          params.dt_s);
        v_p = v.v_p;
        v_q = v.v_q;
      }
      t += params.dt_s;
      if (sample_every > 0 &&
          ((i + 1) % sample_every == 0 || i + 1 == substeps))
        record(op.kind == OpKind::Imply ? op.source : -1, op.target, v_p, v_q);
    }
  }

  result.device_energy_j.resize(nregs);
  result.final_resistance.resize(nregs);
  for (std::size_t i = 0; i < nregs; ++i) {
    result.device_energy_j[i] = devices[i].energy_j;
    result.final_resistance[i] = vteam_resistance(params, devices[i].w_nm);
    result.total_energy_j += devices[i].energy_j;
  }
  result.sum = read_logic(params, result.final_resistance[program.output_sum]);
  result.cout =
      read_logic(params, result.final_resistance[program.output_cout]);
  result.sum_ambiguous =
      read_ambiguous(params, result.final_resistance[program.output_sum]);
  result.cout_ambiguous =
      read_ambiguous(params, result.final_resistance[program.output_cout]);
  return result;
}

double average_cell_energy_nj(CellKind kind, const VteamParams &params) {
  const MicroProgram program = cell_program(kind);
  double total = 0.0;
  for (int i = 0; i < 8; ++i) {
    AnalogRunResult run = run_program_analog(
        program, (i >> 2) & 1, (i >> 1) & 1, i & 1, params, /*sample_every=*/0);
    total += run.total_energy_j;
  }
  return total / 8.0 * 1e9;
}

} // namespace iafa
