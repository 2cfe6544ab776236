#include <doctest.h>

#include <cmath>
#include <string>

#include "core/vteam.hpp"

using namespace iafa;

namespace {

// Independently coded evaluation of the same velocity law, kept separate
// from the implementation on purpose.
double dwdt_oracle(double w, double v) {
  const double v_off = 0.7, v_on = -0.010;
  const double k_off = 1e7, k_on = -0.5;
  const double w_c = 0.107, a_off = 3.0, a_on = 0.0;
  if (v > v_off) {
    const double excitation = (v - v_off) / v_off;
    return k_off * excitation * excitation * excitation *
           std::exp(-std::exp((w - a_off) / w_c));
  }
  if (v < v_on) {
    const double excitation = (v - v_on) / v_on;
    return k_on * excitation * excitation * excitation *
           std::exp(-std::exp((a_on - w) / w_c));
  }
  return 0.0;
}

} // namespace

TEST_CASE("velocity is zero between and at the thresholds") {
  const VteamParams params;
  CHECK(vteam_dwdt(params, 1.5, 0.0) == 0.0);
  CHECK(vteam_dwdt(params, 1.5, params.v_off) == 0.0);
  CHECK(vteam_dwdt(params, 1.5, params.v_on) == 0.0);
  CHECK(vteam_dwdt(params, 1.5, 0.5) == 0.0);
  CHECK(vteam_dwdt(params, 1.5, -0.009) == 0.0);
}

TEST_CASE("velocity law agrees with an independent evaluation") {
  const VteamParams params;
  for (double w : {0.0, 0.25, 0.5, 1.5, 2.5, 2.9, 3.0})
    for (double v : {-1.0, -0.5, -0.2, -0.02, 0.75, 0.8, 0.9, 1.0}) {
      CAPTURE(w);
      CAPTURE(v);
      CHECK(vteam_dwdt(params, w, v) ==
            doctest::Approx(dwdt_oracle(w, v)).epsilon(1e-12));
    }
  // Spot values, cross-checked against a second offline evaluation.
  CHECK(vteam_dwdt(params, 3.0, 1.0) == doctest::Approx(289584.4).epsilon(1e-6));
  CHECK(vteam_dwdt(params, 0.0, 1.0) ==
        doctest::Approx(787172.012).epsilon(1e-6));
  CHECK(vteam_dwdt(params, 1.5, 0.9) ==
        doctest::Approx(233235.961).epsilon(1e-6));
  CHECK(vteam_dwdt(params, 3.0, -1.0) ==
        doctest::Approx(-485149.5).epsilon(1e-6));
  CHECK(vteam_dwdt(params, 1.5, -0.2) ==
        doctest::Approx(-3429.4972).epsilon(1e-6));
}

TEST_CASE("resistance map endpoints") {
  const VteamParams params;
  CHECK(vteam_resistance(params, params.w_off_nm) == doctest::Approx(1e6));
  CHECK(vteam_resistance(params, params.w_on_nm) == doctest::Approx(1e4));
  CHECK(vteam_resistance(params, 1.5) == doctest::Approx(505000.0));
}

TEST_CASE("IMPLY transient reproduces the gate truth table") {
  const VteamParams params;
  const int expected_q[2][2] = {{1, 1}, {0, 1}};
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      DeviceState dp = device_from_logic(params, static_cast<Bit>(p));
      DeviceState dq = device_from_logic(params, static_cast<Bit>(q));
      imply_gate_transient(params, dp, dq);
      const double r_p = vteam_resistance(params, dp.w_nm);
      const double r_q = vteam_resistance(params, dq.w_nm);
      CAPTURE(p);
      CAPTURE(q);
      CHECK(read_logic(params, r_q) == expected_q[p][q]);
      CHECK(read_logic(params, r_p) == p); // the conditioned device holds
      CHECK(dp.energy_j >= 0.0);
      CHECK(dq.energy_j >= 0.0);
    }
}

TEST_CASE("only the (0,0) state switches, and never ambiguously") {
  const VteamParams params;
  DeviceState p = device_from_logic(params, 0);
  DeviceState q = device_from_logic(params, 0);
  imply_gate_transient(params, p, q);
  const double r_q = vteam_resistance(params, q.w_nm);
  CHECK(r_q < params.r_read / params.read_guard); // solid logic 1
  // The node balance keeps the written device above the ON resistance.
  CHECK(r_q > params.r_on);
}

TEST_CASE("FALSE transient resets from either state") {
  const VteamParams params;
  DeviceState lrs = device_from_logic(params, 1);
  false_transient(params, lrs);
  CHECK(vteam_resistance(params, lrs.w_nm) ==
        doctest::Approx(params.r_off).epsilon(1e-3));
  DeviceState hrs = device_from_logic(params, 0);
  false_transient(params, hrs);
  CHECK(vteam_resistance(params, hrs.w_nm) == doctest::Approx(params.r_off));
  CHECK(lrs.energy_j > hrs.energy_j); // the transition costs extra energy
}

TEST_CASE("analog program runs match the logic level") {
  const VteamParams params;
  SUBCASE("ICIS1 on 001") {
    const AnalogRunResult run =
        run_program_analog(cell_program(CellKind::Icis1), 0, 0, 1, params, 0);
    CHECK(run.sum == 0);
    CHECK(run.cout == 1);
    CHECK_FALSE(run.sum_ambiguous);
    CHECK_FALSE(run.cout_ambiguous);
  }
  SUBCASE("ECIS on 000") {
    const AnalogRunResult run =
        run_program_analog(cell_program(CellKind::Ecis), 0, 0, 0, params, 0);
    CHECK(run.sum == 1);
    CHECK(run.cout == 0);
  }
  SUBCASE("ICIS1 full input space") {
    const MicroProgram program = cell_program(CellKind::Icis1);
    for (int i = 0; i < 8; ++i) {
      const Bit a = (i >> 2) & 1, b = (i >> 1) & 1, c = i & 1;
      const AnalogRunResult analog =
          run_program_analog(program, a, b, c, params, 0);
      const ExecutionTrace logic = run_program(program, a, b, c);
      CAPTURE(i);
      CHECK(analog.sum == logic.sum);
      CHECK(analog.cout == logic.cout);
    }
  }
}

TEST_CASE("energy bookkeeping") {
  const VteamParams params;
  const AnalogRunResult run =
      run_program_analog(cell_program(CellKind::Icis2), 1, 0, 1, params, 0);
  double device_total = 0;
  for (double e : run.device_energy_j) {
    CHECK(e >= 0.0);
    device_total += e;
  }
  CHECK(run.total_energy_j == doctest::Approx(device_total));
  CHECK(run.total_energy_j > 0.0);
}

TEST_CASE("halving the integration step moves resistances by less than 1%") {
  VteamParams coarse;
  VteamParams fine;
  fine.dt_s = coarse.dt_s / 2;
  const MicroProgram program = cell_program(CellKind::Icis1);
  for (int i : {1, 6}) {
    const AnalogRunResult a =
        run_program_analog(program, (i >> 2) & 1, (i >> 1) & 1, i & 1, coarse, 0);
    const AnalogRunResult b =
        run_program_analog(program, (i >> 2) & 1, (i >> 1) & 1, i & 1, fine, 0);
    for (std::size_t reg = 0; reg < a.final_resistance.size(); ++reg) {
      const double rel = std::fabs(a.final_resistance[reg] -
                                   b.final_resistance[reg]) /
                         b.final_resistance[reg];
      CHECK(rel < 0.01);
    }
  }
}

TEST_CASE("waveform CSV") {
  const VteamParams params;
  const AnalogRunResult run =
      run_program_analog(cell_program(CellKind::Icis1), 0, 1, 0, params, 512);
  const std::string csv = run.to_csv();
  CHECK(csv.rfind("time_s,reg_name,w_nm,r_ohm,v_v,i_a,energy_j\n", 0) == 0);
  CHECK(csv.find("A_in") != std::string::npos);
  CHECK(csv.find("S1") != std::string::npos);
  CHECK_FALSE(run.waveform.empty());
}

TEST_CASE("average cell energy is positive and ICIS-symmetric") {
  const VteamParams params;
  const double e1 = average_cell_energy_nj(CellKind::Icis1, params);
  const double e2 = average_cell_energy_nj(CellKind::Icis2, params);
  CHECK(e1 > 0.1);
  CHECK(e1 == doctest::Approx(e2).epsilon(1e-6)); // same program up to renaming
}
