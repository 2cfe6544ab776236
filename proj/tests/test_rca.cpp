#include <doctest.h>

#include <stdexcept>

#include "core/rca.hpp"
#include "core/reference.hpp"

using namespace iafa;

TEST_CASE("fully exact configuration equals integer addition") {
  const RcaConfig config{8, 0, CellKind::Ecis};
  for (std::uint32_t a = 0; a < 256; ++a)
    for (std::uint32_t b = 0; b < 256; ++b)
      for (Bit cin = 0; cin < 2; ++cin)
        REQUIRE(rca_add(config, a, b, cin).sum == a + b + cin);
}

TEST_CASE("documented additions") {
  SUBCASE("scenario 3 ECIS on zero operands") {
    const AdderResult r = rca_add(scenario_config(CellKind::Ecis, 3), 0, 0, 0);
    CHECK(r.sum == 31); // five approximate sum bits raised, no carries
  }
  SUBCASE("exact MSB slice behaves as an exact adder on the incoming carry") {
    const RcaConfig config = scenario_config(CellKind::Icis1, 1);
    for (std::uint32_t a : {255u, 170u, 7u, 129u})
      for (std::uint32_t b = 0; b < 256; ++b) {
        // Re-derive the carry leaving the 3-bit approximate slice.
        Bit carry = 0;
        for (int i = 0; i < 3; ++i)
          carry = behavioral_cell(CellKind::Icis1, (a >> i) & 1, (b >> i) & 1,
                                  carry)
                      .second;
        const std::uint64_t msb_slice = rca_add(config, a, b, 0).sum >> 3;
        CHECK(msb_slice == (a >> 3) + (b >> 3) + carry);
      }
  }
}

TEST_CASE("ECIS keeps the carry chain exact") {
  for (int scenario = 1; scenario <= 3; ++scenario) {
    const int m = scenario + 2;
    const std::uint32_t mask = (1u << m) - 1;
    for (std::uint32_t a = 0; a < 256; a += 3)
      for (std::uint32_t b = 0; b < 256; ++b) {
        Bit carry = 0;
        for (int i = 0; i < m; ++i)
          carry = behavioral_cell(CellKind::Ecis, (a >> i) & 1, (b >> i) & 1,
                                  carry)
                      .second;
        const std::uint32_t exact_carry = ((a & mask) + (b & mask)) >> m;
        REQUIRE(carry == exact_carry);
      }
  }
}

TEST_CASE("step counts reproduce the published totals") {
  for (const reference::ApproxAdderRow &row : reference::kApproxAdders) {
    if (!row.proposed)
      continue;
    const CellKind kind = cell_from_name(row.name);
    for (int scenario = 1; scenario <= 3; ++scenario)
      CHECK(step_count(scenario_config(kind, scenario)) ==
            row.steps_printed[scenario - 1]);
  }
  CHECK(step_count(RcaConfig{8, 0, CellKind::Icis1}) == 176);
}

TEST_CASE("memristor counts") {
  CHECK(memristor_count(8) == 19);
  CHECK(memristor_count(1) == 5);
  CHECK(memristor_count(16) == 35);
  CHECK_THROWS_AS(memristor_count(0), std::invalid_argument);
}

TEST_CASE("energy estimates") {
  CHECK(energy_estimate_nj(scenario_config(CellKind::Icis1, 3)) ==
        doctest::Approx(8.26122).epsilon(1e-9));
  CHECK(energy_estimate_nj(scenario_config(CellKind::Ecis, 3)) ==
        doctest::Approx(10.85732).epsilon(1e-9));
  CHECK(energy_estimate_nj(RcaConfig{8, 0, CellKind::Icis1}) ==
        doctest::Approx(15.26872).epsilon(1e-9));
}

TEST_CASE("steps and energy shrink as more positions become approximate") {
  for (CellKind kind : kProposedCells) {
    int previous_steps = step_count(RcaConfig{8, 0, kind});
    double previous_energy = energy_estimate_nj(RcaConfig{8, 0, kind});
    for (int m = 1; m <= 8; ++m) {
      const RcaConfig config{8, m, kind};
      CHECK(step_count(config) < previous_steps);
      CHECK(energy_estimate_nj(config) < previous_energy);
      previous_steps = step_count(config);
      previous_energy = energy_estimate_nj(config);
    }
  }
}

TEST_CASE("argument validation") {
  const RcaConfig config{8, 3, CellKind::Icis2};
  CHECK_THROWS_AS(rca_add(config, 256, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(rca_add(config, 0, 1u << 20, 0), std::invalid_argument);
  CHECK_THROWS_AS(step_count(RcaConfig{8, 9, CellKind::Icis1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(scenario_config(CellKind::Icis1, 4), std::invalid_argument);
}

TEST_CASE("per-cell traces") {
  const RcaConfig config = scenario_config(CellKind::Ecis, 2);
  const AdderResult with = rca_add(config, 0xAB, 0x5C, 0, /*with_traces=*/true);
  const AdderResult without = rca_add(config, 0xAB, 0x5C, 0);
  CHECK(with.sum == without.sum);
  REQUIRE(with.cell_traces.size() == 4); // one per approximate position
  for (const ExecutionTrace &trace : with.cell_traces)
    CHECK(trace.steps() == 12);
  CHECK(without.cell_traces.empty());
}
