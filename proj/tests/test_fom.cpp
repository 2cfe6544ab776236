#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "core/fom.hpp"
#include "core/reference.hpp"

using namespace iafa;

namespace {

FomInputs inputs_for(const reference::FomRow &row) {
  FomInputs inputs;
  inputs.energy_nj = row.energy_nj;
  inputs.steps = row.steps;
  inputs.nmed = row.nmed;
  inputs.psnr_avg_db = (row.psnr[0] + row.psnr[1] + row.psnr[2]) / 3.0;
  return inputs;
}

const reference::FomRow &row_named(const char *name) {
  for (const reference::FomRow &row : reference::kFomRows)
    if (std::string_view(row.name) == name)
      return row;
  throw std::logic_error("row not found");
}

} // namespace

TEST_CASE("published figure-of-merit rows reproduce from published inputs") {
  for (const reference::FomRow &row : reference::kFomRows) {
    const FomInputs inputs = inputs_for(row);
    const double tol = row.proposed ? reference::kFomRelTolProposed
                                    : reference::kFomRelTolContext;
    CAPTURE(row.name);
    CHECK(fom1(inputs) ==
          doctest::Approx(row.fom1_printed).epsilon(row.proposed ? 1e-4 : tol));
    CHECK(fom2(inputs) == doctest::Approx(row.fom2_printed).epsilon(tol));
  }
}

TEST_CASE("proposed-cell trade-off rankings") {
  std::vector<std::pair<const char *, double>> f1, f2;
  for (const char *name : {"ICIS1", "ICIS2", "ICIS3", "ECIS"}) {
    const FomInputs inputs = inputs_for(row_named(name));
    f1.emplace_back(name, fom1(inputs));
    f2.emplace_back(name, fom2(inputs));
  }
  auto value = [](const std::vector<std::pair<const char *, double>> &v,
                  const char *name) {
    for (const auto &p : v)
      if (std::string_view(p.first) == name)
        return p.second;
    return -1.0;
  };
  // Ascending FOM1: ICIS3 < ICIS2 < ICIS1 < ECIS.
  CHECK(value(f1, "ICIS3") < value(f1, "ICIS2"));
  CHECK(value(f1, "ICIS2") < value(f1, "ICIS1"));
  CHECK(value(f1, "ICIS1") < value(f1, "ECIS"));
  // Descending FOM2: ICIS3 > ICIS2 > ICIS1 > ECIS.
  CHECK(value(f2, "ICIS3") > value(f2, "ICIS2"));
  CHECK(value(f2, "ICIS2") > value(f2, "ICIS1"));
  CHECK(value(f2, "ICIS1") > value(f2, "ECIS"));
}

TEST_CASE("fom1 monotonicity") {
  FomInputs base = inputs_for(row_named("ICIS1"));
  const double reference_value = fom1(base);
  FomInputs more_steps = base;
  more_steps.steps += 10;
  CHECK(fom1(more_steps) > reference_value);
  FomInputs more_energy = base;
  more_energy.energy_nj += 1.0;
  CHECK(fom1(more_energy) > reference_value);
  FomInputs better_psnr = base;
  better_psnr.psnr_avg_db += 5.0;
  CHECK(fom1(better_psnr) < reference_value);
}

TEST_CASE("input validation") {
  FomInputs bad = inputs_for(row_named("ECIS"));
  bad.psnr_avg_db = 0.0;
  CHECK_THROWS_AS(fom1(bad), std::invalid_argument);
  bad = inputs_for(row_named("ECIS"));
  bad.nmed = 1.5;
  CHECK_THROWS_AS(fom1(bad), std::invalid_argument);
  bad = inputs_for(row_named("ECIS"));
  bad.baseline_steps = 0;
  CHECK_THROWS_AS(fom2(bad), std::invalid_argument);
}
