// Exercises the shared-library surface only: this file includes the public
// header and nothing from the core.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "iafa.h"

TEST_CASE("version and status strings") {
  CHECK(iafa_version() != nullptr);
  CHECK(std::strcmp(iafa_status_message(IAFA_OK), "ok") == 0);
  CHECK(iafa_status_message(IAFA_ERROR_IO) != nullptr);
}

TEST_CASE("cell catalogue") {
  iafa_cell cell = IAFA_CELL_EXACT;
  REQUIRE(iafa_cell_from_name("ecis", &cell) == IAFA_OK);
  CHECK(cell == IAFA_CELL_ECIS);
  CHECK(iafa_cell_from_name("nope", &cell) == IAFA_ERROR_INVALID_ARGUMENT);
  CHECK(std::strcmp(iafa_cell_name(IAFA_CELL_ICIS3), "ICIS3") == 0);

  int steps = 0, memristors = 0, work = 0;
  double energy = 0;
  REQUIRE(iafa_cell_info(IAFA_CELL_ECIS, &steps, &memristors, &work,
                         &energy) == IAFA_OK);
  CHECK(steps == 12);
  CHECK(memristors == 5);
  CHECK(work == 2);
  CHECK(energy == doctest::Approx(1.02631));
}

TEST_CASE("truth tables through the boundary") {
  uint8_t sum[8], cout[8];
  REQUIRE(iafa_cell_truth_table(IAFA_CELL_ICIS1, sum, cout) == IAFA_OK);
  const uint8_t expected_sum[8] = {1, 0, 1, 0, 1, 0, 0, 0};
  for (int i = 0; i < 8; ++i) {
    CHECK(sum[i] == expected_sum[i]);
    CHECK(cout[i] == (expected_sum[i] ^ 1));
  }
  uint8_t sum2[8], cout2[8];
  REQUIRE(iafa_cell_truth_table_executed(IAFA_CELL_ICIS1, sum2, cout2) ==
          IAFA_OK);
  for (int i = 0; i < 8; ++i) {
    CHECK(sum2[i] == sum[i]);
    CHECK(cout2[i] == cout[i]);
  }
  CHECK(iafa_cell_truth_table_executed(IAFA_CELL_EXACT, sum, cout) ==
        IAFA_ERROR_UNSUPPORTED);
}

TEST_CASE("program and trace handles") {
  iafa_program *program = nullptr;
  REQUIRE(iafa_program_for_cell(IAFA_CELL_ECIS, &program) == IAFA_OK);
  CHECK(iafa_program_steps(program) == 12);
  CHECK(iafa_program_registers(program) == 5);
  CHECK(std::strcmp(iafa_program_register_name(program, 3), "S1") == 0);
  CHECK(iafa_program_register_name(program, 9) == nullptr);
  int violations = -1;
  REQUIRE(iafa_program_validate(program, &violations) == IAFA_OK);
  CHECK(violations == 0);

  iafa_trace *trace = nullptr;
  REQUIRE(iafa_program_run(program, 1, 0, 1, &trace) == IAFA_OK);
  CHECK(iafa_trace_steps(trace) == 12);
  CHECK(iafa_trace_sum(trace) == 0);
  CHECK(iafa_trace_cout(trace) == 1);
  int bit = -1;
  REQUIRE(iafa_trace_state(trace, 0, 0, &bit) == IAFA_OK);
  CHECK(bit == 1); // A_in initial state
  CHECK(iafa_trace_state(trace, 99, 0, &bit) == IAFA_ERROR_OUT_OF_RANGE);

  const char *path = "iafa_capi_trace.csv";
  REQUIRE(iafa_trace_write_csv(trace, path) == IAFA_OK);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "step,time_us,reg_name,logic_state");
  in.close();
  std::remove(path);

  iafa_trace_free(trace);
  iafa_program_free(program);
  CHECK(iafa_program_for_cell(IAFA_CELL_EXACT, &program) ==
        IAFA_ERROR_UNSUPPORTED);
}

TEST_CASE("design space entries") {
  iafa_design_entry entries[8];
  REQUIRE(iafa_design_afa(IAFA_FAMILY_COUT_FLIP, entries) == IAFA_OK);
  CHECK(std::strcmp(entries[0].name, "AFA1") == 0);
  CHECK(std::strcmp(entries[7].name, "AFA8") == 0);
  int accepted = 0;
  for (const iafa_design_entry &e : entries) {
    accepted += e.accepted;
    CHECK(e.ed == 3);
  }
  CHECK(accepted == 5);
  CHECK(std::strcmp(entries[5].duplicate_of, "SIAFA1") == 0);

  REQUIRE(iafa_design_afa(IAFA_FAMILY_SUM_FLIP, entries) == IAFA_OK);
  accepted = 0;
  for (const iafa_design_entry &e : entries)
    accepted += e.accepted;
  CHECK(accepted == 2);
  CHECK(entries[1].ed == 5);
}

TEST_CASE("rca and exhaustive metrics") {
  const iafa_rca_config config{8, 5, IAFA_CELL_ECIS};
  uint64_t result = 0;
  REQUIRE(iafa_rca_add(&config, 0, 0, 0, &result) == IAFA_OK);
  CHECK(result == 31);
  CHECK(iafa_rca_add(&config, 300, 0, 0, &result) ==
        IAFA_ERROR_INVALID_ARGUMENT);

  int steps = 0;
  REQUIRE(iafa_rca_step_count(&config, &steps) == IAFA_OK);
  CHECK(steps == 126);
  int count = 0;
  REQUIRE(iafa_rca_memristor_count(8, &count) == IAFA_OK);
  CHECK(count == 19);
  double energy = 0;
  REQUIRE(iafa_rca_energy_nj(&config, &energy) == IAFA_OK);
  CHECK(energy == doctest::Approx(10.85732));

  const iafa_rca_config s1{8, 3, IAFA_CELL_ECIS};
  iafa_error_report report;
  REQUIRE(iafa_rca_exhaustive_metrics(&s1, &report) == IAFA_OK);
  CHECK(report.sample_count == 65536);
  CHECK(report.max_output == 510);
  CHECK(report.med == doctest::Approx(1.71875));
}

TEST_CASE("analog surface") {
  iafa_vteam_params params;
  iafa_vteam_defaults(&params);
  CHECK(params.v_off == doctest::Approx(0.7));
  CHECK(params.r_g == doctest::Approx(40e3));
  CHECK(iafa_vteam_dwdt(&params, 1.5, 0.0) == 0.0);
  CHECK(iafa_vteam_dwdt(&params, 1.5, 0.9) > 0.0);

  iafa_analog_run *run = nullptr;
  REQUIRE(iafa_analog_run_program(IAFA_CELL_ICIS1, 0, 0, 1, nullptr, &run) ==
          IAFA_OK);
  CHECK(iafa_analog_sum(run) == 0);
  CHECK(iafa_analog_cout(run) == 1);
  CHECK(iafa_analog_ambiguous(run) == 0);
  CHECK(iafa_analog_energy_nj(run) > 0.0);
  double r = 0;
  REQUIRE(iafa_analog_final_resistance(run, 2, &r) == IAFA_OK);
  CHECK(r > 0.0);
  CHECK(iafa_analog_final_resistance(run, 42, &r) == IAFA_ERROR_OUT_OF_RANGE);

  const char *path = "iafa_capi_analog.csv";
  REQUIRE(iafa_analog_write_csv(run, path) == IAFA_OK);
  std::remove(path);
  iafa_analog_run_free(run);

  double cell_energy = 0;
  REQUIRE(iafa_analog_cell_energy_nj(IAFA_CELL_ICIS2, nullptr, &cell_energy) ==
          IAFA_OK);
  CHECK(cell_energy > 0.1);
  CHECK(cell_energy < 1.0);
}

TEST_CASE("image pipeline over the boundary") {
  // Write a tiny PGM, push it through the addition app, score it.
  const char *path = "iafa_capi_tiny.pgm";
  {
    std::ofstream out(path, std::ios::binary);
    out << "P5\n2 2\n255\n";
    for (unsigned char v : {10, 20, 30, 40})
      out.put(static_cast<char>(v));
  }
  iafa_image *image = nullptr;
  REQUIRE(iafa_image_read(path, &image) == IAFA_OK);
  std::remove(path);
  CHECK(iafa_image_width(image) == 2);
  CHECK(iafa_image_height(image) == 2);
  CHECK(iafa_image_channels(image) == 1);
  CHECK(iafa_image_maxval(image) == 255);

  const iafa_rca_config config{8, 5, IAFA_CELL_ECIS};
  iafa_image *approx = nullptr;
  iafa_image *exact = nullptr;
  REQUIRE(iafa_image_apply(IAFA_IMAGE_ADD, image, image, &config, 0, &approx,
                           &exact) == IAFA_OK);
  double db = 0;
  REQUIRE(iafa_image_psnr(exact, approx, 255.0, &db) == IAFA_OK);
  CHECK(db > 0.0);
  double same = 0;
  REQUIRE(iafa_image_psnr(exact, exact, 255.0, &same) == IAFA_OK);
  CHECK(std::isinf(same));
  double ssim = 0, mssim = 0;
  REQUIRE(iafa_image_ssim(exact, exact, &ssim, &mssim) == IAFA_OK);
  CHECK(ssim == doctest::Approx(1.0));

  // Gray op rejects grayscale input.
  CHECK(iafa_image_apply(IAFA_IMAGE_GRAY, image, nullptr, &config, 0, &approx,
                         &exact) == IAFA_ERROR_INVALID_ARGUMENT);

  iafa_image_free(approx);
  iafa_image_free(exact);
  iafa_image_free(image);
  CHECK(iafa_image_read("missing.pgm", &image) == IAFA_ERROR_IO);
}

TEST_CASE("figures of merit") {
  iafa_fom_inputs inputs;
  iafa_fom_defaults(&inputs);
  CHECK(inputs.baseline_steps == doctest::Approx(176.0));
  CHECK(inputs.baseline_energy_nj == doctest::Approx(15.26872));
  inputs.energy_nj = 8.26122;
  inputs.steps = 96;
  inputs.nmed = 0.0193;
  inputs.psnr_avg_db = (32.0474 + 34.928 + 30.3889) / 3.0;
  double value = 0;
  REQUIRE(iafa_fom1(&inputs, &value) == IAFA_OK);
  CHECK(value == doctest::Approx(24.91743).epsilon(1e-4));
  REQUIRE(iafa_fom2(&inputs, &value) == IAFA_OK);
  CHECK(value == doctest::Approx(219.784).epsilon(5e-4));
  inputs.psnr_avg_db = 0;
  CHECK(iafa_fom1(&inputs, &value) == IAFA_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("reproduce through the boundary") {
  char buffer[8192];
  size_t needed = 0;
  int ok = -1;
  REQUIRE(iafa_reproduce_table(13, buffer, sizeof(buffer), &needed, &ok) ==
          IAFA_OK);
  CHECK(ok == 1);
  CHECK(needed > 1);
  CHECK(std::string(buffer).find("scenario 3 steps = 96") != std::string::npos);
  CHECK(iafa_reproduce_table(7, buffer, sizeof(buffer), &needed, &ok) ==
        IAFA_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("null-pointer discipline") {
  CHECK(iafa_cell_from_name(nullptr, nullptr) == IAFA_ERROR_INVALID_ARGUMENT);
  CHECK(iafa_program_for_cell(IAFA_CELL_ICIS1, nullptr) ==
        IAFA_ERROR_INVALID_ARGUMENT);
  CHECK(iafa_rca_add(nullptr, 0, 0, 0, nullptr) ==
        IAFA_ERROR_INVALID_ARGUMENT);
  CHECK(iafa_trace_steps(nullptr) == -1);
  CHECK(iafa_analog_sum(nullptr) == -1);
  CHECK(iafa_image_width(nullptr) == -1);
}
