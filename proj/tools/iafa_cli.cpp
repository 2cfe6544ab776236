// Command-line front end. Everything below talks to the shared library
// through the public C API only.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iafa.h"

using nlohmann::json;

namespace {

constexpr const char *kSchemaId = "iafa-report/1";

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(iafa_status status, const std::string &context) {
  if (status != IAFA_OK)
    throw CliError(context + ": " + iafa_status_message(status));
}

iafa_cell parse_cell(const std::string &name) {
  iafa_cell cell;
  check(iafa_cell_from_name(name.c_str(), &cell), "cell '" + name + "'");
  return cell;
}

iafa_rca_config scenario_rca(iafa_cell cell, int scenario) {
  return iafa_rca_config{8, scenario + 2, cell};
}

json make_report(const std::string &command, json result) {
  return json{{"schema", kSchemaId},
              {"command", command},
              {"result", std::move(result)}};
}

void emit_report(const std::string &command, const json &result) {
  std::cout << make_report(command, result).dump(2) << '\n';
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw CliError("cannot open '" + path + "' for writing");
  out << text;
  if (!out)
    throw CliError("write to '" + path + "' failed");
}

// RAII wrappers for the C handles used here.
struct Image {
  iafa_image *handle = nullptr;
  Image() = default;
  explicit Image(iafa_image *h) : handle(h) {}
  Image(Image &&other) noexcept : handle(other.handle) {
    other.handle = nullptr;
  }
  Image &operator=(Image &&other) noexcept {
    std::swap(handle, other.handle);
    return *this;
  }
  Image(const Image &) = delete;
  ~Image() { iafa_image_free(handle); }
};

Image load_image(const std::string &path) {
  iafa_image *handle = nullptr;
  check(iafa_image_read(path.c_str(), &handle), "reading '" + path + "'");
  return Image(handle);
}

// ------------------------------------------------------------ truthtable

int cmd_truthtable(const std::string &cell_name, const std::string &format,
                   bool executed) {
  const iafa_cell cell = parse_cell(cell_name);
  uint8_t sum[8], cout[8];
  if (executed)
    check(iafa_cell_truth_table_executed(cell, sum, cout), "truth table");
  else
    check(iafa_cell_truth_table(cell, sum, cout), "truth table");

  if (format == "json") {
    json rows = json::array();
    for (int i = 0; i < 8; ++i)
      rows.push_back({{"a", (i >> 2) & 1},
                      {"b", (i >> 1) & 1},
                      {"c", i & 1},
                      {"sum", sum[i]},
                      {"cout", cout[i]}});
    emit_report("truthtable", {{"cell", iafa_cell_name(cell)},
                               {"source", executed ? "executed" : "table"},
                               {"rows", rows}});
  } else if (format == "csv") {
    std::printf("a,b,c,sum,cout\n");
    for (int i = 0; i < 8; ++i)
      std::printf("%d,%d,%d,%d,%d\n", (i >> 2) & 1, (i >> 1) & 1, i & 1,
                  sum[i], cout[i]);
  } else {
    std::printf("%s (%s)\n", iafa_cell_name(cell),
                executed ? "executed" : "table");
    std::printf(" A B C | Sum Cout\n");
    std::printf("-------+---------\n");
    for (int i = 0; i < 8; ++i)
      std::printf(" %d %d %d |  %d   %d\n", (i >> 2) & 1, (i >> 1) & 1, i & 1,
                  sum[i], cout[i]);
  }
  return 0;
}

// ----------------------------------------------------------------- design

int cmd_design(const std::string &family_name, bool as_json) {
  const iafa_design_family family = family_name == "cout-flip"
                                        ? IAFA_FAMILY_COUT_FLIP
                                        : IAFA_FAMILY_SUM_FLIP;
  iafa_design_entry entries[8];
  check(iafa_design_afa(family, entries), "design space");

  json equivalences = json::array();
  if (family == IAFA_FAMILY_SUM_FLIP) {
    iafa_equivalence_finding findings[4];
    check(iafa_design_equivalence(findings), "equivalence report");
    for (const iafa_equivalence_finding &f : findings)
      equivalences.push_back({{"left", f.left},
                              {"right", f.right},
                              {"identical", f.identical != 0}});
  }

  if (as_json) {
    json list = json::array();
    for (const iafa_design_entry &e : entries) {
      json entry = {{"name", e.name},
                    {"provenance", e.provenance},
                    {"sum", json::array()},
                    {"cout", json::array()},
                    {"er_sum", json::array({e.er_sum_eighths, 8})},
                    {"er_cout", json::array({e.er_cout_eighths, 8})},
                    {"ed", e.ed},
                    {"med", e.med},
                    {"nmed", e.nmed},
                    {"metric_pass", e.metric_pass != 0},
                    {"accepted", e.accepted != 0},
                    {"cost_flagged", e.cost_flagged != 0}};
      for (int i = 0; i < 8; ++i) {
        entry["sum"].push_back(e.sum[i]);
        entry["cout"].push_back(e.cout[i]);
      }
      if (e.duplicate_of[0] != '\0')
        entry["duplicate_of"] = e.duplicate_of;
      list.push_back(std::move(entry));
    }
    json result = {{"family", family_name}, {"tables", list}};
    if (!equivalences.empty())
      result["cout_flip_equivalences"] = equivalences;
    emit_report("design afa", result);
  } else {
    std::printf("%-6s %-13s %-8s %-8s %-2s %-6s %-6s verdict\n", "name",
                "provenance", "er_sum", "er_cout", "ed", "med", "nmed");
    for (const iafa_design_entry &e : entries) {
      std::string verdict = e.accepted ? "accepted" : "rejected";
      if (e.duplicate_of[0] != '\0')
        verdict += std::string(" (duplicate of ") + e.duplicate_of + ")";
      if (e.cost_flagged)
        verdict += " [>=17 steps, 5 memristors to implement]";
      std::printf("%-6s %-13s %d/8      %d/8      %-2d %-6.4g %-6.4g %s\n",
                  e.name, e.provenance, e.er_sum_eighths, e.er_cout_eighths,
                  e.ed, e.med, e.nmed, verdict.c_str());
    }
    for (const json &f : equivalences)
      std::printf("note: %s vs %s tables are %s\n",
                  f["left"].get<std::string>().c_str(),
                  f["right"].get<std::string>().c_str(),
                  f["identical"].get<bool>() ? "identical" : "different");
  }
  return 0;
}

// --------------------------------------------------------------- simulate

int cmd_simulate(const std::string &cell_name, const std::string &inputs,
                 bool analog, const std::string &csv_path, bool as_json) {
  const iafa_cell cell = parse_cell(cell_name);
  if (inputs.size() != 3 || inputs.find_first_not_of("01") != std::string::npos)
    throw CliError("--inputs expects three bits, e.g. 101");
  const int a = inputs[0] - '0', b = inputs[1] - '0', c = inputs[2] - '0';

  if (analog) {
    iafa_analog_run *run = nullptr;
    check(iafa_analog_run_program(cell, a, b, c, nullptr, &run),
          "analog simulation");
    const int sum = iafa_analog_sum(run);
    const int cout = iafa_analog_cout(run);
    const double energy = iafa_analog_energy_nj(run);
    const bool ambiguous = iafa_analog_ambiguous(run) != 0;
    if (!csv_path.empty())
      check(iafa_analog_write_csv(run, csv_path.c_str()), "writing waveform");
    iafa_analog_run_free(run);
    if (as_json)
      emit_report("simulate", {{"cell", iafa_cell_name(cell)},
                               {"inputs", inputs},
                               {"mode", "analog"},
                               {"sum", sum},
                               {"cout", cout},
                               {"ambiguous_readout", ambiguous},
                               {"energy_nj", energy}});
    else
      std::printf("%s %s (analog): Sum=%d Cout=%d energy=%.5f nJ%s\n",
                  iafa_cell_name(cell), inputs.c_str(), sum, cout, energy,
                  ambiguous ? " [ambiguous read-out]" : "");
    return 0;
  }

  iafa_program *program = nullptr;
  check(iafa_program_for_cell(cell, &program), "program");
  iafa_trace *trace = nullptr;
  check(iafa_program_run(program, a, b, c, &trace), "execution");
  const int steps = iafa_trace_steps(trace);
  const int sum = iafa_trace_sum(trace);
  const int cout = iafa_trace_cout(trace);
  if (!csv_path.empty())
    check(iafa_trace_write_csv(trace, csv_path.c_str()), "writing trace");
  if (as_json) {
    json states = json::array();
    const int nregs = iafa_program_registers(program);
    for (int step = 0; step <= steps; ++step) {
      json row = json::object();
      for (int reg = 0; reg < nregs; ++reg) {
        int bit = 0;
        check(iafa_trace_state(trace, step, reg, &bit), "trace state");
        row[iafa_program_register_name(program, reg)] = bit;
      }
      states.push_back(std::move(row));
    }
    emit_report("simulate", {{"cell", iafa_cell_name(cell)},
                             {"inputs", inputs},
                             {"mode", "logic"},
                             {"steps", steps},
                             {"sum", sum},
                             {"cout", cout},
                             {"states", states}});
  } else {
    const int nregs = iafa_program_registers(program);
    std::printf("%s %s (logic), %d steps\nstep time_us", iafa_cell_name(cell),
                inputs.c_str(), steps);
    for (int reg = 0; reg < nregs; ++reg)
      std::printf(" %5s", iafa_program_register_name(program, reg));
    std::printf("\n");
    for (int step = 0; step <= steps; ++step) {
      std::printf("%4d %7g", step, step * 30.0);
      for (int reg = 0; reg < nregs; ++reg) {
        int bit = 0;
        check(iafa_trace_state(trace, step, reg, &bit), "trace state");
        std::printf(" %5d", bit);
      }
      std::printf("\n");
    }
    std::printf("Sum=%d Cout=%d\n", sum, cout);
  }
  iafa_trace_free(trace);
  iafa_program_free(program);
  return 0;
}

// -------------------------------------------------------------------- rca

int cmd_rca(int n, int approx_lsbs, const std::string &cell_name,
            bool has_operands, std::uint64_t a, std::uint64_t b, int cin,
            bool exhaustive, bool as_json, bool as_csv) {
  const iafa_cell cell = parse_cell(cell_name);
  const iafa_rca_config config{n, approx_lsbs, cell};
  int steps = 0, memristors = 0;
  double energy = 0;
  check(iafa_rca_step_count(&config, &steps), "step count");
  check(iafa_rca_memristor_count(n, &memristors), "memristor count");
  check(iafa_rca_energy_nj(&config, &energy), "energy estimate");

  json result = {{"n", n},
                 {"approx_lsbs", approx_lsbs},
                 {"cell", iafa_cell_name(cell)},
                 {"steps", steps},
                 {"memristors", memristors},
                 {"energy_nj", energy}};

  if (exhaustive) {
    iafa_error_report report;
    check(iafa_rca_exhaustive_metrics(&config, &report), "exhaustive sweep");
    result["exhaustive"] = {{"samples", report.sample_count},
                            {"er", report.er},
                            {"med", report.med},
                            {"nmed", report.nmed},
                            {"max_output", report.max_output}};
  }
  if (has_operands) {
    std::uint64_t sum = 0;
    check(iafa_rca_add(&config, a, b, cin, &sum), "addition");
    result["addition"] = {{"a", a},
                          {"b", b},
                          {"cin", cin},
                          {"sum", sum},
                          {"exact", a + b + static_cast<std::uint64_t>(cin)}};
  }

  if (as_csv) {
    std::printf("n,approx_lsbs,cell,steps,memristors,energy_nj");
    if (has_operands)
      std::printf(",a,b,cin,sum,exact");
    if (exhaustive)
      std::printf(",er,med,nmed");
    std::printf("\n%d,%d,%s,%d,%d,%.6f", n, approx_lsbs,
                iafa_cell_name(cell), steps, memristors, energy);
    if (has_operands) {
      const json &add = result["addition"];
      std::printf(",%llu,%llu,%d,%llu,%llu",
                  static_cast<unsigned long long>(a),
                  static_cast<unsigned long long>(b), cin,
                  add["sum"].get<unsigned long long>(),
                  add["exact"].get<unsigned long long>());
    }
    if (exhaustive) {
      const json &ex = result["exhaustive"];
      std::printf(",%.8f,%.8f,%.8f", ex["er"].get<double>(),
                  ex["med"].get<double>(), ex["nmed"].get<double>());
    }
    std::printf("\n");
  } else if (as_json) {
    emit_report("rca", result);
  } else {
    std::printf("%d-bit RCA, %d approximate LSBs (%s): %d steps, %d "
                "memristors, %.5f nJ\n",
                n, approx_lsbs, iafa_cell_name(cell), steps, memristors,
                energy);
    if (has_operands) {
      const json &add = result["addition"];
      std::printf("  %llu + %llu + %d = %llu (exact %llu)\n",
                  static_cast<unsigned long long>(a),
                  static_cast<unsigned long long>(b), cin,
                  add["sum"].get<unsigned long long>(),
                  add["exact"].get<unsigned long long>());
    }
    if (exhaustive) {
      const json &ex = result["exhaustive"];
      std::printf("  exhaustive: ER %.4f, MED %.4f, NMED %.6f\n",
                  ex["er"].get<double>(), ex["med"].get<double>(),
                  ex["nmed"].get<double>());
    }
  }
  return 0;
}

// ----------------------------------------------------------------- errors

json error_row(iafa_cell cell, int scenario) {
  const iafa_rca_config config = scenario_rca(cell, scenario);
  iafa_error_report report;
  check(iafa_rca_exhaustive_metrics(&config, &report), "exhaustive sweep");
  return {{"cell", iafa_cell_name(cell)},
          {"scenario", scenario},
          {"er", report.er},
          {"med", report.med},
          {"nmed", report.nmed}};
}

int cmd_errors(const std::string &cell_name, int scenario, bool batch,
               bool as_json, bool as_csv) {
  json rows = json::array();
  if (batch) {
    for (iafa_cell cell : {IAFA_CELL_ICIS1, IAFA_CELL_ICIS2, IAFA_CELL_ICIS3,
                           IAFA_CELL_ECIS})
      for (int s = 1; s <= 3; ++s)
        rows.push_back(error_row(cell, s));
  } else {
    rows.push_back(error_row(parse_cell(cell_name), scenario));
  }

  if (as_csv) {
    std::printf("cell,scenario,er,med,nmed\n");
    for (const json &row : rows)
      std::printf("%s,%d,%.8f,%.8f,%.8f\n",
                  row["cell"].get<std::string>().c_str(),
                  row["scenario"].get<int>(), row["er"].get<double>(),
                  row["med"].get<double>(), row["nmed"].get<double>());
  } else if (as_json) {
    emit_report("errors", {{"rows", rows}});
  } else {
    std::printf("%-6s %-8s %-8s %-9s %-9s\n", "cell", "scenario", "ER", "MED",
                "NMED");
    for (const json &row : rows)
      std::printf("%-6s %-8d %-8.4f %-9.4f %-9.6f\n",
                  row["cell"].get<std::string>().c_str(),
                  row["scenario"].get<int>(), row["er"].get<double>(),
                  row["med"].get<double>(), row["nmed"].get<double>());
  }
  return 0;
}

// ------------------------------------------------------------------ image

json image_quality(const Image &exact, const Image &approx, double peak) {
  double db = 0, ssim = 0, mssim = 0;
  check(iafa_image_psnr(exact.handle, approx.handle, peak, &db), "psnr");
  check(iafa_image_ssim(exact.handle, approx.handle, &ssim, &mssim), "ssim");
  json quality = {{"ssim", ssim}, {"mssim", mssim}};
  if (std::isinf(db))
    quality["psnr_db"] = "inf";
  else
    quality["psnr_db"] = db;
  return quality;
}

iafa_image_op parse_image_op(const std::string &name) {
  if (name == "add")
    return IAFA_IMAGE_ADD;
  if (name == "sub")
    return IAFA_IMAGE_SUB;
  return IAFA_IMAGE_GRAY;
}

json run_image_once(iafa_image_op op, const Image &in1, const Image *in2,
                    const iafa_rca_config &config, bool clip,
                    const std::string &out_path) {
  iafa_image *approx_raw = nullptr;
  iafa_image *exact_raw = nullptr;
  check(iafa_image_apply(op, in1.handle, in2 ? in2->handle : nullptr, &config,
                         clip ? 1 : 0, &approx_raw, &exact_raw),
        "image operation");
  Image approx(approx_raw), exact(exact_raw);
  if (!out_path.empty())
    check(iafa_image_write(approx.handle, out_path.c_str()),
          "writing '" + out_path + "'");
  return image_quality(exact, approx, 255.0);
}

int cmd_image(const std::string &op_name, const std::string &cell_name,
              int scenario, const std::string &in1_path,
              const std::string &in2_path, const std::string &out_path,
              const std::string &report_path, bool clip,
              const std::string &batch_dir) {
  const iafa_image_op op = parse_image_op(op_name);
  const iafa_rca_config config = scenario_rca(parse_cell(cell_name), scenario);

  json result = {{"operation", op_name},
                 {"cell", cell_name},
                 {"scenario", scenario},
                 {"clip", clip}};

  if (batch_dir.empty()) {
    if (in1_path.empty())
      throw CliError("--in1 is required outside batch mode");
    const Image in1 = load_image(in1_path);
    json quality;
    if (op == IAFA_IMAGE_GRAY) {
      quality = run_image_once(op, in1, nullptr, config, clip, out_path);
    } else {
      if (in2_path.empty())
        throw CliError("--in2 is required for add/sub");
      const Image in2 = load_image(in2_path);
      quality = run_image_once(op, in1, &in2, config, clip, out_path);
    }
    result["quality"] = quality;
  } else {
    // Batch workflow: grayscale consumes every color image in the
    // directory; add/sub consume consecutive pairs of grayscale images in
    // name order. Metrics are averaged over the batch.
    std::vector<std::string> files;
    const std::string wanted_ext = op == IAFA_IMAGE_GRAY ? ".ppm" : ".pgm";
    for (const auto &entry : std::filesystem::directory_iterator(batch_dir))
      if (entry.is_regular_file() &&
          entry.path().extension() == wanted_ext)
        files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty())
      throw CliError("no " + wanted_ext + " files in '" + batch_dir + "'");

    json runs = json::array();
    double psnr_sum = 0, ssim_sum = 0, mssim_sum = 0;
    int count = 0;
    auto accumulate = [&](json quality, const std::string &label) {
      const double db = quality["psnr_db"].is_string()
                            ? std::numeric_limits<double>::infinity()
                            : quality["psnr_db"].get<double>();
      psnr_sum += db;
      ssim_sum += quality["ssim"].get<double>();
      mssim_sum += quality["mssim"].get<double>();
      ++count;
      quality["input"] = label;
      runs.push_back(std::move(quality));
    };
    if (op == IAFA_IMAGE_GRAY) {
      for (const std::string &file : files)
        accumulate(run_image_once(op, load_image(file), nullptr, config, clip,
                                  ""),
                   file);
    } else {
      if (files.size() % 2 != 0)
        throw CliError("batch add/sub expects an even number of .pgm files");
      for (std::size_t i = 0; i + 1 < files.size(); i += 2) {
        const Image first = load_image(files[i]);
        const Image second = load_image(files[i + 1]);
        accumulate(run_image_once(op, first, &second, config, clip, ""),
                   files[i] + " + " + files[i + 1]);
      }
    }
    result["runs"] = runs;
    result["average"] = {{"psnr_db", psnr_sum / count},
                         {"ssim", ssim_sum / count},
                         {"mssim", mssim_sum / count}};
  }

  const json report = make_report("image " + op_name, result);
  if (!report_path.empty())
    write_file(report_path, report.dump(2) + "\n");
  std::cout << report.dump(2) << '\n';
  return 0;
}

// -------------------------------------------------------------------- fom

int cmd_fom(const std::string &metrics_path, bool as_json) {
  std::ifstream in(metrics_path);
  if (!in)
    throw CliError("cannot open '" + metrics_path + "'");
  json metrics;
  in >> metrics;

  iafa_fom_inputs inputs;
  iafa_fom_defaults(&inputs);
  inputs.energy_nj = metrics.at("energy_nj").get<double>();
  inputs.steps = metrics.at("steps").get<double>();
  inputs.nmed = metrics.at("nmed").get<double>();
  if (metrics.contains("psnr_avg_db")) {
    inputs.psnr_avg_db = metrics["psnr_avg_db"].get<double>();
  } else {
    const json &list = metrics.at("psnr_db");
    double sum = 0;
    for (const json &value : list)
      sum += value.get<double>();
    inputs.psnr_avg_db = sum / list.size();
  }
  if (metrics.contains("baseline_steps"))
    inputs.baseline_steps = metrics["baseline_steps"].get<double>();
  if (metrics.contains("baseline_energy_nj"))
    inputs.baseline_energy_nj = metrics["baseline_energy_nj"].get<double>();

  double f1 = 0, f2 = 0;
  check(iafa_fom1(&inputs, &f1), "fom1");
  check(iafa_fom2(&inputs, &f2), "fom2");
  if (as_json)
    emit_report("fom", {{"inputs",
                         {{"energy_nj", inputs.energy_nj},
                          {"steps", inputs.steps},
                          {"nmed", inputs.nmed},
                          {"psnr_avg_db", inputs.psnr_avg_db},
                          {"baseline_steps", inputs.baseline_steps},
                          {"baseline_energy_nj", inputs.baseline_energy_nj}}},
                        {"fom1", f1},
                        {"fom2", f2}});
  else
    std::printf("FOM1 = %.5f\nFOM2 = %.4f\n", f1, f2);
  return 0;
}

// -------------------------------------------------------------- reproduce

int cmd_reproduce(int table, bool as_json) {
  size_t needed = 0;
  int ok = 0;
  check(iafa_reproduce_table(table, nullptr, 0, &needed, &ok),
        "reproducing table");
  std::string buffer(needed, '\0');
  check(iafa_reproduce_table(table, buffer.data(), buffer.size(), nullptr,
                             &ok),
        "reproducing table");
  buffer.resize(buffer.empty() ? 0 : buffer.size() - 1); // drop terminator
  if (as_json) {
    emit_report("reproduce", {{"table", table},
                              {"ok", ok == 1},
                              {"report", buffer}});
  } else {
    std::printf("reference table %d\n%s%s\n", table, buffer.c_str(),
                ok == 1 ? "all entries within tolerance"
                        : "MISMATCHES FOUND");
  }
  return ok == 1 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Simulator and evaluation toolchain for serial IMPLY-based "
               "approximate full adders"};
  app.require_subcommand(1);
  app.set_version_flag("--version", iafa_version());

  std::string command_line;
  for (int i = 1; i < argc; ++i)
    command_line += std::string(i > 1 ? " " : "") + argv[i];

  // truthtable
  std::string tt_cell, tt_format = "text";
  bool tt_executed = false;
  CLI::App *truthtable =
      app.add_subcommand("truthtable", "Print a cell's 8-row truth table");
  truthtable->add_option("cell", tt_cell, "icis1|icis2|icis3|ecis|exact")
      ->required();
  truthtable->add_option("--format", tt_format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  truthtable->add_flag("--executed", tt_executed,
                       "derive the table by running the micro-op program");

  // design afa
  std::string design_family;
  bool design_json = false;
  CLI::App *design = app.add_subcommand("design", "Design-space generation");
  CLI::App *design_afa = design->add_subcommand(
      "afa", "Generate a single-bit-flip candidate family with verdicts");
  design_afa->add_option("--family", design_family, "cout-flip|sum-flip")
      ->required()
      ->check(CLI::IsMember({"cout-flip", "sum-flip"}));
  design_afa->add_flag("--json", design_json, "emit a JSON report");

  // simulate
  std::string sim_cell, sim_inputs, sim_csv;
  bool sim_analog = false, sim_json = false;
  CLI::App *simulate =
      app.add_subcommand("simulate", "Run one cell on one input state");
  simulate->add_option("cell", sim_cell, "icis1|icis2|icis3|ecis")->required();
  simulate->add_option("--inputs", sim_inputs, "three bits, e.g. 101")
      ->required();
  simulate->add_flag("--analog", sim_analog,
                     "device-level transient instead of logic level");
  simulate->add_option("--csv", sim_csv, "write the trace/waveform as CSV");
  simulate->add_flag("--json", sim_json, "emit a JSON report");

  // rca
  int rca_n = 8, rca_m = 0, rca_cin = 0;
  std::string rca_cell;
  std::uint64_t rca_a = 0, rca_b = 0;
  bool rca_exhaustive = false, rca_json = false, rca_csv = false;
  CLI::App *rca = app.add_subcommand(
      "rca", "Compose an n-bit approximate ripple-carry adder");
  rca->add_option("--n", rca_n, "adder width")->capture_default_str();
  rca->add_option("--approx-lsbs", rca_m, "approximate LSB cells")
      ->required();
  rca->add_option("--cell", rca_cell, "icis1|icis2|icis3|ecis")->required();
  CLI::Option *opt_a = rca->add_option("--a", rca_a, "first operand");
  CLI::Option *opt_b = rca->add_option("--b", rca_b, "second operand");
  rca->add_option("--cin", rca_cin, "carry-in bit")
      ->check(CLI::Range(0, 1));
  rca->add_flag("--exhaustive", rca_exhaustive,
                "enumerate all operand pairs (carry-in 0)");
  rca->add_flag("--json", rca_json, "emit a JSON report");
  rca->add_flag("--csv", rca_csv, "emit CSV");
  opt_a->needs(opt_b);
  opt_b->needs(opt_a);

  // errors
  std::string err_cell;
  int err_scenario = 1;
  bool err_batch = false, err_json = false, err_csv = false;
  CLI::App *errors = app.add_subcommand(
      "errors", "Exhaustive error metrics of the 8-bit scenarios");
  CLI::Option *err_cell_opt =
      errors->add_option("--cell", err_cell, "icis1|icis2|icis3|ecis");
  errors->add_option("--scenario", err_scenario, "1|2|3")
      ->check(CLI::Range(1, 3));
  errors->add_flag("--batch", err_batch, "all four cells, all scenarios");
  errors->add_flag("--json", err_json, "emit a JSON report");
  errors->add_flag("--csv", err_csv, "emit CSV");

  // image
  std::string img_op, img_cell, img_in1, img_in2, img_out, img_report,
      img_batch;
  int img_scenario = 3;
  bool img_clip = false;
  CLI::App *image = app.add_subcommand(
      "image", "Image applications on approximate adders");
  image->add_option("operation", img_op, "add|sub|gray")
      ->required()
      ->check(CLI::IsMember({"add", "sub", "gray"}));
  image->add_option("--cell", img_cell, "icis1|icis2|icis3|ecis")->required();
  image->add_option("--scenario", img_scenario, "1|2|3")
      ->check(CLI::Range(1, 3));
  image->add_option("--in1", img_in1, "first input image (PGM/PPM)");
  image->add_option("--in2", img_in2, "second input image (PGM)");
  image->add_option("--out", img_out, "write the approximate output image");
  image->add_option("--report", img_report, "write the JSON report here");
  image->add_flag("--clip", img_clip,
                  "saturate addition outputs at 255 before comparison");
  image->add_option("--batch", img_batch,
                    "directory of images: averaged-metric workflow");

  // fom
  std::string fom_metrics;
  bool fom_json = false;
  CLI::App *fom = app.add_subcommand(
      "fom", "Figures of merit from a metrics JSON file");
  fom->add_option("--metrics", fom_metrics, "JSON file with energy_nj, "
                                            "steps, nmed, psnr_db[]")
      ->required();
  fom->add_flag("--json", fom_json, "emit a JSON report");

  // reproduce
  int repro_table = 0;
  bool repro_json = false;
  CLI::App *reproduce = app.add_subcommand(
      "reproduce", "Regenerate a reference table and diff it");
  reproduce->add_option("--table", repro_table, "4|5|9|11|13|15|19|20")
      ->required()
      ->check(CLI::IsMember({4, 5, 9, 11, 13, 15, 19, 20}));
  reproduce->add_flag("--json", repro_json, "emit a JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (truthtable->parsed())
      return cmd_truthtable(tt_cell, tt_format, tt_executed);
    if (design->parsed() && design_afa->parsed())
      return cmd_design(design_family, design_json);
    if (simulate->parsed())
      return cmd_simulate(sim_cell, sim_inputs, sim_analog, sim_csv, sim_json);
    if (rca->parsed())
      return cmd_rca(rca_n, rca_m, rca_cell, opt_a->count() > 0, rca_a, rca_b,
                     rca_cin, rca_exhaustive, rca_json, rca_csv);
    if (errors->parsed()) {
      if (!err_batch && err_cell_opt->count() == 0)
        throw CliError("provide --cell or --batch");
      return cmd_errors(err_cell, err_scenario, err_batch, err_json, err_csv);
    }
    if (image->parsed())
      return cmd_image(img_op, img_cell, img_scenario, img_in1, img_in2,
                       img_out, img_report, img_clip, img_batch);
    if (fom->parsed())
      return cmd_fom(fom_metrics, fom_json);
    if (reproduce->parsed())
      return cmd_reproduce(repro_table, repro_json);
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  std::fprintf(stderr, "error: no subcommand given\n");
  return 1;
}
