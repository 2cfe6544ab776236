// extern-C shim over the core library. Exceptions are mapped to status
// codes at the boundary; handle types own copies of the core objects.

#include "iafa.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <variant>

#include "core/cells.hpp"
#include "core/designer.hpp"
#include "core/error_analysis.hpp"
#include "core/fom.hpp"
#include "core/image.hpp"
#include "core/image_ops.hpp"
#include "core/logic.hpp"
#include "core/quality.hpp"
#include "core/rca.hpp"
#include "core/reproduce.hpp"
#include "core/vteam.hpp"

struct iafa_program {
  iafa::MicroProgram program;
};

struct iafa_trace {
  iafa::ExecutionTrace trace;
};

struct iafa_analog_run {
  iafa::AnalogRunResult run;
};

struct iafa_image {
  std::variant<iafa::GrayImage, iafa::RgbImage> data;

  bool is_gray() const { return data.index() == 0; }
  const iafa::GrayImage &gray() const { return std::get<0>(data); }
  const iafa::RgbImage &rgb() const { return std::get<1>(data); }
};

namespace {

template <typename Fn> iafa_status guarded(Fn &&fn) {
  try {
    fn();
    return IAFA_OK;
  } catch (const std::out_of_range &) {
    return IAFA_ERROR_OUT_OF_RANGE;
  } catch (const std::invalid_argument &) {
    return IAFA_ERROR_INVALID_ARGUMENT;
  } catch (const std::runtime_error &) {
    return IAFA_ERROR_IO;
  } catch (const std::bad_alloc &) {
    return IAFA_ERROR_INTERNAL;
  } catch (...) {
    return IAFA_ERROR_INTERNAL;
  }
}

iafa::CellKind to_core(iafa_cell cell) {
  switch (cell) {
  case IAFA_CELL_ICIS1:
    return iafa::CellKind::Icis1;
  case IAFA_CELL_ICIS2:
    return iafa::CellKind::Icis2;
  case IAFA_CELL_ICIS3:
    return iafa::CellKind::Icis3;
  case IAFA_CELL_ECIS:
    return iafa::CellKind::Ecis;
  case IAFA_CELL_EXACT:
    return iafa::CellKind::Exact;
  }
  throw std::invalid_argument("unknown cell id");
}

iafa::RcaConfig to_core(const iafa_rca_config &config) {
  return iafa::RcaConfig{config.n, config.approx_lsbs, to_core(config.cell)};
}

iafa::VteamParams to_core(const iafa_vteam_params *params) {
  if (params == nullptr)
    return iafa::VteamParams{};
  iafa::VteamParams out;
  out.v_off = params->v_off;
  out.v_on = params->v_on;
  out.alpha_off = params->alpha_off;
  out.alpha_on = params->alpha_on;
  out.r_off = params->r_off;
  out.r_on = params->r_on;
  out.k_on_nm_s = params->k_on_nm_s;
  out.k_off_nm_s = params->k_off_nm_s;
  out.w_off_nm = params->w_off_nm;
  out.w_on_nm = params->w_on_nm;
  out.w_c_nm = params->w_c_nm;
  out.a_off_nm = params->a_off_nm;
  out.a_on_nm = params->a_on_nm;
  out.v_set = params->v_set;
  out.v_reset = params->v_reset;
  out.v_cond = params->v_cond;
  out.r_g = params->r_g;
  out.t_pulse_s = params->t_pulse_s;
  out.dt_s = params->dt_s;
  out.r_read = params->r_read;
  out.read_guard = params->read_guard;
  return out;
}

void copy_table(const iafa::TruthTable8 &table, uint8_t sum[8],
                uint8_t cout[8]) {
  for (int i = 0; i < 8; ++i) {
    sum[i] = table.rows[i].sum;
    cout[i] = table.rows[i].cout;
  }
}

void copy_name(char *dst, size_t dst_size, const std::string &src) {
  std::snprintf(dst, dst_size, "%s", src.c_str());
}

} // namespace

extern "C" {

const char *iafa_status_message(iafa_status status) {
  switch (status) {
  case IAFA_OK:
    return "ok";
  case IAFA_ERROR_INVALID_ARGUMENT:
    return "invalid argument";
  case IAFA_ERROR_OUT_OF_RANGE:
    return "index out of range";
  case IAFA_ERROR_UNSUPPORTED:
    return "unsupported operation";
  case IAFA_ERROR_VALIDATION:
    return "program validation failed";
  case IAFA_ERROR_IO:
    return "i/o error";
  case IAFA_ERROR_INTERNAL:
    return "internal error";
  }
  return "unknown status";
}

const char *iafa_version(void) { return "1.0.0"; }

const char *iafa_cell_name(iafa_cell cell) {
  try {
    return iafa::cell_info(to_core(cell)).name;
  } catch (...) {
    return nullptr;
  }
}

iafa_status iafa_cell_from_name(const char *name, iafa_cell *cell) {
  if (name == nullptr || cell == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const iafa::CellKind kind = iafa::cell_from_name(name);
    *cell = static_cast<iafa_cell>(static_cast<int>(kind));
  });
}

iafa_status iafa_cell_info(iafa_cell cell, int *steps, int *memristors,
                           int *work_registers, double *energy_nj) {
  return guarded([&] {
    const iafa::CellInfo &info = iafa::cell_info(to_core(cell));
    if (steps)
      *steps = info.steps;
    if (memristors)
      *memristors = info.memristors;
    if (work_registers)
      *work_registers = info.work_registers;
    if (energy_nj)
      *energy_nj = info.energy_nj;
  });
}

iafa_status iafa_cell_truth_table(iafa_cell cell, uint8_t sum[8],
                                  uint8_t cout[8]) {
  if (sum == nullptr || cout == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { copy_table(iafa::cell_truth_table(to_core(cell)), sum, cout); });
}

iafa_status iafa_cell_truth_table_executed(iafa_cell cell, uint8_t sum[8],
                                           uint8_t cout[8]) {
  if (sum == nullptr || cout == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  if (cell == IAFA_CELL_EXACT)
    return IAFA_ERROR_UNSUPPORTED;
  return guarded(
      [&] { copy_table(iafa::extract_truth_table(to_core(cell)), sum, cout); });
}

iafa_status iafa_cell_error_metrics(iafa_cell cell, int *ed, double *med,
                                    double *nmed, double *er_sum,
                                    double *er_cout) {
  return guarded([&] {
    const iafa::CellErrorMetrics metrics = iafa::cell_metrics(to_core(cell));
    if (ed)
      *ed = metrics.ed;
    if (med)
      *med = metrics.med;
    if (nmed)
      *nmed = metrics.nmed;
    if (er_sum)
      *er_sum = metrics.er_sum;
    if (er_cout)
      *er_cout = metrics.er_cout;
  });
}

iafa_status iafa_program_for_cell(iafa_cell cell, iafa_program **program) {
  if (program == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  if (cell == IAFA_CELL_EXACT)
    return IAFA_ERROR_UNSUPPORTED;
  return guarded([&] {
    *program = new iafa_program{iafa::cell_program(to_core(cell))};
  });
}

void iafa_program_free(iafa_program *program) { delete program; }

int iafa_program_steps(const iafa_program *program) {
  return program ? program->program.step_count() : -1;
}

int iafa_program_registers(const iafa_program *program) {
  return program ? program->program.memristor_count() : -1;
}

const char *iafa_program_register_name(const iafa_program *program,
                                       int index) {
  if (program == nullptr || index < 0 ||
      index >= program->program.memristor_count())
    return nullptr;
  return program->program.registers[index].c_str();
}

iafa_status iafa_program_validate(const iafa_program *program,
                                  int *violations) {
  if (program == nullptr || violations == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const iafa::ValidationReport report =
        iafa::validate_program(program->program);
    *violations = static_cast<int>(report.violations.size());
  });
}

iafa_status iafa_program_run(const iafa_program *program, int a, int b, int c,
                             iafa_trace **trace) {
  if (program == nullptr || trace == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  if ((a | b | c) < 0 || a > 1 || b > 1 || c > 1)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *trace = new iafa_trace{iafa::run_program(
        program->program, static_cast<iafa::Bit>(a), static_cast<iafa::Bit>(b),
        static_cast<iafa::Bit>(c))};
  });
}

void iafa_trace_free(iafa_trace *trace) { delete trace; }

int iafa_trace_steps(const iafa_trace *trace) {
  return trace ? trace->trace.steps() : -1;
}

int iafa_trace_sum(const iafa_trace *trace) {
  return trace ? trace->trace.sum : -1;
}

int iafa_trace_cout(const iafa_trace *trace) {
  return trace ? trace->trace.cout : -1;
}

iafa_status iafa_trace_state(const iafa_trace *trace, int step, int reg,
                             int *bit) {
  if (trace == nullptr || bit == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *bit = trace->trace.state(step, reg); });
}

iafa_status iafa_trace_write_csv(const iafa_trace *trace, const char *path) {
  if (trace == nullptr || path == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot open file");
    out << trace->trace.to_csv();
    if (!out)
      throw std::runtime_error("write failed");
  });
}

iafa_status iafa_design_afa(iafa_design_family family,
                            iafa_design_entry entries[8]) {
  if (entries == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  if (family != IAFA_FAMILY_COUT_FLIP && family != IAFA_FAMILY_SUM_FLIP)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const std::vector<iafa::TruthTable8> family_tables =
        family == IAFA_FAMILY_COUT_FLIP ? iafa::generate_cout_flip_family()
                                        : iafa::generate_sum_flip_family();
    const std::vector<iafa::CandidateVerdict> verdicts =
        iafa::filter_candidates(family_tables);
    for (int i = 0; i < 8; ++i) {
      iafa_design_entry &entry = entries[i];
      std::memset(&entry, 0, sizeof(entry));
      copy_name(entry.name, sizeof(entry.name), family_tables[i].name);
      copy_name(entry.provenance, sizeof(entry.provenance),
                family_tables[i].provenance);
      for (int r = 0; r < 8; ++r) {
        entry.sum[r] = family_tables[i].rows[r].sum;
        entry.cout[r] = family_tables[i].rows[r].cout;
      }
      const iafa::CandidateVerdict &verdict = verdicts[i];
      entry.er_sum_eighths = verdict.metrics.er_sum_eighths;
      entry.er_cout_eighths = verdict.metrics.er_cout_eighths;
      entry.ed = verdict.metrics.ed;
      entry.med = verdict.metrics.med;
      entry.nmed = verdict.metrics.nmed;
      entry.metric_pass = verdict.metric_pass;
      entry.accepted = verdict.accepted;
      entry.cost_flagged = verdict.cost_flagged;
      copy_name(entry.duplicate_of, sizeof(entry.duplicate_of),
                verdict.duplicate_of);
    }
  });
}

iafa_status iafa_design_equivalence(iafa_equivalence_finding findings[4]) {
  if (findings == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const std::vector<iafa::EquivalenceFinding> results =
        iafa::sum_flip_equivalence_report();
    for (std::size_t i = 0; i < 4 && i < results.size(); ++i) {
      copy_name(findings[i].left, sizeof(findings[i].left), results[i].left);
      copy_name(findings[i].right, sizeof(findings[i].right),
                results[i].right);
      findings[i].identical = results[i].identical;
    }
  });
}

iafa_status iafa_rca_add(const iafa_rca_config *config, uint64_t a, uint64_t b,
                         int carry_in, uint64_t *result) {
  if (config == nullptr || result == nullptr || carry_in < 0 || carry_in > 1)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *result = iafa::rca_add(to_core(*config), a, b,
                            static_cast<iafa::Bit>(carry_in))
                  .sum;
  });
}

iafa_status iafa_rca_step_count(const iafa_rca_config *config, int *steps) {
  if (config == nullptr || steps == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *steps = iafa::step_count(to_core(*config)); });
}

iafa_status iafa_rca_memristor_count(int n, int *count) {
  if (count == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *count = iafa::memristor_count(n); });
}

iafa_status iafa_rca_energy_nj(const iafa_rca_config *config,
                               double *energy_nj) {
  if (config == nullptr || energy_nj == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *energy_nj = iafa::energy_estimate_nj(to_core(*config)); });
}

iafa_status iafa_rca_exhaustive_metrics(const iafa_rca_config *config,
                                        iafa_error_report *report) {
  if (config == nullptr || report == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const iafa::ErrorReport result =
        iafa::exhaustive_metrics(to_core(*config));
    report->er = result.er;
    report->med = result.med;
    report->nmed = result.nmed;
    report->max_output = result.max_output;
    report->sample_count = result.sample_count;
  });
}

void iafa_vteam_defaults(iafa_vteam_params *params) {
  if (params == nullptr)
    return;
  const iafa::VteamParams defaults;
  params->v_off = defaults.v_off;
  params->v_on = defaults.v_on;
  params->alpha_off = defaults.alpha_off;
  params->alpha_on = defaults.alpha_on;
  params->r_off = defaults.r_off;
  params->r_on = defaults.r_on;
  params->k_on_nm_s = defaults.k_on_nm_s;
  params->k_off_nm_s = defaults.k_off_nm_s;
  params->w_off_nm = defaults.w_off_nm;
  params->w_on_nm = defaults.w_on_nm;
  params->w_c_nm = defaults.w_c_nm;
  params->a_off_nm = defaults.a_off_nm;
  params->a_on_nm = defaults.a_on_nm;
  params->v_set = defaults.v_set;
  params->v_reset = defaults.v_reset;
  params->v_cond = defaults.v_cond;
  params->r_g = defaults.r_g;
  params->t_pulse_s = defaults.t_pulse_s;
  params->dt_s = defaults.dt_s;
  params->r_read = defaults.r_read;
  params->read_guard = defaults.read_guard;
}

double iafa_vteam_dwdt(const iafa_vteam_params *params, double w_nm,
                       double v) {
  return iafa::vteam_dwdt(to_core(params), w_nm, v);
}

iafa_status iafa_analog_run_program(iafa_cell cell, int a, int b, int c,
                                    const iafa_vteam_params *params,
                                    iafa_analog_run **run) {
  if (run == nullptr || (a | b | c) < 0 || a > 1 || b > 1 || c > 1)
    return IAFA_ERROR_INVALID_ARGUMENT;
  if (cell == IAFA_CELL_EXACT)
    return IAFA_ERROR_UNSUPPORTED;
  return guarded([&] {
    *run = new iafa_analog_run{iafa::run_program_analog(
        iafa::cell_program(to_core(cell)), static_cast<iafa::Bit>(a),
        static_cast<iafa::Bit>(b), static_cast<iafa::Bit>(c),
        to_core(params))};
  });
}

void iafa_analog_run_free(iafa_analog_run *run) { delete run; }

int iafa_analog_sum(const iafa_analog_run *run) {
  return run ? run->run.sum : -1;
}

int iafa_analog_cout(const iafa_analog_run *run) {
  return run ? run->run.cout : -1;
}

int iafa_analog_ambiguous(const iafa_analog_run *run) {
  return run ? (run->run.sum_ambiguous || run->run.cout_ambiguous) : -1;
}

double iafa_analog_energy_nj(const iafa_analog_run *run) {
  return run ? run->run.total_energy_j * 1e9 : -1.0;
}

iafa_status iafa_analog_final_resistance(const iafa_analog_run *run, int reg,
                                         double *r_ohm) {
  if (run == nullptr || r_ohm == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  if (reg < 0 ||
      static_cast<size_t>(reg) >= run->run.final_resistance.size())
    return IAFA_ERROR_OUT_OF_RANGE;
  *r_ohm = run->run.final_resistance[reg];
  return IAFA_OK;
}

iafa_status iafa_analog_write_csv(const iafa_analog_run *run,
                                  const char *path) {
  if (run == nullptr || path == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot open file");
    out << run->run.to_csv();
    if (!out)
      throw std::runtime_error("write failed");
  });
}

iafa_status iafa_analog_cell_energy_nj(iafa_cell cell,
                                       const iafa_vteam_params *params,
                                       double *energy_nj) {
  if (energy_nj == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  if (cell == IAFA_CELL_EXACT)
    return IAFA_ERROR_UNSUPPORTED;
  return guarded([&] {
    *energy_nj = iafa::average_cell_energy_nj(to_core(cell), to_core(params));
  });
}

iafa_status iafa_image_read(const char *path, iafa_image **image) {
  if (path == nullptr || image == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    if (iafa::is_ppm_file(path))
      *image = new iafa_image{iafa::read_ppm(path)};
    else
      *image = new iafa_image{iafa::read_pgm(path)};
  });
}

iafa_status iafa_image_write(const iafa_image *image, const char *path) {
  if (image == nullptr || path == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    if (image->is_gray())
      iafa::write_pgm(image->gray(), path);
    else
      iafa::write_ppm(image->rgb(), path);
  });
}

void iafa_image_free(iafa_image *image) { delete image; }

int iafa_image_width(const iafa_image *image) {
  if (image == nullptr)
    return -1;
  return image->is_gray() ? image->gray().width : image->rgb().width;
}

int iafa_image_height(const iafa_image *image) {
  if (image == nullptr)
    return -1;
  return image->is_gray() ? image->gray().height : image->rgb().height;
}

int iafa_image_channels(const iafa_image *image) {
  if (image == nullptr)
    return -1;
  return image->is_gray() ? 1 : 3;
}

int iafa_image_maxval(const iafa_image *image) {
  if (image == nullptr)
    return -1;
  return image->is_gray() ? image->gray().maxval : image->rgb().maxval;
}

iafa_status iafa_image_apply(iafa_image_op op, const iafa_image *in1,
                             const iafa_image *in2,
                             const iafa_rca_config *config, int clip,
                             iafa_image **out_approx, iafa_image **out_exact) {
  if (in1 == nullptr || config == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  if (op == IAFA_IMAGE_GRAY) {
    if (in2 != nullptr || in1->is_gray())
      return IAFA_ERROR_INVALID_ARGUMENT;
  } else {
    if (in2 == nullptr || !in1->is_gray() || !in2->is_gray())
      return IAFA_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    iafa::ApplicationResult result;
    switch (op) {
    case IAFA_IMAGE_ADD:
      result = iafa::image_add(in1->gray(), in2->gray(), to_core(*config),
                               iafa::AddOptions{clip != 0});
      break;
    case IAFA_IMAGE_SUB:
      result = iafa::motion_detect(in1->gray(), in2->gray(), to_core(*config));
      break;
    case IAFA_IMAGE_GRAY:
      result = iafa::grayscale_filter(in1->rgb(), to_core(*config));
      break;
    default:
      throw std::invalid_argument("unknown image operation");
    }
    if (out_approx)
      *out_approx = new iafa_image{std::move(result.approx)};
    if (out_exact)
      *out_exact = new iafa_image{std::move(result.exact)};
  });
}

iafa_status iafa_image_psnr(const iafa_image *reference,
                            const iafa_image *test, double peak, double *db) {
  if (reference == nullptr || test == nullptr || db == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  if (!reference->is_gray() || !test->is_gray())
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded(
      [&] { *db = iafa::psnr(reference->gray(), test->gray(), peak); });
}

iafa_status iafa_image_ssim(const iafa_image *reference,
                            const iafa_image *test, double *ssim,
                            double *mssim) {
  if (reference == nullptr || test == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  if (!reference->is_gray() || !test->is_gray())
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const iafa::SsimResult result =
        iafa::ssim_mssim(reference->gray(), test->gray());
    if (ssim)
      *ssim = result.ssim;
    if (mssim)
      *mssim = result.mssim;
  });
}

void iafa_fom_defaults(iafa_fom_inputs *inputs) {
  if (inputs == nullptr)
    return;
  const iafa::FomInputs defaults;
  inputs->energy_nj = 0;
  inputs->steps = 0;
  inputs->nmed = 0;
  inputs->psnr_avg_db = 0;
  inputs->baseline_steps = defaults.baseline_steps;
  inputs->baseline_energy_nj = defaults.baseline_energy_nj;
}

iafa_status iafa_fom1(const iafa_fom_inputs *inputs, double *value) {
  if (inputs == nullptr || value == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *value = iafa::fom1({inputs->energy_nj, inputs->steps, inputs->nmed,
                         inputs->psnr_avg_db, inputs->baseline_steps,
                         inputs->baseline_energy_nj});
  });
}

iafa_status iafa_fom2(const iafa_fom_inputs *inputs, double *value) {
  if (inputs == nullptr || value == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    *value = iafa::fom2({inputs->energy_nj, inputs->steps, inputs->nmed,
                         inputs->psnr_avg_db, inputs->baseline_steps,
                         inputs->baseline_energy_nj});
  });
}

iafa_status iafa_reproduce_table(int table, char *buffer, size_t buffer_size,
                                 size_t *needed, int *ok) {
  if (ok == nullptr)
    return IAFA_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const iafa::ReproduceResult result = iafa::reproduce_table(table);
    *ok = result.ok ? 1 : 0;
    if (needed)
      *needed = result.report.size() + 1;
    if (buffer != nullptr && buffer_size > 0) {
      const size_t count = result.report.size() < buffer_size - 1
                               ? result.report.size()
                               : buffer_size - 1;
      std::memcpy(buffer, result.report.data(), count);
      buffer[count] = '\0';
    }
  });
}

} // extern "C"
