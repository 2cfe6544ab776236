#include "core/reproduce.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "core/cells.hpp"
#include "core/designer.hpp"
#include "core/error_analysis.hpp"
#include "core/fom.hpp"
#include "core/rca.hpp"
#include "core/reference.hpp"

namespace iafa {

namespace {

class Reporter {
public:
  void check(bool ok, const std::string &line) {
    lines_ << (ok ? "  ok   " : "  FAIL ") << line << '\n';
    all_ok_ = all_ok_ && ok;
  }
  void note(const std::string &line) { lines_ << "       " << line << '\n'; }
  bool all_ok() const { return all_ok_; }
  std::string str() const { return lines_.str(); }

private:
  std::ostringstream lines_;
  bool all_ok_ = true;
};

std::string fmt(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

bool rel_close(double computed, double expected, double rel_tol) {
  return std::fabs(computed - expected) <= rel_tol * std::fabs(expected);
}

void check_design_family(Reporter &rep,
                         const std::vector<TruthTable8> &family,
                         const reference::DesignRow *expected,
                         std::size_t expected_count,
                         const char *const *accepted_names,
                         std::size_t accepted_count) {
  for (std::size_t t = 0; t < expected_count; ++t) {
    const TruthTable8 &table = family[t];
    bool rows_ok = table.name == expected[t].name;
    for (int i = 0; i < 8 && rows_ok; ++i)
      rows_ok = table.rows[i] == expected[t].rows[i];
    rep.check(rows_ok, std::string(expected[t].name) + " Sum/Cout rows");
    const CellErrorMetrics metrics = score_table(table);
    rep.check(metrics.ed == expected[t].ed,
              std::string(expected[t].name) + " ED = " +
                  std::to_string(metrics.ed) + " (published " +
                  std::to_string(expected[t].ed) + ")");
  }

  const std::vector<CandidateVerdict> verdicts = filter_candidates(family);
  std::set<std::string> accepted;
  for (const CandidateVerdict &v : verdicts)
    if (v.accepted)
      accepted.insert(v.name);
  std::set<std::string> wanted;
  for (std::size_t i = 0; i < accepted_count; ++i)
    wanted.insert(accepted_names[i]);
  std::string got;
  for (const std::string &name : accepted)
    got += (got.empty() ? "" : ", ") + name;
  rep.check(accepted == wanted, "accepted candidates: {" + got + "}");
}

void reproduce_4(Reporter &rep) {
  check_design_family(rep, generate_cout_flip_family(),
                      reference::kCoutFlipTables.data(),
                      reference::kCoutFlipTables.size(),
                      reference::kCoutFlipAccepted.data(),
                      reference::kCoutFlipAccepted.size());
}

void reproduce_5(Reporter &rep) {
  check_design_family(rep, generate_sum_flip_family(),
                      reference::kSumFlipTables.data(),
                      reference::kSumFlipTables.size(),
                      reference::kSumFlipAccepted.data(),
                      reference::kSumFlipAccepted.size());
}

void reproduce_9(Reporter &rep) {
  for (auto [table, label] :
       {std::pair{cell_truth_table(CellKind::Ecis), "behavioural"},
        std::pair{extract_truth_table(CellKind::Ecis), "executed"}}) {
    bool rows_ok = true;
    for (int i = 0; i < 8; ++i)
      rows_ok = rows_ok && table.rows[i] == reference::kEcisTable.rows[i];
    rep.check(rows_ok, std::string("ECIS ") + label + " Sum/Cout rows");
  }
  rep.check(score_table(cell_truth_table(CellKind::Ecis)).ed ==
                reference::kEcisTable.ed,
            "ECIS ED = 2");
}

void reproduce_11(Reporter &rep) {
  for (const reference::CellCriteriaRow &row : reference::kCellCriteria) {
    const CellKind kind = cell_from_name(row.name);
    const MicroProgram program = cell_program(kind);
    rep.check(program.step_count() == row.steps,
              std::string(row.name) + " steps = " +
                  std::to_string(program.step_count()));
    rep.check(program.memristor_count() == row.memristors,
              std::string(row.name) + " memristors = " +
                  std::to_string(program.memristor_count()));
    const CellErrorMetrics metrics = cell_metrics(kind);
    rep.check(metrics.ed == row.ed,
              std::string(row.name) + " ED = " + std::to_string(metrics.ed));
    rep.check(row.med.matches(metrics.med),
              std::string(row.name) + " MED = " + fmt(metrics.med) +
                  " (published " + fmt(row.med.value) + ")");
    rep.check(row.nmed.matches(metrics.nmed),
              std::string(row.name) + " NMED = " + fmt(metrics.nmed) +
                  " (published " + fmt(row.nmed.value) + ")");
  }
}

void reproduce_13(Reporter &rep) {
  for (const reference::SerialAdderRow &row : reference::kExactAdders) {
    const int computed = row.steps_per_cell * 8;
    rep.check(computed == row.steps_8bit_printed,
              std::string(row.name) + " 8-bit steps = " +
                  std::to_string(computed) + " (published " +
                  std::to_string(row.steps_8bit_printed) + ")");
  }
  for (const reference::ApproxAdderRow &row : reference::kApproxAdders) {
    for (int scenario = 1; scenario <= 3; ++scenario) {
      const int approx_cells = scenario + 2;
      const int exact_cells = 8 - approx_cells;
      const int computed = row.steps_per_cell * approx_cells + 22 * exact_cells;
      rep.check(computed == row.steps_printed[scenario - 1],
                std::string(row.name) + " scenario " +
                    std::to_string(scenario) + " steps = " +
                    std::to_string(computed) + " (published " +
                    std::to_string(row.steps_printed[scenario - 1]) + ")");
    }
  }
  rep.check(memristor_count(8) == 19, "memristors 2n+3 = 19 at n = 8");
}

void reproduce_15(Reporter &rep) {
  for (const reference::ScenarioMetricsRow &row : reference::kScenarioMetrics) {
    const RcaConfig config =
        scenario_config(cell_from_name(row.name), row.scenario);
    const ErrorReport report = exhaustive_metrics(config);
    rep.check(row.med.matches(report.med),
              std::string(row.name) + " scenario " +
                  std::to_string(row.scenario) + " MED = " + fmt(report.med) +
                  " (published " + fmt(row.med.value) + ")");
    rep.check(row.nmed.matches(report.nmed),
              std::string(row.name) + " scenario " +
                  std::to_string(row.scenario) + " NMED = " +
                  fmt(report.nmed) + " (published " + fmt(row.nmed.value) +
                  ")");
  }
}

void reproduce_fom(Reporter &rep, bool second) {
  for (const reference::FomRow &row : reference::kFomRows) {
    FomInputs inputs;
    inputs.energy_nj = row.energy_nj;
    inputs.steps = row.steps;
    inputs.nmed = row.nmed;
    inputs.psnr_avg_db = (row.psnr[0] + row.psnr[1] + row.psnr[2]) / 3.0;
    const double computed = second ? fom2(inputs) : fom1(inputs);
    const double expected = second ? row.fom2_printed : row.fom1_printed;
    const double tol = row.proposed ? reference::kFomRelTolProposed
                                    : reference::kFomRelTolContext;
    rep.check(rel_close(computed, expected, tol),
              std::string(row.name) + (second ? " FOM2 = " : " FOM1 = ") +
                  fmt(computed) + " (published " + fmt(expected) +
                  (row.proposed ? ", tol 4 significant digits)"
                                : ", context row, tol 1%)"));
  }
}

} // namespace

ReproduceResult reproduce_table(int table) {
  Reporter rep;
  switch (table) {
  case 4:
    reproduce_4(rep);
    break;
  case 5:
    reproduce_5(rep);
    break;
  case 9:
    reproduce_9(rep);
    break;
  case 11:
    reproduce_11(rep);
    break;
  case 13:
    reproduce_13(rep);
    break;
  case 15:
    reproduce_15(rep);
    break;
  case 19:
    reproduce_fom(rep, false);
    break;
  case 20:
    reproduce_fom(rep, true);
    break;
  default:
    throw std::invalid_argument(
        "unknown reference table " + std::to_string(table) +
        " (supported: 4, 5, 9, 11, 13, 15, 19, 20)");
  }
  ReproduceResult result;
  result.table = table;
  result.ok = rep.all_ok();
  result.report = rep.str();
  return result;
}

} // namespace iafa
