#pragma once

#include <string>
#include <vector>

#include "core/truth_table.hpp"

namespace iafa {

struct CellErrorMetrics {
  int er_sum_eighths = 0;  // mismatching Sum rows out of 8
  int er_cout_eighths = 0; // mismatching Cout rows out of 8
  int ed = 0;              // sum over rows of |approx value - exact value|
  double er_sum = 0;
  double er_cout = 0;
  double med = 0;  // ed / 8
  double nmed = 0; // med / 3 (max output of the exact cell)
};

CellErrorMetrics score_table(const TruthTable8 &table);

/// AFA1..AFA8: the exact Cout inverted in exactly one input state, with
/// Sum = NOT(Cout) everywhere.
std::vector<TruthTable8> generate_cout_flip_family();

/// AFA9..AFA16: the exact Sum inverted in exactly one input state, with
/// Cout = NOT(Sum) everywhere.
std::vector<TruthTable8> generate_sum_flip_family();

struct FilterConstraints {
  int max_er_sum_eighths = 3;  // ER_Sum <= 3/8
  int max_er_cout_eighths = 1; // ER_Cout <= 1/8
  int max_ed = 3;
};

struct CandidateVerdict {
  std::string name;
  std::string provenance;
  CellErrorMetrics metrics;
  bool metric_pass = false;
  bool accepted = false; // metric_pass and not a prior-art duplicate
  bool cost_flagged = false;
  std::string duplicate_of;          // prior-art table it coincides with
  std::vector<std::string> reasons;  // rejection reasons / annotations
};

/// Applies the acceptability constraints, drops candidates whose table
/// coincides with a previously published design, and annotates the
/// complex-output candidates whose serial implementation would need at
/// least 17 steps and five memristors.
std::vector<CandidateVerdict>
filter_candidates(const std::vector<TruthTable8> &family,
                  const FilterConstraints &constraints = {});

struct EquivalenceFinding {
  std::string left;
  std::string right;
  bool identical;
};

/// Literal table comparisons between the accepted sum-flip candidates and
/// the accepted end-row cout-flip candidates (AFA9/AFA16 vs AFA1/AFA8).
std::vector<EquivalenceFinding> sum_flip_equivalence_report();

} // namespace iafa
