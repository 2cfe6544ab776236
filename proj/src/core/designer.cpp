#include "core/designer.hpp"

#include <cstdlib>

namespace iafa {

namespace {

// Published serial approximate full adders whose truth tables coincide with
// part of the cout-flip family. Rows transcribed in 000..111 input order.
struct PriorArt {
  const char *name;
  TtRow rows[8];
};

const PriorArt kPriorArt[] = {
    {"SIAFA1",
     {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {1, 0}, {0, 1}, {0, 1}}},
    {"SIAFA3",
     {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}}},
    {"SIAFA4",
     {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}, {0, 1}}},
};

const char *prior_art_duplicate(const TruthTable8 &table) {
  for (const PriorArt &entry : kPriorArt) {
    bool same = true;
    for (int i = 0; i < 8; ++i)
      if (!(table.rows[i] == entry.rows[i])) {
        same = false;
        break;
      }
    if (same)
      return entry.name;
  }
  return nullptr;
}

// AFA1/AFA8 (and their sum-flip twins) have no two-gate NAND form; their
// serial algorithms take at least 17 steps and five memristors, so they are
// flagged as costing more than the 6-step candidates.
bool needs_long_implementation(const TruthTable8 &table) {
  const TruthTable8 exact = exact_truth_table();
  int sum_mismatches = 0;
  for (int i = 0; i < 8; ++i)
    sum_mismatches += table.rows[i].sum != exact.rows[i].sum;
  return sum_mismatches == 1;
}

} // namespace

CellErrorMetrics score_table(const TruthTable8 &table) {
  const TruthTable8 exact = exact_truth_table();
  CellErrorMetrics metrics;
  for (int i = 0; i < 8; ++i) {
    metrics.er_sum_eighths += table.rows[i].sum != exact.rows[i].sum;
    metrics.er_cout_eighths += table.rows[i].cout != exact.rows[i].cout;
    metrics.ed += std::abs(table.rows[i].value() - exact.rows[i].value());
  }
  metrics.er_sum = metrics.er_sum_eighths / 8.0;
  metrics.er_cout = metrics.er_cout_eighths / 8.0;
  metrics.med = metrics.ed / 8.0;
  metrics.nmed = metrics.med / 3.0;
  return metrics;
}

std::vector<TruthTable8> generate_cout_flip_family() {
  const TruthTable8 exact = exact_truth_table();
  std::vector<TruthTable8> family;
  family.reserve(8);
  for (int k = 0; k < 8; ++k) {
    TruthTable8 table;
    table.name = "AFA" + std::to_string(k + 1);
    table.provenance = "cout-flip(" + std::to_string(k) + ")";
    for (int i = 0; i < 8; ++i) {
      const Bit cout = static_cast<Bit>(exact.rows[i].cout ^ (i == k ? 1 : 0));
      table.rows[i] = {static_cast<Bit>(cout ^ 1), cout};
    }
    family.push_back(std::move(table));
  }
  return family;
}

std::vector<TruthTable8> generate_sum_flip_family() {
  const TruthTable8 exact = exact_truth_table();
  std::vector<TruthTable8> family;
  family.reserve(8);
  for (int k = 0; k < 8; ++k) {
    TruthTable8 table;
    table.name = "AFA" + std::to_string(k + 9);
    table.provenance = "sum-flip(" + std::to_string(k) + ")";
    for (int i = 0; i < 8; ++i) {
      const Bit sum = static_cast<Bit>(exact.rows[i].sum ^ (i == k ? 1 : 0));
      table.rows[i] = {sum, static_cast<Bit>(sum ^ 1)};
    }
    family.push_back(std::move(table));
  }
  return family;
}

std::vector<CandidateVerdict>
filter_candidates(const std::vector<TruthTable8> &family,
                  const FilterConstraints &constraints) {
  std::vector<CandidateVerdict> verdicts;
  verdicts.reserve(family.size());
  for (const TruthTable8 &table : family) {
    CandidateVerdict verdict;
    verdict.name = table.name;
    verdict.provenance = table.provenance;
    verdict.metrics = score_table(table);

    verdict.metric_pass = true;
    if (verdict.metrics.er_sum_eighths > constraints.max_er_sum_eighths) {
      verdict.metric_pass = false;
      verdict.reasons.push_back(
          "ER_Sum " + std::to_string(verdict.metrics.er_sum_eighths) +
          "/8 exceeds " + std::to_string(constraints.max_er_sum_eighths) + "/8");
    }
    if (verdict.metrics.er_cout_eighths > constraints.max_er_cout_eighths) {
      verdict.metric_pass = false;
      verdict.reasons.push_back(
          "ER_Cout " + std::to_string(verdict.metrics.er_cout_eighths) +
          "/8 exceeds " + std::to_string(constraints.max_er_cout_eighths) +
          "/8");
    }
    if (verdict.metrics.ed > constraints.max_ed) {
      verdict.metric_pass = false;
      verdict.reasons.push_back("ED " + std::to_string(verdict.metrics.ed) +
                                " exceeds " +
                                std::to_string(constraints.max_ed));
    }

    verdict.accepted = verdict.metric_pass;
    if (verdict.metric_pass) {
      if (const char *duplicate = prior_art_duplicate(table)) {
        verdict.accepted = false;
        verdict.duplicate_of = duplicate;
        verdict.reasons.push_back(std::string("truth table identical to ") +
                                  duplicate);
      }
    }
    if (verdict.accepted && needs_long_implementation(table)) {
      verdict.cost_flagged = true;
      verdict.reasons.push_back(
          "serial implementation needs >= 17 steps and 5 memristors");
    }
    verdicts.push_back(std::move(verdict));
  }
  return verdicts;
}

std::vector<EquivalenceFinding> sum_flip_equivalence_report() {
  const std::vector<TruthTable8> cout_flip = generate_cout_flip_family();
  const std::vector<TruthTable8> sum_flip = generate_sum_flip_family();
  std::vector<EquivalenceFinding> findings;
  for (int left : {0, 7})     // AFA9, AFA16
    for (int right : {0, 7})  // AFA1, AFA8
      findings.push_back({sum_flip[left].name, cout_flip[right].name,
                          sum_flip[left] == cout_flip[right]});
  return findings;
}

} // namespace iafa
