#pragma once

#include <string_view>
#include <utility>

#include "core/logic.hpp"
#include "core/truth_table.hpp"

namespace iafa {

enum class CellKind { Icis1, Icis2, Icis3, Ecis, Exact };

inline constexpr CellKind kProposedCells[] = {CellKind::Icis1, CellKind::Icis2,
                                              CellKind::Icis3, CellKind::Ecis};

struct CellInfo {
  const char *name;
  int steps;
  int memristors;
  int work_registers;
  double energy_nj; // reference per-cell energy
};

const CellInfo &cell_info(CellKind kind);
CellKind cell_from_name(std::string_view name); // throws on unknown names

/// Serial micro-op program of a proposed cell. EXACT has no serial step
/// table here and throws std::invalid_argument.
MicroProgram cell_program(CellKind kind);

/// Behavioural evaluation. EXACT returns (a xor b xor c, majority).
std::pair<Bit, Bit> behavioral_cell(CellKind kind, Bit a, Bit b, Bit c);

/// Truth table of behavioral_cell.
TruthTable8 cell_truth_table(CellKind kind);

/// Truth table obtained by executing the cell's program on all 8 inputs.
TruthTable8 extract_truth_table(CellKind kind);

} // namespace iafa
