#include "core/cells.hpp"

#include <stdexcept>

namespace iafa {

TruthTable8 exact_truth_table() {
  TruthTable8 table;
  table.name = "EXACT";
  table.provenance = "transcribed";
  for (int i = 0; i < 8; ++i) {
    const Bit a = (i >> 2) & 1, b = (i >> 1) & 1, c = i & 1;
    table.rows[i] = {static_cast<Bit>(a ^ b ^ c),
                     static_cast<Bit>((a & b) | (a & c) | (b & c))};
  }
  return table;
}

const CellInfo &cell_info(CellKind kind) {
  static const CellInfo infos[] = {
      {"ICIS1", 6, 4, 1, 0.50709},
      {"ICIS2", 6, 4, 1, 0.50705},
      {"ICIS3", 6, 4, 1, 0.50705},
      {"ECIS", 12, 5, 2, 1.02631},
      {"EXACT", 22, 5, 2, 1.90859},
  };
  return infos[static_cast<int>(kind)];
}

CellKind cell_from_name(std::string_view name) {
  auto lower = [](char ch) {
    return ch >= 'A' && ch <= 'Z' ? static_cast<char>(ch - 'A' + 'a') : ch;
  };
  auto matches = [&](std::string_view candidate) {
    if (name.size() != candidate.size())
      return false;
    for (std::size_t i = 0; i < name.size(); ++i)
      if (lower(name[i]) != lower(candidate[i]))
        return false;
    return true;
  };
  for (CellKind kind : {CellKind::Icis1, CellKind::Icis2, CellKind::Icis3,
                        CellKind::Ecis, CellKind::Exact}) {
    if (matches(cell_info(kind).name))
      return kind;
  }
  throw std::invalid_argument("unknown cell kind '" + std::string(name) + "'");
}

namespace {

// Register layout of the 4-memristor cells: A_in, B_in, C_in, S1.
// ECIS adds S2. Primed names in the source tables denote overwrites of the
// same device, so registers are identified positionally.
enum { kA = 0, kB = 1, kC = 2, kS1 = 3, kS2 = 4 };

MicroProgram make_icis1() {
  MicroProgram p;
  p.name = "ICIS1";
  p.registers = {"A_in", "B_in", "C_in", "S1"};
  p.ops = {
      MicroOp::reset(kS1),      // S1 = 0
      MicroOp::imply(kA, kS1),  // S1 = NOT(A)
      MicroOp::imply(kB, kS1),  // S1 = B -> NOT(A)
      MicroOp::imply(kS1, kC),  // C  = Cout
      MicroOp::reset(kA),       // A  = 0
      MicroOp::imply(kC, kA),   // A  = Sum = NOT(Cout)
  };
  p.output_sum = kA;
  p.output_cout = kC;
  p.work_registers = 1;
  return p;
}

MicroProgram make_icis2() {
  MicroProgram p;
  p.name = "ICIS2";
  p.registers = {"A_in", "B_in", "C_in", "S1"};
  p.ops = {
      MicroOp::reset(kS1),      // S1 = 0
      MicroOp::imply(kA, kS1),  // S1 = NOT(A)
      MicroOp::imply(kC, kS1),  // S1 = C -> NOT(A)
      MicroOp::imply(kS1, kB),  // B  = Cout
      MicroOp::reset(kA),       // A  = 0
      MicroOp::imply(kB, kA),   // A  = Sum = NOT(Cout)
  };
  p.output_sum = kA;
  p.output_cout = kB;
  p.work_registers = 1;
  return p;
}

MicroProgram make_icis3() {
  MicroProgram p;
  p.name = "ICIS3";
  p.registers = {"A_in", "B_in", "C_in", "S1"};
  p.ops = {
      MicroOp::reset(kS1),      // S1 = 0
      MicroOp::imply(kB, kS1),  // S1 = NOT(B)
      MicroOp::imply(kC, kS1),  // S1 = C -> NOT(B)
      MicroOp::imply(kS1, kA),  // A  = Cout
      MicroOp::reset(kB),       // B  = 0
      MicroOp::imply(kA, kB),   // B  = Sum = NOT(Cout)
  };
  p.output_sum = kB;
  p.output_cout = kA;
  p.work_registers = 1;
  return p;
}

MicroProgram make_ecis() {
  MicroProgram p;
  p.name = "ECIS";
  p.registers = {"A_in", "B_in", "C_in", "S1", "S2"};
  p.ops = {
      MicroOp::reset(kS1),      // S1 = 0
      MicroOp::reset(kS2),      // S2 = 0
      MicroOp::imply(kA, kS1),  // S1 = NOT(A)
      MicroOp::imply(kC, kS2),  // S2 = NOT(C)
      MicroOp::imply(kS2, kA),  // A  = NOT(C) -> A
      MicroOp::imply(kC, kS1),  // S1 = C -> NOT(A)
      MicroOp::imply(kS1, kB),  // B  = (C -> NOT(A)) -> B
      MicroOp::reset(kC),       // C  = 0
      MicroOp::imply(kB, kC),   // C  = NOT((C -> NOT(A)) -> B)
      MicroOp::imply(kA, kC),   // C  = Sum (tenth step)
      MicroOp::reset(kB),       // B  = 0
      MicroOp::imply(kC, kB),   // B  = Cout = NOT(Sum) (twelfth step)
  };
  p.output_sum = kC;
  p.output_cout = kB;
  p.work_registers = 2;
  return p;
}

} // namespace

MicroProgram cell_program(CellKind kind) {
  switch (kind) {
  case CellKind::Icis1:
    return make_icis1();
  case CellKind::Icis2:
    return make_icis2();
  case CellKind::Icis3:
    return make_icis3();
  case CellKind::Ecis:
    return make_ecis();
  case CellKind::Exact:
    break;
  }
  throw std::invalid_argument(
      "EXACT is behavioural only; it has no serial micro-op program here");
}

std::pair<Bit, Bit> behavioral_cell(CellKind kind, Bit a, Bit b, Bit c) {
  a &= 1;
  b &= 1;
  c &= 1;
  // Transcribed Sum columns of the proposed cells; Cout = NOT(Sum) for the
  // ICIS cells and the exact majority for ECIS.
  static constexpr Bit kSumIcis1[8] = {1, 0, 1, 0, 1, 0, 0, 0};
  static constexpr Bit kSumIcis2[8] = {1, 1, 0, 0, 1, 0, 0, 0};
  static constexpr Bit kSumIcis3[8] = {1, 1, 1, 0, 0, 0, 0, 0};
  static constexpr Bit kSumEcis[8] = {1, 1, 1, 0, 1, 0, 0, 0};

  const int row = input_index(a, b, c);
  const Bit exact_cout = static_cast<Bit>((a & b) | (a & c) | (b & c));
  switch (kind) {
  case CellKind::Exact:
    return {static_cast<Bit>(a ^ b ^ c), exact_cout};
  case CellKind::Ecis:
    return {kSumEcis[row], exact_cout};
  case CellKind::Icis1:
    return {kSumIcis1[row], static_cast<Bit>(kSumIcis1[row] ^ 1)};
  case CellKind::Icis2:
    return {kSumIcis2[row], static_cast<Bit>(kSumIcis2[row] ^ 1)};
  case CellKind::Icis3:
    return {kSumIcis3[row], static_cast<Bit>(kSumIcis3[row] ^ 1)};
  }
  throw std::invalid_argument("unknown cell kind");
}

TruthTable8 cell_truth_table(CellKind kind) {
  TruthTable8 table;
  table.name = cell_info(kind).name;
  table.provenance = "transcribed";
  for (int i = 0; i < 8; ++i) {
    auto [sum, cout] = behavioral_cell(kind, (i >> 2) & 1, (i >> 1) & 1, i & 1);
    table.rows[i] = {sum, cout};
  }
  return table;
}

TruthTable8 extract_truth_table(CellKind kind) {
  const MicroProgram program = cell_program(kind);
  TruthTable8 table;
  table.name = program.name;
  table.provenance = "executed";
  for (int i = 0; i < 8; ++i) {
    ExecutionTrace trace =
        run_program(program, (i >> 2) & 1, (i >> 1) & 1, i & 1);
    table.rows[i] = {trace.sum, trace.cout};
  }
  return table;
}

} // namespace iafa
