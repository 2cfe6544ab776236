#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace iafa {

using Bit = std::uint8_t;

/// Duration of one computational step in microseconds.
inline constexpr double kStepMicroseconds = 30.0;

/// Serial row of memristor logic states. 0 = HRS, 1 = LRS.
struct LogicRow {
  std::vector<Bit> cells;
  std::uint64_t step_counter = 0;

  explicit LogicRow(std::size_t n) : cells(n, 0) {}
  std::size_t size() const { return cells.size(); }
};

/// Unconditional reset of `target` to logic 0. One computational step.
void exec_false(LogicRow &row, int target);

/// q := NOT(p) OR q. p is left unchanged. One computational step.
void exec_imply(LogicRow &row, int p, int q);

enum class OpKind : std::uint8_t { False, Imply };

struct MicroOp {
  OpKind kind;
  int source; // IMPLY p; unused for FALSE
  int target; // FALSE target / IMPLY q

  static MicroOp reset(int target) { return {OpKind::False, -1, target}; }
  static MicroOp imply(int source, int target) {
    return {OpKind::Imply, source, target};
  }
};

/// Ordered FALSE/IMPLY sequence over named registers, with input and output
/// bindings. Output registers may alias input registers; that aliasing is
/// what keeps an n-bit adder at 2n+3 memristors.
struct MicroProgram {
  std::string name;
  std::vector<std::string> registers;
  std::vector<MicroOp> ops;
  int input_a = 0;
  int input_b = 1;
  int input_c = 2;
  int output_sum = -1;
  int output_cout = -1;
  int work_registers = 0;

  int step_count() const { return static_cast<int>(ops.size()); }
  int memristor_count() const { return static_cast<int>(registers.size()); }
};

struct Violation {
  enum class Kind { IndexOutOfRange, InvalidOperand, UnboundOutput };
  Kind kind;
  int step; // 1-based op index, 0 for program-level violations
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  int op_count = 0;
  int work_registers = 0;
  std::vector<Violation> violations;
};

/// Structural checks: register bounds, IMPLY operand distinctness, output
/// bindings written at least once. Never throws.
ValidationReport validate_program(const MicroProgram &program);

/// Row snapshots after every micro-op, plus the final output bits.
struct ExecutionTrace {
  std::string program_name;
  std::vector<std::string> registers;
  std::vector<Bit> initial;
  std::vector<std::vector<Bit>> snapshots; // one row state per op
  Bit sum = 0;
  Bit cout = 0;

  int steps() const { return static_cast<int>(snapshots.size()); }
  /// State of register `reg` after `step` ops (step 0 = initial state).
  Bit state(int step, int reg) const;
  /// Long-format CSV: step, time_us (step x 30), reg_name, logic_state.
  std::string to_csv() const;
};

/// Executes a validated program on a fresh row loaded with a, b, c.
/// Throws std::invalid_argument when validation fails.
ExecutionTrace run_program(const MicroProgram &program, Bit a, Bit b, Bit c);

} // namespace iafa
