#include "core/logic.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace iafa {

namespace {

void check_index(const LogicRow &row, int index, const char *what) {
  if (index < 0 || static_cast<std::size_t>(index) >= row.size())
    throw std::out_of_range(std::string(what) + " register index " +
                            std::to_string(index) + " out of range");
}

} // namespace

void exec_false(LogicRow &row, int target) {
  check_index(row, target, "FALSE");
  row.cells[target] = 0;
  ++row.step_counter;
}

void exec_imply(LogicRow &row, int p, int q) {
  check_index(row, p, "IMPLY source");
  check_index(row, q, "IMPLY target");
  if (p == q)
    throw std::invalid_argument("IMPLY requires distinct registers, got p = q = " +
                                std::to_string(p));
  row.cells[q] = static_cast<Bit>((row.cells[p] ^ 1) | row.cells[q]);
  ++row.step_counter;
}

ValidationReport validate_program(const MicroProgram &program) {
  ValidationReport report;
  report.op_count = program.step_count();
  report.work_registers = program.work_registers;
  const int nregs = program.memristor_count();

  auto bad_index = [&](int index) { return index < 0 || index >= nregs; };
  auto add = [&](Violation::Kind kind, int step, std::string message) {
    report.violations.push_back({kind, step, std::move(message)});
  };

  std::vector<bool> written(static_cast<std::size_t>(nregs > 0 ? nregs : 0), false);
  int step = 0;
  for (const MicroOp &op : program.ops) {
    ++step;
    if (op.kind == OpKind::Imply && bad_index(op.source))
      add(Violation::Kind::IndexOutOfRange, step,
          "IMPLY source " + std::to_string(op.source) + " out of range");
    if (bad_index(op.target))
      add(Violation::Kind::IndexOutOfRange, step,
          "target " + std::to_string(op.target) + " out of range");
    else
      written[op.target] = true;
    if (op.kind == OpKind::Imply && op.source == op.target)
      add(Violation::Kind::InvalidOperand, step,
          "IMPLY source and target are both " + std::to_string(op.target));
  }

  for (auto [binding, label] : {std::pair{program.output_sum, "Sum"},
                                std::pair{program.output_cout, "Cout"}}) {
    if (bad_index(binding))
      add(Violation::Kind::UnboundOutput, 0,
          std::string(label) + " output binding out of range");
    else if (!written[binding])
      add(Violation::Kind::UnboundOutput, 0,
          std::string(label) + " output register '" +
              program.registers[binding] + "' is never written");
  }

  report.valid = report.violations.empty();
  return report;
}

Bit ExecutionTrace::state(int step, int reg) const {
  const auto &row = step == 0 ? initial : snapshots.at(step - 1);
  return row.at(reg);
}

std::string ExecutionTrace::to_csv() const {
  std::ostringstream out;
  out << "step,time_us,reg_name,logic_state\n";
  const int nregs = static_cast<int>(registers.size());
  for (int step = 0; step <= steps(); ++step) {
    char time_buf[32];
    std::snprintf(time_buf, sizeof(time_buf), "%g", step * kStepMicroseconds);
    for (int reg = 0; reg < nregs; ++reg)
      out << step << ',' << time_buf << ',' << registers[reg] << ','
          << int(state(step, reg)) << '\n';
  }
  return out.str();
}

ExecutionTrace run_program(const MicroProgram &program, Bit a, Bit b, Bit c) {
  ValidationReport report = validate_program(program);
  if (!report.valid)
    throw std::invalid_argument("program '" + program.name + "' is invalid: " +
                                report.violations.front().message);

  LogicRow row(program.registers.size());
  row.cells[program.input_a] = a & 1;
  row.cells[program.input_b] = b & 1;
  row.cells[program.input_c] = c & 1;

  ExecutionTrace trace;
  trace.program_name = program.name;
  trace.registers = program.registers;
  trace.initial = row.cells;
  trace.snapshots.reserve(program.ops.size());
  for (const MicroOp &op : program.ops) {
    if (op.kind == OpKind::False)
      exec_false(row, op.target);
    else
      exec_imply(row, op.source, op.target);
    trace.snapshots.push_back(row.cells);
  }
  trace.sum = row.cells[program.output_sum];
  trace.cout = row.cells[program.output_cout];
  return trace;
}

} // namespace iafa
