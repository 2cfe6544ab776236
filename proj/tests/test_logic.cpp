#include <doctest.h>

#include <stdexcept>

#include "core/cells.hpp"
#include "core/logic.hpp"

using namespace iafa;

TEST_CASE("IMPLY matches the gate truth table") {
  // (p, q) -> q' for all four operand states.
  const int expected[2][2] = {{1, 1}, {0, 1}}; // expected[p][q]
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) {
      LogicRow row(2);
      row.cells[0] = static_cast<Bit>(p);
      row.cells[1] = static_cast<Bit>(q);
      exec_imply(row, 0, 1);
      CHECK(row.cells[1] == expected[p][q]);
      CHECK(row.cells[0] == p); // p is never modified
      CHECK(row.step_counter == 1);
    }
}

TEST_CASE("FALSE resets the target and only the target") {
  LogicRow row(3);
  row.cells = {1, 1, 0};
  exec_false(row, 0);
  CHECK(row.cells == std::vector<Bit>{0, 1, 0});
  CHECK(row.step_counter == 1);
  exec_false(row, 0); // idempotent
  CHECK(row.cells[0] == 0);
  CHECK(row.step_counter == 2);
}

TEST_CASE("two-step inversion: FALSE(q) then IMPLY(p,q) computes NOT(p)") {
  for (int p = 0; p < 2; ++p) {
    LogicRow row(2);
    row.cells[0] = static_cast<Bit>(p);
    row.cells[1] = 1;
    exec_false(row, 1);
    exec_imply(row, 0, 1);
    CHECK(row.cells[1] == (p ^ 1));
    CHECK(row.step_counter == 2);
  }
}

TEST_CASE("operand errors") {
  LogicRow row(2);
  CHECK_THROWS_AS(exec_false(row, 2), std::out_of_range);
  CHECK_THROWS_AS(exec_false(row, -1), std::out_of_range);
  CHECK_THROWS_AS(exec_imply(row, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(exec_imply(row, 1, 1), std::invalid_argument);
}

TEST_CASE("run_program reproduces the documented output cases") {
  SUBCASE("ICIS1 on 001") {
    ExecutionTrace trace = run_program(cell_program(CellKind::Icis1), 0, 0, 1);
    CHECK(trace.sum == 0);
    CHECK(trace.cout == 1);
    CHECK(trace.steps() == 6);
  }
  SUBCASE("ECIS on 101") {
    ExecutionTrace trace = run_program(cell_program(CellKind::Ecis), 1, 0, 1);
    CHECK(trace.sum == 0);
    CHECK(trace.cout == 1);
    CHECK(trace.steps() == 12);
  }
  SUBCASE("ICIS3 on 111") {
    ExecutionTrace trace = run_program(cell_program(CellKind::Icis3), 1, 1, 1);
    CHECK(trace.sum == 0);
    CHECK(trace.cout == 1);
  }
}

TEST_CASE("trace length equals the declared step count on every input") {
  for (CellKind kind : kProposedCells) {
    const MicroProgram program = cell_program(kind);
    for (int i = 0; i < 8; ++i) {
      ExecutionTrace trace =
          run_program(program, (i >> 2) & 1, (i >> 1) & 1, i & 1);
      CHECK(trace.steps() == program.step_count());
    }
  }
}

TEST_CASE("registers not named by an op are unchanged by that op") {
  for (CellKind kind : kProposedCells) {
    const MicroProgram program = cell_program(kind);
    for (int i = 0; i < 8; ++i) {
      ExecutionTrace trace =
          run_program(program, (i >> 2) & 1, (i >> 1) & 1, i & 1);
      for (int step = 1; step <= trace.steps(); ++step) {
        const MicroOp &op = program.ops[step - 1];
        for (int reg = 0; reg < program.memristor_count(); ++reg) {
          if (reg == op.target)
            continue;
          CHECK(trace.state(step, reg) == trace.state(step - 1, reg));
        }
      }
    }
  }
}

TEST_CASE("validate_program") {
  SUBCASE("cell programs are valid") {
    const ValidationReport report =
        validate_program(cell_program(CellKind::Icis1));
    CHECK(report.valid);
    CHECK(report.op_count == 6);
    CHECK(report.work_registers == 1);
  }
  SUBCASE("IMPLY with identical operands is flagged") {
    MicroProgram bad = cell_program(CellKind::Icis1);
    bad.ops[2] = MicroOp::imply(3, 3);
    const ValidationReport report = validate_program(bad);
    CHECK_FALSE(report.valid);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == Violation::Kind::InvalidOperand);
    CHECK(report.violations[0].step == 3);
    CHECK_THROWS_AS(run_program(bad, 0, 0, 0), std::invalid_argument);
  }
  SUBCASE("unwritten output register is flagged") {
    MicroProgram bad;
    bad.name = "no-output";
    bad.registers = {"A_in", "B_in", "C_in", "S1"};
    bad.ops = {MicroOp::reset(3), MicroOp::imply(0, 3)};
    bad.output_sum = 1;
    bad.output_cout = 2;
    const ValidationReport report = validate_program(bad);
    CHECK_FALSE(report.valid);
    CHECK(report.violations.size() == 2);
    for (const Violation &v : report.violations)
      CHECK(v.kind == Violation::Kind::UnboundOutput);
  }
  SUBCASE("out-of-range indices are flagged") {
    MicroProgram bad = cell_program(CellKind::Icis1);
    bad.ops[0] = MicroOp::reset(9);
    const ValidationReport report = validate_program(bad);
    CHECK_FALSE(report.valid);
    CHECK(report.violations[0].kind == Violation::Kind::IndexOutOfRange);
  }
}

TEST_CASE("trace CSV layout") {
  ExecutionTrace trace = run_program(cell_program(CellKind::Icis1), 1, 1, 0);
  const std::string csv = trace.to_csv();
  CHECK(csv.rfind("step,time_us,reg_name,logic_state\n", 0) == 0);
  // 7 row states (initial + 6 steps) x 4 registers + header.
  std::size_t lines = 0;
  for (char ch : csv)
    lines += ch == '\n';
  CHECK(lines == 1 + 7 * 4);
  // Step 2 is stamped at 60 us.
  CHECK(csv.find("\n2,60,A_in,") != std::string::npos);
  CHECK(csv.find("\n6,180,") != std::string::npos);
}
