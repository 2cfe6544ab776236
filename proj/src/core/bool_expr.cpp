#include "core/bool_expr.hpp"

#include <stdexcept>

#include "core/cells.hpp"

namespace iafa {

struct BoolExpr::Impl {
  Node node;
  Input input = Input::A;
  Bit value = 0;
  std::shared_ptr<const Impl> lhs;
  std::shared_ptr<const Impl> rhs;
};

namespace {

Bit eval_impl(const BoolExpr::Impl &node, Bit a, Bit b, Bit c) {
  switch (node.node) {
  case BoolExpr::Node::Var:
    switch (node.input) {
    case BoolExpr::Input::A:
      return a;
    case BoolExpr::Input::B:
      return b;
    case BoolExpr::Input::C:
      return c;
    }
    break;
  case BoolExpr::Node::Const:
    return node.value;
  case BoolExpr::Node::Not:
    return eval_impl(*node.lhs, a, b, c) ^ 1;
  case BoolExpr::Node::And:
    return eval_impl(*node.lhs, a, b, c) & eval_impl(*node.rhs, a, b, c);
  case BoolExpr::Node::Or:
    return eval_impl(*node.lhs, a, b, c) | eval_impl(*node.rhs, a, b, c);
  case BoolExpr::Node::Xor:
    return eval_impl(*node.lhs, a, b, c) ^ eval_impl(*node.rhs, a, b, c);
  case BoolExpr::Node::Imply:
    return (eval_impl(*node.lhs, a, b, c) ^ 1) | eval_impl(*node.rhs, a, b, c);
  }
  throw std::logic_error("malformed expression node");
}

std::string print_impl(const BoolExpr::Impl &node) {
  switch (node.node) {
  case BoolExpr::Node::Var:
    return node.input == BoolExpr::Input::A   ? "A"
           : node.input == BoolExpr::Input::B ? "B"
                                              : "C";
  case BoolExpr::Node::Const:
    return node.value ? "1" : "0";
  case BoolExpr::Node::Not:
    return "!" + print_impl(*node.lhs);
  case BoolExpr::Node::And:
    return "(" + print_impl(*node.lhs) + " & " + print_impl(*node.rhs) + ")";
  case BoolExpr::Node::Or:
    return "(" + print_impl(*node.lhs) + " | " + print_impl(*node.rhs) + ")";
  case BoolExpr::Node::Xor:
    return "(" + print_impl(*node.lhs) + " ^ " + print_impl(*node.rhs) + ")";
  case BoolExpr::Node::Imply:
    return "(" + print_impl(*node.lhs) + " -> " + print_impl(*node.rhs) + ")";
  }
  return "?";
}

} // namespace

BoolExpr BoolExpr::var(Input input) {
  auto impl = std::make_shared<Impl>();
  impl->node = Node::Var;
  impl->input = input;
  return BoolExpr(std::move(impl));
}

BoolExpr BoolExpr::constant(Bit value) {
  auto impl = std::make_shared<Impl>();
  impl->node = Node::Const;
  impl->value = value & 1;
  return BoolExpr(std::move(impl));
}

#define IAFA_BINARY(fn, node_kind)                                            \
  BoolExpr BoolExpr::fn(BoolExpr lhs, BoolExpr rhs) {                         \
    auto impl = std::make_shared<Impl>();                                     \
    impl->node = Node::node_kind;                                             \
    impl->lhs = lhs.impl_;                                                    \
    impl->rhs = rhs.impl_;                                                    \
    return BoolExpr(std::move(impl));                                         \
  }

IAFA_BINARY(conjunction, And)
IAFA_BINARY(disjunction, Or)
IAFA_BINARY(exclusive_or, Xor)
IAFA_BINARY(implication, Imply)
#undef IAFA_BINARY

BoolExpr BoolExpr::negation(BoolExpr operand) {
  auto impl = std::make_shared<Impl>();
  impl->node = Node::Not;
  impl->lhs = operand.impl_;
  return BoolExpr(std::move(impl));
}

Bit BoolExpr::eval(Bit a, Bit b, Bit c) const {
  return eval_impl(*impl_, a & 1, b & 1, c & 1);
}

std::string BoolExpr::to_string() const { return print_impl(*impl_); }

Bit eval_expr(const BoolExpr &expr, Bit a, Bit b, Bit c) {
  return expr.eval(a, b, c);
}

namespace {

struct Catalog {
  std::vector<BoolExpr> eq;                         // eq[1..24]
  BoolExpr nand_ab = BoolExpr::constant(0);          // (B -> (A -> 0))
  BoolExpr and_notc_nand_ab = BoolExpr::constant(0); // ((B -> (A -> 0)) -> C) -> 0
  BoolExpr nand_boolean = BoolExpr::constant(0);     // NOT(A & B)
  BoolExpr and_boolean = BoolExpr::constant(0);      // NOT(C) & NOT(A & B)

  Catalog() : eq(25, BoolExpr::constant(0)) {
    using E = BoolExpr;
    const E A = E::var(E::Input::A);
    const E B = E::var(E::Input::B);
    const E C = E::var(E::Input::C);
    const E zero = E::constant(0);
    auto inv = [](E x) { return E::negation(std::move(x)); };
    auto imp = [](E x, E y) { return E::implication(std::move(x), std::move(y)); };
    auto band = [](E x, E y) { return E::conjunction(std::move(x), std::move(y)); };
    auto bor = [](E x, E y) { return E::disjunction(std::move(x), std::move(y)); };
    auto bxor = [](E x, E y) { return E::exclusive_or(std::move(x), std::move(y)); };

    // Boolean forms of the candidate sums; each Cout is the complement.
    eq[1] = bor(band(inv(A), bxor(B, C)), band(inv(C), bxor(A, B)));
    eq[2] = inv(eq[1]);
    eq[3] = band(inv(C), inv(band(B, A)));
    eq[4] = inv(eq[3]);
    eq[5] = band(inv(B), inv(band(A, C)));
    eq[6] = inv(eq[5]);
    eq[7] = band(inv(A), inv(band(B, C)));
    eq[8] = inv(eq[7]);
    eq[9] = bor(bor(band(inv(A), inv(band(B, C))), band(inv(B), inv(C))),
                band(band(A, B), C));
    eq[10] = inv(eq[9]);

    // IMPLY/FALSE rewrites implemented by the serial algorithms.
    eq[11] = imp(imp(B, imp(inv(C), A)),
                 imp(imp(imp(imp(A, C), inv(imp(inv(A), inv(C)))), B), zero));
    eq[12] = imp(eq[11], zero);
    eq[13] = imp(imp(B, imp(A, zero)), C);
    eq[14] = imp(eq[13], zero);
    eq[15] = imp(imp(C, imp(A, zero)), B);
    eq[16] = imp(eq[15], zero);
    eq[17] = imp(imp(C, imp(B, zero)), A);
    eq[18] = imp(eq[17], zero);
    eq[19] = imp(imp(inv(B), C),
                 imp(imp(imp(B, inv(C)), A), inv(imp(B, imp(C, inv(A))))));
    eq[20] = imp(eq[19], zero);

    eq[21] = bor(band(inv(B), inv(band(A, C))), inv(bor(A, C)));
    eq[22] = inv(eq[21]);
    eq[23] = imp(imp(imp(C, zero), A), imp(imp(imp(C, imp(A, zero)), B), zero));
    eq[24] = imp(eq[23], zero);

    nand_ab = imp(B, imp(A, zero));
    and_notc_nand_ab = imp(imp(nand_ab, C), zero);
    nand_boolean = inv(band(A, B));
    and_boolean = band(inv(C), inv(band(A, B)));
  }
};

const Catalog &catalog() {
  static const Catalog instance;
  return instance;
}

bool rows_equal(const BoolExpr &lhs, const BoolExpr &rhs, bool complement,
                std::vector<int> &mismatches) {
  mismatches.clear();
  for (int i = 0; i < 8; ++i) {
    const Bit a = (i >> 2) & 1, b = (i >> 1) & 1, c = i & 1;
    Bit l = lhs.eval(a, b, c);
    Bit r = rhs.eval(a, b, c);
    if (complement)
      r ^= 1;
    if (l != r)
      mismatches.push_back(i);
  }
  return mismatches.empty();
}

} // namespace

const BoolExpr &equation(int number) {
  if (number < 1 || number > 24)
    throw std::out_of_range("equation number must be in 1..24");
  return catalog().eq[number];
}

EquivalenceReport check_expression_equivalence() {
  const Catalog &cat = catalog();
  EquivalenceReport report;
  report.all_passed = true;

  auto check_exprs = [&](std::string label, const BoolExpr &lhs,
                         const BoolExpr &rhs, bool complement) {
    EquivalenceResult result;
    result.label = std::move(label);
    result.passed = rows_equal(lhs, rhs, complement, result.mismatched_rows);
    report.all_passed = report.all_passed && result.passed;
    report.results.push_back(std::move(result));
  };

  // IMPLY rewrites against their Boolean counterparts.
  check_exprs("eq11 == eq1 (AFA1 Sum)", cat.eq[11], cat.eq[1], false);
  check_exprs("eq12 == eq2 (AFA1 Cout)", cat.eq[12], cat.eq[2], false);
  check_exprs("eq13 == eq4 (AFA2 Cout)", cat.eq[13], cat.eq[4], false);
  check_exprs("eq14 == eq3 (AFA2 Sum)", cat.eq[14], cat.eq[3], false);
  check_exprs("eq15 == eq6 (AFA3 Cout)", cat.eq[15], cat.eq[6], false);
  check_exprs("eq15 == NOT(eq5)", cat.eq[15], cat.eq[5], true);
  check_exprs("eq16 == eq5 (AFA3 Sum)", cat.eq[16], cat.eq[5], false);
  check_exprs("eq17 == eq8 (AFA5 Cout)", cat.eq[17], cat.eq[8], false);
  check_exprs("eq18 == eq7 (AFA5 Sum)", cat.eq[18], cat.eq[7], false);
  check_exprs("eq19 == eq9 (AFA8 Sum)", cat.eq[19], cat.eq[9], false);
  check_exprs("eq20 == eq10 (AFA8 Cout)", cat.eq[20], cat.eq[10], false);
  check_exprs("eq23 == eq21 (ECIS Sum)", cat.eq[23], cat.eq[21], false);
  check_exprs("eq24 == eq22 (ECIS Cout)", cat.eq[24], cat.eq[22], false);

  // NAND/AND rewrite chain behind the AFA2 carry.
  check_exprs("NOT(A & B) == B -> (A -> 0)", cat.nand_boolean, cat.nand_ab,
              false);
  check_exprs("NOT(C) & NOT(A & B) == ((B -> (A -> 0)) -> C) -> 0",
              cat.and_boolean, cat.and_notc_nand_ab, false);
  check_exprs("AFA2 Cout == NOT(NOT(C) & NOT(A & B))", cat.eq[13],
              cat.and_boolean, true);

  // Per-cell output identities on the transcribed tables.
  for (CellKind kind : kProposedCells) {
    const TruthTable8 table = cell_truth_table(kind);
    EquivalenceResult result;
    result.label = std::string(cell_info(kind).name) + " Sum == NOT(Cout)";
    for (int i = 0; i < 8; ++i)
      if (table.rows[i].sum != (table.rows[i].cout ^ 1))
        result.mismatched_rows.push_back(i);
    result.passed = result.mismatched_rows.empty();
    report.all_passed = report.all_passed && result.passed;
    report.results.push_back(std::move(result));
  }
  {
    const TruthTable8 ecis = cell_truth_table(CellKind::Ecis);
    const TruthTable8 exact = exact_truth_table();
    EquivalenceResult result;
    result.label = "ECIS Cout == exact Cout";
    for (int i = 0; i < 8; ++i)
      if (ecis.rows[i].cout != exact.rows[i].cout)
        result.mismatched_rows.push_back(i);
    result.passed = result.mismatched_rows.empty();
    report.all_passed = report.all_passed && result.passed;
    report.results.push_back(std::move(result));
  }

  return report;
}

} // namespace iafa
