#pragma once

#include <memory>
#include <string>
#include <vector>

#include "core/logic.hpp"

namespace iafa {

/// Expression tree over the three cell inputs. IMPLY(x, y) = NOT(x) OR y;
/// FALSE is the constant 0 (so IMPLY(x, FALSE) is an inversion).
class BoolExpr {
public:
  enum class Node { Var, Const, Not, And, Or, Xor, Imply };
  enum class Input { A, B, C };

  static BoolExpr var(Input input);
  static BoolExpr constant(Bit value);
  static BoolExpr negation(BoolExpr operand);
  static BoolExpr conjunction(BoolExpr lhs, BoolExpr rhs);
  static BoolExpr disjunction(BoolExpr lhs, BoolExpr rhs);
  static BoolExpr exclusive_or(BoolExpr lhs, BoolExpr rhs);
  static BoolExpr implication(BoolExpr lhs, BoolExpr rhs);

  Bit eval(Bit a, Bit b, Bit c) const;
  std::string to_string() const;

  struct Impl;

private:
  std::shared_ptr<const Impl> impl_;
  explicit BoolExpr(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

Bit eval_expr(const BoolExpr &expr, Bit a, Bit b, Bit c);

/// The output functions of the candidate cells: the Boolean forms (the
/// "sum-of-products" route) and the rewritten IMPLY/FALSE forms that the
/// serial algorithms implement, addressed by equation number 1..24.
const BoolExpr &equation(int number);

struct EquivalencePair {
  std::string label;
  const BoolExpr *left;
  const BoolExpr *right;
  bool complement; // expect left == NOT(right) instead of left == right
};

struct EquivalenceResult {
  std::string label;
  bool passed;
  std::vector<int> mismatched_rows; // input indices 0..7 where they differ
};

struct EquivalenceReport {
  std::vector<EquivalenceResult> results;
  bool all_passed;
};

/// Verifies, over all 8 input rows: every IMPLY-form equation against its
/// Boolean counterpart, the NAND-rewrite chain used to derive them, and the
/// per-cell Sum = NOT(Cout) identities.
EquivalenceReport check_expression_equivalence();

} // namespace iafa
