#pragma once

#include <array>
#include <string>

#include "core/logic.hpp"

namespace iafa {

struct TtRow {
  Bit sum = 0;
  Bit cout = 0;

  /// Output value of the cell interpreted as a 2-bit number.
  int value() const { return 2 * cout + sum; }
  friend bool operator==(const TtRow &, const TtRow &) = default;
};

/// Full-adder truth table, rows indexed by (A,B,C) in 000..111 order.
struct TruthTable8 {
  std::array<TtRow, 8> rows;
  std::string name;
  std::string provenance; // "cout-flip(k)", "sum-flip(k)" or "transcribed"

  friend bool operator==(const TruthTable8 &a, const TruthTable8 &b) {
    return a.rows == b.rows;
  }
};

inline int input_index(Bit a, Bit b, Bit c) {
  return ((a & 1) << 2) | ((b & 1) << 1) | (c & 1);
}

TruthTable8 exact_truth_table();

} // namespace iafa
