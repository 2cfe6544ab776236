#pragma once

#include <string>

namespace iafa {

struct ReproduceResult {
  int table = 0;
  bool ok = false;
  std::string report; // one line per checked entry
};

/// Regenerates a reference table from scratch and diffs it against the
/// published values. Supported tables: 4, 5, 9, 11, 13, 15, 19, 20.
/// Throws std::invalid_argument for anything else.
ReproduceResult reproduce_table(int table);

} // namespace iafa
