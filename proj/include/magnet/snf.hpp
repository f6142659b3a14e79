#pragma once

#include <cstdint>
#include <vector>

namespace magnet {

using IntMatrix = std::vector<std::vector<int64_t>>;

/// U A V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
  std::vector<int64_t> diagonal; // length min(rows, cols)
  IntMatrix left;                // U, rows x rows
  IntMatrix reduced;             // D
};

/// A is given row-major with `rows` rows (cols may be zero).
SmithForm smith_normal_form(IntMatrix a, std::size_t rows);

} // namespace magnet
