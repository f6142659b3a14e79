#include "magnet/snf.hpp"

#include "magnet/error.hpp"
#include "magnet/group.hpp"

#include <cstdlib>
#include <utility>

namespace magnet {
namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

// row_i -= k * row_j, applied to A and U
void row_sub(IntMatrix &a, IntMatrix &u, std::size_t i, std::size_t j, int64_t k) {
  for (std::size_t c = 0; c < a[i].size(); ++c)
    a[i][c] = checked_add(a[i][c], checked_mul(-k, a[j][c]));
  for (std::size_t c = 0; c < u[i].size(); ++c)
    u[i][c] = checked_add(u[i][c], checked_mul(-k, u[j][c]));
}

void col_sub(IntMatrix &a, std::size_t i, std::size_t j, int64_t k) {
  for (auto &row : a)
    row[i] = checked_add(row[i], checked_mul(-k, row[j]));
}

} // namespace

SmithForm smith_normal_form(IntMatrix a, std::size_t rows) {
  if (a.size() != rows)
    throw StructuralError("matrix row count mismatch");
  const std::size_t cols = rows ? a[0].size() : 0;
  for (const auto &r : a)
    if (r.size() != cols)
      throw StructuralError("ragged matrix");

  IntMatrix u(rows, std::vector<int64_t>(rows, 0));
  for (std::size_t i = 0; i < rows; ++i)
    u[i][i] = 1;

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 &&
              (pr == rows || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows)
        break;
      std::swap(a[t], a[pr]);
      std::swap(u[t], u[pr]);
      for (auto &row : a)
        std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          row_sub(a, u, i, t, floor_div(a[i][t], a[t][t]));
          if (a[i][t] != 0)
            clean = false;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          col_sub(a, j, t, floor_div(a[t][j], a[t][t]));
          if (a[t][j] != 0)
            clean = false;
        }
      if (!clean)
        continue;

      // pivot must divide the whole trailing block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows)
        break;
      row_sub(a, u, t, bad, -1);
    }
    if (a[t][t] < 0) {
      for (auto &x : a[t])
        x = -x;
      for (auto &x : u[t])
        x = -x;
    }
  }

  SmithForm out;
  out.diagonal.resize(diag);
  for (std::size_t t = 0; t < diag; ++t)
    out.diagonal[t] = a[t][t];
  out.left = std::move(u);
  out.reduced = std::move(a);
  return out;
}

} // namespace magnet
