#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace magnet {

struct SolverLimits {
  /// Total number of search nodes generated before ResourceLimit is thrown.
  std::size_t max_nodes = 4'000'000;
};

/// Linear system A x = b over nonnegative integers, A given by columns.
///
/// Solutions are found with the Contejean-Devie completion procedure applied
/// to the homogeneous system [A | -b] (x, y) = 0 with the extra variable y
/// restricted to {0, 1}. Every minimal solution is reached from a unit vector
/// by steps e_j that decrease the defect (<A x, A e_j> < 0), and nodes that
/// dominate an already found homogeneous solution are cut, so the search is
/// finite and complete. The inhomogeneous system is solvable iff a minimal
/// solution with y = 1 exists.
class NonnegativeSystem {
public:
  /// All columns must have the same length (the number of equations).
  explicit NonnegativeSystem(std::vector<std::vector<int64_t>> columns,
                             std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  /// Some x >= 0 with A x = rhs, or nullopt if none exists.
  std::optional<std::vector<int64_t>>
  find_solution(std::span<const int64_t> rhs, const SolverLimits &limits = {}) const;

  /// Minimal nonzero solutions of A x = 0 (the Hilbert basis of the kernel cone).
  std::vector<std::vector<int64_t>>
  homogeneous_basis(const SolverLimits &limits = {}) const;

private:
  std::optional<std::vector<int64_t>>
  complete(std::span<const int64_t> rhs, bool with_rhs, const SolverLimits &limits,
           std::vector<std::vector<int64_t>> &basis) const;

  std::vector<std::vector<int64_t>> columns_;
  std::size_t rows_;
};

} // namespace magnet
