#include "magnet/diophantine.hpp"

#include "magnet/error.hpp"
#include "magnet/group.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace magnet {
namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int64_t> &v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int64_t x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct Node {
  std::vector<int64_t> x;      // multiplicities, last entry is y when solving A x = b
  std::vector<int64_t> defect; // A x - y b
};

bool dominates(const std::vector<int64_t> &x, const std::vector<int64_t> &b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (x[i] < b[i])
      return false;
  return true;
}

bool is_zero(const std::vector<int64_t> &v) {
  return std::all_of(v.begin(), v.end(), [](int64_t c) { return c == 0; });
}

} // namespace

NonnegativeSystem::NonnegativeSystem(std::vector<std::vector<int64_t>> columns,
                                     std::size_t rows)
    : columns_(std::move(columns)), rows_(rows) {
  for (const auto &c : columns_)
    if (c.size() != rows_)
      throw StructuralError("column length does not match row count");
}

std::optional<std::vector<int64_t>>
NonnegativeSystem::find_solution(std::span<const int64_t> rhs,
                                 const SolverLimits &limits) const {
  if (rhs.size() != rows_)
    throw StructuralError("right-hand side length does not match row count");
  if (std::all_of(rhs.begin(), rhs.end(), [](int64_t c) { return c == 0; }))
    return std::vector<int64_t>(cols(), 0);
  std::vector<std::vector<int64_t>> basis;
  return complete(rhs, true, limits, basis);
}

std::vector<std::vector<int64_t>>
NonnegativeSystem::homogeneous_basis(const SolverLimits &limits) const {
  std::vector<std::vector<int64_t>> basis;
  complete({}, false, limits, basis);
  return basis;
}

std::optional<std::vector<int64_t>>
NonnegativeSystem::complete(std::span<const int64_t> rhs, bool with_rhs,
                            const SolverLimits &limits,
                            std::vector<std::vector<int64_t>> &basis) const {
  const std::size_t q = cols();
  const std::size_t vars = q + (with_rhs ? 1 : 0);
  const std::size_t y = q;

  std::vector<std::vector<int64_t>> cols_ext = columns_;
  if (with_rhs) {
    std::vector<int64_t> neg(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      neg[i] = checked_mul(-1, rhs[i]);
    cols_ext.push_back(std::move(neg));
  }

  auto dot = [&](const std::vector<int64_t> &v, std::size_t j) {
    int64_t s = 0;
    for (std::size_t i = 0; i < rows_; ++i)
      s = checked_add(s, checked_mul(v[i], cols_ext[j][i]));
    return s;
  };

  std::vector<Node> frontier;
  frontier.reserve(vars);
  for (std::size_t j = 0; j < vars; ++j) {
    Node n{std::vector<int64_t>(vars, 0), cols_ext[j]};
    n.x[j] = 1;
    frontier.push_back(std::move(n));
  }

  std::size_t generated = frontier.size();
  while (!frontier.empty()) {
    std::vector<Node> open;
    open.reserve(frontier.size());
    for (auto &n : frontier) {
      if (is_zero(n.defect)) {
        if (with_rhs && n.x[y] == 1) {
          n.x.pop_back();
          return std::move(n.x);
        }
        basis.push_back(std::move(n.x));
      } else {
        open.push_back(std::move(n));
      }
    }

    std::unordered_set<std::vector<int64_t>, VecHash> seen;
    std::vector<Node> next;
    for (const auto &n : open) {
      for (std::size_t j = 0; j < vars; ++j) {
        if (with_rhs && j == y && n.x[y] >= 1)
          continue;
        if (dot(n.defect, j) >= 0)
          continue;
        std::vector<int64_t> x = n.x;
        ++x[j];
        bool cut = false;
        for (const auto &b : basis)
          if (dominates(x, b)) {
            cut = true;
            break;
          }
        if (cut || !seen.insert(x).second)
          continue;
        std::vector<int64_t> d = n.defect;
        for (std::size_t i = 0; i < rows_; ++i)
          d[i] = checked_add(d[i], cols_ext[j][i]);
        next.push_back(Node{std::move(x), std::move(d)});
        if (++generated > limits.max_nodes)
          throw ResourceLimit("nonnegative Diophantine solver exceeded " +
                              std::to_string(limits.max_nodes) + " search nodes");
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

} // namespace magnet
