#pragma once

#include "magnet/monoid.hpp"

#include <initializer_list>
#include <random>
#include <set>
#include <vector>

namespace magnet::testing {

inline GroupElement el(const GroupPtr &g, std::vector<int64_t> c) {
  return GroupElement(g, std::move(c));
}

inline std::vector<GroupElement> els(const GroupPtr &g,
                                     std::initializer_list<std::vector<int64_t>> cs) {
  std::vector<GroupElement> out;
  for (const auto &c : cs)
    out.emplace_back(g, c);
  return out;
}

inline Submonoid mon(const GroupPtr &g, std::initializer_list<std::vector<int64_t>> cs) {
  return Submonoid(g, els(g, cs));
}

/// Every element reachable as a sum of at most `max_sum` generators, found by
/// breadth-first expansion. Independent of the Diophantine solver.
inline std::set<std::vector<int64_t>> reachable(const GroupPtr &g,
                                                const std::vector<GroupElement> &gens,
                                                int max_sum) {
  std::set<std::vector<int64_t>> seen;
  std::vector<GroupElement> layer{GroupElement::zero(g)};
  seen.insert(std::vector<int64_t>(g->coord_count(), 0));
  for (int s = 0; s < max_sum; ++s) {
    std::vector<GroupElement> next;
    for (const auto &x : layer)
      for (const auto &gen : gens) {
        GroupElement y = x + gen;
        std::vector<int64_t> key(y.coords().begin(), y.coords().end());
        if (seen.insert(key).second)
          next.push_back(y);
      }
    layer = std::move(next);
  }
  return seen;
}

/// Random member of N: a random combination with small coefficients.
inline GroupElement random_member(const Submonoid &n, std::mt19937_64 &rng,
                                  int max_coeff = 3) {
  std::uniform_int_distribution<int> c(0, max_coeff);
  GroupElement x = GroupElement::zero(n.group());
  for (const auto &g : n.generators())
    x += static_cast<int64_t>(c(rng)) * g;
  return x;
}

inline GroupElement random_element(const GroupPtr &g, std::mt19937_64 &rng, int lo,
                                   int hi) {
  std::uniform_int_distribution<int64_t> d(lo, hi);
  std::vector<int64_t> c(g->coord_count());
  for (auto &x : c)
    x = d(rng);
  return GroupElement(g, std::move(c));
}

} // namespace magnet::testing
