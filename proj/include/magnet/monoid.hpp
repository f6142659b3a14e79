#pragma once

#include "magnet/diophantine.hpp"
#include "magnet/group.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace magnet {

enum class MonoidKind { generic, subgroup, zero, full };

/// Finitely generated submonoid [E> of an FgAbelianGroup.
///
/// Generators are normalized on construction: zero dropped, duplicates
/// merged, sorted lexicographically. Two presentations of the same monoid
/// compare unequal with ==; use same_monoid for semantic equality.
class Submonoid {
public:
  Submonoid(GroupPtr group, std::vector<GroupElement> generators,
            SolverLimits limits = {});

  /// The zero monoid {0}.
  static Submonoid zero(GroupPtr group);
  /// The whole group, generated by +-e_i on the free part and the residue
  /// unit vectors.
  static Submonoid full(GroupPtr group);

  const GroupPtr &group() const { return group_; }
  const std::vector<GroupElement> &generators() const { return generators_; }
  MonoidKind kind() const { return kind_; }
  const SolverLimits &limits() const { return limits_; }

  /// Exact membership; throws ResourceLimit if the solver cap is reached.
  bool contains(const GroupElement &m) const;
  /// Coefficients c >= 0 with sum c_i g_i = m (torsion slack dropped).
  std::optional<std::vector<int64_t>> decompose(const GroupElement &m) const;

  bool operator==(const Submonoid &o) const;
  std::string to_string() const;

private:
  GroupPtr group_;
  std::vector<GroupElement> generators_;
  MonoidKind kind_;
  SolverLimits limits_;
  std::shared_ptr<const NonnegativeSystem> system_;
};

/// Every generator of a lies in b.
bool is_submonoid_of(const Submonoid &a, const Submonoid &b);
/// Mutual containment.
bool same_monoid(const Submonoid &a, const Submonoid &b);

/// A submonoid known only through a membership predicate (intersections,
/// preimages, pushout complements). Every Submonoid converts to one.
class Magnet {
public:
  Magnet(const Submonoid &n);
  Magnet(GroupPtr group, std::function<bool(const GroupElement &)> member,
         std::string description);

  const GroupPtr &group() const { return group_; }
  const std::string &description() const { return description_; }
  bool contains(const GroupElement &m) const;
  /// The underlying finitely generated monoid, when there is one.
  const std::optional<Submonoid> &finitely_generated() const { return fg_; }

  static Magnet intersection(const std::vector<Magnet> &magnets);

private:
  GroupPtr group_;
  std::function<bool(const GroupElement &)> member_;
  std::string description_;
  std::optional<Submonoid> fg_;
};

/// Integer linear functional h on the free part that is positive on every
/// nonzero generator of its domain.
struct GradingMorphism {
  Submonoid domain;
  std::vector<int64_t> functional;
  std::vector<int64_t> values; // h(g) for each generator, in generator order

  int64_t operator()(const GroupElement &m) const;
};

struct QuotientMap {
  GroupPtr source;
  GroupPtr target;
  /// Rows of a unimodular U; coordinate i of the image is row_i . x, kept
  /// when listed in free_rows or reduced mod the order in torsion_rows.
  std::vector<std::vector<int64_t>> rows;
  std::vector<std::size_t> free_rows;
  std::vector<std::pair<std::size_t, int64_t>> torsion_rows;

  GroupElement operator()(const GroupElement &m) const;
};

struct SharpQuotient {
  GroupPtr quotient_group;
  Submonoid image;
  QuotientMap map;
};

struct PushoutComplement {
  Magnet predicate;
  /// Generators of the part of N' reachable with L'-coefficient sum <= bound.
  Submonoid truncated;
  int bound;
};

struct FaceOptions {
  int max_generators = 20;
};

/// N* = the largest subgroup of N, presented with +- generators.
Submonoid units(const Submonoid &n);

/// True iff x + y in F <=> x in F and y in F for all x, y in N.
/// Requires every generator of F to lie in N.
bool is_face(const Submonoid &f, const Submonoid &n);

/// All faces of N, each as [S> for S a subset of N's generators.
///
/// A face F of [G> satisfies F = [F cap G>: if f = sum c_i g_i lies in F then
/// every g_i with c_i > 0 lies in F by the face property. So enumerating the
/// subsets S of G with G cap [S> = S and checking the face criterion finds
/// every face exactly once. Output order: by |S|, then lexicographic on the
/// generator indices.
std::vector<Submonoid> faces(const Submonoid &n, const FaceOptions &opts = {});

/// N^gp = [G u -G>.
Submonoid groupification(const Submonoid &n);

/// M / <N*> via Smith normal form of the relation lattice, with the image of N.
SharpQuotient sharp_quotient(const Submonoid &n);

/// Positive grading of a sharp monoid with torsion-free generators.
GradingMorphism positive_grading(const Submonoid &n);

/// Every generator of N lies in [S>. Requires S subset of N.
bool is_generating(const std::vector<GroupElement> &s, const Submonoid &n);

/// mk(N) for sharp N: the number of irreducible generators.
int monoid_rank_sharp(const Submonoid &n);

/// N' = L' \ (L \ N), for N subset of L a face of L'.
PushoutComplement pushout_complement(const Submonoid &n, const Submonoid &l,
                                     const Submonoid &l_prime, int bound = 10);

std::vector<GroupElement> intersect_with_finite(const Magnet &n,
                                                const std::vector<GroupElement> &e);

} // namespace magnet
