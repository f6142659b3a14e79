#pragma once

#include "magnet/graded.hpp"

#include <string>
#include <vector>

namespace magnet {

/// Reduced root system realized in an integral lattice.
struct RootSystem {
  std::string type;
  GroupPtr lattice;
  std::vector<GroupElement> roots; // positives first, then their negatives
  std::vector<GroupElement> basis;
  std::vector<GroupElement> positives;

  bool is_root(const GroupElement &a) const;
  /// Coefficients of a root in the basis.
  std::vector<int64_t> expansion(const GroupElement &a) const;
};

struct ReductiveDatum {
  RootSystem system;
  int torus_rank;
};

/// A1..A4 in the GL convention (roots e_i - e_j in Z^{k+1}), B2, G2.
ReductiveDatum build_root_datum(const std::string &type);

WeightModule adjoint_module(const ReductiveDatum &d);

/// Subsets of the basis are given by basis indices.
using BasisSubset = std::vector<std::size_t>;

struct SubgroupReport {
  Submonoid magnet;
  std::vector<GroupElement> roots; // magnet cap Phi
  int dim;
};

/// Magnet [zeta u -zeta]; checks its roots against the roots supported on zeta.
SubgroupReport levi(const ReductiveDatum &d, const BasisSubset &zeta);
/// Magnet [basis u -zeta]; checks its roots are the positives plus the Levi roots.
SubgroupReport parabolic(const ReductiveDatum &d, const BasisSubset &zeta);

struct RootGroupDims {
  int attractor; // dim H_a
  int unipotent; // dim U_a
};

RootGroupDims root_group(const ReductiveDatum &d, const GroupElement &alpha);

/// All S in Phi with a, b in S and a + b in Phi implying a + b in S,
/// ordered by size then lexicographically.
std::vector<std::vector<GroupElement>> closed_subsets(const ReductiveDatum &d,
                                                      std::size_t max_roots = 12);

struct BijectionReport {
  std::size_t closed_count;
  std::size_t magnet_count;
};

/// Compares closed subsets with the pure magnets of the adjoint action;
/// throws IdentityFailure when the two families differ.
BijectionReport closed_subset_bijection(const ReductiveDatum &d);

struct CartesianSquare {
  // dimensions of the four attractors
  int dim_l_prime; // parabolic for zeta
  int dim_n_prime; // parabolic for xi
  int dim_l;       // Levi for zeta
  int dim_n;       // L cap N'
  bool face_ok;       // L is a face of L'
  bool complement_ok; // N' cap Phi = (L' \ (L \ N)) cap Phi
  bool union_ok;      // L' cap Phi = (L u N') cap Phi
  bool dims_ok;       // dim L' + dim N = dim L + dim N'
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

CartesianSquare cartesian_square(const ReductiveDatum &d, const BasisSubset &xi,
                                 const BasisSubset &zeta);

} // namespace magnet
