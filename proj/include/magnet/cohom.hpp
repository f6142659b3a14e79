#pragma once

#include "magnet/group.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace magnet {

using Rational = mpq_class;
/// Coefficients on the module basis.
using ModuleElement = std::vector<Rational>;

struct BasisVector {
  std::string label;
  GroupElement degree;
};

/// Free Q-module with a homogeneous basis; A(M) acts through the grading.
class GradedFreeModule {
public:
  GradedFreeModule(GroupPtr group, std::vector<BasisVector> basis);

  const GroupPtr &group() const { return group_; }
  const std::vector<BasisVector> &basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  ModuleElement zero() const { return ModuleElement(basis_.size()); }
  /// Projection onto the degree-k part.
  ModuleElement mu(const GroupElement &k, const ModuleElement &v) const;
  /// Degrees carrying a nonzero coefficient of v, sorted.
  std::vector<GroupElement> degrees(const ModuleElement &v) const;

private:
  GroupPtr group_;
  std::vector<BasisVector> basis_;
};

bool is_zero(const ModuleElement &v);

/// Finitely supported map from n-tuples of M to module elements.
class Cochain {
public:
  using Key = std::vector<GroupElement>;

  Cochain(const GradedFreeModule &module, int n);
  static Cochain constant(const GradedFreeModule &module, ModuleElement v);

  const GradedFreeModule &module() const { return module_; }
  int degree() const { return n_; }
  const std::map<Key, ModuleElement> &entries() const { return entries_; }

  /// Entry at a key, zero when absent.
  ModuleElement at(const Key &k) const;
  void add(const Key &k, const ModuleElement &v, const Rational &scale = 1);
  bool is_zero() const { return entries_.empty(); }

  bool operator==(const Cochain &o) const;
  std::string to_string() const;

private:
  GradedFreeModule module_;
  int n_;
  std::map<Key, ModuleElement> entries_;
};

/// The monoid Hochschild differential, for n <= 2.
Cochain differential(const Cochain &c);
bool is_cocycle(const Cochain &c);

/// e with differential(e) = xi for a 1-cocycle xi: e = -xi(0).
ModuleElement primitive(const Cochain &xi);

struct H1Report {
  int trials = 0;
  int round_trips = 0;     // primitive(dw) found and d(primitive) = dw
  int rejected = 0;        // random non-cocycles refused by primitive
  int square_zero = 0;     // d(dw) = 0
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

H1Report h1_zero_suite(const GradedFreeModule &module, int trials, std::uint64_t seed = 1);

std::string rational_to_string(const Rational &q);
/// Parses "p" or "p/q"; throws StructuralError on malformed input.
Rational parse_rational(const std::string &s);

} // namespace magnet
