#pragma once

#include "magnet/monoid.hpp"
#include "magnet/snf.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace magnet {

struct Variable {
  std::string name;
  GroupElement degree;
  /// Set on variables x/t produced by a dilatation.
  bool dilated = false;

  bool operator==(const Variable &) const = default;
};

/// Monoid ideal of `ambient` generated by `generators`:
/// m in I <=> m - g in ambient for some generator g.
class MonoidIdeal {
public:
  MonoidIdeal(Submonoid ambient, std::vector<GroupElement> generators);

  const Submonoid &ambient() const { return ambient_; }
  const std::vector<GroupElement> &generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }
  bool contains(const GroupElement &m) const;
  /// Whether the ideal contains 0, i.e. is the unit ideal.
  bool is_unit() const;

private:
  Submonoid ambient_;
  std::vector<GroupElement> generators_;
};

struct FreePoly {
  std::vector<Variable> vars;
};

/// Z[N] / (X^n : n in killed).
struct MonoidAlgebra {
  Submonoid monoid;
  MonoidIdeal killed;
};

/// M-graded affine presentation. Only the grading is modeled; the
/// coefficient ring is a display tag.
class GradedPresentation {
public:
  static GradedPresentation free_poly(GroupPtr group, std::vector<Variable> vars);
  static GradedPresentation monoid_algebra(Submonoid monoid,
                                           std::vector<GroupElement> killed = {});

  const GroupPtr &group() const { return group_; }
  bool is_free() const { return std::holds_alternative<FreePoly>(variant_); }
  const FreePoly &free() const;
  const MonoidAlgebra &algebra() const;

  /// Degrees of the variables, or the monoid generators.
  std::vector<GroupElement> degree_support() const;
  /// Number of variables / monoid generators.
  std::size_t size() const;

  std::string coefficients = "QQ";

  std::string to_string() const;

private:
  GradedPresentation(GroupPtr group, std::variant<FreePoly, MonoidAlgebra> v);

  GroupPtr group_;
  std::variant<FreePoly, MonoidAlgebra> variant_;
};

/// Same variables in the same order, or same monoid with equal ideals.
bool same_presentation(const GradedPresentation &a, const GradedPresentation &b);

struct WeightEntry {
  GroupElement weight;
  int multiplicity = 1;
  std::string label;
};

class WeightModule {
public:
  WeightModule(GroupPtr group, std::vector<WeightEntry> entries = {});

  const GroupPtr &group() const { return group_; }
  const std::vector<WeightEntry> &entries() const { return entries_; }
  int dimension() const;
  WeightModule direct_sum(const WeightModule &o) const;
  /// Multiset equality of (weight, multiplicity), ignoring labels and order.
  bool same_weights(const WeightModule &o) const;

  std::string to_string() const;

private:
  GroupPtr group_;
  std::vector<WeightEntry> entries_;
};

struct AttractorResult {
  GradedPresentation source;
  Magnet magnet;
  /// Indices into source.degree_support(): the killed variables, or the
  /// monoid generators lying in the quotient ideal. Sorted.
  std::vector<std::size_t> killed;
  GradedPresentation quotient;

  std::vector<GroupElement> killed_degrees() const;
};

struct SupportReport {
  std::vector<GroupElement> elements; // N0 \ I, by coefficient sum then lex
  bool complete = false;              // enumeration exhausted the support
  std::vector<GroupElement> nilpotent; // x in support with 2x killed
  bool reduced() const { return nilpotent.empty(); }
};

/// X^N: kills the variables (or ideal generators) of degree outside N.
///
/// For a free presentation the degrees lying in N are closed under addition,
/// so the ideal generated by all graded pieces outside N is generated by the
/// variables of degree outside N. For Z[N0] / I0 the ideal is I0 plus the
/// monoid ideal generated by the monoid generators outside N: an element of
/// N0 outside N has a generator outside N in each of its factorizations.
AttractorResult attractor(const GradedPresentation &p, const Magnet &n);

/// x in N0 with x not in the killed ideal.
bool support_contains(const GradedPresentation &p, const GroupElement &x);
/// Elements of the quotient support with coefficient sum <= bound.
SupportReport enumerate_support(const GradedPresentation &p, int bound = 12);

WeightModule weight_attractor(const WeightModule &w, const Magnet &n);

struct InclusionWitness {
  /// Entries of X^L's presentation that are killed to obtain X^N.
  std::vector<std::size_t> extra_killed;
  AttractorResult small; // X^N
  AttractorResult large; // X^L
};

/// X^N -> X^L for N subset of L; throws PreconditionError otherwise.
InclusionWitness inclusion_is_closed(const GradedPresentation &p, const Submonoid &n,
                                     const Submonoid &l);

/// Graded ring map between free presentations sending each source variable
/// to a target variable or to 0.
struct VariableMap {
  std::vector<Variable> source;
  std::vector<Variable> target;
  std::vector<std::optional<std::size_t>> image;

  VariableMap then(const VariableMap &next) const;
  bool is_identity() const;
};

struct FaceRetraction {
  FreePoly attractor; // X^N
  FreePoly face;      // X^F
  VariableMap section;    // iota^*: A^N -> A^F, kills degrees in N \ F
  VariableMap retraction; // p^*: A^F -> A^N, includes F-degree variables
};

/// Section X^F -> X^N and retraction X^N -> X^F of a face F of N.
FaceRetraction face_retraction(const GradedPresentation &p, const Submonoid &n,
                               const Submonoid &f);

/// A closed subscheme Z of X^F, given by what it kills there.
struct Locus {
  enum class Kind { whole, unit, custom };
  Kind kind = Kind::whole;
  std::vector<std::string> killed; // variable names / weight labels (custom)

  static Locus whole() { return {}; }
  /// Every surviving F-degree coordinate.
  static Locus unit() { return {Kind::unit, {}}; }
  static Locus killing(std::vector<std::string> names) {
    return {Kind::custom, std::move(names)};
  }
};

/// X^N_{F,Z} = X^N x_{X^F} Z.
GradedPresentation prescribed_limit(const GradedPresentation &p, const Submonoid &n,
                                    const Submonoid &f, const Locus &z);
WeightModule prescribed_limit(const WeightModule &w, const Submonoid &n,
                              const Submonoid &f, const Locus &z);

/// attractor(P, cap N_i), checked against the union of the killed sets.
AttractorResult intersect_attractors(const GradedPresentation &p,
                                     const std::vector<Magnet> &monoids);

/// (X^N)^L, checked against X^{N cap L}.
AttractorResult iterated_attractor(const GradedPresentation &p, const Magnet &n,
                                   const Magnet &l);

/// (W1 + W2)^N, checked against W1^N + W2^N.
WeightModule product_attractor(const WeightModule &w1, const WeightModule &w2,
                               const Magnet &n);

struct SemidirectDims {
  int total;      // dim W^N
  int limit;      // dim W^{N*}
  int prescribed; // dim W^N_{N*, e}
};

SemidirectDims semidirect_dims(const WeightModule &w, const Submonoid &n);

/// Homomorphism Z^r x torsion -> Z^r' x torsion' given on coordinates.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  IntMatrix matrix; // target.coord_count() rows, source.coord_count() cols

  GroupElement operator()(const GroupElement &m) const;
};

/// f^{-1}(Y) as a magnet of the source group.
Magnet preimage(const GroupHom &f, const Magnet &y);
/// The same variables graded by f(degree).
GradedPresentation pushforward(const GradedPresentation &p, const GroupHom &f);

} // namespace magnet
