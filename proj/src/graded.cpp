#include "magnet/graded.hpp"

#include "magnet/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace magnet {
namespace {

std::vector<GroupElement> sorted_unique(std::vector<GroupElement> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::size_t> saturated_killed(const MonoidAlgebra &a) {
  std::vector<std::size_t> out;
  const auto &gens = a.monoid.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (a.killed.contains(gens[i]))
      out.push_back(i);
  return out;
}

FreePoly require_free(const GradedPresentation &p, const char *op) {
  if (!p.is_free())
    throw PreconditionError(std::string(op) + " needs a free polynomial presentation");
  return p.free();
}

} // namespace

MonoidIdeal::MonoidIdeal(Submonoid ambient, std::vector<GroupElement> generators)
    : ambient_(std::move(ambient)), generators_(sorted_unique(std::move(generators))) {
  for (const auto &g : generators_)
    if (!ambient_.contains(g))
      throw PreconditionError("ideal generator " + g.to_string() + " is not in " +
                              ambient_.to_string());
}

bool MonoidIdeal::contains(const GroupElement &m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const GroupElement &g) { return ambient_.contains(m - g); });
}

bool MonoidIdeal::is_unit() const {
  return contains(GroupElement::zero(ambient_.group()));
}

GradedPresentation::GradedPresentation(GroupPtr group,
                                       std::variant<FreePoly, MonoidAlgebra> v)
    : group_(std::move(group)), variant_(std::move(v)) {}

GradedPresentation GradedPresentation::free_poly(GroupPtr group,
                                                 std::vector<Variable> vars) {
  std::set<std::string> names;
  for (const auto &v : vars) {
    require_same_group(*group, v.degree.ambient(), "variable degree");
    if (!names.insert(v.name).second)
      throw StructuralError("duplicate variable name '" + v.name + "'");
  }
  return GradedPresentation(std::move(group), FreePoly{std::move(vars)});
}

GradedPresentation GradedPresentation::monoid_algebra(Submonoid monoid,
                                                      std::vector<GroupElement> killed) {
  auto group = monoid.group();
  MonoidIdeal ideal(monoid, std::move(killed));
  return GradedPresentation(std::move(group),
                            MonoidAlgebra{std::move(monoid), std::move(ideal)});
}

const FreePoly &GradedPresentation::free() const {
  if (auto *f = std::get_if<FreePoly>(&variant_))
    return *f;
  throw PreconditionError("presentation is a monoid algebra, not a polynomial ring");
}

const MonoidAlgebra &GradedPresentation::algebra() const {
  if (auto *a = std::get_if<MonoidAlgebra>(&variant_))
    return *a;
  throw PreconditionError("presentation is a polynomial ring, not a monoid algebra");
}

std::vector<GroupElement> GradedPresentation::degree_support() const {
  if (is_free()) {
    std::vector<GroupElement> out;
    for (const auto &v : free().vars)
      out.push_back(v.degree);
    return out;
  }
  return algebra().monoid.generators();
}

std::size_t GradedPresentation::size() const {
  return is_free() ? free().vars.size() : algebra().monoid.generators().size();
}

std::string GradedPresentation::to_string() const {
  std::ostringstream os;
  if (is_free()) {
    os << coefficients << "[";
    const auto &vars = free().vars;
    for (std::size_t i = 0; i < vars.size(); ++i)
      os << (i ? ", " : "") << vars[i].name << ":" << vars[i].degree.to_string();
    os << "]";
  } else {
    const auto &a = algebra();
    os << coefficients << "[" << a.monoid.to_string() << "]";
    if (!a.killed.empty()) {
      os << "/(";
      const auto &gens = a.killed.generators();
      for (std::size_t i = 0; i < gens.size(); ++i)
        os << (i ? ", " : "") << "X^" << gens[i].to_string();
      os << ")";
    }
  }
  return os.str();
}

bool same_presentation(const GradedPresentation &a, const GradedPresentation &b) {
  if (!(*a.group() == *b.group()) || a.is_free() != b.is_free())
    return false;
  if (a.is_free())
    return a.free().vars == b.free().vars;
  const auto &x = a.algebra(), &y = b.algebra();
  if (!(x.monoid == y.monoid))
    return false;
  auto within = [](const MonoidIdeal &i, const MonoidIdeal &j) {
    return std::all_of(i.generators().begin(), i.generators().end(),
                       [&](const GroupElement &g) { return j.contains(g); });
  };
  return within(x.killed, y.killed) && within(y.killed, x.killed);
}

WeightModule::WeightModule(GroupPtr group, std::vector<WeightEntry> entries)
    : group_(std::move(group)), entries_(std::move(entries)) {
  for (const auto &e : entries_) {
    require_same_group(*group_, e.weight.ambient(), "weight");
    if (e.multiplicity < 1)
      throw StructuralError("weight multiplicities must be positive");
  }
}

int WeightModule::dimension() const {
  int d = 0;
  for (const auto &e : entries_)
    d += e.multiplicity;
  return d;
}

WeightModule WeightModule::direct_sum(const WeightModule &o) const {
  require_same_group(*group_, *o.group_, "direct sum");
  auto all = entries_;
  all.insert(all.end(), o.entries_.begin(), o.entries_.end());
  return WeightModule(group_, std::move(all));
}

bool WeightModule::same_weights(const WeightModule &o) const {
  auto tally = [](const WeightModule &w) {
    std::map<std::vector<int64_t>, int> t;
    for (const auto &e : w.entries_)
      t[std::vector<int64_t>(e.weight.coords().begin(), e.weight.coords().end())] +=
          e.multiplicity;
    return t;
  };
  return *group_ == *o.group_ && tally(*this) == tally(o);
}

std::string WeightModule::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto &e = entries_[i];
    os << (i ? ", " : "");
    if (!e.label.empty())
      os << e.label << "=";
    os << e.weight.to_string() << ":" << e.multiplicity;
  }
  os << "}";
  return os.str();
}

std::vector<GroupElement> AttractorResult::killed_degrees() const {
  auto support = source.degree_support();
  std::vector<GroupElement> out;
  for (std::size_t i : killed)
    out.push_back(support[i]);
  return out;
}

AttractorResult attractor(const GradedPresentation &p, const Magnet &n) {
  require_same_group(*p.group(), *n.group(), "attractor");
  if (p.is_free()) {
    std::vector<std::size_t> killed;
    std::vector<Variable> kept;
    const auto &vars = p.free().vars;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (n.contains(vars[i].degree))
        kept.push_back(vars[i]);
      else
        killed.push_back(i);
    }
    auto q = GradedPresentation::free_poly(p.group(), std::move(kept));
    q.coefficients = p.coefficients;
    return AttractorResult{p, n, std::move(killed), std::move(q)};
  }

  const auto &a = p.algebra();
  auto ideal = a.killed.generators();
  for (const auto &g : a.monoid.generators())
    if (!n.contains(g))
      ideal.push_back(g);
  auto q = GradedPresentation::monoid_algebra(a.monoid, std::move(ideal));
  q.coefficients = p.coefficients;
  auto killed = saturated_killed(q.algebra());
  return AttractorResult{p, n, std::move(killed), std::move(q)};
}

bool support_contains(const GradedPresentation &p, const GroupElement &x) {
  const auto &a = p.algebra();
  return a.monoid.contains(x) && !a.killed.contains(x);
}

SupportReport enumerate_support(const GradedPresentation &p, int bound) {
  const auto &a = p.algebra();
  SupportReport rep;
  // Layers hold the elements whose shortest factorization has s generators.
  // If y is killed so is y + g, so an empty support layer ends the support.
  std::vector<GroupElement> layer{GroupElement::zero(p.group())};
  std::set<GroupElement> seen{layer.front()};
  for (int s = 0;; ++s) {
    bool any = false;
    for (const auto &x : layer)
      if (!a.killed.contains(x)) {
        rep.elements.push_back(x);
        any = true;
      }
    if (!any) {
      rep.complete = true;
      break;
    }
    if (s == bound)
      break;
    std::vector<GroupElement> next;
    for (const auto &x : layer) {
      if (a.killed.contains(x))
        continue;
      for (const auto &g : a.monoid.generators()) {
        GroupElement y = x + g;
        if (seen.insert(y).second)
          next.push_back(y);
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  for (const auto &x : rep.elements)
    if (!x.is_zero() && a.killed.contains(2 * x))
      rep.nilpotent.push_back(x);
  return rep;
}

WeightModule weight_attractor(const WeightModule &w, const Magnet &n) {
  require_same_group(*w.group(), *n.group(), "weight attractor");
  std::vector<WeightEntry> kept;
  for (const auto &e : w.entries())
    if (n.contains(e.weight))
      kept.push_back(e);
  return WeightModule(w.group(), std::move(kept));
}

InclusionWitness inclusion_is_closed(const GradedPresentation &p, const Submonoid &n,
                                     const Submonoid &l) {
  if (!is_submonoid_of(n, l))
    throw PreconditionError("inclusion_is_closed: " + n.to_string() +
                            " is not contained in " + l.to_string());
  auto small = attractor(p, n);
  auto large = attractor(p, l);
  if (!std::includes(small.killed.begin(), small.killed.end(), large.killed.begin(),
                     large.killed.end()))
    throw IdentityFailure("inclusion_is_closed: killed(L) is not inside killed(N)");

  std::vector<std::size_t> extra;
  if (p.is_free()) {
    const auto &lv = large.quotient.free().vars;
    for (std::size_t i = 0; i < lv.size(); ++i)
      if (!n.contains(lv[i].degree))
        extra.push_back(i);
  } else {
    std::set_difference(small.killed.begin(), small.killed.end(), large.killed.begin(),
                        large.killed.end(), std::back_inserter(extra));
  }
  return InclusionWitness{std::move(extra), std::move(small), std::move(large)};
}

VariableMap VariableMap::then(const VariableMap &next) const {
  if (target != next.source)
    throw StructuralError("variable maps do not compose");
  VariableMap out{source, next.target, {}};
  for (const auto &i : image)
    out.image.push_back(i ? next.image[*i] : std::nullopt);
  return out;
}

bool VariableMap::is_identity() const {
  if (source != target)
    return false;
  for (std::size_t i = 0; i < image.size(); ++i)
    if (!image[i] || *image[i] != i)
      return false;
  return true;
}

FaceRetraction face_retraction(const GradedPresentation &p, const Submonoid &n,
                               const Submonoid &f) {
  require_free(p, "face_retraction");
  if (!is_face(f, n))
    throw PreconditionError("face_retraction: " + f.to_string() + " is not a face of " +
                            n.to_string());
  FreePoly xn = attractor(p, n).quotient.free();
  FreePoly xf = attractor(p, f).quotient.free();

  VariableMap section{xn.vars, xf.vars, {}};
  for (const auto &v : xn.vars) {
    auto it = std::find(xf.vars.begin(), xf.vars.end(), v);
    section.image.push_back(it == xf.vars.end()
                                ? std::nullopt
                                : std::optional<std::size_t>(it - xf.vars.begin()));
  }
  VariableMap retraction{xf.vars, xn.vars, {}};
  for (const auto &v : xf.vars) {
    auto it = std::find(xn.vars.begin(), xn.vars.end(), v);
    if (it == xn.vars.end())
      throw IdentityFailure("face_retraction: X^F variable missing from X^N");
    retraction.image.push_back(it - xn.vars.begin());
  }
  if (!retraction.then(section).is_identity())
    throw IdentityFailure("face_retraction: retraction after section is not the identity");
  return FaceRetraction{std::move(xn), std::move(xf), std::move(section),
                        std::move(retraction)};
}

GradedPresentation prescribed_limit(const GradedPresentation &p, const Submonoid &n,
                                    const Submonoid &f, const Locus &z) {
  require_free(p, "prescribed_limit");
  if (!is_face(f, n))
    throw PreconditionError("prescribed_limit: " + f.to_string() + " is not a face of " +
                            n.to_string());
  const auto xn = attractor(p, n).quotient.free();
  std::set<std::string> in_face;
  for (const auto &v : xn.vars)
    if (f.contains(v.degree))
      in_face.insert(v.name);

  std::set<std::string> drop;
  switch (z.kind) {
  case Locus::Kind::whole:
    break;
  case Locus::Kind::unit:
    drop = in_face;
    break;
  case Locus::Kind::custom:
    for (const auto &name : z.killed) {
      if (!in_face.contains(name))
        throw PreconditionError("prescribed_limit: '" + name +
                                "' is not a coordinate of X^F, so Z is not inside X^F");
      drop.insert(name);
    }
    break;
  }
  std::vector<Variable> kept;
  for (const auto &v : xn.vars)
    if (!drop.contains(v.name))
      kept.push_back(v);
  auto out = GradedPresentation::free_poly(p.group(), std::move(kept));
  out.coefficients = p.coefficients;
  return out;
}

WeightModule prescribed_limit(const WeightModule &w, const Submonoid &n,
                              const Submonoid &f, const Locus &z) {
  if (!is_face(f, n))
    throw PreconditionError("prescribed_limit: " + f.to_string() + " is not a face of " +
                            n.to_string());
  auto wn = weight_attractor(w, n);
  std::set<std::string> labels;
  for (const auto &e : wn.entries())
    if (f.contains(e.weight))
      labels.insert(e.label);
  for (const auto &name : z.killed)
    if (!labels.contains(name))
      throw PreconditionError("prescribed_limit: no weight labelled '" + name +
                              "' in the face part, so Z is not inside X^F");

  std::vector<WeightEntry> kept;
  for (const auto &e : wn.entries()) {
    bool face = f.contains(e.weight);
    bool drop = face && (z.kind == Locus::Kind::unit ||
                         (z.kind == Locus::Kind::custom &&
                          std::find(z.killed.begin(), z.killed.end(), e.label) !=
                              z.killed.end()));
    if (!drop)
      kept.push_back(e);
  }
  return WeightModule(w.group(), std::move(kept));
}

AttractorResult intersect_attractors(const GradedPresentation &p,
                                     const std::vector<Magnet> &monoids) {
  if (monoids.empty())
    throw PreconditionError("intersect_attractors: empty family");
  auto result = attractor(p, Magnet::intersection(monoids));

  std::set<std::size_t> expected;
  if (p.is_free()) {
    for (const auto &m : monoids) {
      auto r = attractor(p, m);
      expected.insert(r.killed.begin(), r.killed.end());
    }
  } else {
    // sum of ideals: saturate the union of the killed generators
    const auto &a = p.algebra();
    auto gens = a.killed.generators();
    for (const auto &m : monoids)
      for (const auto &g : attractor(p, m).killed_degrees())
        gens.push_back(g);
    MonoidIdeal sum(a.monoid, gens);
    const auto &mg = a.monoid.generators();
    for (std::size_t i = 0; i < mg.size(); ++i)
      if (sum.contains(mg[i]))
        expected.insert(i);
  }
  if (!std::equal(result.killed.begin(), result.killed.end(), expected.begin(),
                  expected.end()))
    throw IdentityFailure("intersect_attractors: killed set of the intersection is not "
                          "the union of the killed sets");
  return result;
}

AttractorResult iterated_attractor(const GradedPresentation &p, const Magnet &n,
                                   const Magnet &l) {
  auto twice = attractor(attractor(p, n).quotient, l);
  auto once = attractor(p, Magnet::intersection({n, l}));
  if (!same_presentation(twice.quotient, once.quotient))
    throw IdentityFailure("iterated_attractor: (X^N)^L = " + twice.quotient.to_string() +
                          " differs from X^(N cap L) = " + once.quotient.to_string());
  return once;
}

WeightModule product_attractor(const WeightModule &w1, const WeightModule &w2,
                               const Magnet &n) {
  auto whole = weight_attractor(w1.direct_sum(w2), n);
  auto parts = weight_attractor(w1, n).direct_sum(weight_attractor(w2, n));
  if (!whole.same_weights(parts))
    throw IdentityFailure("product_attractor: attractor of the sum is not the sum of "
                          "attractors");
  return whole;
}

SemidirectDims semidirect_dims(const WeightModule &w, const Submonoid &n) {
  auto u = units(n);
  SemidirectDims d{weight_attractor(w, n).dimension(), weight_attractor(w, u).dimension(),
                   prescribed_limit(w, n, u, Locus::unit()).dimension()};
  if (d.total != d.limit + d.prescribed)
    throw IdentityFailure("semidirect_dims: dim W^N != dim W^{N*} + dim W^N_e");
  return d;
}

GroupElement GroupHom::operator()(const GroupElement &m) const {
  require_same_group(*source, m.ambient(), "homomorphism");
  const auto rows = static_cast<std::size_t>(target->coord_count());
  if (matrix.size() != rows)
    throw StructuralError("homomorphism matrix has the wrong number of rows");
  std::vector<int64_t> out(rows, 0);
  auto x = m.coords();
  for (std::size_t r = 0; r < rows; ++r) {
    if (matrix[r].size() != x.size())
      throw StructuralError("homomorphism matrix has the wrong number of columns");
    for (std::size_t c = 0; c < x.size(); ++c)
      out[r] = checked_add(out[r], checked_mul(matrix[r][c], x[c]));
  }
  return GroupElement(target, std::move(out));
}

Magnet preimage(const GroupHom &f, const Magnet &y) {
  require_same_group(*f.target, *y.group(), "preimage");
  return Magnet(
      f.source, [f, y](const GroupElement &m) { return y.contains(f(m)); },
      "f^-1(" + y.description() + ")");
}

GradedPresentation pushforward(const GradedPresentation &p, const GroupHom &f) {
  auto vars = require_free(p, "pushforward").vars;
  for (auto &v : vars)
    v.degree = f(v.degree);
  return GradedPresentation::free_poly(f.target, std::move(vars));
}

} // namespace magnet
