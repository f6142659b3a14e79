#include "magnet/monoid.hpp"

#include "magnet/error.hpp"
#include "magnet/snf.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace magnet {
namespace {

std::vector<GroupElement> normalize(const GroupPtr &group,
                                    std::vector<GroupElement> gens) {
  for (const auto &g : gens)
    require_same_group(*group, g.ambient(), "submonoid generator");
  std::erase_if(gens, [](const GroupElement &g) { return g.is_zero(); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

bool closed_under_negation(const std::vector<GroupElement> &gens) {
  for (const auto &g : gens)
    if (!std::binary_search(gens.begin(), gens.end(), -g))
      return false;
  return true;
}

std::shared_ptr<const NonnegativeSystem>
build_system(const FgAbelianGroup &group, const std::vector<GroupElement> &gens) {
  const auto rows = static_cast<std::size_t>(group.coord_count());
  std::vector<std::vector<int64_t>> cols;
  cols.reserve(gens.size() + group.torsion().size());
  for (const auto &g : gens)
    cols.emplace_back(g.coords().begin(), g.coords().end());
  // one slack multiplier per residue coordinate: sum c_i g_ij - n_j s_j = m_j
  for (std::size_t j = 0; j < group.torsion().size(); ++j) {
    std::vector<int64_t> c(rows, 0);
    c[group.free_rank() + j] = -group.torsion()[j];
    cols.push_back(std::move(c));
  }
  return std::make_shared<const NonnegativeSystem>(std::move(cols), rows);
}

std::vector<GroupElement> negated(const std::vector<GroupElement> &gens) {
  std::vector<GroupElement> out;
  out.reserve(gens.size());
  for (const auto &g : gens)
    out.push_back(-g);
  return out;
}

std::vector<GroupElement> concat(std::vector<GroupElement> a,
                                 const std::vector<GroupElement> &b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

} // namespace

Submonoid::Submonoid(GroupPtr group, std::vector<GroupElement> generators,
                     SolverLimits limits)
    : group_(std::move(group)), generators_(normalize(group_, std::move(generators))),
      kind_(MonoidKind::generic), limits_(limits) {
  if (generators_.empty())
    kind_ = MonoidKind::zero;
  else if (closed_under_negation(generators_))
    kind_ = MonoidKind::subgroup;
  system_ = build_system(*group_, generators_);
}

Submonoid Submonoid::zero(GroupPtr group) { return Submonoid(std::move(group), {}); }

Submonoid Submonoid::full(GroupPtr group) {
  std::vector<GroupElement> gens;
  for (int i = 0; i < group->free_rank(); ++i) {
    gens.push_back(GroupElement::unit(group, i));
    gens.push_back(-GroupElement::unit(group, i));
  }
  for (int j = 0; j < group->torsion_rank(); ++j)
    gens.push_back(GroupElement::unit(group, group->free_rank() + j));
  Submonoid out(group, std::move(gens));
  out.kind_ = MonoidKind::full;
  return out;
}

bool Submonoid::contains(const GroupElement &m) const {
  require_same_group(*group_, m.ambient(), "membership");
  if (m.is_zero() || kind_ == MonoidKind::full)
    return true;
  if (kind_ == MonoidKind::zero)
    return false;
  if (std::binary_search(generators_.begin(), generators_.end(), m))
    return true;
  return system_->find_solution(m.coords(), limits_).has_value();
}

std::optional<std::vector<int64_t>> Submonoid::decompose(const GroupElement &m) const {
  require_same_group(*group_, m.ambient(), "decomposition");
  auto sol = system_->find_solution(m.coords(), limits_);
  if (!sol)
    return std::nullopt;
  sol->resize(generators_.size());
  return sol;
}

bool Submonoid::operator==(const Submonoid &o) const {
  return *group_ == *o.group_ && generators_ == o.generators_;
}

std::string Submonoid::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < generators_.size(); ++i)
    os << (i ? ", " : "") << generators_[i].to_string();
  os << ">";
  return os.str();
}

bool is_submonoid_of(const Submonoid &a, const Submonoid &b) {
  require_same_group(*a.group(), *b.group(), "inclusion");
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const GroupElement &g) { return b.contains(g); });
}

bool same_monoid(const Submonoid &a, const Submonoid &b) {
  return is_submonoid_of(a, b) && is_submonoid_of(b, a);
}

Magnet::Magnet(const Submonoid &n)
    : group_(n.group()), member_([n](const GroupElement &m) { return n.contains(m); }),
      description_(n.to_string()), fg_(n) {}

Magnet::Magnet(GroupPtr group, std::function<bool(const GroupElement &)> member,
               std::string description)
    : group_(std::move(group)), member_(std::move(member)),
      description_(std::move(description)) {}

bool Magnet::contains(const GroupElement &m) const {
  require_same_group(*group_, m.ambient(), "magnet membership");
  return member_(m);
}

Magnet Magnet::intersection(const std::vector<Magnet> &magnets) {
  if (magnets.empty())
    throw PreconditionError("intersection of an empty family of magnets");
  for (const auto &m : magnets)
    require_same_group(*magnets.front().group(), *m.group(), "magnet intersection");
  if (magnets.size() == 1)
    return magnets.front();
  std::string desc;
  for (std::size_t i = 0; i < magnets.size(); ++i)
    desc += (i ? " cap " : "") + magnets[i].description();
  return Magnet(
      magnets.front().group(),
      [magnets](const GroupElement &x) {
        return std::all_of(magnets.begin(), magnets.end(),
                           [&](const Magnet &m) { return m.contains(x); });
      },
      desc);
}

int64_t GradingMorphism::operator()(const GroupElement &m) const {
  auto f = m.free_part();
  if (f.size() != functional.size())
    throw StructuralError("grading evaluated on an element of another group");
  int64_t s = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    s = checked_add(s, checked_mul(functional[i], f[i]));
  return s;
}

GroupElement QuotientMap::operator()(const GroupElement &m) const {
  require_same_group(*source, m.ambient(), "quotient map");
  auto x = m.coords();
  auto row_dot = [&](std::size_t r) {
    int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      s = checked_add(s, checked_mul(rows[r][i], x[i]));
    return s;
  };
  std::vector<int64_t> out;
  for (std::size_t r : free_rows)
    out.push_back(row_dot(r));
  for (auto [r, n] : torsion_rows)
    out.push_back(floor_mod(row_dot(r), n));
  return GroupElement(target, std::move(out));
}

Submonoid units(const Submonoid &n) {
  std::vector<GroupElement> u;
  for (const auto &g : n.generators())
    if (n.contains(-g)) {
      u.push_back(g);
      u.push_back(-g);
    }
  return Submonoid(n.group(), std::move(u), n.limits());
}

namespace {

// Criterion for F = [T> with T = G cap F: no generator u outside F can be
// completed to an element of F, i.e. u is not in [T u -G>.
bool face_criterion(const Submonoid &n, const std::vector<GroupElement> &inside,
                    const std::vector<GroupElement> &outside) {
  if (outside.empty())
    return true;
  Submonoid probe(n.group(), concat(inside, negated(n.generators())), n.limits());
  return std::none_of(outside.begin(), outside.end(),
                      [&](const GroupElement &u) { return probe.contains(u); });
}

} // namespace

bool is_face(const Submonoid &f, const Submonoid &n) {
  require_same_group(*f.group(), *n.group(), "is_face");
  if (!is_submonoid_of(f, n))
    throw PreconditionError("is_face: " + f.to_string() + " is not contained in " +
                            n.to_string());
  std::vector<GroupElement> inside, outside;
  for (const auto &g : n.generators())
    (f.contains(g) ? inside : outside).push_back(g);
  Submonoid generated(n.group(), inside, n.limits());
  if (!is_submonoid_of(f, generated))
    return false;
  return face_criterion(n, inside, outside);
}

std::vector<Submonoid> faces(const Submonoid &n, const FaceOptions &opts) {
  const auto &gens = n.generators();
  const auto k = static_cast<int>(gens.size());
  if (k > opts.max_generators)
    throw ResourceLimit("faces: " + std::to_string(k) +
                        " generators exceed the enumeration cap of " +
                        std::to_string(opts.max_generators));
  std::vector<uint64_t> masks((uint64_t{1} << k));
  std::iota(masks.begin(), masks.end(), uint64_t{0});
  std::stable_sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb)
      return pa < pb;
    // lexicographic on the sorted index lists
    for (int i = 0; i < 64; ++i) {
      bool ia = (a >> i) & 1, ib = (b >> i) & 1;
      if (ia != ib)
        return ia;
    }
    return false;
  });

  std::vector<Submonoid> out;
  for (uint64_t mask : masks) {
    std::vector<GroupElement> inside, outside;
    for (int i = 0; i < k; ++i)
      ((mask >> i) & 1 ? inside : outside).push_back(gens[i]);
    Submonoid cand(n.group(), inside, n.limits());
    // S must equal G cap [S>
    if (std::any_of(outside.begin(), outside.end(),
                    [&](const GroupElement &u) { return cand.contains(u); }))
      continue;
    if (face_criterion(n, inside, outside))
      out.push_back(std::move(cand));
  }
  return out;
}

Submonoid groupification(const Submonoid &n) {
  return Submonoid(n.group(), concat(n.generators(), negated(n.generators())),
                   n.limits());
}

SharpQuotient sharp_quotient(const Submonoid &n) {
  const auto &grp = *n.group();
  const auto m = static_cast<std::size_t>(grp.coord_count());
  Submonoid u = units(n);

  // relation lattice: n_j e_{r+j} for the residues, plus the unit generators
  std::vector<std::vector<int64_t>> relations;
  for (int j = 0; j < grp.torsion_rank(); ++j) {
    std::vector<int64_t> c(m, 0);
    c[grp.free_rank() + j] = grp.torsion()[j];
    relations.push_back(std::move(c));
  }
  for (const auto &g : u.generators())
    relations.emplace_back(g.coords().begin(), g.coords().end());

  IntMatrix a(m, std::vector<int64_t>(relations.size(), 0));
  for (std::size_t c = 0; c < relations.size(); ++c)
    for (std::size_t r = 0; r < m; ++r)
      a[r][c] = relations[c][r];
  SmithForm snf = smith_normal_form(std::move(a), m);

  QuotientMap map;
  map.source = n.group();
  map.rows = snf.left;
  std::vector<int64_t> torsion;
  for (std::size_t i = 0; i < m; ++i) {
    int64_t d = i < snf.diagonal.size() ? snf.diagonal[i] : 0;
    if (d == 0)
      map.free_rows.push_back(i);
    else if (d > 1) {
      map.torsion_rows.emplace_back(i, d);
      torsion.push_back(d);
    }
  }
  map.target = make_group(static_cast<int>(map.free_rows.size()), torsion);

  std::vector<GroupElement> image;
  for (const auto &g : n.generators())
    image.push_back(map(g));
  Submonoid img(map.target, std::move(image), n.limits());
  return SharpQuotient{map.target, std::move(img), std::move(map)};
}

GradingMorphism positive_grading(const Submonoid &n) {
  for (const auto &g : n.generators())
    if (!std::all_of(g.torsion_part().begin(), g.torsion_part().end(),
                     [](int64_t c) { return c == 0; }))
      throw PreconditionError("positive_grading: generator " + g.to_string() +
                              " has a nonzero residue coordinate");
  if (units(n).kind() != MonoidKind::zero)
    throw PreconditionError("positive_grading: " + n.to_string() + " is not sharp");

  // Perceptron iteration: w += g for the first g with <w, g> <= 0. A sharp
  // fine monoid spans a pointed cone, so a strictly positive w exists and
  // the iteration terminates.
  const auto r = static_cast<std::size_t>(n.group()->free_rank());
  std::vector<int64_t> w(r, 0);
  auto eval = [&](const GroupElement &g) {
    int64_t s = 0;
    for (std::size_t i = 0; i < r; ++i)
      s = checked_add(s, checked_mul(w[i], g.free_part()[i]));
    return s;
  };
  constexpr int max_rounds = 100000;
  bool done = false;
  for (int round = 0; round < max_rounds && !done; ++round) {
    done = true;
    for (const auto &g : n.generators())
      if (eval(g) <= 0) {
        for (std::size_t i = 0; i < r; ++i)
          w[i] = checked_add(w[i], g.free_part()[i]);
        done = false;
        break;
      }
  }
  if (!done)
    throw NoCertificate("positive_grading: no positive functional found for " +
                        n.to_string());
  int64_t gcd = 0;
  for (int64_t x : w)
    gcd = std::gcd(gcd, x);
  if (gcd > 1)
    for (auto &x : w)
      x /= gcd;

  GradingMorphism h{n, w, {}};
  for (const auto &g : n.generators())
    h.values.push_back(h(g));
  return h;
}

bool is_generating(const std::vector<GroupElement> &s, const Submonoid &n) {
  for (const auto &x : s)
    if (!n.contains(x))
      throw PreconditionError("is_generating: " + x.to_string() + " is not in " +
                              n.to_string());
  Submonoid sub(n.group(), s, n.limits());
  return is_submonoid_of(n, sub);
}

int monoid_rank_sharp(const Submonoid &n) {
  if (units(n).kind() != MonoidKind::zero)
    throw PreconditionError("monoid_rank_sharp: " + n.to_string() + " is not sharp");
  const auto &gens = n.generators();
  std::vector<GroupElement> irreducible;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<GroupElement> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i)
        others.push_back(gens[j]);
    if (!Submonoid(n.group(), others, n.limits()).contains(gens[i]))
      irreducible.push_back(gens[i]);
  }
  if (!is_generating(irreducible, n))
    throw IdentityFailure("monoid_rank_sharp: irreducible generators do not generate " +
                          n.to_string());
  return static_cast<int>(irreducible.size());
}

PushoutComplement pushout_complement(const Submonoid &n, const Submonoid &l,
                                     const Submonoid &l_prime, int bound) {
  require_same_group(*n.group(), *l.group(), "pushout_complement");
  require_same_group(*n.group(), *l_prime.group(), "pushout_complement");
  if (!is_submonoid_of(n, l) || !is_submonoid_of(l, l_prime))
    throw PreconditionError("pushout_complement: need N subset L subset L'");
  if (!is_face(l, l_prime))
    throw PreconditionError("pushout_complement: " + l.to_string() +
                            " is not a face of " + l_prime.to_string());

  Magnet pred(
      n.group(),
      [n, l, l_prime](const GroupElement &m) {
        return l_prime.contains(m) && !(l.contains(m) && !n.contains(m));
      },
      l_prime.to_string() + " \\ (" + l.to_string() + " \\ " + n.to_string() + ")");

  // elements of L' with coefficient sum <= bound, in order of discovery
  const auto &gens = l_prime.generators();
  std::vector<GroupElement> layer{GroupElement::zero(n.group())};
  std::set<GroupElement> seen{layer.front()};
  std::vector<GroupElement> candidates;
  for (int s = 1; s <= bound; ++s) {
    std::vector<GroupElement> next;
    for (const auto &x : layer)
      for (const auto &g : gens) {
        GroupElement y = x + g;
        if (seen.insert(y).second)
          next.push_back(y);
      }
    std::sort(next.begin(), next.end());
    for (const auto &y : next)
      if (pred.contains(y))
        candidates.push_back(y);
    layer = std::move(next);
  }

  std::vector<GroupElement> kept = n.generators();
  for (const auto &c : candidates) {
    Submonoid sofar(n.group(), kept, n.limits());
    if (!sofar.contains(c))
      kept.push_back(c);
  }
  Submonoid truncated(n.group(), std::move(kept), n.limits());
  if (!is_face(n, truncated))
    throw IdentityFailure("pushout_complement: " + n.to_string() +
                          " is not a face of the complement " + truncated.to_string());
  return PushoutComplement{std::move(pred), std::move(truncated), bound};
}

std::vector<GroupElement> intersect_with_finite(const Magnet &n,
                                                const std::vector<GroupElement> &e) {
  std::vector<GroupElement> out;
  for (const auto &x : e)
    if (n.contains(x))
      out.push_back(x);
  return out;
}

} // namespace magnet
