#include "magnet/rootsys.hpp"

#include "magnet/atlas.hpp"
#include "magnet/error.hpp"

#include <algorithm>
#include <set>

namespace magnet {
namespace {

GroupElement vec(const GroupPtr &g, std::vector<int64_t> c) {
  return GroupElement(g, std::move(c));
}

std::vector<GroupElement> roots_in(const RootSystem &s, const Magnet &n) {
  std::vector<GroupElement> out;
  for (const auto &a : s.roots)
    if (n.contains(a))
      out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> sorted(std::vector<GroupElement> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void validate(const RootSystem &s) {
  std::set<GroupElement> phi(s.roots.begin(), s.roots.end());
  if (phi.size() != s.roots.size())
    throw StructuralError(s.type + ": repeated root");
  for (const auto &a : s.roots) {
    if (a.is_zero())
      throw StructuralError(s.type + ": zero is a root");
    if (!phi.contains(-a))
      throw StructuralError(s.type + ": root system is not symmetric");
    if (phi.contains(2 * a))
      throw StructuralError(s.type + ": root system is not reduced");
  }
  std::set<GroupElement> pos(s.positives.begin(), s.positives.end());
  if (2 * pos.size() != phi.size())
    throw StructuralError(s.type + ": positives are not half of the roots");
  Submonoid cone(s.lattice, s.basis);
  for (const auto &a : s.positives) {
    if (!phi.contains(a) || pos.contains(-a))
      throw StructuralError(s.type + ": bad positive system");
    if (!cone.contains(a))
      throw StructuralError(s.type + ": positive root outside the basis cone");
  }
  for (const auto &b : s.basis)
    if (!pos.contains(b))
      throw StructuralError(s.type + ": simple root is not positive");
}

RootSystem from_positives(std::string type, GroupPtr g, std::vector<GroupElement> basis,
                          std::vector<GroupElement> positives) {
  RootSystem s{std::move(type), std::move(g), {}, std::move(basis), std::move(positives)};
  s.roots = s.positives;
  for (const auto &a : s.positives)
    s.roots.push_back(-a);
  validate(s);
  return s;
}

std::vector<GroupElement> pick_basis(const ReductiveDatum &d, const BasisSubset &idx) {
  std::vector<GroupElement> out;
  for (auto i : idx) {
    if (i >= d.system.basis.size())
      throw PreconditionError("basis index " + std::to_string(i) + " out of range");
    out.push_back(d.system.basis[i]);
  }
  return out;
}

} // namespace

bool RootSystem::is_root(const GroupElement &a) const {
  return std::find(roots.begin(), roots.end(), a) != roots.end();
}

std::vector<int64_t> RootSystem::expansion(const GroupElement &a) const {
  if (!is_root(a))
    throw PreconditionError(a.to_string() + " is not a root");
  bool positive = std::find(positives.begin(), positives.end(), a) != positives.end();
  Submonoid cone(lattice, basis);
  auto c = cone.decompose(positive ? a : -a);
  if (!c)
    throw IdentityFailure("positive root outside the basis cone");
  std::vector<int64_t> out(basis.size(), 0);
  const auto &gens = cone.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto j = std::find(basis.begin(), basis.end(), gens[i]) - basis.begin();
    out[j] = positive ? (*c)[i] : -(*c)[i];
  }
  return out;
}

ReductiveDatum build_root_datum(const std::string &type) {
  if (type.size() == 2 && type[0] == 'A' && type[1] >= '1' && type[1] <= '4') {
    int k = type[1] - '0';
    auto g = make_group(k + 1);
    auto e = [&](int i, int j) {
      return GroupElement::unit(g, i) - GroupElement::unit(g, j);
    };
    std::vector<GroupElement> basis, pos;
    for (int i = 0; i < k; ++i)
      basis.push_back(e(i, i + 1));
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        pos.push_back(e(i, j));
    return {from_positives(type, g, std::move(basis), std::move(pos)), k + 1};
  }
  if (type == "B2") {
    auto g = make_group(2);
    return {from_positives(type, g, {vec(g, {1, -1}), vec(g, {0, 1})},
                           {vec(g, {1, -1}), vec(g, {0, 1}), vec(g, {1, 0}),
                            vec(g, {1, 1})}),
            2};
  }
  if (type == "G2") {
    // coordinates in the basis (short, long)
    auto g = make_group(2);
    return {from_positives(type, g, {vec(g, {1, 0}), vec(g, {0, 1})},
                           {vec(g, {1, 0}), vec(g, {0, 1}), vec(g, {1, 1}), vec(g, {2, 1}),
                            vec(g, {3, 1}), vec(g, {3, 2})}),
            2};
  }
  throw Unsupported("root system type '" + type + "' (supported: A1..A4, B2, G2)");
}

WeightModule adjoint_module(const ReductiveDatum &d) {
  const auto &s = d.system;
  std::vector<WeightEntry> e{{GroupElement::zero(s.lattice), d.torus_rank, "h"}};
  for (const auto &a : s.roots)
    e.push_back({a, 1, "g" + a.to_string()});
  return WeightModule(s.lattice, std::move(e));
}

SubgroupReport levi(const ReductiveDatum &d, const BasisSubset &zeta) {
  const auto &s = d.system;
  auto theta = pick_basis(d, zeta);
  for (const auto &a : pick_basis(d, zeta))
    theta.push_back(-a);
  Submonoid n(s.lattice, theta);
  auto roots = roots_in(s, n);

  std::set<std::size_t> in(zeta.begin(), zeta.end());
  std::vector<GroupElement> expected;
  for (const auto &a : s.roots) {
    auto c = s.expansion(a);
    bool supported = true;
    for (std::size_t i = 0; i < c.size(); ++i)
      supported = supported && (c[i] == 0 || in.contains(i));
    if (supported)
      expected.push_back(a);
  }
  if (roots != sorted(expected))
    throw IdentityFailure("levi: N_Theta cap Phi differs from the roots spanned by zeta");
  int dim = weight_attractor(adjoint_module(d), n).dimension();
  return {std::move(n), std::move(roots), dim};
}

SubgroupReport parabolic(const ReductiveDatum &d, const BasisSubset &zeta) {
  const auto &s = d.system;
  auto sigma = s.basis;
  for (const auto &a : pick_basis(d, zeta))
    sigma.push_back(-a);
  Submonoid n(s.lattice, sigma);
  auto roots = roots_in(s, n);

  auto expected = s.positives;
  auto lv = levi(d, zeta).roots;
  expected.insert(expected.end(), lv.begin(), lv.end());
  if (roots != sorted(expected))
    throw IdentityFailure("parabolic: N_Sigma cap Phi differs from positives plus Levi roots");
  int dim = weight_attractor(adjoint_module(d), n).dimension();
  return {std::move(n), std::move(roots), dim};
}

RootGroupDims root_group(const ReductiveDatum &d, const GroupElement &alpha) {
  if (!d.system.is_root(alpha))
    throw PreconditionError(alpha.to_string() + " is not a root");
  auto adj = adjoint_module(d);
  Submonoid ray(d.system.lattice, {alpha});
  return {weight_attractor(adj, ray).dimension(),
          prescribed_limit(adj, ray, units(ray), Locus::unit()).dimension()};
}

std::vector<std::vector<GroupElement>> closed_subsets(const ReductiveDatum &d,
                                                      std::size_t max_roots) {
  const auto &phi = d.system.roots;
  if (phi.size() > max_roots || phi.size() > 30)
    throw ResourceLimit("closed_subsets: " + std::to_string(phi.size()) +
                        " roots, over the cap of " + std::to_string(max_roots));
  const std::size_t n = phi.size();
  // sum_index[i][j] = k when phi[i] + phi[j] = phi[k]
  std::vector<std::vector<int>> sum_index(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = std::find(phi.begin(), phi.end(), phi[i] + phi[j]);
      if (it != phi.end())
        sum_index[i][j] = static_cast<int>(it - phi.begin());
    }

  std::vector<std::vector<GroupElement>> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(m >> i & 1U))
        continue;
      for (std::size_t j = 0; j < n && ok; ++j)
        if ((m >> j & 1U) && sum_index[i][j] >= 0)
          ok = (m >> sum_index[i][j] & 1U) != 0;
    }
    if (!ok)
      continue;
    std::vector<GroupElement> s;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1U)
        s.push_back(phi[i]);
    out.push_back(sorted(std::move(s)));
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

BijectionReport closed_subset_bijection(const ReductiveDatum &d) {
  auto closed = closed_subsets(d);
  EquivariantAtlas atlas(d.system.lattice, {Chart{"g", adjoint_module(d)}});
  auto poset = enumerate_magnets(atlas);
  std::vector<std::vector<GroupElement>> from_magnets;
  for (const auto &node : poset.nodes()) {
    std::vector<GroupElement> s;
    for (const auto &x : node.support)
      if (!x.is_zero())
        s.push_back(x);
    from_magnets.push_back(std::move(s));
  }
  std::sort(from_magnets.begin(), from_magnets.end(), [](const auto &a, const auto &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (from_magnets != closed)
    throw IdentityFailure("closed subsets of roots differ from the pure magnets of the "
                          "adjoint action for " + d.system.type);
  return {closed.size(), poset.size()};
}

CartesianSquare cartesian_square(const ReductiveDatum &d, const BasisSubset &xi,
                                 const BasisSubset &zeta) {
  std::set<std::size_t> z(zeta.begin(), zeta.end());
  for (auto i : xi)
    if (!z.contains(i))
      throw PreconditionError("cartesian_square: xi is not contained in zeta");

  const auto &s = d.system;
  auto lp = parabolic(d, zeta);
  auto np = parabolic(d, xi);
  auto l = levi(d, zeta);
  Magnet n = Magnet::intersection({l.magnet, np.magnet});
  auto n_roots = roots_in(s, n);
  auto adj = adjoint_module(d);

  CartesianSquare sq{};
  sq.dim_l_prime = lp.dim;
  sq.dim_n_prime = np.dim;
  sq.dim_l = l.dim;
  sq.dim_n = weight_attractor(adj, n).dimension();

  sq.face_ok = is_face(l.magnet, lp.magnet);
  if (!sq.face_ok)
    sq.failures.push_back("L is not a face of L'");

  auto in = [](const std::vector<GroupElement> &v, const GroupElement &a) {
    return std::binary_search(v.begin(), v.end(), a);
  };
  std::vector<GroupElement> complement, uni;
  for (const auto &a : s.roots) {
    if (in(lp.roots, a) && !(in(l.roots, a) && !in(n_roots, a)))
      complement.push_back(a);
    if (in(l.roots, a) || in(np.roots, a))
      uni.push_back(a);
  }
  sq.complement_ok = sorted(complement) == np.roots;
  if (!sq.complement_ok)
    sq.failures.push_back("N' cap Phi differs from (L' \\ (L \\ N)) cap Phi");
  sq.union_ok = sorted(uni) == lp.roots;
  if (!sq.union_ok)
    sq.failures.push_back("L' cap Phi differs from (L u N') cap Phi");
  sq.dims_ok = sq.dim_l_prime + sq.dim_n == sq.dim_l + sq.dim_n_prime;
  if (!sq.dims_ok)
    sq.failures.push_back("dim L' + dim N != dim L + dim N'");
  return sq;
}

} // namespace magnet
