#include "magnet/bbdil.hpp"

#include "magnet/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace magnet {
namespace {

/// Monomials in variables of the given positive heights, counted per degree.
std::vector<long long> count_monomials(const std::vector<int64_t> &h, int bound) {
  std::vector<long long> out(bound + 1, 0);
  std::function<void(std::size_t, int64_t)> walk = [&](std::size_t i, int64_t deg) {
    if (i == h.size()) {
      ++out[deg];
      return;
    }
    for (int64_t d = deg; d <= bound; d += h[i])
      walk(i + 1, d);
  };
  walk(0, 0);
  return out;
}

/// Coefficients of prod 1 / (1 - t^h_i).
std::vector<long long> series(const std::vector<int64_t> &h, int bound) {
  std::vector<long long> c(bound + 1, 0);
  c[0] = 1;
  for (int64_t hi : h)
    for (int64_t d = hi; d <= bound; ++d)
      c[d] += c[d - hi];
  return c;
}

} // namespace

BBResult bb_bundle(const GradedPresentation &p, const Submonoid &n, int hilbert_bound) {
  const auto &vars = p.free().vars;
  for (const auto &v : vars)
    if (!n.contains(v.degree))
      throw PreconditionError("bb_bundle: degree of " + v.name + " is outside " +
                              n.to_string() + "; apply the attractor first");
  if (hilbert_bound < 0)
    throw PreconditionError("bb_bundle: negative Hilbert bound");

  auto sq = sharp_quotient(n);
  // the free part of a sharp quotient is still sharp
  auto free_group = make_group(sq.quotient_group->free_rank());
  auto project = [&](const GroupElement &x) {
    auto f = x.free_part();
    return GroupElement(free_group, std::vector<int64_t>(f.begin(), f.end()));
  };
  std::vector<GroupElement> projected;
  for (const auto &g : sq.image.generators())
    projected.push_back(project(g));
  auto cert = positive_grading(Submonoid(free_group, projected));

  auto nstar = units(n);
  std::vector<Variable> base, fiber;
  std::vector<int64_t> heights, fiber_heights;
  for (const auto &v : vars) {
    int64_t h = cert(project(sq.map(v.degree)));
    if (h < 0 || (h == 0) != nstar.contains(v.degree))
      throw IdentityFailure("bb_bundle: certificate height of " + v.name +
                            " disagrees with membership in N*");
    heights.push_back(h);
    if (h == 0) {
      base.push_back(v);
    } else {
      fiber.push_back(v);
      fiber_heights.push_back(h);
    }
  }

  auto base_p = GradedPresentation::free_poly(p.group(), base);
  base_p.coefficients = p.coefficients;
  int rank = static_cast<int>(fiber.size());
  BBResult r{std::move(base_p),
             std::move(fiber),
             rank,
             std::move(cert),
             std::move(sq),
             std::move(heights),
             hilbert_bound,
             count_monomials(fiber_heights, hilbert_bound),
             series(fiber_heights, hilbert_bound),
             true};
  return r;
}

GradedPresentation dilatation(const DilatationSetup &s) {
  auto vars = s.ambient.free().vars;
  std::set<std::string> centered;
  for (const auto &c : s.center) {
    if (!centered.insert(c).second)
      throw PreconditionError("dilatation: center variable '" + c + "' repeated");
    if (std::none_of(vars.begin(), vars.end(), [&](const Variable &v) { return v.name == c; }))
      throw PreconditionError("dilatation: no variable named '" + c + "'");
  }
  for (auto &v : vars)
    if (centered.contains(v.name)) {
      if (v.dilated)
        throw PreconditionError("dilatation: '" + v.name + "' is already dilated");
      v.name += "/t";
      v.dilated = true;
    }
  auto out = GradedPresentation::free_poly(s.ambient.group(), std::move(vars));
  out.coefficients = s.ambient.coefficients;
  return out;
}

DilatationReport dilatation_attractor_check(const DilatationSetup &s, const Magnet &n) {
  auto lhs = attractor(dilatation(s), n).quotient;
  auto xn = attractor(s.ambient, n).quotient;
  std::vector<std::string> center;
  for (const auto &c : s.center)
    for (const auto &v : xn.free().vars)
      if (v.name == c)
        center.push_back(c);
  auto rhs = dilatation({xn, center});

  std::vector<std::string> diff;
  const auto &a = lhs.free().vars, &b = rhs.free().vars;
  for (const auto &v : a)
    if (std::find(b.begin(), b.end(), v) == b.end())
      diff.push_back(v.name + " of degree " + v.degree.to_string() +
                     " only on the blowup-then-attractor side");
  for (const auto &v : b)
    if (std::find(a.begin(), a.end(), v) == a.end())
      diff.push_back(v.name + " of degree " + v.degree.to_string() +
                     " only on the attractor-then-blowup side");
  if (diff.empty() && !same_presentation(lhs, rhs))
    diff.push_back("variables agree but in a different order");
  return DilatationReport{std::move(lhs), std::move(rhs), std::move(center), std::move(diff)};
}

} // namespace magnet
