#include "helpers.hpp"

#include "magnet/bbdil.hpp"
#include "magnet/error.hpp"

#include <doctest.h>

#include <algorithm>

using namespace magnet;
using namespace magnet::testing;

namespace {

GradedPresentation poly(const GroupPtr &g,
                        std::initializer_list<std::pair<const char *, std::vector<int64_t>>> vs) {
  std::vector<Variable> vars;
  for (const auto &[n, d] : vs)
    vars.push_back(Variable{n, el(g, d), false});
  return GradedPresentation::free_poly(g, std::move(vars));
}

std::vector<std::string> names(const GradedPresentation &p) {
  std::vector<std::string> out;
  for (const auto &v : p.free().vars)
    out.push_back(v.name);
  return out;
}

/// Number of monomials x^a y^b z^c with a + b + 2c = d.
long long weighted_count(int d) {
  long long n = 0;
  for (int c = 0; 2 * c <= d; ++c)
    n += d - 2 * c + 1;
  return n;
}

} // namespace

TEST_CASE("BB bundles on small examples") {
  auto z = make_group(1);
  auto line = bb_bundle(poly(z, {{"x", {1}}}), mon(z, {{1}}));
  CHECK(line.base.free().vars.empty());
  CHECK(line.fiber_rank == 1);
  CHECK(line.hilbert_ok());

  auto cyl = bb_bundle(poly(z, {{"x", {0}}, {"y", {1}}}), mon(z, {{1}}));
  CHECK(names(cyl.base) == std::vector<std::string>{"x"});
  CHECK(cyl.fiber_rank == 1);

  auto w = bb_bundle(poly(z, {{"x", {1}}, {"y", {1}}, {"z", {2}}}), mon(z, {{1}}));
  CHECK(w.fiber_rank == 3);
  REQUIRE(w.hilbert_ok());
  for (int d = 0; d <= 8; ++d)
    CHECK(w.hilbert_ring[d] == weighted_count(d));
  CHECK(w.heights == std::vector<int64_t>{1, 1, 2});

  CHECK_THROWS_AS(bb_bundle(poly(z, {{"x", {-1}}}), mon(z, {{1}})), PreconditionError);
}

TEST_CASE("affine space of a free monoid is a vector bundle") {
  for (int k = 1; k <= 4; ++k) {
    auto g = make_group(k);
    std::vector<Variable> vars;
    std::vector<GroupElement> gens;
    for (int i = 0; i < k; ++i) {
      vars.push_back({"x" + std::to_string(i), GroupElement::unit(g, i), false});
      gens.push_back(GroupElement::unit(g, i));
    }
    auto r = bb_bundle(GradedPresentation::free_poly(g, vars), Submonoid(g, gens));
    CHECK(r.fiber_rank == k);
    CHECK(r.base.free().vars.empty());
    CHECK(r.hilbert_ok());
  }
}

TEST_CASE("BB with units and torsion") {
  auto z2 = make_group(2);
  auto half = mon(z2, {{1, 0}, {-1, 0}, {0, 1}});
  auto p = poly(z2, {{"a", {1, 0}}, {"b", {-2, 0}}, {"c", {0, 1}}, {"d", {3, 2}}});
  auto r = bb_bundle(p, half);
  CHECK(names(r.base) == std::vector<std::string>{"a", "b"});
  CHECK(r.fiber_rank == 2);
  CHECK(r.heights == std::vector<int64_t>{0, 0, 1, 2});

  auto zt = make_group(1, {2});
  auto nt = mon(zt, {{1, 1}, {0, 1}});
  auto q = poly(zt, {{"u", {0, 1}}, {"v", {1, 1}}, {"w", {2, 0}}});
  auto rt = bb_bundle(q, nt);
  CHECK(names(rt.base) == std::vector<std::string>{"u"});
  CHECK(rt.fiber_rank == 2);
  CHECK(rt.hilbert_ok());
}

TEST_CASE("property: random BB bundles") {
  auto z2 = make_group(2);
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int64_t> pos(1, 3), any(-3, 3);
  std::uniform_int_distribution<int> count(1, 3), nvars(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    // generators in the open half plane x > 0 give a sharp monoid
    std::vector<GroupElement> gens;
    for (int i = count(rng); i > 0; --i)
      gens.push_back(el(z2, {pos(rng), any(rng)}));
    Submonoid n(z2, gens);
    std::vector<Variable> vars;
    for (int i = nvars(rng); i > 0; --i)
      vars.push_back({"x" + std::to_string(i), random_member(n, rng, 2), false});
    auto p = GradedPresentation::free_poly(z2, vars);
    auto r = bb_bundle(p, n);
    for (std::size_t i = 0; i < r.certificate.values.size(); ++i)
      CHECK(r.certificate.values[i] > 0);
    CHECK(r.hilbert_ok());
    CHECK(r.base.free().vars.size() + r.fiber.size() == vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i)
      CHECK((r.heights[i] == 0) == vars[i].degree.is_zero());
  }
}

TEST_CASE("dilatations") {
  auto z = make_group(1);
  auto x = poly(z, {{"x", {1}}});
  CHECK(same_presentation(dilatation({x, {}}), x));
  auto bl = dilatation({x, {"x"}});
  CHECK(names(bl) == std::vector<std::string>{"x/t"});
  CHECK(bl.free().vars[0].dilated);
  CHECK(bl.free().vars[0].degree == el(z, {1}));

  auto xy = poly(z, {{"x", {1}}, {"y", {-1}}});
  CHECK(names(dilatation({xy, {"x"}})) == std::vector<std::string>{"x/t", "y"});
  CHECK_THROWS_AS(dilatation({xy, {"x", "x"}}), PreconditionError);
  CHECK_THROWS_AS(dilatation({xy, {"q"}}), PreconditionError);
  CHECK_THROWS_AS(dilatation({dilatation({xy, {"x"}}), {"x/t"}}), PreconditionError);
}

TEST_CASE("dilatation commutes with attractors") {
  auto z = make_group(1);
  auto xy = poly(z, {{"x", {1}}, {"y", {-1}}});
  auto r = dilatation_attractor_check({xy, {"x"}}, mon(z, {{1}}));
  CHECK(r.equal());
  CHECK(names(r.blowup_then_attractor) == std::vector<std::string>{"x/t"});

  auto r0 = dilatation_attractor_check({xy, {"x"}}, Submonoid::zero(z));
  CHECK(r0.equal());
  CHECK(r0.blowup_then_attractor.free().vars.empty());
  CHECK(r0.center_after.empty());

  auto re = dilatation_attractor_check({xy, {}}, mon(z, {{1}}));
  CHECK(re.equal());
  CHECK(same_presentation(re.attractor_then_blowup, attractor(xy, mon(z, {{1}})).quotient));
}

TEST_CASE("property: random dilatation setups") {
  auto z2 = make_group(2);
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> nvars(1, 6), coin(0, 1), count(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Variable> vars;
    std::vector<std::string> center;
    for (int i = nvars(rng); i > 0; --i) {
      vars.push_back({"x" + std::to_string(i), random_element(z2, rng, -3, 3), false});
      if (coin(rng))
        center.push_back(vars.back().name);
    }
    std::vector<GroupElement> gens;
    for (int i = count(rng); i > 0; --i)
      gens.push_back(random_element(z2, rng, -2, 2));
    auto r = dilatation_attractor_check(
        {GradedPresentation::free_poly(z2, vars), center}, Submonoid(z2, gens));
    CHECK(r.equal());
    for (const auto &v : r.blowup_then_attractor.free().vars)
      CHECK(v.dilated == (v.name.find("/t") != std::string::npos));
  }
}
