#include "magnet/atlas.hpp"

#include "magnet/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>

namespace magnet {
namespace {

using Mask = std::uint32_t;

std::vector<GroupElement> pick(const std::vector<GroupElement> &e, Mask m) {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (m >> i & 1U)
      out.push_back(e[i]);
  return out;
}

/// [S> cap E = S.
bool closed(const GroupPtr &g, const std::vector<GroupElement> &e, Mask m) {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!(m >> i & 1U) && e[i].is_zero())
      return false;
  Submonoid s(g, pick(e, m));
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!(m >> i & 1U) && s.contains(e[i]))
      return false;
  return true;
}

bool has_algebra_chart(const EquivariantAtlas &atlas) {
  return std::any_of(atlas.charts().begin(), atlas.charts().end(), [](const Chart &c) {
    auto *p = std::get_if<GradedPresentation>(&c.content);
    return p && !p->is_free();
  });
}

void check_cap(std::size_t n, const PureMagnetOptions &opts) {
  if (n > opts.max_support || n > 31)
    throw ResourceLimit("degree support has " + std::to_string(n) +
                        " elements, over the cap of " + std::to_string(opts.max_support));
}

} // namespace

EquivariantAtlas::EquivariantAtlas(GroupPtr group, std::vector<Chart> charts)
    : group_(std::move(group)), charts_(std::move(charts)) {
  if (charts_.empty())
    throw StructuralError("an atlas needs at least one chart");
  for (const auto &c : charts_) {
    const auto &g = std::visit([](const auto &x) -> const GroupPtr & { return x.group(); },
                               c.content);
    require_same_group(*group_, *g, "chart");
  }
}

std::vector<GroupElement> EquivariantAtlas::degree_support() const {
  std::vector<GroupElement> out;
  for (const auto &c : charts_) {
    if (auto *p = std::get_if<GradedPresentation>(&c.content)) {
      auto d = p->degree_support();
      out.insert(out.end(), d.begin(), d.end());
    } else {
      for (const auto &e : std::get<WeightModule>(c.content).entries())
        out.push_back(e.weight);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Fingerprint EquivariantAtlas::fingerprint(const Magnet &n) const {
  Fingerprint fp;
  for (const auto &c : charts_) {
    if (auto *p = std::get_if<GradedPresentation>(&c.content)) {
      fp.push_back(attractor(*p, n).killed);
    } else {
      std::vector<std::size_t> k;
      const auto &entries = std::get<WeightModule>(c.content).entries();
      for (std::size_t i = 0; i < entries.size(); ++i)
        if (!n.contains(entries[i].weight))
          k.push_back(i);
      fp.push_back(std::move(k));
    }
  }
  return fp;
}

bool attractors_equal(const EquivariantAtlas &atlas, const Magnet &n, const Magnet &l) {
  return atlas.fingerprint(n) == atlas.fingerprint(l);
}

Submonoid pure_magnet(const EquivariantAtlas &atlas, const Magnet &n,
                      const PureMagnetOptions &opts) {
  const auto e = atlas.degree_support();
  check_cap(e.size(), opts);
  const auto &g = atlas.group();
  Mask inside = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (n.contains(e[i]))
      inside |= Mask{1} << i;
  const auto target = atlas.fingerprint(n);
  Submonoid result(g, pick(e, inside));

  // Polynomial and weight charts see every element of E, so distinct closed
  // subsets have distinct fingerprints. Monoid algebras can merge them.
  if (has_algebra_chart(atlas)) {
    Mask meet = inside;
    for (Mask sub = inside;; sub = (sub - 1) & inside) {
      if (closed(g, e, sub) && atlas.fingerprint(Submonoid(g, pick(e, sub))) == target)
        meet &= sub;
      if (sub == 0)
        break;
    }
    result = Submonoid(g, pick(e, meet));
    if (!closed(g, e, meet))
      throw IdentityFailure("pure_magnet: minimal class is not closed in E");
  }
  if (atlas.fingerprint(result) != target)
    throw IdentityFailure("pure_magnet: [N cap E> has a different attractor than N");
  return result;
}

MagnetPoset::MagnetPoset(std::vector<MagnetNode> nodes, std::vector<std::vector<bool>> leq)
    : nodes_(std::move(nodes)), leq_(std::move(leq)) {}

std::vector<std::pair<std::size_t, std::size_t>> MagnetPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = nodes_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq_[i][j])
        continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k)
        between = k != i && k != j && leq_[i][k] && leq_[k][j];
      if (!between)
        out.emplace_back(i, j);
    }
  return out;
}

std::string MagnetPoset::to_dot() const {
  std::ostringstream os;
  os << "digraph magnets {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    os << "  n" << i << " [label=\"" << nodes_[i].monoid.to_string() << "\"];\n";
  for (auto [i, j] : covers())
    os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

MagnetPoset enumerate_magnets(const EquivariantAtlas &atlas, const PureMagnetOptions &opts) {
  const auto e = atlas.degree_support();
  check_cap(e.size(), opts);
  const auto &g = atlas.group();

  std::map<Fingerprint, Mask> classes;
  const Mask all = e.size() == 32 ? ~Mask{0} : (Mask{1} << e.size()) - 1;
  for (Mask m = 0;; ++m) {
    // Gray code order
    Mask s = m ^ (m >> 1);
    if (closed(g, e, s)) {
      auto fp = atlas.fingerprint(Submonoid(g, pick(e, s)));
      auto [it, fresh] = classes.emplace(std::move(fp), s);
      if (!fresh)
        it->second &= s;
    }
    if (m == all)
      break;
  }

  std::vector<Mask> masks;
  for (const auto &[fp, s] : classes) {
    if (!closed(g, e, s) || atlas.fingerprint(Submonoid(g, pick(e, s))) != fp)
      throw IdentityFailure("enumerate_magnets: a fingerprint class has no minimum");
    masks.push_back(s);
  }
  std::sort(masks.begin(), masks.end(), [&](Mask a, Mask b) {
    if (std::popcount(a) != std::popcount(b))
      return std::popcount(a) < std::popcount(b);
    return pick(e, a) < pick(e, b);
  });

  std::vector<MagnetNode> nodes;
  for (Mask s : masks) {
    Submonoid mon(g, pick(e, s));
    auto fp = atlas.fingerprint(mon);
    nodes.push_back(MagnetNode{std::move(mon), pick(e, s), std::move(fp)});
  }
  std::vector<std::vector<bool>> leq(masks.size(), std::vector<bool>(masks.size()));
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = 0; j < masks.size(); ++j)
      leq[i][j] = (masks[i] & ~masks[j]) == 0;
  return MagnetPoset(std::move(nodes), std::move(leq));
}

} // namespace magnet
