#include "magnet/cohom.hpp"

#include "magnet/error.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

namespace magnet {
namespace {

std::string key_string(const Cochain::Key &k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i)
    s += (i ? "," : "") + k[i].to_string();
  return s + ")";
}

std::string element_string(const ModuleElement &v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + rational_to_string(v[i]);
  return s + "]";
}

Rational random_rational(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

ModuleElement random_element(const GradedFreeModule &m, std::mt19937_64 &rng) {
  ModuleElement v = m.zero();
  for (auto &x : v)
    x = random_rational(rng);
  return v;
}

GroupElement random_degree(const GradedFreeModule &m, std::mt19937_64 &rng) {
  const auto &b = m.basis();
  std::uniform_int_distribution<std::size_t> pick(0, b.size() + 1);
  std::size_t i = pick(rng);
  if (i < b.size())
    return b[i].degree;
  if (i == b.size())
    return GroupElement::zero(m.group());
  std::uniform_int_distribution<int64_t> c(-3, 3);
  std::vector<int64_t> coords(m.group()->coord_count());
  for (auto &x : coords)
    x = c(rng);
  return GroupElement(m.group(), std::move(coords));
}

} // namespace

GradedFreeModule::GradedFreeModule(GroupPtr group, std::vector<BasisVector> basis)
    : group_(std::move(group)), basis_(std::move(basis)) {
  for (const auto &b : basis_)
    require_same_group(*group_, b.degree.ambient(), "module basis degree");
}

ModuleElement GradedFreeModule::mu(const GroupElement &k, const ModuleElement &v) const {
  ModuleElement out = zero();
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree == k)
      out[i] = v[i];
  return out;
}

std::vector<GroupElement> GradedFreeModule::degrees(const ModuleElement &v) const {
  std::set<GroupElement> out;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v[i] != 0)
      out.insert(basis_[i].degree);
  return {out.begin(), out.end()};
}

bool is_zero(const ModuleElement &v) {
  return std::all_of(v.begin(), v.end(), [](const Rational &q) { return q == 0; });
}

Cochain::Cochain(const GradedFreeModule &module, int n) : module_(module), n_(n) {
  if (n < 0)
    throw PreconditionError("cochain degree must be nonnegative");
}

Cochain Cochain::constant(const GradedFreeModule &module, ModuleElement v) {
  Cochain c(module, 0);
  c.add({}, v);
  return c;
}

ModuleElement Cochain::at(const Key &k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? module_.zero() : it->second;
}

void Cochain::add(const Key &k, const ModuleElement &v, const Rational &scale) {
  if (static_cast<int>(k.size()) != n_)
    throw StructuralError("cochain key " + key_string(k) + " has the wrong length");
  if (v.size() != module_.rank())
    throw StructuralError("module element has the wrong rank");
  for (const auto &m : k)
    require_same_group(*module_.group(), m.ambient(), "cochain key");
  auto &slot = entries_.try_emplace(k, module_.zero()).first->second;
  for (std::size_t i = 0; i < v.size(); ++i)
    slot[i] += scale * v[i];
  if (magnet::is_zero(slot))
    entries_.erase(k);
}

bool Cochain::operator==(const Cochain &o) const {
  return n_ == o.n_ && entries_ == o.entries_;
}

std::string Cochain::to_string() const {
  if (entries_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[k, v] : entries_) {
    os << (first ? "" : " + ") << element_string(v) << " X^" << key_string(k);
    first = false;
  }
  return os.str();
}

Cochain differential(const Cochain &c) {
  const auto &mod = c.module();
  const int n = c.degree();
  if (n > 2)
    throw Unsupported("differential is implemented for cochains of degree <= 2, got " +
                      std::to_string(n));
  const auto z = GroupElement::zero(mod.group());
  Cochain out(mod, n + 1);
  for (const auto &[key, f] : c.entries()) {
    for (const auto &k : mod.degrees(f)) {
      Cochain::Key kk{k};
      kk.insert(kk.end(), key.begin(), key.end());
      out.add(kk, mod.mu(k, f));
    }
    switch (n) {
    case 0:
      out.add({z}, f, -1);
      break;
    case 1:
      out.add({key[0], key[0]}, f, -1);
      out.add({key[0], z}, f, 1);
      break;
    case 2:
      out.add({key[0], key[0], key[1]}, f, -1);
      out.add({key[0], key[1], key[1]}, f, 1);
      out.add({key[0], key[1], z}, f, -1);
      break;
    }
  }
  return out;
}

bool is_cocycle(const Cochain &c) { return differential(c).is_zero(); }

ModuleElement primitive(const Cochain &xi) {
  if (xi.degree() != 1)
    throw PreconditionError("primitive expects a 1-cochain");
  auto d = differential(xi);
  if (!d.is_zero()) {
    const auto &[k, v] = *d.entries().begin();
    throw PreconditionError("not a cocycle: the differential has component " +
                            element_string(v) + " at " + key_string(k));
  }
  const auto z = GroupElement::zero(xi.module().group());
  ModuleElement e = xi.at({z});
  for (auto &q : e)
    q = -q;
  if (!(differential(Cochain::constant(xi.module(), e)) == xi))
    throw IdentityFailure("primitive: d(-xi(0)) does not reproduce xi");
  return e;
}

H1Report h1_zero_suite(const GradedFreeModule &module, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  H1Report rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    auto w = Cochain::constant(module, random_element(module, rng));
    auto dw = differential(w);
    if (differential(dw).is_zero())
      ++rep.square_zero;
    else
      rep.failures.push_back("d(d(w)) != 0 for w = " + w.to_string());

    try {
      auto p = primitive(dw);
      if (differential(Cochain::constant(module, p)) == dw)
        ++rep.round_trips;
      else
        rep.failures.push_back("primitive does not round trip for " + dw.to_string());
    } catch (const Error &e) {
      rep.failures.push_back(std::string("primitive failed on a coboundary: ") + e.what());
    }

    Cochain c(module, 1);
    std::uniform_int_distribution<int> count(1, 3);
    for (int i = count(rng); i > 0; --i)
      c.add({random_degree(module, rng)}, random_element(module, rng));
    if (!differential(differential(c)).is_zero())
      rep.failures.push_back("d(d(c)) != 0 for the 1-cochain " + c.to_string());
    if (is_cocycle(c))
      continue;
    try {
      primitive(c);
      rep.failures.push_back("primitive accepted the non-cocycle " + c.to_string());
    } catch (const PreconditionError &) {
      ++rep.rejected;
    }
  }
  return rep;
}

std::string rational_to_string(const Rational &q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string &s) {
  static const std::regex form(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(s, form))
    throw StructuralError("malformed rational '" + s + "'");
  auto slash = s.find('/');
  if (slash != std::string::npos && s.find_first_not_of('0', slash + 1) == std::string::npos)
    throw StructuralError("zero denominator in '" + s + "'");
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

} // namespace magnet
