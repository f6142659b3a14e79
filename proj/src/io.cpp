#include "magnet/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace magnet {
namespace {

using nlohmann::json;

void check_object(const json &j, const std::string &where, const std::set<std::string> &allowed,
                  const std::set<std::string> &required = {}) {
  if (!j.is_object())
    throw SchemaError(where, "expected an object");
  for (const auto &[k, v] : j.items())
    if (!allowed.contains(k))
      throw SchemaError(where, "unknown key '" + k + "'");
  for (const auto &k : required)
    if (!j.contains(k))
      throw SchemaError(where, "missing key '" + k + "'");
}

const json &array_at(const json &j, const std::string &where) {
  if (!j.is_array())
    throw SchemaError(where, "expected an array");
  return j;
}

std::vector<int64_t> ints(const json &j, const std::string &where) {
  std::vector<int64_t> out;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i) {
    if (!j[i].is_number_integer())
      throw SchemaError(where + "/" + std::to_string(i), "expected an integer");
    out.push_back(j[i].get<int64_t>());
  }
  return out;
}

std::string str(const json &j, const std::string &where) {
  if (!j.is_string())
    throw SchemaError(where, "expected a string");
  return j.get<std::string>();
}

/// A full coordinate vector, or free coordinates plus a separate residue vector.
GroupElement element(const GroupPtr &g, const json &coords, const std::string &where,
                     const json *torsion = nullptr, const std::string &twhere = "") {
  auto c = ints(coords, where);
  if (torsion) {
    auto t = ints(*torsion, twhere);
    if (c.size() != static_cast<std::size_t>(g->free_rank()))
      throw SchemaError(where, "expected " + std::to_string(g->free_rank()) +
                                   " free coordinates, got " + std::to_string(c.size()));
    if (t.size() != static_cast<std::size_t>(g->torsion_rank()))
      throw SchemaError(twhere, "expected " + std::to_string(g->torsion_rank()) +
                                    " residues, got " + std::to_string(t.size()));
    c.insert(c.end(), t.begin(), t.end());
  } else if (c.size() != static_cast<std::size_t>(g->coord_count())) {
    throw SchemaError(where, "expected " + std::to_string(g->coord_count()) +
                                 " coordinates, got " + std::to_string(c.size()));
  }
  return GroupElement(g, std::move(c));
}

std::vector<GroupElement> elements(const GroupPtr &g, const json &j, const std::string &where) {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i)
    out.push_back(element(g, j[i], where + "/" + std::to_string(i)));
  return out;
}

GroupElement with_torsion(const GroupPtr &g, const json &obj, const char *key,
                          const std::string &where) {
  const json *t = obj.contains("torsion") ? &obj.at("torsion") : nullptr;
  return element(g, obj.at(key), where + "/" + key, t, where + "/torsion");
}

WeightModule weights(const GroupPtr &g, const json &j, const std::string &where) {
  std::vector<WeightEntry> entries;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i) {
    auto w = where + "/" + std::to_string(i);
    check_object(j[i], w, {"weight", "torsion", "multiplicity", "label"}, {"weight"});
    WeightEntry e{with_torsion(g, j[i], "weight", w), 1, ""};
    if (j[i].contains("multiplicity")) {
      const auto &m = j[i].at("multiplicity");
      if (!m.is_number_integer() || m.get<int64_t>() < 1)
        throw SchemaError(w + "/multiplicity", "expected a positive integer");
      e.multiplicity = m.get<int>();
    }
    if (j[i].contains("label"))
      e.label = str(j[i].at("label"), w + "/label");
    entries.push_back(std::move(e));
  }
  return WeightModule(g, std::move(entries));
}

Chart chart(const GroupPtr &g, const json &j, const std::string &where, std::size_t index) {
  check_object(j, where, {"name", "vars", "monoid_algebra", "weights"});
  int kinds = j.contains("vars") + j.contains("monoid_algebra") + j.contains("weights");
  if (kinds != 1)
    throw SchemaError(where, "a chart has exactly one of 'vars', 'monoid_algebra', 'weights'");
  std::string name = j.contains("name") ? str(j.at("name"), where + "/name")
                                        : "U" + std::to_string(index);
  if (j.contains("weights"))
    return Chart{name, weights(g, j.at("weights"), where + "/weights")};
  if (j.contains("monoid_algebra")) {
    auto w = where + "/monoid_algebra";
    const auto &m = j.at("monoid_algebra");
    check_object(m, w, {"generators", "killed"}, {"generators"});
    Submonoid n(g, elements(g, m.at("generators"), w + "/generators"));
    std::vector<GroupElement> killed;
    if (m.contains("killed"))
      killed = elements(g, m.at("killed"), w + "/killed");
    try {
      return Chart{name, GradedPresentation::monoid_algebra(n, killed)};
    } catch (const PreconditionError &e) {
      throw SchemaError(w + "/killed", e.what());
    }
  }
  std::vector<Variable> vars;
  const auto &vs = array_at(j.at("vars"), where + "/vars");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto w = where + "/vars/" + std::to_string(i);
    check_object(vs[i], w, {"name", "degree", "torsion"}, {"name", "degree"});
    vars.push_back({str(vs[i].at("name"), w + "/name"), with_torsion(g, vs[i], "degree", w),
                    false});
  }
  try {
    return Chart{name, GradedPresentation::free_poly(g, std::move(vars))};
  } catch (const StructuralError &e) {
    throw SchemaError(where + "/vars", e.what());
  }
}

BasisSubset simple_roots(const json &j, const std::string &where) {
  BasisSubset out;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i) {
    auto s = str(j[i], where + "/" + std::to_string(i));
    try {
      auto one = parse_simple_roots(s);
      out.insert(out.end(), one.begin(), one.end());
    } catch (const StructuralError &e) {
      throw SchemaError(where + "/" + std::to_string(i), e.what());
    }
  }
  return out;
}

std::optional<int> option(const json &o, const char *key, const std::string &where) {
  if (!o.contains(key))
    return std::nullopt;
  const auto &v = o.at(key);
  if (!v.is_number_integer() || v.get<int64_t>() < 0)
    throw SchemaError(where + "/" + key, "expected a nonnegative integer");
  return v.get<int>();
}

} // namespace

BasisSubset parse_simple_roots(const std::string &s) {
  BasisSubset out;
  if (s.empty() || s == "none")
    return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.size() != 2 || tok[0] != 'a' || tok[1] < '1' || tok[1] > '9')
      throw StructuralError("simple root '" + tok + "' is not of the form a1..a9");
    out.push_back(static_cast<std::size_t>(tok[1] - '1'));
  }
  return out;
}

Submonoid parse_monoid(const GroupPtr &g, const json &j, const std::string &where) {
  if (j.is_array())
    return Submonoid(g, elements(g, j, where));
  check_object(j, where, {"generators"}, {"generators"});
  return Submonoid(g, elements(g, j.at("generators"), where + "/generators"));
}

Problem parse_problem(const json &j) {
  check_object(j, "", {"group", "chart", "charts", "weights", "rootsystem", "monoid", "monoids",
                       "face", "center", "elements", "module", "cochain", "command-options"},
               {"group"});
  const auto &gj = j.at("group");
  check_object(gj, "/group", {"free_rank", "torsion"}, {"free_rank"});
  if (!gj.at("free_rank").is_number_integer() || gj.at("free_rank").get<int64_t>() < 0)
    throw SchemaError("/group/free_rank", "expected a nonnegative integer");
  std::vector<int64_t> torsion;
  if (gj.contains("torsion"))
    torsion = ints(gj.at("torsion"), "/group/torsion");
  Problem p;
  try {
    p.group = make_group(gj.at("free_rank").get<int>(), torsion);
  } catch (const StructuralError &e) {
    throw SchemaError("/group", e.what());
  }
  const auto &g = p.group;

  if (j.contains("chart") && j.contains("charts"))
    throw SchemaError("", "give either 'chart' or 'charts', not both");
  if (j.contains("chart"))
    p.charts.push_back(chart(g, j.at("chart"), "/chart", 0));
  if (j.contains("charts")) {
    const auto &cs = array_at(j.at("charts"), "/charts");
    if (cs.empty())
      throw SchemaError("/charts", "expected at least one chart");
    for (std::size_t i = 0; i < cs.size(); ++i)
      p.charts.push_back(chart(g, cs[i], "/charts/" + std::to_string(i), i));
  }
  if (j.contains("weights")) {
    p.weights = weights(g, j.at("weights"), "/weights");
    p.charts.push_back(Chart{"weights", *p.weights});
  }
  if (j.contains("rootsystem")) {
    const auto &r = j.at("rootsystem");
    check_object(r, "/rootsystem", {"type", "parabolic", "xi"}, {"type"});
    RootSpec spec{str(r.at("type"), "/rootsystem/type"), {}, {}};
    if (r.contains("parabolic"))
      spec.parabolic = simple_roots(r.at("parabolic"), "/rootsystem/parabolic");
    if (r.contains("xi"))
      spec.xi = simple_roots(r.at("xi"), "/rootsystem/xi");
    p.roots = spec;
  }
  if (j.contains("monoid"))
    p.monoid = parse_monoid(g, j.at("monoid"), "/monoid");
  if (j.contains("monoids")) {
    const auto &ms = array_at(j.at("monoids"), "/monoids");
    for (std::size_t i = 0; i < ms.size(); ++i)
      p.monoids.push_back(parse_monoid(g, ms[i], "/monoids/" + std::to_string(i)));
  }
  if (j.contains("face"))
    p.face = parse_monoid(g, j.at("face"), "/face");
  if (j.contains("center")) {
    const auto &c = array_at(j.at("center"), "/center");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < c.size(); ++i) {
      p.center.push_back(str(c[i], "/center/" + std::to_string(i)));
      if (!seen.insert(p.center.back()).second)
        throw SchemaError("/center/" + std::to_string(i), "repeated center variable");
    }
  }
  if (j.contains("elements"))
    p.elements = elements(g, j.at("elements"), "/elements");
  if (j.contains("module")) {
    const auto &m = j.at("module");
    check_object(m, "/module", {"basis"}, {"basis"});
    const auto &b = array_at(m.at("basis"), "/module/basis");
    std::vector<BasisVector> basis;
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto w = "/module/basis/" + std::to_string(i);
      check_object(b[i], w, {"label", "degree", "torsion"}, {"degree"});
      std::string label =
          b[i].contains("label") ? str(b[i].at("label"), w + "/label") : "b" + std::to_string(i);
      basis.push_back({label, with_torsion(g, b[i], "degree", w)});
    }
    p.module = GradedFreeModule(g, std::move(basis));
  }
  if (j.contains("cochain")) {
    if (!p.module)
      throw SchemaError("/cochain", "a cochain needs a 'module'");
    const auto &c = j.at("cochain");
    check_object(c, "/cochain", {"degree", "entries"}, {"degree", "entries"});
    const auto &d = c.at("degree");
    if (!d.is_number_integer() || d.get<int64_t>() < 0 || d.get<int64_t>() > 2)
      throw SchemaError("/cochain/degree", "expected 0, 1 or 2");
    Cochain co(*p.module, d.get<int>());
    const auto &es = array_at(c.at("entries"), "/cochain/entries");
    for (std::size_t i = 0; i < es.size(); ++i) {
      auto w = "/cochain/entries/" + std::to_string(i);
      check_object(es[i], w, {"key", "value"}, {"key", "value"});
      auto key = elements(g, es[i].at("key"), w + "/key");
      if (static_cast<int>(key.size()) != co.degree())
        throw SchemaError(w + "/key", "expected " + std::to_string(co.degree()) + " entries");
      const auto &vj = array_at(es[i].at("value"), w + "/value");
      if (vj.size() != p.module->rank())
        throw SchemaError(w + "/value",
                          "expected " + std::to_string(p.module->rank()) + " coefficients");
      ModuleElement v;
      for (std::size_t k = 0; k < vj.size(); ++k) {
        auto vw = w + "/value/" + std::to_string(k);
        try {
          v.push_back(parse_rational(str(vj[k], vw)));
        } catch (const SchemaError &) {
          throw;
        } catch (const StructuralError &e) {
          throw SchemaError(vw, e.what());
        }
      }
      co.add(key, v);
    }
    p.cochain = std::move(co);
  }
  if (j.contains("command-options")) {
    const auto &o = j.at("command-options");
    check_object(o, "/command-options", {"bound", "trials", "seed"});
    p.options.bound = option(o, "bound", "/command-options");
    p.options.trials = option(o, "trials", "/command-options");
    if (auto s = option(o, "seed", "/command-options"))
      p.options.seed = static_cast<std::uint64_t>(*s);
  }
  return p;
}

Problem load_problem(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw SchemaError("", "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(j);
}

json to_json(const GroupElement &x) {
  return json(std::vector<int64_t>(x.coords().begin(), x.coords().end()));
}

json to_json(const std::vector<GroupElement> &xs) {
  json out = json::array();
  for (const auto &x : xs)
    out.push_back(to_json(x));
  return out;
}

json to_json(const Submonoid &n) { return json{{"generators", to_json(n.generators())}}; }

json to_json(const GradedPresentation &p) {
  json out;
  out["coefficients"] = p.coefficients;
  if (p.is_free()) {
    json vars = json::array();
    for (const auto &v : p.free().vars) {
      json e{{"name", v.name}, {"degree", to_json(v.degree)}};
      if (v.dilated)
        e["dilated"] = true;
      vars.push_back(e);
    }
    out["vars"] = vars;
  } else {
    const auto &a = p.algebra();
    out["monoid_algebra"] = {{"generators", to_json(a.monoid.generators())},
                             {"killed", to_json(a.killed.generators())}};
  }
  return out;
}

json to_json(const WeightModule &w) {
  json out = json::array();
  for (const auto &e : w.entries()) {
    json x{{"weight", to_json(e.weight)}, {"multiplicity", e.multiplicity}};
    if (!e.label.empty())
      x["label"] = e.label;
    out.push_back(x);
  }
  return out;
}

json to_json(const MagnetPoset &p) {
  json nodes = json::array();
  for (const auto &n : p.nodes())
    nodes.push_back({{"generators", to_json(n.monoid.generators())},
                     {"support", to_json(n.support)},
                     {"killed", n.fingerprint}});
  json order = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < p.size(); ++k)
      row.push_back(p.leq(i, k));
    order.push_back(row);
  }
  json covers = json::array();
  for (auto [a, b] : p.covers())
    covers.push_back({a, b});
  return {{"magnets", nodes}, {"order", order}, {"covers", covers}};
}

json to_json(const ModuleElement &v) {
  json out = json::array();
  for (const auto &q : v)
    out.push_back(rational_to_string(q));
  return out;
}

json to_json(const Cochain &c) {
  json entries = json::array();
  for (const auto &[k, v] : c.entries())
    entries.push_back({{"key", to_json(k)}, {"value", to_json(v)}});
  return {{"degree", c.degree()}, {"entries", entries}};
}

} // namespace magnet
