#include "magnet/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace magnet;
using nlohmann::json;

namespace {

enum Exit { ok = 0, identity = 1, schema = 2, resource = 3 };

struct Args {
  std::string input;
  std::string monoid;
  std::string dot;
  std::string type;
  std::string parabolic;
  std::string xi;
  bool json_out = false;
  int bound = -1;
  int trials = -1;
};

/// Text and JSON reports are built side by side; one of them is printed.
struct Report {
  std::ostringstream text;
  json data = json::object();
  int status = ok;

  void fail(const std::string &why) {
    status = identity;
    text << "FAILED: " << why << "\n";
    data["failures"].push_back(why);
  }
};

Problem need_input(const Args &a) {
  if (a.input.empty())
    throw SchemaError("", "--input FILE is required for this command");
  return load_problem(a.input);
}

Submonoid need_monoid(const Args &a, const Problem &p) {
  if (!a.monoid.empty()) {
    json j;
    try {
      j = json::parse(a.monoid);
    } catch (const json::parse_error &e) {
      throw SchemaError("--monoid", std::string("invalid JSON: ") + e.what());
    }
    return parse_monoid(p.group, j, "--monoid");
  }
  if (!p.monoid)
    throw SchemaError("/monoid", "this command needs a magnet: 'monoid' or --monoid");
  return *p.monoid;
}

std::string join(const std::vector<std::string> &xs) {
  if (xs.empty())
    return "(none)";
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? ", " : "") + xs[i];
  return s;
}

std::string elements_string(const std::vector<GroupElement> &xs) {
  std::vector<std::string> s;
  for (const auto &x : xs)
    s.push_back(x.to_string());
  return join(s);
}

int option_or(int flag, const std::optional<int> &file, int fallback) {
  if (flag >= 0)
    return flag;
  return file ? *file : fallback;
}

void cmd_attractor(const Args &a, Report &r) {
  auto p = need_input(a);
  auto n = need_monoid(a, p);
  if (p.charts.empty())
    throw SchemaError("", "no chart, charts or weights to take the attractor of");
  int bound = option_or(a.bound, p.options.bound, 12);
  r.text << "magnet " << n.to_string() << "\n";
  r.data["monoid"] = to_json(n);
  json charts = json::array();
  for (const auto &c : p.charts) {
    json cj{{"name", c.name}};
    r.text << "chart " << c.name << ":\n";
    if (auto *w = std::get_if<WeightModule>(&c.content)) {
      auto kept = weight_attractor(*w, n);
      r.text << "  kept weights " << kept.to_string() << " (dimension " << kept.dimension()
             << ")\n";
      cj["kept"] = to_json(kept);
      cj["dimension"] = kept.dimension();
    } else {
      const auto &pres = std::get<GradedPresentation>(c.content);
      auto res = attractor(pres, n);
      if (pres.is_free()) {
        std::vector<std::string> kept, killed;
        for (const auto &v : res.quotient.free().vars)
          kept.push_back(v.name);
        for (auto i : res.killed)
          killed.push_back(pres.free().vars[i].name);
        r.text << "  keeps " << join(kept) << "\n  kills " << join(killed) << "\n";
        cj["kept"] = kept;
        cj["killed"] = killed;
      } else {
        auto sup = enumerate_support(res.quotient, bound);
        r.text << "  killed generators " << elements_string(res.killed_degrees()) << "\n";
        r.text << "  quotient " << res.quotient.to_string() << "\n";
        r.text << "  degree support " << elements_string(sup.elements)
               << (sup.complete ? "" : " ... (truncated at bound " + std::to_string(bound) + ")")
               << "\n";
        r.text << "  reduced: " << (sup.reduced() ? "yes" : "no");
        if (!sup.reduced())
          r.text << " (nilpotent in degrees " << elements_string(sup.nilpotent) << ")";
        r.text << "\n";
        cj["killed"] = to_json(res.killed_degrees());
        cj["support"] = to_json(sup.elements);
        cj["support_complete"] = sup.complete;
        cj["nilpotent"] = to_json(sup.nilpotent);
        cj["reduced"] = sup.reduced();
      }
      cj["quotient"] = to_json(res.quotient);
    }
    charts.push_back(cj);
  }
  r.data["charts"] = charts;
}

void cmd_magnets(const Args &a, Report &r) {
  auto p = need_input(a);
  if (p.charts.empty())
    throw SchemaError("", "no chart, charts or weights to enumerate magnets for");
  EquivariantAtlas atlas(p.group, p.charts);
  auto poset = enumerate_magnets(atlas);
  r.text << "degree support " << elements_string(atlas.degree_support()) << "\n";
  r.text << poset.size() << " pure magnets\n";
  for (std::size_t i = 0; i < poset.size(); ++i)
    r.text << "  " << i << ": " << poset.nodes()[i].monoid.to_string() << "\n";
  r.text << "covers:";
  for (auto [x, y] : poset.covers())
    r.text << " " << x << "<" << y;
  r.text << "\n";
  r.data = to_json(poset);
  r.data["count"] = poset.size();
  if (!a.dot.empty()) {
    std::ofstream out(a.dot);
    if (!out)
      throw SchemaError("--dot", "cannot write '" + a.dot + "'");
    out << poset.to_dot();
    r.text << "wrote " << a.dot << "\n";
  }
}

void cmd_roots(const Args &a, Report &r) {
  RootSpec spec;
  if (!a.input.empty()) {
    auto p = load_problem(a.input);
    if (!p.roots)
      throw SchemaError("/rootsystem", "missing");
    spec = *p.roots;
  }
  if (!a.type.empty())
    spec.type = a.type;
  if (spec.type.empty())
    throw SchemaError("--type", "a root system type is required");
  try {
    if (!a.parabolic.empty())
      spec.parabolic = parse_simple_roots(a.parabolic);
    if (!a.xi.empty())
      spec.xi = parse_simple_roots(a.xi);
  } catch (const StructuralError &e) {
    throw SchemaError("--parabolic", e.what());
  }
  auto d = build_root_datum(spec.type);
  const auto &s = d.system;
  auto l = levi(d, spec.parabolic);
  auto pb = parabolic(d, spec.parabolic);
  auto b = parabolic(d, {});
  auto rg = root_group(d, s.basis.front());
  int dim_g = adjoint_module(d).dimension();

  r.text << "type " << s.type << ": |Phi| = " << s.roots.size() << ", torus rank "
         << d.torus_rank << ", dim G = " << dim_g << "\n";
  r.text << "B: " << b.dim << "\nL: " << l.dim << "\nP: " << pb.dim << "\n";
  r.text << "root group of " << s.basis.front().to_string() << ": H = " << rg.attractor
         << ", U = " << rg.unipotent << "\n";
  r.data = {{"type", s.type},
            {"roots", s.roots.size()},
            {"torus_rank", d.torus_rank},
            {"dim_group", dim_g},
            {"borel", b.dim},
            {"levi", {{"dim", l.dim}, {"roots", to_json(l.roots)}}},
            {"parabolic", {{"dim", pb.dim}, {"roots", to_json(pb.roots)}}},
            {"root_group", {{"attractor", rg.attractor}, {"unipotent", rg.unipotent}}}};

  if (s.roots.size() <= 12) {
    auto closed = closed_subsets(d);
    r.text << "closed subsets: " << closed.size() << "\n";
    r.data["closed_subsets"] = closed.size();
  }
  if (!a.xi.empty() || !spec.xi.empty() || !spec.parabolic.empty()) {
    auto sq = cartesian_square(d, spec.xi, spec.parabolic);
    r.text << "cartesian square (L', N', L, N) = (" << sq.dim_l_prime << ", " << sq.dim_n_prime
           << ", " << sq.dim_l << ", " << sq.dim_n << ")\n";
    r.data["cartesian_square"] = {{"dims", {sq.dim_l_prime, sq.dim_n_prime, sq.dim_l, sq.dim_n}},
                                  {"face", sq.face_ok},
                                  {"complement", sq.complement_ok},
                                  {"union", sq.union_ok},
                                  {"dimensions", sq.dims_ok}};
    for (const auto &f : sq.failures)
      r.fail(f);
  }
}

void cmd_cohomology(const Args &a, Report &r) {
  auto p = need_input(a);
  if (!p.module)
    throw SchemaError("/module", "the cohomology command needs a module");
  int trials = option_or(a.trials, p.options.trials, p.cochain ? 0 : 100);
  if (p.cochain) {
    const auto &c = *p.cochain;
    auto d = differential(c);
    bool cocycle = d.is_zero();
    r.text << "cochain of degree " << c.degree() << ": " << c.to_string() << "\n";
    r.text << "differential: " << d.to_string() << "\n";
    r.data["cochain"] = to_json(c);
    r.data["differential"] = to_json(d);
    r.data["cocycle"] = cocycle;
    if (c.degree() == 1) {
      if (cocycle) {
        auto e = primitive(c);
        std::vector<std::string> coeffs;
        for (const auto &q : e)
          coeffs.push_back(rational_to_string(q));
        r.text << "primitive: " << join(coeffs) << "\n";
        r.data["primitive"] = to_json(e);
      } else {
        r.fail("not a cocycle; the differential is " + d.to_string());
      }
    }
  }
  if (trials > 0) {
    auto rep = h1_zero_suite(*p.module, trials, p.options.seed.value_or(1));
    r.text << "H1 suite: " << rep.round_trips << "/" << rep.trials << " round trips, "
           << rep.rejected << " non-cocycles rejected\n";
    r.data["h1"] = {{"trials", rep.trials},
                    {"round_trips", rep.round_trips},
                    {"square_zero", rep.square_zero},
                    {"rejected", rep.rejected}};
    for (const auto &f : rep.failures)
      r.fail(f);
  }
}

const GradedPresentation &single_free_chart(const Problem &p) {
  if (p.charts.size() != 1)
    throw SchemaError("/chart", "expected exactly one chart");
  auto *g = std::get_if<GradedPresentation>(&p.charts.front().content);
  if (!g || !g->is_free())
    throw SchemaError("/chart", "expected a chart with 'vars'");
  return *g;
}

void cmd_bb(const Args &a, Report &r) {
  auto p = need_input(a);
  auto n = need_monoid(a, p);
  auto xn = attractor(single_free_chart(p), n).quotient;
  auto res = bb_bundle(xn, n, option_or(a.bound, p.options.bound, 8));
  std::vector<std::string> fiber;
  for (const auto &v : res.fiber)
    fiber.push_back(v.name);
  r.text << "attractor " << xn.to_string() << "\n";
  r.text << "base " << res.base.to_string() << "\n";
  r.text << "fiber rank " << res.fiber_rank << " (" << join(fiber) << ")\n";
  std::ostringstream w;
  for (std::size_t i = 0; i < res.certificate.functional.size(); ++i)
    w << (i ? "," : "") << res.certificate.functional[i];
  r.text << "certificate functional (" << w.str() << ") on "
         << res.sharp.quotient_group->to_string() << "\n";
  r.text << "Hilbert counts to degree " << res.hilbert_bound << ": "
         << (res.hilbert_ok() ? "agree" : "DISAGREE") << "\n";
  r.data = {{"attractor", to_json(xn)},
            {"base", to_json(res.base)},
            {"fiber", fiber},
            {"fiber_rank", res.fiber_rank},
            {"certificate", res.certificate.functional},
            {"heights", res.heights},
            {"hilbert_bound", res.hilbert_bound},
            {"hilbert_ring", res.hilbert_ring},
            {"hilbert_sym", res.hilbert_sym},
            {"components_bijective", res.components_bijective}};
  if (!res.hilbert_ok())
    r.fail("Hilbert counts of Sym(I/I^2) and A differ");
}

void cmd_dilatation(const Args &a, Report &r) {
  auto p = need_input(a);
  auto n = need_monoid(a, p);
  DilatationSetup s{single_free_chart(p), p.center};
  auto rep = dilatation_attractor_check(s, n);
  r.text << "(Bl X)^N      = " << rep.blowup_then_attractor.to_string() << "\n";
  r.text << "Bl_{Y^N} X^N  = " << rep.attractor_then_blowup.to_string() << "\n";
  r.text << (rep.equal() ? "equal" : "different") << "\n";
  r.data = {{"blowup_then_attractor", to_json(rep.blowup_then_attractor)},
            {"attractor_then_blowup", to_json(rep.attractor_then_blowup)},
            {"center_after", rep.center_after},
            {"equal", rep.equal()}};
  for (const auto &d : rep.differences)
    r.fail(d);
}

void cmd_faces(const Args &a, Report &r) {
  auto p = need_input(a);
  auto n = need_monoid(a, p);
  auto fs = faces(n);
  r.text << fs.size() << " faces of " << n.to_string() << "\n";
  json list = json::array();
  for (const auto &f : fs) {
    r.text << "  " << f.to_string() << "\n";
    list.push_back(to_json(f));
  }
  r.text << "units " << units(n).to_string() << "\n";
  r.data = {{"monoid", to_json(n)}, {"faces", list}, {"count", fs.size()},
            {"units", to_json(units(n))}};
}

void cmd_membership(const Args &a, Report &r) {
  auto p = need_input(a);
  auto n = need_monoid(a, p);
  if (p.elements.empty())
    throw SchemaError("/elements", "the membership command needs 'elements'");
  json list = json::array();
  for (const auto &x : p.elements) {
    auto c = n.decompose(x);
    r.text << x.to_string() << (c ? " in " : " not in ") << n.to_string();
    json e{{"element", to_json(x)}, {"member", c.has_value()}};
    if (c) {
      std::ostringstream cs;
      for (std::size_t i = 0; i < c->size(); ++i)
        cs << (i ? "," : "") << (*c)[i];
      r.text << " with coefficients (" << cs.str() << ")";
      e["coefficients"] = *c;
    }
    r.text << "\n";
    list.push_back(e);
  }
  r.data = {{"monoid", to_json(n)}, {"queries", list}};
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"magnet-kit: attractors of monoid actions on graded affine schemes"};
  app.require_subcommand(1);
  Args args;

  auto add = [&](const std::string &name, const std::string &help) {
    auto *sub = app.add_subcommand(name, help);
    sub->add_option("--input", args.input, "problem file (JSON)");
    sub->add_flag("--json", args.json_out, "machine-readable output");
    return sub;
  };
  auto *att = add("attractor", "killed and surviving coordinates of X^N");
  att->add_option("--monoid", args.monoid, "magnet generators as JSON, e.g. [[1,0]]");
  att->add_option("--bound", args.bound, "support enumeration bound for monoid algebras");
  auto *mag = add("magnets", "finite poset of pure magnets");
  mag->add_option("--dot", args.dot, "write the Hasse diagram to this DOT file");
  auto *roots = add("roots", "Levi, parabolic and root-group dimensions");
  roots->add_option("--type", args.type, "A1..A4, B2, G2");
  roots->add_option("--parabolic", args.parabolic, "simple roots, e.g. a1,a2 or none");
  roots->add_option("--xi", args.xi, "smaller set of simple roots for the cartesian square");
  auto *coh = add("cohomology", "monoid Hochschild differential and H1 primitives");
  coh->add_option("--trials", args.trials, "random H1 round trips");
  auto *bb = add("bb", "vector bundle X^N -> X^{N*}");
  bb->add_option("--monoid", args.monoid, "magnet generators as JSON");
  bb->add_option("--bound", args.bound, "Hilbert count bound");
  auto *dil = add("dilatation-check", "dilatation commutes with the attractor");
  dil->add_option("--monoid", args.monoid, "magnet generators as JSON");
  auto *fac = add("faces", "faces and units of a monoid");
  fac->add_option("--monoid", args.monoid, "monoid generators as JSON");
  auto *mem = add("membership", "membership with a certificate");
  mem->add_option("--monoid", args.monoid, "monoid generators as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? ok : schema;
  }

  Report r;
  try {
    if (*att)
      cmd_attractor(args, r);
    else if (*mag)
      cmd_magnets(args, r);
    else if (*roots)
      cmd_roots(args, r);
    else if (*coh)
      cmd_cohomology(args, r);
    else if (*bb)
      cmd_bb(args, r);
    else if (*dil)
      cmd_dilatation(args, r);
    else if (*fac)
      cmd_faces(args, r);
    else if (*mem)
      cmd_membership(args, r);
  } catch (const SchemaError &e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return schema;
  } catch (const ResourceLimit &e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return resource;
  } catch (const IdentityFailure &e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return identity;
  } catch (const NoCertificate &e) {
    std::cerr << "no certificate: " << e.what() << "\n";
    return identity;
  } catch (const Error &e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return schema;
  }

  if (args.json_out) {
    r.data["status"] = r.status == ok ? "ok" : "failed";
    std::cout << r.data.dump(2) << "\n";
  } else {
    std::cout << r.text.str();
  }
  return r.status;
}
