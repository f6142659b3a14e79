#pragma once

#include "magnet/atlas.hpp"
#include "magnet/bbdil.hpp"
#include "magnet/cohom.hpp"
#include "magnet/error.hpp"
#include "magnet/rootsys.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace magnet {

/// Malformed problem file; `where` is a JSON pointer to the offending value.
class SchemaError : public StructuralError {
public:
  SchemaError(std::string where, const std::string &what)
      : StructuralError(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string &where() const { return where_; }

private:
  std::string where_;
};

struct RootSpec {
  std::string type;
  BasisSubset parabolic;
  BasisSubset xi;
};

struct ProblemOptions {
  std::optional<int> bound;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
};

struct Problem {
  GroupPtr group;
  std::vector<Chart> charts; // "chart", "charts" and "weights", in that order
  std::optional<WeightModule> weights;
  std::optional<RootSpec> roots;
  std::optional<Submonoid> monoid;
  std::vector<Submonoid> monoids;
  std::optional<Submonoid> face;
  std::vector<std::string> center;
  std::vector<GroupElement> elements;
  std::optional<GradedFreeModule> module;
  std::optional<Cochain> cochain;
  ProblemOptions options;
};

Problem parse_problem(const nlohmann::json &j);
Problem load_problem(const std::string &path);

/// Magnet from "[[1,0],[0,1]]" or {"generators": [...]}.
Submonoid parse_monoid(const GroupPtr &g, const nlohmann::json &j,
                       const std::string &where = "/monoid");
/// "a1,a2" or "none" -> basis indices.
BasisSubset parse_simple_roots(const std::string &s);

nlohmann::json to_json(const GroupElement &x);
nlohmann::json to_json(const std::vector<GroupElement> &xs);
nlohmann::json to_json(const Submonoid &n);
nlohmann::json to_json(const GradedPresentation &p);
nlohmann::json to_json(const WeightModule &w);
nlohmann::json to_json(const MagnetPoset &p);
nlohmann::json to_json(const ModuleElement &v);
nlohmann::json to_json(const Cochain &c);

} // namespace magnet
