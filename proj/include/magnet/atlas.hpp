#pragma once

#include "magnet/graded.hpp"

#include <string>
#include <variant>
#include <vector>

namespace magnet {

struct Chart {
  std::string name;
  std::variant<GradedPresentation, WeightModule> content;
};

/// Per chart, the sorted indices killed by an attractor.
using Fingerprint = std::vector<std::vector<std::size_t>>;

/// Zariski atlas of stable affine charts. Gluing data is not stored: every
/// question answered here is decided chart by chart.
class EquivariantAtlas {
public:
  EquivariantAtlas(GroupPtr group, std::vector<Chart> charts);

  const GroupPtr &group() const { return group_; }
  const std::vector<Chart> &charts() const { return charts_; }

  /// Union of the variable degrees, monoid generators and weights, sorted.
  std::vector<GroupElement> degree_support() const;
  Fingerprint fingerprint(const Magnet &n) const;

private:
  GroupPtr group_;
  std::vector<Chart> charts_;
};

bool attractors_equal(const EquivariantAtlas &atlas, const Magnet &n, const Magnet &l);

struct PureMagnetOptions {
  std::size_t max_support = 20;
};

/// The smallest [S> with S a subset of the degree support giving the same
/// attractor as N.
Submonoid pure_magnet(const EquivariantAtlas &atlas, const Magnet &n,
                      const PureMagnetOptions &opts = {});

struct MagnetNode {
  Submonoid monoid;
  std::vector<GroupElement> support; // [monoid> cap E
  Fingerprint fingerprint;
};

class MagnetPoset {
public:
  MagnetPoset(std::vector<MagnetNode> nodes, std::vector<std::vector<bool>> leq);

  const std::vector<MagnetNode> &nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  /// Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  std::string to_dot() const;

private:
  std::vector<MagnetNode> nodes_;
  std::vector<std::vector<bool>> leq_;
};

/// All pure magnets, ordered by support size then lexicographically.
MagnetPoset enumerate_magnets(const EquivariantAtlas &atlas,
                              const PureMagnetOptions &opts = {});

} // namespace magnet
