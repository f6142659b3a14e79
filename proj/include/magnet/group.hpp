#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace magnet {

/// M = Z^r x Z/n_1 x ... x Z/n_t with n_j >= 2 listed in nondecreasing order.
class FgAbelianGroup {
public:
  FgAbelianGroup(int free_rank, std::vector<int64_t> torsion = {});

  int free_rank() const { return free_rank_; }
  const std::vector<int64_t> &torsion() const { return torsion_; }
  int torsion_rank() const { return static_cast<int>(torsion_.size()); }
  /// Number of coordinates of an element: free part followed by residues.
  int coord_count() const { return free_rank_ + torsion_rank(); }
  bool is_torsion_free() const { return torsion_.empty(); }

  bool operator==(const FgAbelianGroup &) const = default;

  std::string to_string() const;

private:
  int free_rank_;
  std::vector<int64_t> torsion_;
};

using GroupPtr = std::shared_ptr<const FgAbelianGroup>;

GroupPtr make_group(int free_rank, std::vector<int64_t> torsion = {});

/// Element of an FgAbelianGroup. Residues are always reduced into [0, n_j).
class GroupElement {
public:
  GroupElement(GroupPtr group, std::vector<int64_t> coords);

  static GroupElement zero(const GroupPtr &group);
  /// i-th standard basis vector of the free part.
  static GroupElement unit(const GroupPtr &group, int i);

  const GroupPtr &group() const { return group_; }
  const FgAbelianGroup &ambient() const { return *group_; }
  std::span<const int64_t> coords() const { return coords_; }
  std::span<const int64_t> free_part() const {
    return std::span<const int64_t>(coords_).first(group_->free_rank());
  }
  std::span<const int64_t> torsion_part() const {
    return std::span<const int64_t>(coords_).subspan(group_->free_rank());
  }
  int64_t operator[](int i) const { return coords_[i]; }

  bool is_zero() const;
  bool is_torsion() const;

  GroupElement operator+(const GroupElement &o) const;
  GroupElement operator-(const GroupElement &o) const;
  GroupElement operator-() const;
  GroupElement &operator+=(const GroupElement &o);
  friend GroupElement operator*(int64_t k, const GroupElement &x);

  bool same_group(const GroupElement &o) const;
  bool operator==(const GroupElement &o) const;
  /// Lexicographic on coordinates; only meaningful within one group.
  std::strong_ordering operator<=>(const GroupElement &o) const;

  std::string to_string() const;

private:
  void reduce();

  GroupPtr group_;
  std::vector<int64_t> coords_;
};

/// Throws StructuralError unless both live in equal groups.
void require_same_group(const FgAbelianGroup &a, const FgAbelianGroup &b,
                        const char *what);

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
int64_t floor_mod(int64_t a, int64_t n);

} // namespace magnet
