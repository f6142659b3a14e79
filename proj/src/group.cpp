#include "magnet/group.hpp"

#include "magnet/error.hpp"

#include <algorithm>
#include <sstream>

namespace magnet {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw StructuralError("integer overflow in group arithmetic");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw StructuralError("integer overflow in group arithmetic");
  return r;
}

int64_t floor_mod(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

FgAbelianGroup::FgAbelianGroup(int free_rank, std::vector<int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank_ < 0)
    throw StructuralError("free rank must be nonnegative");
  for (int64_t n : torsion_)
    if (n < 2)
      throw StructuralError("torsion orders must be >= 2");
  if (!std::is_sorted(torsion_.begin(), torsion_.end()))
    throw StructuralError("torsion orders must be listed in nondecreasing order");
}

std::string FgAbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0 || torsion_.empty()) {
    os << "Z";
    if (free_rank_ != 1)
      os << "^" << free_rank_;
    first = false;
  }
  for (int64_t n : torsion_) {
    if (!first)
      os << " x ";
    os << "Z/" << n;
    first = false;
  }
  return os.str();
}

GroupPtr make_group(int free_rank, std::vector<int64_t> torsion) {
  return std::make_shared<const FgAbelianGroup>(free_rank, std::move(torsion));
}

void require_same_group(const FgAbelianGroup &a, const FgAbelianGroup &b,
                        const char *what) {
  if (!(a == b))
    throw StructuralError(std::string(what) + ": ambient group mismatch (" +
                          a.to_string() + " vs " + b.to_string() + ")");
}

GroupElement::GroupElement(GroupPtr group, std::vector<int64_t> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
  if (!group_)
    throw StructuralError("group element without ambient group");
  if (static_cast<int>(coords_.size()) != group_->coord_count())
    throw StructuralError("element has " + std::to_string(coords_.size()) +
                          " coordinates, group " + group_->to_string() +
                          " needs " + std::to_string(group_->coord_count()));
  reduce();
}

GroupElement GroupElement::zero(const GroupPtr &group) {
  return GroupElement(group, std::vector<int64_t>(group->coord_count(), 0));
}

GroupElement GroupElement::unit(const GroupPtr &group, int i) {
  std::vector<int64_t> c(group->coord_count(), 0);
  c.at(i) = 1;
  return GroupElement(group, std::move(c));
}

void GroupElement::reduce() {
  const auto &tor = group_->torsion();
  for (size_t j = 0; j < tor.size(); ++j) {
    auto &c = coords_[group_->free_rank() + j];
    c = floor_mod(c, tor[j]);
  }
}

bool GroupElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](int64_t c) { return c == 0; });
}

bool GroupElement::is_torsion() const {
  auto f = free_part();
  return std::all_of(f.begin(), f.end(), [](int64_t c) { return c == 0; });
}

bool GroupElement::same_group(const GroupElement &o) const {
  return group_ == o.group_ || *group_ == *o.group_;
}

GroupElement &GroupElement::operator+=(const GroupElement &o) {
  if (!same_group(o))
    require_same_group(*group_, *o.group_, "addition");
  for (size_t i = 0; i < coords_.size(); ++i)
    coords_[i] = checked_add(coords_[i], o.coords_[i]);
  reduce();
  return *this;
}

GroupElement GroupElement::operator+(const GroupElement &o) const {
  GroupElement r = *this;
  r += o;
  return r;
}

GroupElement GroupElement::operator-() const {
  std::vector<int64_t> c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = checked_mul(-1, coords_[i]);
  return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement &o) const {
  return *this + (-o);
}

GroupElement operator*(int64_t k, const GroupElement &x) {
  std::vector<int64_t> c(x.coords_.size());
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = checked_mul(k, x.coords_[i]);
  return GroupElement(x.group_, std::move(c));
}

bool GroupElement::operator==(const GroupElement &o) const {
  return same_group(o) && coords_ == o.coords_;
}

std::strong_ordering GroupElement::operator<=>(const GroupElement &o) const {
  return coords_ <=> o.coords_;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0)
      os << (static_cast<int>(i) == group_->free_rank() ? "|" : ",");
    os << coords_[i];
  }
  os << ")";
  return os.str();
}

} // namespace magnet
