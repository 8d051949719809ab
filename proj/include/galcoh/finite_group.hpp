#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace galcoh {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr std::size_t kDefaultGroupOrderCap = 256;

/// A subgroup, identified by its sorted element set.
class Subgroup {
 public:
  Subgroup() = default;
  /// Throws DomainError unless elements form a subgroup of parent.
  Subgroup(GroupPtr parent, std::vector<std::size_t> elements);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<std::size_t>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t index() const;
  bool contains(std::size_t g) const;
  bool is_subgroup_of(const Subgroup& other) const;
  bool is_normal() const;
  /// g H g^-1
  Subgroup conjugate(std::size_t g) const;
  /// "{0,1}"
  std::string to_string() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }
  /// Size first, then lexicographic on element lists.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  GroupPtr parent_;
  std::vector<std::size_t> elements_;
};

/// A subgroup or quotient regarded as a group in its own right.
struct InducedGroup {
  GroupPtr group;
  /// Subgroups: element of `group` -> element of the parent.
  /// Quotients: element of the parent -> element of `group`.
  std::vector<std::size_t> map;
};

/// Finite group given by its Cayley table on indices 0..order-1.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  /// Validates identity, inverses and associativity.
  static GroupPtr from_table(const std::vector<std::vector<std::size_t>>& table);
  /// Closure of the permutations under composition ((p*q)(x) = p(q(x))).
  static GroupPtr from_generator_permutations(const std::vector<std::vector<std::size_t>>& perms,
                                              std::size_t cap = kDefaultGroupOrderCap);
  static GroupPtr trivial();
  /// Element k is the k-th power of the generator.
  static GroupPtr cyclic(std::size_t n);
  /// 0 = e, 1 = a, 2 = b, 3 = ab.
  static GroupPtr klein_four();
  /// Element (x, y) has index x * |b| + y.
  static GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
  static GroupPtr dihedral(std::size_t n);
  static GroupPtr quaternion();

  std::size_t order() const { return n_; }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t element_order(std::size_t a) const;
  bool is_abelian() const;

  /// Greedy generating set: scan elements in index order, keep those not yet generated.
  const std::vector<std::size_t>& generators() const { return generators_; }

  Subgroup whole() const;
  Subgroup trivial_subgroup() const;
  Subgroup generated_by(const std::vector<std::size_t>& elements) const;
  /// Complete duplicate-free list ordered by size, then lexicographically.
  std::vector<Subgroup> all_subgroups() const;
  std::vector<Subgroup> cyclic_subgroups() const;

  /// Left cosets gH, each sorted, ordered by minimal element.
  std::vector<std::vector<std::size_t>> cosets(const Subgroup& h) const;
  /// Smallest element of each left coset, in the order of cosets().
  std::vector<std::size_t> transversal(const Subgroup& h) const;

  /// True iff some conjugate of h is contained in some member of family.
  bool is_conjugate_contained(const Subgroup& h, const std::vector<Subgroup>& family) const;

  /// Cached: repeated calls for the same subgroup return the same group object.
  InducedGroup subgroup_as_group(const Subgroup& h) const;
  /// Requires a normal subgroup; quotient elements are the cosets in cosets() order. Cached.
  InducedGroup quotient_group(const Subgroup& n) const;

  std::vector<std::vector<std::size_t>> table() const;

 private:
  FiniteGroup() = default;
  void check_subgroup(const Subgroup& h) const;

  std::size_t n_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generators_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::vector<std::size_t>, InducedGroup> subgroup_cache_;
  mutable std::map<std::vector<std::size_t>, InducedGroup> quotient_cache_;
};

}  // namespace galcoh
