#pragma once

#include <cstddef>
#include <vector>

#include "galcoh/finite_group.hpp"
#include "galcoh/linalg.hpp"

namespace galcoh {

class LatticeMap;

/// Free Z-module of finite rank with a left action of a finite group.
class GLattice {
 public:
  GLattice() = default;
  /// action[g] is the matrix of g; validated to be a homomorphism.
  GLattice(GroupPtr group, std::size_t rank, std::vector<IntMatrix> action);

  static GLattice trivial(const GroupPtr& g, std::size_t rank);
  static GLattice regular(const GroupPtr& g);
  /// Basis = left cosets of h in cosets() order; g sends xH to gxH.
  static GLattice permutation(const GroupPtr& g, const Subgroup& h);
  /// Rank one, elements outside the index-2 subgroup h act by -1.
  static GLattice sign(const GroupPtr& g, const Subgroup& h);
  /// Rank one sign character for the first index-2 subgroup in all_subgroups() order.
  static GLattice sign(const GroupPtr& g);
  /// One matrix per element of g->generators().
  static GLattice from_generator_matrices(const GroupPtr& g, const std::vector<IntMatrix>& matrices);
  static GLattice direct_sum(const std::vector<GLattice>& parts);

  const GroupPtr& group() const { return group_; }
  std::size_t rank() const { return rank_; }
  const IntMatrix& action(std::size_t g) const { return action_[g]; }
  IntVector act(std::size_t g, std::span<const Integer> v) const;

  /// Contragredient: g acts by the transpose of action(g^-1).
  GLattice dual() const;
  /// Same matrices, regarded as a lattice over h (as a group, elements in sorted order).
  GLattice restrict(const Subgroup& h) const;
  /// Lattice over `group` on which g acts as quotient.map[g] does here.
  GLattice inflate(const GroupPtr& group, const InducedGroup& quotient) const;

  /// Saturated basis (columns) of the h-fixed vectors.
  IntMatrix invariants_sublattice(const Subgroup& h) const;
  bool is_stable(const IntMatrix& basis) const;
  /// Quotient by a saturated G-stable sublattice; returns the lattice and the projection.
  LatticeMap quotient_by_saturated(const IntMatrix& basis) const;
  /// Saturated G-stable sublattice with its inclusion map (basis columns become the new basis).
  LatticeMap sublattice(const IntMatrix& basis) const;

  friend bool operator==(const GLattice& a, const GLattice& b) {
    return a.group_ == b.group_ && a.rank_ == b.rank_ && a.action_ == b.action_;
  }

 private:
  GroupPtr group_;
  std::size_t rank_ = 0;
  std::vector<IntMatrix> action_;
};

/// Equivariant homomorphism; matrix is target.rank x source.rank.
class LatticeMap {
 public:
  LatticeMap() = default;
  /// Throws DomainError unless matrix commutes with the actions.
  LatticeMap(GLattice source, GLattice target, IntMatrix matrix);

  static LatticeMap identity(const GLattice& m);

  const GLattice& source() const { return source_; }
  const GLattice& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  /// this followed by next.
  LatticeMap then(const LatticeMap& next) const;
  LatticeMap restrict(const Subgroup& h) const;

 private:
  GLattice source_;
  GLattice target_;
  IntMatrix matrix_;
};

/// 0 -> A -inj-> B -surj-> C -> 0, certified exact at construction.
class ShortExactSequence {
 public:
  ShortExactSequence() = default;
  ShortExactSequence(LatticeMap inj, LatticeMap surj);

  /// 0 -> A -> A + C -> C -> 0.
  static ShortExactSequence split(const GLattice& a, const GLattice& c);

  const LatticeMap& inj() const { return inj_; }
  const LatticeMap& surj() const { return surj_; }
  const GLattice& sub() const { return inj_.source(); }
  const GLattice& middle() const { return inj_.target(); }
  const GLattice& quotient() const { return surj_.target(); }
  /// Z-linear section of surj (surj * lift = I).
  const IntMatrix& lift() const { return lift_; }
  /// Z-linear retraction of inj (pullback * inj = I).
  const IntMatrix& pullback() const { return pullback_; }

  /// Dual sequence 0 -> C* -> B* -> A* -> 0.
  ShortExactSequence dual() const;
  ShortExactSequence restrict(const Subgroup& h) const;

 private:
  LatticeMap inj_;
  LatticeMap surj_;
  IntMatrix lift_;
  IntMatrix pullback_;
};

}  // namespace galcoh
