#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "galcoh/abelian.hpp"
#include "galcoh/cochains.hpp"
#include "galcoh/glattice.hpp"

namespace galcoh {

/// H^n(G, M) with explicit generating cocycles and a coordinate map.
class CohomologyGroup {
 public:
  CohomologyGroup(GLattice module, std::size_t degree, const CochainLimits& limits = {});

  const GLattice& module() const { return module_; }
  const GroupPtr& group() const { return module_.group(); }
  std::size_t degree() const { return degree_; }
  const AbelianPresentation& presentation() const { return quotient_.presentation(); }
  /// One cocycle per presentation generator, in C^n coordinates.
  const std::vector<IntVector>& generators() const { return generators_; }
  std::size_t cochain_dimension() const;

  /// Presentation coordinates of the class of a cocycle; DomainError if not a cocycle.
  IntVector coordinates(std::span<const Integer> cocycle) const;
  /// Combination of the generating cocycles.
  IntVector cocycle(std::span<const Integer> coords) const;
  /// Some x in C^{n-1} with d x = y (y must be in C^n), or nullopt.
  std::optional<IntVector> solve_coboundary(std::span<const Integer> y) const;
  bool is_coboundary(std::span<const Integer> y) const { return solve_coboundary(y).has_value(); }

  bool used_big_integers() const { return reduction_->used_big_integers(); }

 private:
  GLattice module_;
  std::size_t degree_;
  std::shared_ptr<const ComplexReduction> reduction_;
  LatticeQuotient quotient_;
  std::vector<IntVector> generators_;
};

inline CohomologyGroup cohomology(const GLattice& m, std::size_t degree, const CochainLimits& limits = {}) {
  return CohomologyGroup(m, degree, limits);
}

/// ker(N) / I_G M, with N the norm and I_G the augmentation ideal.
AbelianPresentation tate_h_minus1(const GLattice& m);
/// M^G / N M.
AbelianPresentation tate_h0(const GLattice& m);
/// Tate cohomology for degree >= -1 (ordinary cohomology for degree >= 1).
AbelianPresentation tate_cohomology(const GLattice& m, int degree, const CochainLimits& limits = {});

/// Applies a rank_out x rank_in matrix to the value of every tuple.
IntVector map_cochain(const IntMatrix& f, std::span<const Integer> cochain);

/// Cochain restricted to tuples from h (h as a group, elements in sorted order).
IntVector restrict_cochain(const GLattice& m, std::size_t degree, const Subgroup& h, std::span<const Integer> f);
/// Corestriction of a cochain of m.restrict(h) to a cochain of m, using the left transversal
/// of minimal coset elements.
IntVector corestrict_cochain(const GLattice& m, std::size_t degree, const Subgroup& h, std::span<const Integer> f);

/// whole = H^n(G, M), sub = H^n(H, M|H).
GroupHom restriction(const CohomologyGroup& whole, const CohomologyGroup& sub, const Subgroup& h);
GroupHom corestriction(const CohomologyGroup& sub, const CohomologyGroup& whole, const Subgroup& h);

/// M^N as a lattice over G/N, with the inclusion basis of M^N in M.
struct FixedLattice {
  GLattice lattice;
  InducedGroup quotient;
  IntMatrix basis;
};
FixedLattice fixed_lattice(const GLattice& m, const Subgroup& n);

/// quotient_side = H^n(G/N, M^N) for fixed_lattice(M, N); whole = H^n(G, M).
GroupHom inflation(const CohomologyGroup& quotient_side, const CohomologyGroup& whole, const Subgroup& n);

/// Map on H^n induced by an equivariant map.
GroupHom induced_map(const LatticeMap& f, const CohomologyGroup& source, const CohomologyGroup& target);

/// H^i(G, C) -> H^{i+1}(G, A) for 0 -> A -> B -> C -> 0.
GroupHom connecting(const ShortExactSequence& ses, const CohomologyGroup& quotient_side,
                    const CohomologyGroup& sub_side);
/// The cocycle representing the image of one class: lift, coboundary, pull back.
IntVector connecting_cocycle(const ShortExactSequence& ses, std::size_t degree, std::span<const Integer> cocycle);

/// Compares Tate cohomology of Z[G/H] over G with that of Z over H.
bool shapiro_check(const GroupPtr& g, const Subgroup& h, int degree, const CochainLimits& limits = {});

}  // namespace galcoh
