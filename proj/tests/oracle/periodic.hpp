#pragma once

// Test-only reference implementation: cohomology of G = <s> x <t> (orders m, n)
// from the tensor product of the two periodic resolutions
//   ... -> Z[C] --N--> Z[C] --(g-1)--> Z[C] -> Z.
// Shares no code with the bar-complex engine beyond dense integer linear algebra.

#include <vector>

#include "galcoh/abelian.hpp"
#include "galcoh/glattice.hpp"

namespace oracle {

using galcoh::AbelianPresentation;
using galcoh::GLattice;
using galcoh::GroupHom;
using galcoh::GroupPtr;
using galcoh::IntMatrix;
using galcoh::IntVector;
using galcoh::LatticeQuotient;

class TensorResolution {
 public:
  /// g must be abelian and the direct product of <s> (order m) and <t> (order n).
  TensorResolution(GroupPtr g, std::size_t s, std::size_t m, std::size_t t, std::size_t n);
  /// A cyclic group generated by s (t = identity, n = 1).
  static TensorResolution cyclic(GroupPtr g, std::size_t s);
  /// Uses the canonical generators of cyclic and two-factor direct products.
  static TensorResolution for_group(GroupPtr g);

  const GroupPtr& group() const { return group_; }

  /// Z-matrix of the boundary P_k -> P_{k-1} on group-ring coefficient vectors
  /// (index = basis * |G| + element); P_k has basis e_{i,k-i}.
  IntMatrix boundary(std::size_t k) const;
  /// Cochain differential Hom(P_k, M) = M^{k+1} -> M^{k+2}.
  IntMatrix cochain_differential(const GLattice& m, std::size_t k) const;
  /// H^k as ker / im with generators.
  LatticeQuotient cohomology(const GLattice& m, std::size_t k) const;

 private:
  // Group-ring element for the factor boundary in resolution degree i (i >= 1).
  std::vector<long> factor_boundary(bool first, std::size_t i) const;
  IntMatrix ring_action(const GLattice& m, const std::vector<long>& u) const;

  GroupPtr group_;
  std::size_t s_, m_, t_, n_;
};

/// Restriction H^k(G, M) -> H^k(D, M|D) for cyclic D = <d>, computed through a
/// comparison map from the periodic resolution of D into the tensor resolution of G.
GroupHom restriction_to_cyclic(const TensorResolution& res, const GLattice& m, std::size_t k, std::size_t d);

/// Kernel of the restrictions to the cyclic subgroups generated by the given elements.
AbelianPresentation sha(const TensorResolution& res, const GLattice& m, std::size_t k,
                        const std::vector<std::size_t>& decomposition_generators);

}  // namespace oracle
