#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galcoh/linalg.hpp"
#include "galcoh/smith.hpp"

namespace galcoh {

/// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk with d1 | d2 | ... and di >= 2.
///
/// Coordinates of an element list the free part first, then one residue per
/// invariant factor, in the order printed by to_string().
class AbelianPresentation {
 public:
  AbelianPresentation() = default;
  AbelianPresentation(std::size_t free_rank, std::vector<Integer> factors);

  /// Normalizes an arbitrary diagonal (zeros become free summands, units vanish).
  static AbelianPresentation from_diagonal(std::span<const Integer> diagonal);
  static AbelianPresentation trivial() { return {}; }
  static AbelianPresentation cyclic(const Integer& n);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& factors() const { return factors_; }
  std::size_t generator_count() const { return free_rank_ + factors_.size(); }

  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  /// nullopt when the group is infinite.
  std::optional<Integer> order() const;
  /// Smallest e > 0 with e*x = 0 for all x; 0 when infinite.
  Integer exponent() const;

  /// Modulus of coordinate k (0 for free coordinates).
  Integer modulus(std::size_t k) const;
  IntVector normalize(IntVector coords) const;
  bool is_zero_element(std::span<const Integer> coords) const;
  /// Generator-count x factor-count matrix whose columns are the defining relations.
  IntMatrix relations() const;

  /// "0", "Z", "Z^2 x Z/2 x Z/4", ...
  std::string to_string() const;
  /// "rank:r;factors:d1,d2,..."
  std::string to_machine() const;
  /// Accepts either textual form.
  static AbelianPresentation parse(const std::string& text);

  friend bool operator==(const AbelianPresentation&, const AbelianPresentation&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

/// Z^rows / column-span(A).
AbelianPresentation cokernel_presentation(const IntMatrix& a);

/// The group span(basis) / span(relations) together with lift data.
///
/// basis must have independent columns; every relation must lie in its span.
class LatticeQuotient {
 public:
  LatticeQuotient() = default;
  LatticeQuotient(const IntMatrix& basis, const IntMatrix& relations);

  const AbelianPresentation& presentation() const { return presentation_; }
  /// Ambient representatives, one column per presentation generator.
  const IntMatrix& generators() const { return generators_; }
  std::size_t ambient_dimension() const { return basis_.rows(); }
  /// Hermite basis of the full lattice span(basis) (relations included).
  const IntMatrix& lattice_basis() const { return lattice_basis_; }

  bool contains(std::span<const Integer> x) const;
  std::optional<IntVector> try_coordinates(std::span<const Integer> x) const;
  /// Presentation coordinates of x; throws DomainError when x is outside the lattice.
  IntVector coordinates(std::span<const Integer> x) const;
  IntVector element(std::span<const Integer> coords) const;

 private:
  IntMatrix basis_;
  IntMatrix lattice_basis_;
  IntegerSolver solver_;
  IntMatrix to_smith_;
  std::vector<std::size_t> kept_;
  AbelianPresentation presentation_;
  IntMatrix generators_;
};

/// ker(B) / im(A). Rejects inputs with B*A != 0.
LatticeQuotient subquotient(const IntMatrix& b, const IntMatrix& a);

/// Homomorphism between presented groups; column j is the image of source generator j
/// in target coordinates.
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(AbelianPresentation source, AbelianPresentation target, IntMatrix matrix);

  static GroupHom identity(const AbelianPresentation& p);
  static GroupHom multiplication(const AbelianPresentation& p, const Integer& k);
  static GroupHom zero(const AbelianPresentation& source, const AbelianPresentation& target);

  const AbelianPresentation& source() const { return source_; }
  const AbelianPresentation& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(std::span<const Integer> coords) const;
  /// Kernel as a subgroup of the source (ambient = source coordinates).
  LatticeQuotient kernel() const;
  /// Image as a subgroup of the target (ambient = target coordinates).
  LatticeQuotient image() const;

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

  /// this followed by next.
  GroupHom then(const GroupHom& next) const;

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

 private:
  AbelianPresentation source_;
  AbelianPresentation target_;
  IntMatrix matrix_;
};

/// im(f) == ker(g) for A -f-> B -g-> C.
bool is_exact(const GroupHom& f, const GroupHom& g);

/// Common kernel of maps sharing one source, as a subgroup of that source.
LatticeQuotient joint_kernel(const AbelianPresentation& source, const std::vector<GroupHom>& maps);

/// Restricts h to subgroups given as quotients of the source and target coordinate
/// lattices; the image of every generator of `from` must lie in `to`.
GroupHom restrict_hom(const GroupHom& h, const LatticeQuotient& from, const LatticeQuotient& to);

}  // namespace galcoh
