#pragma once

#include <memory>
#include <string>
#include <vector>

#include "galcoh/abelian.hpp"
#include "galcoh/cohomology.hpp"

namespace galcoh {

/// A place, seen only through its decomposition subgroup.
struct Place {
  std::string label;
  Subgroup decomposition;
};

class PlaceFamily {
 public:
  PlaceFamily() = default;
  /// All places must carry non-empty labels and subgroups of g.
  PlaceFamily(GroupPtr g, std::string label, std::vector<Place> places);

  const GroupPtr& group() const { return group_; }
  const std::string& label() const { return label_; }
  const std::vector<Place>& places() const { return places_; }
  std::vector<Subgroup> decomposition_groups() const;

 private:
  GroupPtr group_;
  std::string label_;
  std::vector<Place> places_;
};

/// ker( H^i(G, M) -> prod over places of H^i(D_v, M) ).
class ShaGroup {
 public:
  const AbelianPresentation& presentation() const { return kernel_.presentation(); }
  /// One cocycle per presentation generator.
  const std::vector<IntVector>& witnesses() const { return witnesses_; }
  const CohomologyGroup& ambient() const { return *ambient_; }
  const std::shared_ptr<const CohomologyGroup>& ambient_ptr() const { return ambient_; }
  /// The kernel inside ambient presentation coordinates.
  const LatticeQuotient& kernel() const { return kernel_; }
  /// Inclusion into the ambient cohomology group.
  GroupHom inclusion() const;
  const PlaceFamily& family() const { return family_; }
  /// Witness restriction to every D_v is a coboundary, with the explicit cochain checked.
  bool verify() const;

 private:
  friend ShaGroup sha_kernel(const GLattice&, std::size_t, const PlaceFamily&, const CochainLimits&);
  std::shared_ptr<const CohomologyGroup> ambient_;
  std::vector<std::shared_ptr<const CohomologyGroup>> local_;
  PlaceFamily family_;
  LatticeQuotient kernel_;
  std::vector<IntVector> witnesses_;
};

ShaGroup sha_kernel(const GLattice& m, std::size_t degree, const PlaceFamily& family,
                    const CochainLimits& limits = {});

struct CoverageReport {
  bool covered = true;
  /// Cyclic subgroups not contained in any conjugate of a decomposition group.
  std::vector<Subgroup> uncovered;
};

CoverageReport chebotarev_coverage(const GroupPtr& g, const PlaceFamily& family);

/// Sha(C) at degree i -> Sha(A) -> Sha(B) at degree i+1 for 0 -> A -> B -> C -> 0.
struct TransferReport {
  std::size_t degree = 0;
  ShaGroup sha_quotient;  // degree i, C
  ShaGroup sha_sub;       // degree i+1, A
  ShaGroup sha_middle;    // degree i+1, B
  GroupHom connecting;    // Sha(C) -> Sha(A)
  GroupHom induced;       // Sha(A) -> Sha(B)
  bool connecting_injective = false;
  bool connecting_surjective = false;
  bool induced_injective = false;
  bool induced_surjective = false;
  bool exact_at_middle = false;
};

TransferReport sha_les_transfer(const ShortExactSequence& ses, std::size_t degree, const PlaceFamily& family,
                                const CochainLimits& limits = {});

}  // namespace galcoh
