#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galcoh/abelian.hpp"
#include "galcoh/cochains.hpp"
#include "galcoh/glattice.hpp"

namespace galcoh {

/// A torus split by a finite Galois group, recorded through its character lattice.
class Torus {
 public:
  Torus() = default;
  Torus(std::string label, GLattice characters) : label_(std::move(label)), characters_(std::move(characters)) {}

  const std::string& label() const { return label_; }
  const GroupPtr& group() const { return characters_.group(); }
  const GLattice& characters() const { return characters_; }
  std::size_t rank() const { return characters_.rank(); }

 private:
  std::string label_;
  GLattice characters_;
};

/// A basis (columns, unimodular) permuted by the group; summand i of the basis is Z[G/H_i].
struct PermutationCertificate {
  IntMatrix basis;
  std::vector<Subgroup> summands;

  /// Checks unimodularity and that every group element permutes the basis vectors.
  bool verify(const GLattice& m) const;
};

struct TorusWithSequence {
  Torus torus;
  /// Character-side sequence 0 -> Z -> (permutation lattice) -> T^ -> 0.
  ShortExactSequence sequence;
  PermutationCertificate middle_certificate;
};

/// Characters + Z[G/H_i], identity basis as certificate.
std::pair<Torus, PermutationCertificate> quasi_trivial(const GroupPtr& g, const std::vector<Subgroup>& subgroups,
                                                       const std::string& label = "quasi_trivial");
/// Characters Z[G]/Z.N.
TorusWithSequence norm_one_torus(const GroupPtr& g, const std::string& label = "norm_one");
/// Characters (+ Z[G/H_i]) / Z.(coset sums).
TorusWithSequence multinorm_torus(const GroupPtr& g, const std::vector<Subgroup>& subgroups,
                                  const std::string& label = "multinorm");

/// 0 -> Q^ -> Qt^ -> Z^(k-1) -> 0 comparing the norm-one and multinorm character lattices.
/// Needs subgroups of equal order; g in Z[G] goes to its cosets, (x_i) in the middle to the
/// differences of consecutive block augmentations.
ShortExactSequence multinorm_comparison(const TorusWithSequence& norm_one, const TorusWithSequence& multinorm,
                                        const std::vector<Subgroup>& subgroups);

struct SubgroupGroupEntry {
  Subgroup subgroup;
  AbelianPresentation group;
};

struct FlasqueReport {
  bool verdict = true;
  /// One entry per subgroup in all_subgroups() order.
  std::vector<SubgroupGroupEntry> entries;
};

/// Tate H^-1(H, M) for every subgroup H; flasque iff all vanish.
FlasqueReport is_flasque(const GLattice& m);
/// H^1(H, M) for every subgroup H; coflasque iff all vanish.
FlasqueReport is_coflasque(const GLattice& m, const CochainLimits& limits = {});

/// 0 -> T^ -> R^ -> S^ -> 0 with R^ a permutation lattice and S^ flasque.
struct FlasqueResolution {
  Torus torus;
  ShortExactSequence sequence;
  PermutationCertificate permutation_certificate;
  FlasqueReport flasque_certificate;
  /// Subgroup order used for the cover.
  std::vector<Subgroup> cover_order;

  /// Rebuilds the exactness certificate and rechecks both certificates.
  bool verify() const;
};

/// Cover of the cocharacter lattice by ( + over H of Z[G/H]^(rank of invariants)), dualized.
/// cover_order defaults to all_subgroups(); it must list every subgroup exactly once.
FlasqueResolution flasque_resolution(const Torus& t, const std::vector<Subgroup>& cover_order = {});

struct BrauerInvariant {
  AbelianPresentation group;  // H^1(G, S^)
  /// Same invariant from a resolution whose cover uses the reversed subgroup order.
  AbelianPresentation permuted_group;
  bool order_independent = false;
  FlasqueResolution resolution;
};

BrauerInvariant br_invariant(const Torus& t, const CochainLimits& limits = {});

}  // namespace galcoh
