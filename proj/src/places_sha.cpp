#include "galcoh/places_sha.hpp"

#include <algorithm>

#include "galcoh/errors.hpp"

namespace galcoh {

PlaceFamily::PlaceFamily(GroupPtr g, std::string label, std::vector<Place> places)
    : group_(std::move(g)), label_(std::move(label)), places_(std::move(places)) {
  if (!group_) throw DomainError("place family needs a group");
  if (label_.empty()) throw DomainError("place family needs a label");
  for (const auto& p : places_) {
    if (p.label.empty()) throw DomainError("place in family '" + label_ + "' has an empty label");
    if (p.decomposition.parent() != group_)
      throw DomainError("place '" + p.label + "': decomposition group is not a subgroup of the family's group");
  }
}

std::vector<Subgroup> PlaceFamily::decomposition_groups() const {
  std::vector<Subgroup> out;
  for (const auto& p : places_) out.push_back(p.decomposition);
  return out;
}

GroupHom ShaGroup::inclusion() const {
  return GroupHom(presentation(), ambient_->presentation(), kernel_.generators());
}

bool ShaGroup::verify() const {
  const GLattice& m = ambient_->module();
  const std::size_t deg = ambient_->degree();
  if (witnesses_.size() != presentation().generator_count()) return false;
  for (std::size_t w = 0; w < witnesses_.size(); ++w) {
    const IntVector& c = witnesses_[w];
    if (c.size() != ambient_->cochain_dimension()) return false;
    if (deg > 0) {
      IntVector d = apply_coboundary(m, deg, c);
      if (std::any_of(d.begin(), d.end(), [](const Integer& v) { return v != 0; })) return false;
    }
    if (ambient_->coordinates(c) != ambient_->presentation().normalize(kernel_.generators().column(w))) return false;
    for (std::size_t v = 0; v < family_.places().size(); ++v) {
      const auto& local = *local_[v];
      IntVector r = restrict_cochain(m, deg, family_.places()[v].decomposition, c);
      if (deg == 0) {
        if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; })) return false;
        continue;
      }
      auto x = local.solve_coboundary(r);
      if (!x || apply_coboundary(local.module(), deg - 1, *x) != r) return false;
    }
  }
  return true;
}

ShaGroup sha_kernel(const GLattice& m, std::size_t degree, const PlaceFamily& family, const CochainLimits& limits) {
  if (family.group() != m.group()) throw DomainError("place family and lattice use different groups");
  ShaGroup s;
  s.family_ = family;
  s.ambient_ = std::make_shared<const CohomologyGroup>(m, degree, limits);
  std::vector<GroupHom> maps;
  for (const auto& p : family.places()) {
    auto local = std::make_shared<const CohomologyGroup>(m.restrict(p.decomposition), degree, limits);
    maps.push_back(restriction(*s.ambient_, *local, p.decomposition));
    s.local_.push_back(std::move(local));
  }
  s.kernel_ = joint_kernel(s.ambient_->presentation(), maps);
  for (std::size_t j = 0; j < s.kernel_.generators().cols(); ++j)
    s.witnesses_.push_back(s.ambient_->cocycle(s.kernel_.generators().column(j)));
  if (!s.verify()) throw InvariantViolation("Sha witness failed re-verification");
  return s;
}

CoverageReport chebotarev_coverage(const GroupPtr& g, const PlaceFamily& family) {
  if (family.group() != g) throw DomainError("place family belongs to a different group");
  CoverageReport r;
  const auto decomposition = family.decomposition_groups();
  for (const auto& c : g->cyclic_subgroups())
    if (!g->is_conjugate_contained(c, decomposition)) r.uncovered.push_back(c);
  r.covered = r.uncovered.empty();
  return r;
}

TransferReport sha_les_transfer(const ShortExactSequence& ses, std::size_t degree, const PlaceFamily& family,
                                const CochainLimits& limits) {
  // The constructor re-checks exactness.
  ShortExactSequence checked(ses.inj(), ses.surj());
  TransferReport t;
  t.degree = degree;
  t.sha_quotient = sha_kernel(checked.quotient(), degree, family, limits);
  t.sha_sub = sha_kernel(checked.sub(), degree + 1, family, limits);
  t.sha_middle = sha_kernel(checked.middle(), degree + 1, family, limits);
  GroupHom delta = connecting(checked, t.sha_quotient.ambient(), t.sha_sub.ambient());
  GroupHom f = induced_map(checked.inj(), t.sha_sub.ambient(), t.sha_middle.ambient());
  t.connecting = restrict_hom(delta, t.sha_quotient.kernel(), t.sha_sub.kernel());
  t.induced = restrict_hom(f, t.sha_sub.kernel(), t.sha_middle.kernel());
  t.connecting_injective = t.connecting.is_injective();
  t.connecting_surjective = t.connecting.is_surjective();
  t.induced_injective = t.induced.is_injective();
  t.induced_surjective = t.induced.is_surjective();
  t.exact_at_middle = is_exact(t.connecting, t.induced);
  return t;
}

}  // namespace galcoh
