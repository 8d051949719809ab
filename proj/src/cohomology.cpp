#include "galcoh/cohomology.hpp"

#include <algorithm>

#include "galcoh/errors.hpp"
#include "galcoh/smith.hpp"

namespace galcoh {

namespace {

SparseMatrix previous_differential(const GLattice& m, std::size_t degree) {
  if (degree == 0) return SparseMatrix(m.rank(), 0);
  return coboundary_matrix(m, degree - 1);
}

}  // namespace

CohomologyGroup::CohomologyGroup(GLattice module, std::size_t degree, const CochainLimits& limits)
    : module_(std::move(module)), degree_(degree) {
  check_cochain_limits(module_, degree_, limits);
  reduction_ = std::make_shared<ComplexReduction>(previous_differential(module_, degree_),
                                                  coboundary_matrix(module_, degree_));
  quotient_ = LatticeQuotient(reduction_->residual_cycles(), reduction_->residual_boundaries());
  const IntMatrix& gens = quotient_.generators();
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    IntVector z = reduction_->lift(gens.column(j));
    if (!is_zero(apply_coboundary(module_, degree_, z)))
      throw InvariantViolation("generator of H^" + std::to_string(degree_) + " is not a cocycle");
    generators_.push_back(std::move(z));
  }
  if (degree_ >= 1) {
    const auto& p = presentation();
    if (!p.is_finite() || group()->order() % p.exponent().get_ui() != 0)
      throw InvariantViolation("H^" + std::to_string(degree_) + " = " + p.to_string() +
                               " is not annihilated by the group order");
  }
}

std::size_t CohomologyGroup::cochain_dimension() const {
  return galcoh::cochain_dimension(group()->order(), degree_, module_.rank());
}

IntVector CohomologyGroup::coordinates(std::span<const Integer> z) const {
  if (z.size() != cochain_dimension()) throw DomainError("cochain has wrong dimension");
  if (!is_zero(apply_coboundary(module_, degree_, z))) throw DomainError("cochain is not a cocycle");
  auto c = quotient_.try_coordinates(reduction_->reduce(z));
  if (!c) throw InvariantViolation("reduced cocycle is not a residual cycle");
  return *c;
}

IntVector CohomologyGroup::cocycle(std::span<const Integer> coords) const {
  if (coords.size() != generators_.size()) throw DomainError("coordinate vector has wrong length");
  IntVector z(cochain_dimension());
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0)
      for (std::size_t k = 0; k < z.size(); ++k)
        if (generators_[j][k] != 0) z[k] += coords[j] * generators_[j][k];
  return z;
}

std::optional<IntVector> CohomologyGroup::solve_coboundary(std::span<const Integer> y) const {
  if (y.size() != cochain_dimension()) throw DomainError("cochain has wrong dimension");
  if (degree_ == 0) {
    if (is_zero(y)) return IntVector{};
    return std::nullopt;
  }
  auto x = reduction_->solve_prev(y);
  if (x && apply_coboundary(module_, degree_ - 1, *x) != IntVector(y.begin(), y.end()))
    throw InvariantViolation("coboundary solve produced a wrong preimage");
  return x;
}

AbelianPresentation tate_h_minus1(const GLattice& m) {
  const auto& g = *m.group();
  IntMatrix norm(m.rank(), m.rank());
  for (std::size_t x = 0; x < g.order(); ++x) norm = norm + m.action(x);
  IntMatrix aug(m.rank(), 0);
  for (auto s : g.generators()) aug = hconcat(aug, m.action(s) - IntMatrix::identity(m.rank()));
  return subquotient(norm, aug).presentation();
}

AbelianPresentation tate_h0(const GLattice& m) {
  const auto& g = *m.group();
  IntMatrix norm(m.rank(), m.rank());
  for (std::size_t x = 0; x < g.order(); ++x) norm = norm + m.action(x);
  IntMatrix fixed(0, m.rank());
  for (auto s : g.generators()) fixed = vconcat(fixed, m.action(s) - IntMatrix::identity(m.rank()));
  return subquotient(fixed, norm).presentation();
}

AbelianPresentation tate_cohomology(const GLattice& m, int degree, const CochainLimits& limits) {
  if (degree == -1) return tate_h_minus1(m);
  if (degree == 0) return tate_h0(m);
  if (degree < -1) throw DomainError("Tate cohomology is only computed in degrees >= -1");
  return CohomologyGroup(m, static_cast<std::size_t>(degree), limits).presentation();
}

IntVector map_cochain(const IntMatrix& f, std::span<const Integer> cochain) {
  const std::size_t rin = f.cols(), rout = f.rows();
  if (rin == 0) {
    if (!cochain.empty()) throw DomainError("map_cochain: cannot infer tuple count");
    return {};
  }
  if (cochain.size() % rin) throw DomainError("map_cochain: cochain length is not a multiple of the rank");
  const std::size_t tuples = cochain.size() / rin;
  IntVector out(tuples * rout);
  for (std::size_t t = 0; t < tuples; ++t)
    for (std::size_t i = 0; i < rout; ++i) {
      Integer s = 0;
      for (std::size_t k = 0; k < rin; ++k)
        if (f(i, k) != 0) s += f(i, k) * cochain[t * rin + k];
      out[t * rout + i] = std::move(s);
    }
  return out;
}

namespace {

// map_cochain needs the tuple count when the source rank is zero.
IntVector map_cochain_sized(const IntMatrix& f, std::span<const Integer> cochain, std::size_t tuples) {
  if (f.cols() == 0) return IntVector(tuples * f.rows());
  return map_cochain(f, cochain);
}

}  // namespace

IntVector restrict_cochain(const GLattice& m, std::size_t degree, const Subgroup& h, std::span<const Integer> f) {
  const auto& g = *m.group();
  if (h.parent() != m.group()) throw DomainError("restriction: subgroup of a different group");
  const std::size_t r = m.rank(), n = g.order(), k = h.order();
  if (f.size() != galcoh::cochain_dimension(n, degree, r)) throw DomainError("restriction: cochain has wrong dimension");
  const auto& el = h.elements();
  const std::size_t tuples = galcoh::cochain_dimension(k, degree, 1);
  IntVector out(tuples * r);
  for (std::size_t t = 0; t < tuples; ++t) {
    auto sub = decode_tuple(t, k, degree);
    for (auto& x : sub) x = el[x];
    const std::size_t src = encode_tuple(sub, n);
    for (std::size_t j = 0; j < r; ++j) out[t * r + j] = f[src * r + j];
  }
  return out;
}

IntVector corestrict_cochain(const GLattice& m, std::size_t degree, const Subgroup& h, std::span<const Integer> f) {
  const auto& g = *m.group();
  if (h.parent() != m.group()) throw DomainError("corestriction: subgroup of a different group");
  const std::size_t r = m.rank(), n = g.order(), k = h.order();
  if (f.size() != galcoh::cochain_dimension(k, degree, r)) throw DomainError("corestriction: cochain has wrong dimension");
  const auto& el = h.elements();
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < k; ++i) pos[el[i]] = i;

  // rho(x) = x t(x)^-1 with t(x) the least element of the right coset Hx.
  std::vector<std::size_t> rho(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t t = n;
    for (auto y : el) t = std::min(t, g.mul(y, x));
    rho[x] = g.mul(x, g.inverse(t));
    if (pos[rho[x]] == n) throw InvariantViolation("corestriction: retraction left the subgroup");
  }
  const auto reps = g.transversal(h);
  const std::size_t tuples = galcoh::cochain_dimension(n, degree, 1);
  IntVector out(tuples * r);
  std::vector<std::size_t> partial(degree + 1), args(degree);
  for (std::size_t t = 0; t < tuples; ++t) {
    auto sigma = decode_tuple(t, n, degree);
    for (auto x : reps) {
      const std::size_t xi = g.inverse(x);
      partial[0] = xi;
      for (std::size_t i = 0; i < degree; ++i) partial[i + 1] = g.mul(partial[i], sigma[i]);
      for (std::size_t i = 0; i < degree; ++i)
        args[i] = pos[g.mul(g.inverse(rho[partial[i]]), rho[partial[i + 1]])];
      const std::size_t src = encode_tuple(args, k);
      const IntMatrix act = m.action(x) * m.action(rho[xi]);
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t l = 0; l < r; ++l)
          if (act(j, l) != 0) out[t * r + j] += act(j, l) * f[src * r + l];
    }
  }
  return out;
}

GroupHom restriction(const CohomologyGroup& whole, const CohomologyGroup& sub, const Subgroup& h) {
  if (whole.degree() != sub.degree()) throw DomainError("restriction: degrees differ");
  if (!(sub.module() == whole.module().restrict(h)))
    throw DomainError("restriction: target is not the cohomology of the restricted lattice");
  IntMatrix m(sub.presentation().generator_count(), whole.generators().size());
  for (std::size_t j = 0; j < whole.generators().size(); ++j)
    m.set_column(j, sub.coordinates(restrict_cochain(whole.module(), whole.degree(), h, whole.generators()[j])));
  return GroupHom(whole.presentation(), sub.presentation(), m);
}

GroupHom corestriction(const CohomologyGroup& sub, const CohomologyGroup& whole, const Subgroup& h) {
  if (whole.degree() != sub.degree()) throw DomainError("corestriction: degrees differ");
  if (!(sub.module() == whole.module().restrict(h)))
    throw DomainError("corestriction: source is not the cohomology of the restricted lattice");
  IntMatrix m(whole.presentation().generator_count(), sub.generators().size());
  for (std::size_t j = 0; j < sub.generators().size(); ++j)
    m.set_column(j, whole.coordinates(corestrict_cochain(whole.module(), whole.degree(), h, sub.generators()[j])));
  return GroupHom(sub.presentation(), whole.presentation(), m);
}

FixedLattice fixed_lattice(const GLattice& m, const Subgroup& n) {
  const auto& g = m.group();
  auto quotient = g->quotient_group(n);
  IntMatrix basis = m.invariants_sublattice(n);
  IntMatrix back = basis.cols() ? left_inverse(basis) : IntMatrix(0, m.rank());
  std::vector<IntMatrix> act(quotient.group->order());
  std::vector<char> done(act.size(), 0);
  for (std::size_t x = 0; x < g->order(); ++x) {
    const std::size_t q = quotient.map[x];
    if (done[q]) continue;
    done[q] = 1;
    act[q] = back * m.action(x) * basis;
  }
  return {GLattice(quotient.group, basis.cols(), std::move(act)), quotient, basis};
}

GroupHom inflation(const CohomologyGroup& quotient_side, const CohomologyGroup& whole, const Subgroup& n) {
  if (whole.degree() != quotient_side.degree()) throw DomainError("inflation: degrees differ");
  auto fixed = fixed_lattice(whole.module(), n);
  if (!(quotient_side.module() == fixed.lattice))
    throw DomainError("inflation: source is not the cohomology of the fixed lattice over the quotient");
  const std::size_t deg = whole.degree(), order = whole.group()->order(), qorder = fixed.quotient.group->order();
  const std::size_t r = whole.module().rank(), k = fixed.lattice.rank();
  const std::size_t tuples = galcoh::cochain_dimension(order, deg, 1);
  IntMatrix m(whole.presentation().generator_count(), quotient_side.generators().size());
  for (std::size_t j = 0; j < quotient_side.generators().size(); ++j) {
    const auto& f = quotient_side.generators()[j];
    IntVector lifted(tuples * r);
    for (std::size_t t = 0; t < tuples; ++t) {
      auto tup = decode_tuple(t, order, deg);
      for (auto& x : tup) x = fixed.quotient.map[x];
      const std::size_t src = encode_tuple(tup, qorder);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < k; ++l)
          if (fixed.basis(i, l) != 0) lifted[t * r + i] += fixed.basis(i, l) * f[src * k + l];
    }
    m.set_column(j, whole.coordinates(lifted));
  }
  return GroupHom(quotient_side.presentation(), whole.presentation(), m);
}

GroupHom induced_map(const LatticeMap& f, const CohomologyGroup& source, const CohomologyGroup& target) {
  if (source.degree() != target.degree()) throw DomainError("induced map: degrees differ");
  if (!(f.source() == source.module()) || !(f.target() == target.module()))
    throw DomainError("induced map: lattices do not match the cohomology groups");
  const std::size_t tuples = galcoh::cochain_dimension(source.group()->order(), source.degree(), 1);
  IntMatrix m(target.presentation().generator_count(), source.generators().size());
  for (std::size_t j = 0; j < source.generators().size(); ++j)
    m.set_column(j, target.coordinates(map_cochain_sized(f.matrix(), source.generators()[j], tuples)));
  return GroupHom(source.presentation(), target.presentation(), m);
}

IntVector connecting_cocycle(const ShortExactSequence& ses, std::size_t degree, std::span<const Integer> c) {
  const std::size_t order = ses.middle().group()->order();
  const std::size_t tuples = galcoh::cochain_dimension(order, degree, 1);
  IntVector b = map_cochain_sized(ses.lift(), c, tuples);
  IntVector db = apply_coboundary(ses.middle(), degree, b);
  const std::size_t next = tuples * order;
  IntVector a = map_cochain_sized(ses.pullback(), db, next);
  if (map_cochain_sized(ses.inj().matrix(), a, next) != db)
    throw InvariantViolation("connecting map: coboundary of the lift does not come from the sublattice");
  return a;
}

GroupHom connecting(const ShortExactSequence& ses, const CohomologyGroup& quotient_side,
                    const CohomologyGroup& sub_side) {
  if (sub_side.degree() != quotient_side.degree() + 1) throw DomainError("connecting map: degrees must differ by one");
  if (!(quotient_side.module() == ses.quotient()) || !(sub_side.module() == ses.sub()))
    throw DomainError("connecting map: lattices do not match the sequence");
  IntMatrix m(sub_side.presentation().generator_count(), quotient_side.generators().size());
  for (std::size_t j = 0; j < quotient_side.generators().size(); ++j)
    m.set_column(j, sub_side.coordinates(connecting_cocycle(ses, quotient_side.degree(), quotient_side.generators()[j])));
  return GroupHom(quotient_side.presentation(), sub_side.presentation(), m);
}

bool shapiro_check(const GroupPtr& g, const Subgroup& h, int degree, const CochainLimits& limits) {
  GLattice induced = GLattice::permutation(g, h);
  GLattice trivial = GLattice::trivial(g->subgroup_as_group(h).group, 1);
  return tate_cohomology(induced, degree, limits) == tate_cohomology(trivial, degree, limits);
}

}  // namespace galcoh
