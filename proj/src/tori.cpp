#include "galcoh/tori.hpp"

#include <algorithm>
#include <set>

#include "galcoh/cohomology.hpp"
#include "galcoh/errors.hpp"
#include "galcoh/smith.hpp"

namespace galcoh {

namespace {

bool is_permutation_matrix(const IntMatrix& p) {
  if (p.rows() != p.cols()) return false;
  std::vector<int> row_hits(p.rows(), 0);
  for (std::size_t j = 0; j < p.cols(); ++j) {
    int hits = 0;
    for (std::size_t i = 0; i < p.rows(); ++i) {
      if (p(i, j) == 0) continue;
      if (p(i, j) != 1) return false;
      ++hits;
      ++row_hits[i];
    }
    if (hits != 1) return false;
  }
  return std::all_of(row_hits.begin(), row_hits.end(), [](int h) { return h == 1; });
}

GLattice permutation_sum(const GroupPtr& g, const std::vector<Subgroup>& summands) {
  if (summands.empty()) return GLattice::trivial(g, 0);
  std::vector<GLattice> parts;
  for (const auto& h : summands) parts.push_back(GLattice::permutation(g, h));
  return GLattice::direct_sum(parts);
}

}  // namespace

bool PermutationCertificate::verify(const GLattice& m) const {
  if (basis.rows() != m.rank() || basis.cols() != m.rank()) return false;
  IntMatrix inv;
  try {
    inv = m.rank() ? left_inverse(basis) : IntMatrix(0, 0);
  } catch (const DomainError&) {
    return false;
  }
  if (!(basis * inv).is_identity() && m.rank()) return false;
  GLattice expected = permutation_sum(m.group(), summands);
  if (expected.rank() != m.rank()) return false;
  for (std::size_t x = 0; x < m.group()->order(); ++x) {
    IntMatrix p = inv * m.action(x) * basis;
    if (!is_permutation_matrix(p) && m.rank()) return false;
    if (p != expected.action(x)) return false;
  }
  return true;
}

std::pair<Torus, PermutationCertificate> quasi_trivial(const GroupPtr& g, const std::vector<Subgroup>& subgroups,
                                                       const std::string& label) {
  for (const auto& h : subgroups)
    if (h.parent() != g) throw DomainError("subgroup " + h.to_string() + " does not belong to the group");
  GLattice chars = permutation_sum(g, subgroups);
  PermutationCertificate cert{IntMatrix::identity(chars.rank()), subgroups};
  if (!cert.verify(chars)) throw InvariantViolation("quasi-trivial torus failed its permutation certificate");
  return {Torus(label, chars), cert};
}

namespace {

TorusWithSequence norm_quotient(const GroupPtr& g, const std::vector<Subgroup>& subgroups, const std::string& label) {
  auto [perm, cert] = quasi_trivial(g, subgroups, label);
  const GLattice& p = perm.characters();
  IntMatrix ones(p.rank(), 1);
  for (std::size_t i = 0; i < p.rank(); ++i) ones(i, 0) = 1;
  if (!is_saturated(ones)) throw InvariantViolation("norm element is not saturated");
  LatticeMap proj = p.quotient_by_saturated(ones);
  LatticeMap inj(GLattice::trivial(g, 1), p, ones);
  ShortExactSequence ses(inj, proj);
  return {Torus(label, proj.target()), std::move(ses), std::move(cert)};
}

}  // namespace

TorusWithSequence norm_one_torus(const GroupPtr& g, const std::string& label) {
  return norm_quotient(g, {g->trivial_subgroup()}, label);
}

TorusWithSequence multinorm_torus(const GroupPtr& g, const std::vector<Subgroup>& subgroups, const std::string& label) {
  if (subgroups.empty()) throw DomainError("multinorm torus needs at least one subgroup");
  return norm_quotient(g, subgroups, label);
}

ShortExactSequence multinorm_comparison(const TorusWithSequence& norm_one, const TorusWithSequence& multinorm,
                                        const std::vector<Subgroup>& subgroups) {
  const auto& g = norm_one.torus.group();
  if (subgroups.size() < 2) throw DomainError("comparison sequence needs at least two subgroups");
  for (const auto& h : subgroups)
    if (h.order() != subgroups.front().order())
      throw DomainError("comparison sequence needs subgroups of equal order");
  const GLattice& middle = multinorm.sequence.middle();
  // Z[G] -> (+) Z[G/H_i]
  IntMatrix f(middle.rank(), g->order());
  std::vector<std::size_t> block_start;
  std::size_t off = 0;
  for (const auto& h : subgroups) {
    block_start.push_back(off);
    auto cs = g->cosets(h);
    for (std::size_t c = 0; c < cs.size(); ++c)
      for (auto x : cs[c]) f(off + c, x) = 1;
    off += cs.size();
  }
  if (off != middle.rank()) throw DomainError("subgroups do not match the multinorm torus");
  block_start.push_back(off);
  IntMatrix a = multinorm.sequence.surj().matrix() * f * norm_one.sequence.lift();
  // block augmentation differences
  IntMatrix e(subgroups.size() - 1, middle.rank());
  for (std::size_t i = 0; i + 1 < subgroups.size(); ++i) {
    for (std::size_t c = block_start[i]; c < block_start[i + 1]; ++c) e(i, c) = 1;
    for (std::size_t c = block_start[i + 1]; c < block_start[i + 2]; ++c) e(i, c) = -1;
  }
  IntMatrix b = e * multinorm.sequence.lift();
  GLattice z = GLattice::trivial(g, subgroups.size() - 1);
  return ShortExactSequence(LatticeMap(norm_one.torus.characters(), multinorm.torus.characters(), a),
                            LatticeMap(multinorm.torus.characters(), z, b));
}

FlasqueReport is_flasque(const GLattice& m) {
  FlasqueReport r;
  for (const auto& h : m.group()->all_subgroups()) {
    auto p = tate_h_minus1(m.restrict(h));
    r.verdict = r.verdict && p.is_trivial();
    r.entries.push_back({h, std::move(p)});
  }
  return r;
}

FlasqueReport is_coflasque(const GLattice& m, const CochainLimits& limits) {
  FlasqueReport r;
  for (const auto& h : m.group()->all_subgroups()) {
    auto p = CohomologyGroup(m.restrict(h), 1, limits).presentation();
    r.verdict = r.verdict && p.is_trivial();
    r.entries.push_back({h, std::move(p)});
  }
  return r;
}

bool FlasqueResolution::verify() const {
  try {
    ShortExactSequence again(sequence.inj(), sequence.surj());
  } catch (const Error&) {
    return false;
  }
  if (!(sequence.sub() == torus.characters())) return false;
  if (!permutation_certificate.verify(sequence.middle())) return false;
  auto report = is_flasque(sequence.quotient());
  if (!report.verdict || report.entries.size() != flasque_certificate.entries.size()) return false;
  for (std::size_t i = 0; i < report.entries.size(); ++i)
    if (!(report.entries[i].subgroup == flasque_certificate.entries[i].subgroup) ||
        !(report.entries[i].group == flasque_certificate.entries[i].group))
      return false;
  return true;
}

FlasqueResolution flasque_resolution(const Torus& t, const std::vector<Subgroup>& cover_order) {
  const auto& g = t.group();
  auto all = g->all_subgroups();
  std::vector<Subgroup> order = cover_order.empty() ? all : cover_order;
  {
    std::vector<Subgroup> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != all) throw DomainError("cover order must list every subgroup exactly once");
  }
  const GLattice cochar = t.characters().dual();
  std::vector<Subgroup> summands;
  std::vector<IntVector> images;
  for (const auto& h : order) {
    IntMatrix fixed = cochar.invariants_sublattice(h);
    auto reps = g->transversal(h);
    for (std::size_t k = 0; k < fixed.cols(); ++k) {
      summands.push_back(h);
      IntVector v = fixed.column(k);
      for (auto x : reps) images.push_back(cochar.act(x, v));
    }
  }
  GLattice p = permutation_sum(g, summands);
  IntMatrix pi(cochar.rank(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j) pi.set_column(j, images[j]);
  LatticeMap cover(p, cochar, pi);
  IntMatrix k = kernel_basis(pi);
  GLattice c = p.sublattice(k).source();

  GLattice s_hat = c.dual();
  GLattice r_hat = p.dual();
  ShortExactSequence ses(LatticeMap(t.characters(), r_hat, pi.transposed()), LatticeMap(r_hat, s_hat, k.transposed()));

  FlasqueResolution res{t, std::move(ses), PermutationCertificate{IntMatrix::identity(r_hat.rank()), summands},
                        is_flasque(s_hat), order};
  if (!res.flasque_certificate.verdict) throw InvariantViolation("flasque resolution: S^ is not flasque");
  if (!res.verify()) throw InvariantViolation("flasque resolution failed re-verification");
  return res;
}

BrauerInvariant br_invariant(const Torus& t, const CochainLimits& limits) {
  auto first = flasque_resolution(t);
  std::vector<Subgroup> reversed(first.cover_order.rbegin(), first.cover_order.rend());
  auto second = flasque_resolution(t, reversed);
  BrauerInvariant b;
  b.group = CohomologyGroup(first.sequence.quotient(), 1, limits).presentation();
  b.permuted_group = CohomologyGroup(second.sequence.quotient(), 1, limits).presentation();
  b.order_independent = b.group == b.permuted_group;
  b.resolution = std::move(first);
  return b;
}

}  // namespace galcoh
