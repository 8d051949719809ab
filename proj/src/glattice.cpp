#include "galcoh/glattice.hpp"

#include <algorithm>

#include "galcoh/errors.hpp"
#include "galcoh/smith.hpp"

namespace galcoh {

GLattice::GLattice(GroupPtr group, std::size_t rank, std::vector<IntMatrix> action)
    : group_(std::move(group)), rank_(rank), action_(std::move(action)) {
  if (!group_) throw DomainError("lattice without a group");
  const auto& g = *group_;
  if (action_.size() != g.order()) throw DomainError("need one action matrix per group element");
  for (const auto& m : action_)
    if (m.rows() != rank_ || m.cols() != rank_) throw DomainError("action matrix has wrong shape");
  if (!action_[g.identity()].is_identity()) throw DomainError("identity does not act trivially");
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (action_[a] * action_[b] != action_[g.mul(a, b)])
        throw DomainError("action is not a homomorphism at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
}

GLattice GLattice::trivial(const GroupPtr& g, std::size_t rank) {
  return GLattice(g, rank, std::vector<IntMatrix>(g->order(), IntMatrix::identity(rank)));
}

GLattice GLattice::regular(const GroupPtr& g) { return permutation(g, g->trivial_subgroup()); }

GLattice GLattice::permutation(const GroupPtr& g, const Subgroup& h) {
  if (h.parent() != g) throw DomainError("subgroup " + h.to_string() + " does not belong to the group");
  auto cs = g->cosets(h);
  std::vector<std::size_t> which(g->order());
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (auto x : cs[i]) which[x] = i;
  std::vector<IntMatrix> act;
  for (std::size_t x = 0; x < g->order(); ++x) {
    IntMatrix m(cs.size(), cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) m(which[g->mul(x, cs[i].front())], i) = 1;
    act.push_back(std::move(m));
  }
  return GLattice(g, cs.size(), std::move(act));
}

GLattice GLattice::sign(const GroupPtr& g, const Subgroup& h) {
  if (h.parent() != g || h.index() != 2) throw DomainError("sign lattice needs an index-2 subgroup");
  std::vector<IntMatrix> act;
  for (std::size_t x = 0; x < g->order(); ++x)
    act.push_back(IntMatrix::from_rows({{h.contains(x) ? 1 : -1}}));
  return GLattice(g, 1, std::move(act));
}

GLattice GLattice::sign(const GroupPtr& g) {
  for (const auto& h : g->all_subgroups())
    if (h.index() == 2) return sign(g, h);
  throw DomainError("group has no index-2 subgroup, so no sign lattice");
}

GLattice GLattice::from_generator_matrices(const GroupPtr& g, const std::vector<IntMatrix>& matrices) {
  const auto& gens = g->generators();
  if (matrices.size() != gens.size())
    throw DomainError("expected " + std::to_string(gens.size()) + " generator matrices, got " +
                      std::to_string(matrices.size()));
  std::size_t rank = matrices.empty() ? 0 : matrices.front().rows();
  for (const auto& m : matrices)
    if (m.rows() != rank || m.cols() != rank) throw DomainError("generator matrices must be square of equal size");
  std::vector<IntMatrix> act(g->order());
  std::vector<char> known(g->order(), 0);
  std::vector<std::size_t> queue{g->identity()};
  act[g->identity()] = IntMatrix::identity(rank);
  known[g->identity()] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      auto y = g->mul(queue[i], gens[s]);
      if (known[y]) continue;
      known[y] = 1;
      act[y] = act[queue[i]] * matrices[s];
      queue.push_back(y);
    }
  return GLattice(g, rank, std::move(act));
}

GLattice GLattice::direct_sum(const std::vector<GLattice>& parts) {
  if (parts.empty()) throw DomainError("direct sum of no lattices");
  const auto& g = parts.front().group();
  std::size_t rank = 0;
  for (const auto& p : parts) {
    if (p.group() != g) throw DomainError("direct sum of lattices over different groups");
    rank += p.rank();
  }
  std::vector<IntMatrix> act;
  for (std::size_t x = 0; x < g->order(); ++x) {
    IntMatrix m(rank, rank);
    std::size_t off = 0;
    for (const auto& p : parts) {
      for (std::size_t i = 0; i < p.rank(); ++i)
        for (std::size_t j = 0; j < p.rank(); ++j) m(off + i, off + j) = p.action(x)(i, j);
      off += p.rank();
    }
    act.push_back(std::move(m));
  }
  return GLattice(g, rank, std::move(act));
}

IntVector GLattice::act(std::size_t g, std::span<const Integer> v) const { return action_[g] * v; }

GLattice GLattice::dual() const {
  std::vector<IntMatrix> act;
  for (std::size_t x = 0; x < group_->order(); ++x) act.push_back(action_[group_->inverse(x)].transposed());
  return GLattice(group_, rank_, std::move(act));
}

GLattice GLattice::restrict(const Subgroup& h) const {
  if (h.parent() != group_) throw DomainError("subgroup " + h.to_string() + " does not belong to the group");
  auto sub = group_->subgroup_as_group(h);
  std::vector<IntMatrix> act;
  for (auto x : sub.map) act.push_back(action_[x]);
  return GLattice(sub.group, rank_, std::move(act));
}

GLattice GLattice::inflate(const GroupPtr& group, const InducedGroup& quotient) const {
  if (quotient.group != group_) throw DomainError("inflate: lattice is not over the quotient group");
  if (quotient.map.size() != group->order()) throw DomainError("inflate: projection has wrong length");
  std::vector<IntMatrix> act;
  for (std::size_t x = 0; x < group->order(); ++x) act.push_back(action_[quotient.map[x]]);
  return GLattice(group, rank_, std::move(act));
}

IntMatrix GLattice::invariants_sublattice(const Subgroup& h) const {
  if (h.parent() != group_) throw DomainError("subgroup " + h.to_string() + " does not belong to the group");
  IntMatrix stacked(0, rank_);
  for (auto x : h.elements()) {
    if (x == group_->identity()) continue;
    stacked = vconcat(stacked, action_[x] - IntMatrix::identity(rank_));
  }
  return kernel_basis(stacked);
}

bool GLattice::is_stable(const IntMatrix& basis) const {
  if (basis.rows() != rank_) throw DomainError("sublattice basis has wrong ambient rank");
  IntegerSolver solver(basis);
  for (auto x : group_->generators()) {
    IntMatrix image = action_[x] * basis;
    for (std::size_t j = 0; j < image.cols(); ++j)
      if (!solver.solve(image.column(j))) return false;
  }
  return true;
}

namespace {

// Columns completing a saturated basis to a basis of Z^n. Standard basis vectors
// are used when unit pivots allow it, otherwise the Smith complement.
IntMatrix complement(const IntMatrix& basis) {
  const std::size_t n = basis.rows(), k = basis.cols();
  IntMatrix work = basis;
  std::vector<char> used(n, 0);
  bool ok = true;
  for (std::size_t j = 0; j < k && ok; ++j) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i] && (work(i, j) == 1 || work(i, j) == -1)) {
        p = i;
        break;
      }
    if (p == n) {
      ok = false;
      break;
    }
    used[p] = 1;
    for (std::size_t l = 0; l < k; ++l)
      if (l != j && work(p, l) != 0) work.add_col_multiple(l, j, -work(p, l) * work(p, j));
  }
  if (ok) {
    IntMatrix c(n, n - k);
    std::size_t col = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) c(i, col++) = 1;
    return c;
  }
  auto d = smith_normal_form(basis, {.track_left = true, .track_right = false, .track_left_inverse = true});
  return d.U_inverse.columns(k, n - k);
}

}  // namespace

LatticeMap GLattice::quotient_by_saturated(const IntMatrix& basis) const {
  if (basis.rows() != rank_) throw DomainError("sublattice basis has wrong ambient rank");
  if (basis.cols() > 0 && !is_saturated(basis))
    throw DomainError("sublattice is not saturated; the quotient would have torsion");
  if (!is_stable(basis)) throw DomainError("sublattice is not stable under the group action");
  const std::size_t k = basis.cols();
  IntMatrix c = complement(basis);
  IntMatrix inv = left_inverse(hconcat(basis, c));
  IntMatrix proj = inv.row_block(k, rank_ - k);
  std::vector<IntMatrix> act;
  for (std::size_t x = 0; x < group_->order(); ++x) act.push_back(proj * action_[x] * c);
  GLattice q(group_, rank_ - k, std::move(act));
  return LatticeMap(*this, std::move(q), std::move(proj));
}

LatticeMap GLattice::sublattice(const IntMatrix& basis) const {
  if (basis.rows() != rank_) throw DomainError("sublattice basis has wrong ambient rank");
  if (basis.cols() > 0 && !is_saturated(basis)) throw DomainError("sublattice is not saturated");
  if (!is_stable(basis)) throw DomainError("sublattice is not stable under the group action");
  IntMatrix back = basis.cols() ? left_inverse(basis) : IntMatrix(0, rank_);
  std::vector<IntMatrix> act;
  for (std::size_t x = 0; x < group_->order(); ++x) act.push_back(back * action_[x] * basis);
  GLattice s(group_, basis.cols(), std::move(act));
  return LatticeMap(std::move(s), *this, basis);
}

LatticeMap::LatticeMap(GLattice source, GLattice target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (source_.group() != target_.group()) throw DomainError("lattice map between different groups");
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
    throw DomainError("lattice map matrix has wrong shape");
  for (std::size_t x = 0; x < source_.group()->order(); ++x)
    if (matrix_ * source_.action(x) != target_.action(x) * matrix_)
      throw DomainError("lattice map is not equivariant for element " + std::to_string(x));
}

LatticeMap LatticeMap::identity(const GLattice& m) { return LatticeMap(m, m, IntMatrix::identity(m.rank())); }

LatticeMap LatticeMap::then(const LatticeMap& next) const {
  if (!(next.source_ == target_)) throw DomainError("lattice maps are not composable");
  return LatticeMap(source_, next.target_, next.matrix_ * matrix_);
}

LatticeMap LatticeMap::restrict(const Subgroup& h) const {
  return LatticeMap(source_.restrict(h), target_.restrict(h), matrix_);
}

ShortExactSequence::ShortExactSequence(LatticeMap inj, LatticeMap surj)
    : inj_(std::move(inj)), surj_(std::move(surj)) {
  if (!(inj_.target() == surj_.source())) throw DomainError("exact sequence maps are not composable");
  if (!(surj_.matrix() * inj_.matrix()).is_zero()) throw DomainError("sequence is not a complex");
  const std::size_t a = inj_.source().rank(), b = inj_.target().rank(), c = surj_.target().rank();
  if (a + c != b) throw DomainError("ranks do not add up in the exact sequence");
  // Image of inj saturated of rank a, surj onto Z^c; then im(inj) = ker(surj) by rank count.
  pullback_ = a ? left_inverse(inj_.matrix()) : IntMatrix(0, b);
  lift_ = c ? right_inverse(surj_.matrix()) : IntMatrix(b, 0);
  if (!(pullback_ * inj_.matrix()).is_identity() || !(surj_.matrix() * lift_).is_identity())
    throw InvariantViolation("exact sequence certificate failed");
}

ShortExactSequence ShortExactSequence::split(const GLattice& a, const GLattice& c) {
  GLattice b = GLattice::direct_sum({a, c});
  IntMatrix i(b.rank(), a.rank()), p(c.rank(), b.rank());
  for (std::size_t k = 0; k < a.rank(); ++k) i(k, k) = 1;
  for (std::size_t k = 0; k < c.rank(); ++k) p(k, a.rank() + k) = 1;
  return ShortExactSequence(LatticeMap(a, b, i), LatticeMap(b, c, p));
}

ShortExactSequence ShortExactSequence::dual() const {
  GLattice a = sub().dual(), b = middle().dual(), c = quotient().dual();
  return ShortExactSequence(LatticeMap(c, b, surj_.matrix().transposed()),
                            LatticeMap(b, a, inj_.matrix().transposed()));
}

ShortExactSequence ShortExactSequence::restrict(const Subgroup& h) const {
  return ShortExactSequence(inj_.restrict(h), surj_.restrict(h));
}

}  // namespace galcoh
