#include "periodic.hpp"

#include <stdexcept>

#include "galcoh/smith.hpp"

namespace oracle {

using galcoh::Integer;

TensorResolution::TensorResolution(GroupPtr g, std::size_t s, std::size_t m, std::size_t t, std::size_t n)
    : group_(std::move(g)), s_(s), m_(m), t_(t), n_(n) {
  if (!group_->is_abelian() || group_->element_order(s) != m || group_->element_order(t) != n ||
      m * n != group_->order() || group_->generated_by({s, t}).order() != group_->order())
    throw std::invalid_argument("oracle: group is not <s> x <t>");
}

TensorResolution TensorResolution::cyclic(GroupPtr g, std::size_t s) {
  const std::size_t e = g->identity(), m = g->element_order(s);
  return TensorResolution(g, s, m, e, 1);
}

TensorResolution TensorResolution::for_group(GroupPtr g) {
  const auto& gens = g->generators();
  if (gens.empty()) return cyclic(g, g->identity());
  if (gens.size() == 1) return cyclic(g, gens[0]);
  if (gens.size() != 2) throw std::invalid_argument("oracle: more than two generators");
  return TensorResolution(g, gens[0], g->element_order(gens[0]), gens[1], g->element_order(gens[1]));
}

std::vector<long> TensorResolution::factor_boundary(bool first, std::size_t i) const {
  const std::size_t gen = first ? s_ : t_, ord = first ? m_ : n_;
  std::vector<long> u(group_->order(), 0);
  if (i % 2 == 1) {
    u[gen] += 1;
    u[group_->identity()] -= 1;
  } else {
    std::size_t x = group_->identity();
    for (std::size_t k = 0; k < ord; ++k, x = group_->mul(x, gen)) u[x] += 1;
  }
  return u;
}

IntMatrix TensorResolution::boundary(std::size_t k) const {
  const std::size_t n = group_->order();
  IntMatrix d(k * n, (k + 1) * n);
  if (k == 0) return d;
  // basis index b in degree k stands for e_{b, k-b}
  for (std::size_t b = 0; b <= k; ++b) {
    const std::size_t i = b, j = k - b;
    auto add = [&](std::size_t target_basis, const std::vector<long>& u, long sign) {
      for (std::size_t x = 0; x < n; ++x)      // source coefficient on element x
        for (std::size_t g = 0; g < n; ++g)    // times u_g
          if (u[g]) d(target_basis * n + group_->mul(x, g), b * n + x) += sign * u[g];
    };
    if (i >= 1) add(i - 1, factor_boundary(true, i), 1);
    if (j >= 1) add(i, factor_boundary(false, j), (i % 2) ? -1 : 1);
  }
  return d;
}

IntMatrix TensorResolution::ring_action(const GLattice& m, const std::vector<long>& u) const {
  IntMatrix a(m.rank(), m.rank());
  for (std::size_t g = 0; g < u.size(); ++g)
    if (u[g]) a = a + Integer(u[g]) * m.action(g);
  return a;
}

IntMatrix TensorResolution::cochain_differential(const GLattice& m, std::size_t k) const {
  const std::size_t r = m.rank();
  IntMatrix d((k + 2) * r, (k + 1) * r);
  // (delta f)_{(i', j')} = u_A(i') f_{(i'-1, j')} + (-1)^{i'} u_B(j') f_{(i', j'-1)}
  for (std::size_t ip = 0; ip <= k + 1; ++ip) {
    const std::size_t jp = k + 1 - ip;
    auto put = [&](std::size_t src_basis, const IntMatrix& a, long sign) {
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y) d(ip * r + x, src_basis * r + y) += sign * a(x, y);
    };
    if (ip >= 1) put(ip - 1, ring_action(m, factor_boundary(true, ip)), 1);
    if (jp >= 1) put(ip, ring_action(m, factor_boundary(false, jp)), (ip % 2) ? -1 : 1);
  }
  return d;
}

LatticeQuotient TensorResolution::cohomology(const GLattice& m, std::size_t k) const {
  IntMatrix prev = k == 0 ? IntMatrix(m.rank(), 0) : cochain_differential(m, k - 1);
  return galcoh::subquotient(cochain_differential(m, k), prev);
}

namespace {

// Periodic cochain complex of D = <d> on M: every C^k = M, delta^k = u(k+1).
IntMatrix periodic_differential(const GLattice& m, std::size_t d, std::size_t k) {
  const auto& g = *m.group();
  IntMatrix a(m.rank(), m.rank());
  if ((k + 1) % 2 == 1) {
    a = m.action(d) - IntMatrix::identity(m.rank());
  } else {
    std::size_t x = g.identity();
    do {
      a = a + m.action(x);
      x = g.mul(x, d);
    } while (x != g.identity());
  }
  return a;
}

}  // namespace

GroupHom restriction_to_cyclic(const TensorResolution& res, const GLattice& m, std::size_t k, std::size_t d) {
  const auto& g = *res.group();
  const std::size_t n = g.order(), r = m.rank();
  // phi_q: generator of the D-resolution in degree q -> coefficient vector in P^G_q
  IntVector phi(n);
  phi[g.identity()] = 1;
  for (std::size_t q = 1; q <= k; ++q) {
    std::vector<long> u(n, 0);
    if (q % 2 == 1) {
      u[d] += 1;
      u[g.identity()] -= 1;
    } else {
      std::size_t x = g.identity();
      do {
        u[x] += 1;
        x = g.mul(x, d);
      } while (x != g.identity());
    }
    IntVector target(q * n);
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t x = 0; x < n; ++x)
        if (phi[b * n + x] != 0)
          for (std::size_t y = 0; y < n; ++y)
            if (u[y]) target[b * n + g.mul(y, x)] += u[y] * phi[b * n + x];
    auto sol = galcoh::IntegerSolver(res.boundary(q)).solve(target);
    if (!sol) throw std::logic_error("oracle: comparison map does not lift");
    phi = *sol;
  }
  // cochain map Hom(P^G_k, M) = M^{k+1} -> Hom(P^D_k, M) = M
  IntMatrix rmap(r, (k + 1) * r);
  for (std::size_t b = 0; b <= k; ++b)
    for (std::size_t x = 0; x < n; ++x)
      if (phi[b * n + x] != 0)
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) rmap(i, b * r + j) += phi[b * n + x] * m.action(x)(i, j);

  auto whole = res.cohomology(m, k);
  IntMatrix prev = k == 0 ? IntMatrix(r, 0) : periodic_differential(m, d, k - 1);
  auto local = galcoh::subquotient(periodic_differential(m, d, k), prev);
  const auto& gens = whole.generators();
  IntMatrix mat(local.presentation().generator_count(), gens.cols());
  for (std::size_t j = 0; j < gens.cols(); ++j) mat.set_column(j, local.coordinates(rmap * std::span<const Integer>(gens.column(j))));
  return GroupHom(whole.presentation(), local.presentation(), mat);
}

AbelianPresentation sha(const TensorResolution& res, const GLattice& m, std::size_t k,
                        const std::vector<std::size_t>& decomposition_generators) {
  auto whole = res.cohomology(m, k).presentation();
  std::vector<GroupHom> maps;
  for (auto d : decomposition_generators) maps.push_back(restriction_to_cyclic(res, m, k, d));
  return galcoh::joint_kernel(whole, maps).presentation();
}

}  // namespace oracle
