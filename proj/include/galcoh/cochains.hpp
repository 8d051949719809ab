#pragma once

#include <cstddef>
#include <span>

#include "galcoh/glattice.hpp"
#include "galcoh/sparse.hpp"

namespace galcoh {

/// Limits on cochain computations.
struct CochainLimits {
  std::size_t max_degree = 3;
  /// Bound on |G|^(i+1) * rank(M) when computing H^i.
  std::size_t size_cap = std::size_t{1} << 20;
};

/// |G|^n * rank, throwing CapExceeded on size_t overflow.
std::size_t cochain_dimension(std::size_t group_order, std::size_t degree, std::size_t rank);

/// Throws CapExceeded (with the matrix dimensions) unless H^degree(G, M) is within limits.
void check_cochain_limits(const GLattice& m, std::size_t degree, const CochainLimits& limits);

/// Inhomogeneous cochains C^n = Map(G^n, M) are stored as vectors of length
/// |G|^n * rank: the tuple (g1, ..., gn) is read as a base-|G| number with g1
/// most significant, and component j of its value sits at tuple * rank + j.
///
/// d: C^n -> C^{n+1} is the full (unnormalized) bar coboundary
///   (dF)(g1..g_{n+1}) = g1 F(g2..) + sum_i (-1)^i F(.., g_i g_{i+1}, ..) + (-1)^{n+1} F(g1..gn).
SparseMatrix coboundary_matrix(const GLattice& m, std::size_t degree);

/// d F evaluated directly, without building the matrix.
IntVector apply_coboundary(const GLattice& m, std::size_t degree, std::span<const Integer> cochain);

/// Decodes a tuple index into group elements (g1 first).
std::vector<std::size_t> decode_tuple(std::size_t index, std::size_t group_order, std::size_t degree);
std::size_t encode_tuple(std::span<const std::size_t> tuple, std::size_t group_order);

}  // namespace galcoh
