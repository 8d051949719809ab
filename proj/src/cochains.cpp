#include "galcoh/cochains.hpp"

#include <algorithm>

#include "galcoh/errors.hpp"

namespace galcoh {

std::size_t cochain_dimension(std::size_t group_order, std::size_t degree, std::size_t rank) {
  std::size_t d = rank;
  for (std::size_t i = 0; i < degree; ++i) {
    if (d != 0 && group_order > SIZE_MAX / d) throw CapExceeded("cochain dimension overflows");
    d *= group_order;
  }
  return d;
}

void check_cochain_limits(const GLattice& m, std::size_t degree, const CochainLimits& limits) {
  if (degree > limits.max_degree)
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds the maximum degree " +
                      std::to_string(limits.max_degree));
  const std::size_t n = m.group()->order();
  const std::size_t rows = cochain_dimension(n, degree + 1, m.rank());
  if (rows > limits.size_cap)
    throw CapExceeded("H^" + std::to_string(degree) + " needs a " + std::to_string(rows) + " x " +
                      std::to_string(cochain_dimension(n, degree, m.rank())) +
                      " coboundary matrix, over the size cap " + std::to_string(limits.size_cap));
}

std::vector<std::size_t> decode_tuple(std::size_t index, std::size_t group_order, std::size_t degree) {
  std::vector<std::size_t> t(degree);
  for (std::size_t i = degree; i-- > 0;) {
    t[i] = index % group_order;
    index /= group_order;
  }
  return t;
}

std::size_t encode_tuple(std::span<const std::size_t> tuple, std::size_t group_order) {
  std::size_t v = 0;
  for (auto g : tuple) v = v * group_order + g;
  return v;
}

namespace {

// Face tuples of an (n+1)-tuple; face 0 carries the action of g1, face i the sign (-1)^i.
struct FaceWalker {
  const FiniteGroup& g;
  std::size_t n;  // source degree
  std::size_t order;
  std::size_t source_count;  // |G|^n

  // Tuple indices of the faces of tuple t (length n+1): face[0] = (g2..), face[i] for 1<=i<=n
  // merges g_i g_{i+1}, face[n+1] drops the last element.
  void faces(std::size_t t, std::vector<std::size_t>& tuple, std::vector<std::size_t>& face) const {
    for (std::size_t i = n + 1; i-- > 0;) {
      tuple[i] = t % order;
      t /= order;
    }
    face.assign(n + 2, 0);
    std::size_t rest = 0;
    for (std::size_t i = 1; i <= n; ++i) rest = rest * order + tuple[i];
    face[0] = rest;
    for (std::size_t i = 1; i <= n; ++i) {
      std::size_t v = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        if (k == i - 1) {
          v = v * order + g.mul(tuple[k], tuple[k + 1]);
          ++k;
        } else {
          v = v * order + tuple[k];
        }
      }
      face[i] = v;
    }
    std::size_t first = 0;
    for (std::size_t i = 0; i < n; ++i) first = first * order + tuple[i];
    face[n + 1] = first;
  }
};

std::int64_t small(const Integer& v) {
  if (!v.fits_slong_p()) throw CapExceeded("action matrix entry too large for the sparse coboundary");
  return v.get_si();
}

}  // namespace

SparseMatrix coboundary_matrix(const GLattice& m, std::size_t n) {
  const auto& g = *m.group();
  const std::size_t order = g.order(), r = m.rank();
  const std::size_t targets = cochain_dimension(order, n + 1, 1);
  if (targets * r > UINT32_MAX) throw CapExceeded("coboundary matrix too large for 32-bit indices");
  SparseMatrix d(targets * r, cochain_dimension(order, n, r));
  FaceWalker w{g, n, order, cochain_dimension(order, n, 1)};

  // Sparse copies of the action matrices.
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>> act(order);
  for (std::size_t x = 0; x < order; ++x) {
    act[x].resize(r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (m.action(x)(j, k) != 0) act[x][j].push_back({static_cast<std::uint32_t>(k), small(m.action(x)(j, k))});
  }

  std::vector<std::size_t> tuple(n + 1), face;
  SparseRow row;
  for (std::size_t t = 0; t < targets; ++t) {
    w.faces(t, tuple, face);
    for (std::size_t j = 0; j < r; ++j) {
      row.clear();
      for (const auto& [k, v] : act[tuple[0]][j]) row.push_back({static_cast<std::uint32_t>(face[0] * r + k), v});
      for (std::size_t i = 1; i <= n + 1; ++i)
        row.push_back({static_cast<std::uint32_t>(face[i] * r + j), (i % 2) ? -1 : 1});
      std::sort(row.begin(), row.end());
      SparseRow merged;
      for (const auto& e : row) {
        if (!merged.empty() && merged.back().first == e.first)
          merged.back().second += e.second;
        else
          merged.push_back(e);
      }
      merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& e) { return e.second == 0; }),
                   merged.end());
      d.data[t * r + j] = std::move(merged);
    }
  }
  return d;
}

IntVector apply_coboundary(const GLattice& m, std::size_t n, std::span<const Integer> f) {
  const auto& g = *m.group();
  const std::size_t order = g.order(), r = m.rank();
  if (f.size() != cochain_dimension(order, n, r)) throw DomainError("cochain has wrong dimension");
  const std::size_t targets = cochain_dimension(order, n + 1, 1);
  IntVector out(targets * r);
  FaceWalker w{g, n, order, cochain_dimension(order, n, 1)};
  std::vector<std::size_t> tuple(n + 1), face;
  for (std::size_t t = 0; t < targets; ++t) {
    w.faces(t, tuple, face);
    const IntMatrix& a = m.action(tuple[0]);
    for (std::size_t j = 0; j < r; ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < r; ++k)
        if (a(j, k) != 0) s += a(j, k) * f[face[0] * r + k];
      for (std::size_t i = 1; i <= n + 1; ++i) {
        if (i % 2)
          s -= f[face[i] * r + j];
        else
          s += f[face[i] * r + j];
      }
      out[t * r + j] = std::move(s);
    }
  }
  return out;
}

}  // namespace galcoh
