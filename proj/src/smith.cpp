#include "galcoh/smith.hpp"

#include <algorithm>
#include <utility>

#include "galcoh/errors.hpp"

namespace galcoh {

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

namespace {

class SmithWorker {
 public:
  SmithWorker(const IntMatrix& a, SmithOptions opt) : s_(a), opt_(opt) {
    if (opt_.track_left) u_ = IntMatrix::identity(a.rows());
    if (opt_.track_right) v_ = IntMatrix::identity(a.cols());
    if (opt_.track_left_inverse) ui_ = IntMatrix::identity(a.rows());
  }

  SmithDecomposition run() {
    const std::size_t m = s_.rows();
    const std::size_t n = s_.cols();
    std::size_t t = 0;
    while (t < std::min(m, n)) {
      std::size_t pi = 0, pj = 0;
      if (!find_min(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (s_(i, t) == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), s_(i, t).get_mpz_t(), s_(t, t).get_mpz_t());
          if (q != 0) add_row(i, t, -q);
          if (s_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (s_(t, j) == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), s_(t, j).get_mpz_t(), s_(t, t).get_mpz_t());
          if (q != 0) add_col(j, t, -q);
          if (s_(t, j) != 0) clean = false;
        }
        if (!clean) {
          // A remainder is now strictly smaller than the pivot; promote it.
          std::size_t bi = t, bj = t;
          Integer best = abs(s_(t, t));
          for (std::size_t i = t + 1; i < m; ++i)
            if (s_(i, t) != 0 && abs(s_(i, t)) < best) best = abs(s_(i, t)), bi = i, bj = t;
          for (std::size_t j = t + 1; j < n; ++j)
            if (s_(t, j) != 0 && abs(s_(t, j)) < best) best = abs(s_(t, j)), bi = t, bj = j;
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
          for (std::size_t j = t + 1; j < n; ++j) {
            if (s_(i, j) == 0) continue;
            if (!mpz_divisible_p(s_(i, j).get_mpz_t(), s_(t, t).get_mpz_t())) {
              add_row(t, i, 1);
              fixed = true;
              break;
            }
          }
        if (!fixed) break;
      }
      if (s_(t, t) < 0) negate_row(t);
      ++t;
    }
    SmithDecomposition out;
    out.rank = t;
    out.S = std::move(s_);
    out.U = std::move(u_);
    out.V = std::move(v_);
    out.U_inverse = std::move(ui_);
    return out;
  }

 private:
  bool find_min(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < s_.rows(); ++i)
      for (std::size_t j = t; j < s_.cols(); ++j) {
        const Integer& x = s_(i, j);
        if (x == 0) continue;
        if (!found || abs(x) < best) {
          best = abs(x);
          pi = i;
          pj = j;
          found = true;
          if (best == 1) return true;
        }
      }
    return found;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    s_.swap_rows(a, b);
    if (opt_.track_left) u_.swap_rows(a, b);
    if (opt_.track_left_inverse) ui_.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    s_.swap_cols(a, b);
    if (opt_.track_right) v_.swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    s_.add_row_multiple(dst, src, k);
    if (opt_.track_left) u_.add_row_multiple(dst, src, k);
    if (opt_.track_left_inverse) ui_.add_col_multiple(src, dst, -k);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    s_.add_col_multiple(dst, src, k);
    if (opt_.track_right) v_.add_col_multiple(dst, src, k);
  }
  void negate_row(std::size_t i) {
    s_.negate_row(i);
    if (opt_.track_left) u_.negate_row(i);
    if (opt_.track_left_inverse) ui_.negate_col(i);
  }

  IntMatrix s_;
  IntMatrix u_;
  IntMatrix v_;
  IntMatrix ui_;
  SmithOptions opt_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) { return smith_normal_form(a, {}); }

SmithDecomposition smith_normal_form(const IntMatrix& a, SmithOptions options) {
  return SmithWorker(a, options).run();
}

IntMatrix kernel_basis(const IntMatrix& a) {
  auto d = smith_normal_form(a, {.track_left = false, .track_right = true});
  return d.V.columns(d.rank, a.cols() - d.rank);
}

bool HermiteBasis::insert(IntVector v) {
  if (v.size() != dimension_) throw DomainError("HermiteBasis::insert: dimension mismatch");
  std::size_t k = 0;
  bool modified = false;
  for (;;) {
    std::size_t lead = 0;
    while (lead < dimension_ && v[lead] == 0) ++lead;
    if (lead == dimension_) {
      if (modified) reduce_above();
      return false;
    }
    while (k < pivots_.size() && pivots_[k] < lead) ++k;
    if (k == pivots_.size() || pivots_[k] != lead) {
      if (v[lead] < 0)
        for (auto& x : v) x = -x;
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(k), std::move(v));
      pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(k), lead);
      reduce_above();
      return true;
    }
    IntVector& e = rows_[k];
    const Integer a = e[lead];
    const Integer b = v[lead];
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
      Integer q = b / a;
      for (std::size_t j = lead; j < dimension_; ++j)
        if (e[j] != 0) v[j] -= q * e[j];
      continue;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Integer bg = b / g;
    Integer ag = a / g;
    for (std::size_t j = lead; j < dimension_; ++j) {
      Integer ne = s * e[j] + t * v[j];
      Integer nv = bg * e[j] - ag * v[j];
      e[j] = std::move(ne);
      v[j] = std::move(nv);
    }
    if (e[lead] < 0)
      for (auto& x : e) x = -x;
    modified = true;
  }
}

void HermiteBasis::reduce_above() {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    const Integer& piv = rows_[k][p];
    for (std::size_t r = 0; r < k; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows_[r][p].get_mpz_t(), piv.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = p; j < dimension_; ++j)
        if (rows_[k][j] != 0) rows_[r][j] -= q * rows_[k][j];
    }
  }
}

IntMatrix HermiteBasis::rows() const {
  IntMatrix m(rows_.size(), dimension_);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < dimension_; ++j) m(i, j) = rows_[i][j];
  return m;
}

IntMatrix column_basis(const IntMatrix& gens) {
  HermiteBasis h(gens.rows());
  for (std::size_t j = 0; j < gens.cols(); ++j) h.insert(gens.column(j));
  return h.rows().transposed();
}

IntMatrix saturate(const IntMatrix& basis) {
  if (basis.cols() == 0) return IntMatrix(basis.rows(), 0);
  IntMatrix orth = kernel_basis(basis.transposed());
  if (orth.cols() == 0) return IntMatrix::identity(basis.rows());
  return column_basis(kernel_basis(orth.transposed()));
}

bool is_saturated(const IntMatrix& basis) {
  auto d = smith_normal_form(basis, {.track_left = false, .track_right = false});
  if (d.rank != basis.cols()) return false;
  for (std::size_t i = 0; i < d.rank; ++i)
    if (d.S(i, i) != 1) return false;
  return true;
}

IntegerSolver::IntegerSolver(const IntMatrix& a) : rows_(a.rows()), cols_(a.cols()) {
  auto d = smith_normal_form(a);
  rank_ = d.rank;
  u_ = std::move(d.U);
  v_ = std::move(d.V);
  for (std::size_t i = 0; i < rank_; ++i) diag_.push_back(d.S(i, i));
}

std::optional<IntVector> IntegerSolver::solve(std::span<const Integer> b) const {
  if (b.size() != rows_) throw DomainError("IntegerSolver::solve: length mismatch");
  IntVector c = u_ * b;
  IntVector y(cols_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < rank_) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), diag_[i].get_mpz_t())) return std::nullopt;
      y[i] = c[i] / diag_[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return v_ * std::span<const Integer>(y);
}

IntMatrix left_inverse(const IntMatrix& a) {
  auto d = smith_normal_form(a);
  const std::size_t n = a.cols();
  if (d.rank != n) throw DomainError("left_inverse: matrix is not injective");
  for (std::size_t i = 0; i < n; ++i)
    if (d.S(i, i) != 1) throw DomainError("left_inverse: image is not saturated");
  // V [I_n 0] U
  return d.V * d.U.row_block(0, n);
}

IntMatrix right_inverse(const IntMatrix& a) {
  auto d = smith_normal_form(a);
  const std::size_t m = a.rows();
  if (d.rank != m) throw DomainError("right_inverse: matrix is not surjective");
  for (std::size_t i = 0; i < m; ++i)
    if (d.S(i, i) != 1) throw DomainError("right_inverse: matrix is not surjective");
  // V [I_m; 0] U
  return d.V.columns(0, m) * d.U;
}

}  // namespace galcoh
