#include "galcoh/sparse.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "galcoh/errors.hpp"
#include "galcoh/smith.hpp"

namespace galcoh {

IntVector SparseMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols) throw DomainError("SparseMatrix::apply: dimension mismatch");
  IntVector y(rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& [c, v] : data[i])
      if (x[c] != 0) y[i] += x[c] * static_cast<long>(v);
  return y;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (const auto& [c, v] : data[i]) m(i, c) = static_cast<long>(v);
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data) n += r.size();
  return n;
}

namespace {

template <class T>
struct Arith;

template <>
struct Arith<std::int64_t> {
  static std::int64_t from(std::int64_t v) { return v; }
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ScalarOverflow();
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ScalarOverflow();
    return r;
  }
  static Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }
};

template <>
struct Arith<Integer> {
  static Integer from(std::int64_t v) { return Integer(static_cast<long>(v)); }
  static Integer mul(const Integer& a, const Integer& b) { return a * b; }
  static Integer sub(const Integer& a, const Integer& b) { return a - b; }
  static const Integer& big(const Integer& v) { return v; }
};

template <class T>
using Row = std::vector<std::pair<std::uint32_t, T>>;

template <class T>
const T* find_entry(const Row<T>& r, std::uint32_t c) {
  auto it = std::lower_bound(r.begin(), r.end(), c,
                             [](const std::pair<std::uint32_t, T>& e, std::uint32_t k) { return e.first < k; });
  return (it != r.end() && it->first == c) ? &it->second : nullptr;
}

template <class T>
bool is_unit(const T& v) {
  return v == 1 || v == -1;
}

template <class T>
struct Pivot {
  std::uint32_t col;
  std::uint32_t row;
  int sign;
  Row<T> delta;  // pivot row at pivot time, pivot entry removed
  Row<T> gamma;  // pivot column at pivot time, pivot entry removed
};

// Gaussian elimination restricted to +-1 pivots. Columns are visited in order of
// fewest live entries, ties going to the highest column index (much less fill-in on
// bar coboundaries than the lowest); within a column the shortest row with a unit
// entry wins.
template <class T>
struct Elimination {
  std::size_t nrows = 0;
  std::size_t ncols = 0;
  std::vector<Row<T>> rows;
  std::vector<Pivot<T>> pivots;
  std::vector<char> row_pivot;
  std::vector<char> col_pivot;

  void run(bool keep_delta, bool keep_gamma) {
    row_pivot.assign(nrows, 0);
    col_pivot.assign(ncols, 0);
    std::vector<std::uint32_t> count(ncols, 0);
    for (const auto& r : rows)
      for (const auto& e : r) ++count[e.first];
    std::vector<std::vector<std::uint32_t>> col_rows(ncols);
    for (std::size_t c = 0; c < ncols; ++c) col_rows[c].reserve(count[c]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (const auto& e : rows[i]) col_rows[e.first].push_back(static_cast<std::uint32_t>(i));

    // Keys are (count, ncols - 1 - column).
    std::set<std::pair<std::uint32_t, std::uint32_t>> queue;
    const auto flip = [this](std::uint32_t c) { return static_cast<std::uint32_t>(ncols - 1 - c); };
    for (std::uint32_t c = 0; c < ncols; ++c)
      if (count[c]) queue.insert({count[c], flip(c)});
    auto set_count = [&](std::uint32_t c, std::uint32_t v) {
      if (col_pivot[c]) return;
      queue.erase({count[c], flip(c)});
      count[c] = v;
      if (v) queue.insert({v, flip(c)});
    };

    std::vector<std::uint32_t> live;
    Row<T> merged;
    while (!queue.empty()) {
      const std::uint32_t cnt = queue.begin()->first;
      const std::uint32_t c = flip(queue.begin()->second);
      queue.erase(queue.begin());
      auto& cr = col_rows[c];
      live.clear();
      for (std::uint32_t i : cr)
        if (!row_pivot[i] && find_entry(rows[i], c)) live.push_back(i);
      std::sort(live.begin(), live.end());
      live.erase(std::unique(live.begin(), live.end()), live.end());
      cr = live;
      if (live.size() != cnt) {
        count[c] = static_cast<std::uint32_t>(live.size());
        if (!live.empty()) queue.insert({count[c], flip(c)});
        continue;
      }
      std::uint32_t best = 0;
      std::size_t best_len = SIZE_MAX;
      for (std::uint32_t i : live)
        if (is_unit(*find_entry(rows[i], c)) && rows[i].size() < best_len) {
          best_len = rows[i].size();
          best = i;
        }
      if (best_len == SIZE_MAX) continue;  // no unit here; revisited if the column changes

      Row<T> prow = std::move(rows[best]);
      rows[best].clear();
      const int sign = *find_entry(prow, c) == 1 ? 1 : -1;
      row_pivot[best] = 1;
      col_pivot[c] = 1;
      for (const auto& e : prow)
        if (e.first != c && count[e.first]) set_count(e.first, count[e.first] - 1);

      Pivot<T> p{c, best, sign, {}, {}};
      for (std::uint32_t o : live) {
        if (o == best) continue;
        Row<T>& other = rows[o];
        const T g = *find_entry(other, c);
        if (keep_gamma) p.gamma.push_back({o, g});
        const T f = sign == 1 ? g : T(-g);
        merged.clear();
        merged.reserve(other.size() + prow.size());
        std::size_t a = 0, b = 0;
        while (a < other.size() || b < prow.size()) {
          if (b == prow.size() || (a < other.size() && other[a].first < prow[b].first)) {
            merged.push_back(std::move(other[a]));
            ++a;
          } else if (a == other.size() || prow[b].first < other[a].first) {
            const std::uint32_t cc = prow[b].first;
            if (cc != c) {
              merged.push_back({cc, Arith<T>::sub(T(0), Arith<T>::mul(f, prow[b].second))});
              col_rows[cc].push_back(o);
              set_count(cc, count[cc] + 1);
            }
            ++b;
          } else {
            const std::uint32_t cc = other[a].first;
            T v = Arith<T>::sub(other[a].second, Arith<T>::mul(f, prow[b].second));
            if (v != 0)
              merged.push_back({cc, std::move(v)});
            else if (cc != c && count[cc])
              set_count(cc, count[cc] - 1);
            ++a;
            ++b;
          }
        }
        other.swap(merged);
      }
      if (keep_delta) {
        p.delta = std::move(prow);
        p.delta.erase(std::remove_if(p.delta.begin(), p.delta.end(),
                                     [c](const auto& e) { return e.first == c; }),
                      p.delta.end());
      }
      pivots.push_back(std::move(p));
    }
  }
};

template <class T>
Row<T> convert(const SparseRow& r) {
  Row<T> out;
  out.reserve(r.size());
  for (const auto& [c, v] : r) out.push_back({c, Arith<T>::from(v)});
  return out;
}

}  // namespace

struct ComplexReduction::Impl {
  virtual ~Impl() = default;
  virtual IntVector reduce(std::span<const Integer> cochain) const = 0;
  virtual IntVector lift(std::span<const Integer> residual) const = 0;
  virtual std::optional<IntVector> solve_prev(std::span<const Integer> y) const = 0;

  std::vector<std::uint32_t> residual;
  IntMatrix cycles;
  IntMatrix boundaries;
  bool big = false;
  std::size_t pivot_count = 0;
};

namespace {

template <class T>
class ReductionImpl final : public ComplexReduction::Impl {
 public:
  ReductionImpl(const SparseMatrix& prev, const SparseMatrix& next) : dim_(prev.rows), prev_cols_(prev.cols) {
    first_.nrows = prev.rows;
    first_.ncols = prev.cols;
    first_.rows.reserve(prev.rows);
    for (const auto& r : prev.data) first_.rows.push_back(convert<T>(r));
    first_.run(true, true);

    second_.nrows = next.rows;
    second_.ncols = next.cols;
    second_.rows.reserve(next.rows);
    for (const auto& r : next.data) {
      Row<T> row;
      for (const auto& [c, v] : r)
        if (!first_.row_pivot[c]) row.push_back({c, Arith<T>::from(v)});
      second_.rows.push_back(std::move(row));
    }
    second_.run(true, false);
    pivot_count = first_.pivots.size() + second_.pivots.size();

    position_.assign(dim_, -1);
    for (std::uint32_t j = 0; j < dim_; ++j)
      if (!first_.row_pivot[j] && !second_.col_pivot[j]) {
        position_[j] = static_cast<std::int64_t>(residual.size());
        residual.push_back(j);
      }
    const std::size_t x = residual.size();

    HermiteBasis echelon(x);
    for (std::size_t i = 0; i < second_.rows.size() && echelon.rank() < x; ++i) {
      if (second_.row_pivot[i] || second_.rows[i].empty()) continue;
      IntVector v(x);
      for (const auto& [c, val] : second_.rows[i]) {
        if (position_[c] < 0) throw InvariantViolation("sparse reduction: residual entry outside X");
        v[position_[c]] = Arith<T>::big(val);
      }
      echelon.insert(std::move(v));
    }
    cycles = kernel_basis(echelon.rows());
    second_.rows.clear();
    second_.rows.shrink_to_fit();

    std::vector<std::uint32_t> used;
    for (std::uint32_t j : residual)
      for (const auto& e : first_.rows[j]) used.push_back(e.first);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    boundaries = IntMatrix(x, used.size());
    for (std::size_t i = 0; i < x; ++i)
      for (const auto& [c, val] : first_.rows[residual[i]]) {
        auto k = std::lower_bound(used.begin(), used.end(), c) - used.begin();
        boundaries(i, k) = Arith<T>::big(val);
      }
  }

  IntVector reduce(std::span<const Integer> cochain) const override {
    if (cochain.size() != dim_) throw DomainError("reduce: cochain has wrong dimension");
    IntVector y(cochain.begin(), cochain.end());
    for (const auto& p : first_.pivots) {
      const Integer t = y[p.row];
      if (t == 0) continue;
      for (const auto& [r, g] : p.gamma) y[r] -= p.sign * Arith<T>::big(g) * t;
    }
    IntVector out(residual.size());
    for (std::size_t i = 0; i < residual.size(); ++i) out[i] = y[residual[i]];
    return out;
  }

  IntVector lift(std::span<const Integer> w) const override {
    if (w.size() != residual.size()) throw DomainError("lift: residual vector has wrong dimension");
    IntVector v(dim_);
    for (std::size_t i = 0; i < residual.size(); ++i) v[residual[i]] = w[i];
    for (auto it = second_.pivots.rbegin(); it != second_.pivots.rend(); ++it) {
      Integer s = 0;
      for (const auto& [c, d] : it->delta)
        if (v[c] != 0) s += Arith<T>::big(d) * v[c];
      v[it->col] = -it->sign * s;
    }
    return v;
  }

  std::optional<IntVector> solve_prev(std::span<const Integer> target) const override {
    if (target.size() != dim_) throw DomainError("solve: target has wrong dimension");
    IntVector y(target.begin(), target.end());
    std::vector<Integer> saved(first_.pivots.size());
    for (std::size_t k = 0; k < first_.pivots.size(); ++k) {
      const auto& p = first_.pivots[k];
      saved[k] = y[p.row];
      if (saved[k] == 0) continue;
      for (const auto& [r, g] : p.gamma) y[r] -= p.sign * Arith<T>::big(g) * saved[k];
    }
    std::call_once(dense_once_, [this] { build_dense(); });
    IntVector rhs(dense_rows_.size());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (first_.row_pivot[i] || y[i] == 0) continue;
      auto it = std::lower_bound(dense_rows_.begin(), dense_rows_.end(), static_cast<std::uint32_t>(i));
      if (it == dense_rows_.end() || *it != i) return std::nullopt;
      rhs[it - dense_rows_.begin()] = y[i];
    }
    IntVector w(prev_cols_);
    if (!dense_rows_.empty()) {
      auto sol = dense_.solve(rhs);
      if (!sol) return std::nullopt;
      for (std::size_t k = 0; k < dense_cols_.size(); ++k) w[dense_cols_[k]] = (*sol)[k];
    }
    for (std::size_t k = first_.pivots.size(); k-- > 0;) {
      const auto& p = first_.pivots[k];
      Integer s = saved[k];
      for (const auto& [c, d] : p.delta)
        if (w[c] != 0) s -= Arith<T>::big(d) * w[c];
      w[p.col] = p.sign * s;
    }
    return w;
  }

 private:
  void build_dense() const {
    for (std::uint32_t i = 0; i < dim_; ++i)
      if (!first_.row_pivot[i] && !first_.rows[i].empty()) {
        dense_rows_.push_back(i);
        for (const auto& e : first_.rows[i]) dense_cols_.push_back(e.first);
      }
    std::sort(dense_cols_.begin(), dense_cols_.end());
    dense_cols_.erase(std::unique(dense_cols_.begin(), dense_cols_.end()), dense_cols_.end());
    IntMatrix m(dense_rows_.size(), dense_cols_.size());
    for (std::size_t i = 0; i < dense_rows_.size(); ++i)
      for (const auto& [c, val] : first_.rows[dense_rows_[i]]) {
        auto k = std::lower_bound(dense_cols_.begin(), dense_cols_.end(), c) - dense_cols_.begin();
        m(i, k) = Arith<T>::big(val);
      }
    dense_ = IntegerSolver(m);
  }

  std::size_t dim_;
  std::size_t prev_cols_;
  Elimination<T> first_;
  Elimination<T> second_;
  std::vector<std::int64_t> position_;

  mutable std::once_flag dense_once_;
  mutable std::vector<std::uint32_t> dense_rows_;
  mutable std::vector<std::uint32_t> dense_cols_;
  mutable IntegerSolver dense_;
};

}  // namespace

ComplexReduction::ComplexReduction(const SparseMatrix& prev, const SparseMatrix& next) {
  if (prev.rows != next.cols) throw DomainError("ComplexReduction: differentials are not composable");
  try {
    impl_ = std::make_unique<ReductionImpl<std::int64_t>>(prev, next);
  } catch (const ScalarOverflow&) {
    impl_ = std::make_unique<ReductionImpl<Integer>>(prev, next);
    impl_->big = true;
  }
}

ComplexReduction::~ComplexReduction() = default;
ComplexReduction::ComplexReduction(ComplexReduction&&) noexcept = default;
ComplexReduction& ComplexReduction::operator=(ComplexReduction&&) noexcept = default;

std::size_t ComplexReduction::dimension() const { return impl_->residual.size(); }
const std::vector<std::uint32_t>& ComplexReduction::residual_coordinates() const { return impl_->residual; }
const IntMatrix& ComplexReduction::residual_cycles() const { return impl_->cycles; }
const IntMatrix& ComplexReduction::residual_boundaries() const { return impl_->boundaries; }
IntVector ComplexReduction::reduce(std::span<const Integer> c) const { return impl_->reduce(c); }
IntVector ComplexReduction::lift(std::span<const Integer> r) const { return impl_->lift(r); }
std::optional<IntVector> ComplexReduction::solve_prev(std::span<const Integer> y) const {
  return impl_->solve_prev(y);
}
bool ComplexReduction::used_big_integers() const { return impl_->big; }
std::size_t ComplexReduction::pivot_count() const { return impl_->pivot_count; }

}  // namespace galcoh
