#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "galcoh/linalg.hpp"

namespace galcoh {

/// Sorted (column, value) pairs with no zero values.
using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Row-major sparse integer matrix with small entries (coboundary matrices).
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseRow> data;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}

  IntVector apply(std::span<const Integer> x) const;
  IntMatrix to_dense() const;
  std::size_t nonzeros() const;
};

/// Thrown by the fixed-width elimination kernel; callers rerun with big integers.
class ScalarOverflow : public std::overflow_error {
 public:
  ScalarOverflow() : std::overflow_error("int64 overflow during sparse elimination") {}
};

/// Unit-pivot reduction of the piece  C^{n-1} --prev--> C^n --next--> C^{n+1}
/// of a cochain complex (prev.rows == next.cols, next * prev == 0).
///
/// Both differentials are eliminated by +-1 pivots; what is left is a small
/// residual complex on a subset X of the coordinates of C^n, together with
/// chain maps between it and the original complex.
class ComplexReduction {
 public:
  ComplexReduction(const SparseMatrix& prev, const SparseMatrix& next);
  ~ComplexReduction();
  ComplexReduction(ComplexReduction&&) noexcept;
  ComplexReduction& operator=(ComplexReduction&&) noexcept;

  std::size_t dimension() const;
  /// Coordinates of C^n that survive, in increasing order.
  const std::vector<std::uint32_t>& residual_coordinates() const;
  /// Columns span the kernel of the residual next differential (|X| rows).
  const IntMatrix& residual_cycles() const;
  /// Columns span the image of the residual prev differential (|X| rows).
  const IntMatrix& residual_boundaries() const;

  /// Chain map C^n -> Z^X; cocycles go to residual cocycles, coboundaries to residual boundaries.
  IntVector reduce(std::span<const Integer> cochain) const;
  /// Chain map Z^X -> C^n, inverse to reduce() up to homotopy.
  IntVector lift(std::span<const Integer> residual) const;
  /// Some w with prev * w == y, or nullopt when y is not in the image.
  std::optional<IntVector> solve_prev(std::span<const Integer> y) const;

  /// True when the int64 kernel overflowed and the big-integer path was used.
  bool used_big_integers() const;
  std::size_t pivot_count() const;

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
};

}  // namespace galcoh
