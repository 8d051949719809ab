#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "galcoh/linalg.hpp"

namespace galcoh {

/// U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ... , all di >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  /// Only filled when requested; U_inverse * S * V_inverse = A.
  IntMatrix U_inverse;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

struct SmithOptions {
  bool track_left = true;
  bool track_right = true;
  bool track_left_inverse = false;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);
SmithDecomposition smith_normal_form(const IntMatrix& a, SmithOptions options);

/// Saturated Z-basis of {x : A x = 0}, one basis vector per column.
IntMatrix kernel_basis(const IntMatrix& a);

/// Row-style Hermite normal form built incrementally: leading entries positive,
/// entries above a pivot reduced into [0, pivot).
class HermiteBasis {
 public:
  explicit HermiteBasis(std::size_t dimension) : dimension_(dimension) {}

  /// Adds v to the spanning set; returns true if the rank grew.
  bool insert(IntVector v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dimension_; }
  /// Canonical echelon rows, sorted by pivot column.
  IntMatrix rows() const;

 private:
  void reduce_above();

  std::size_t dimension_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis (Hermite form, as columns) of the column span of gens.
IntMatrix column_basis(const IntMatrix& gens);
/// Basis of (Q-span of columns) intersected with Z^n.
IntMatrix saturate(const IntMatrix& basis);
/// True iff the columns are independent and span a saturated sublattice.
bool is_saturated(const IntMatrix& basis);

/// Solves A x = b over the integers using a stored Smith decomposition.
class IntegerSolver {
 public:
  IntegerSolver() = default;
  explicit IntegerSolver(const IntMatrix& a);

  std::optional<IntVector> solve(std::span<const Integer> b) const;
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t rank_ = 0;
  IntMatrix u_;
  IntMatrix v_;
  std::vector<Integer> diag_;
};

/// L with L*A = I, for A of full column rank with saturated image.
IntMatrix left_inverse(const IntMatrix& a);
/// R with A*R = I, for A surjective onto Z^rows.
IntMatrix right_inverse(const IntMatrix& a);

}  // namespace galcoh
