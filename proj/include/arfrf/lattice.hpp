#pragma once

#include "arfrf/int_matrix.hpp"
#include "arfrf/rf_matrix.hpp"
#include "arfrf/semigroup.hpp"

#include <optional>
#include <span>
#include <vector>

namespace arfrf {

/// deg_S(v) = sum_i v_i n_i. Throws DimensionMismatch if |v| != e(S).
Int degree(const NumericalSemigroup &s, std::span<const Int> v);

/// A subgroup of Z^d given by generators, canonicalized to Hermite normal
/// form: echelon rows, positive pivots, entries above each pivot reduced into
/// [0, pivot). Two lattices are equal iff their bases are equal.
class IntegerLattice {
public:
  IntegerLattice(std::size_t dimension, std::vector<IntVector> generators);

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<IntVector> &generators() const noexcept { return gens_; }
  const std::vector<IntVector> &basis() const noexcept { return basis_; }
  const std::vector<std::size_t> &pivot_columns() const noexcept {
    return pivots_;
  }
  IntMatrix basis_matrix() const { return IntMatrix::from_rows(basis_); }

  /// Coefficients of v in the Hermite basis, or nullopt if v is outside.
  std::optional<IntVector> coordinates(std::span<const Int> v) const;
  bool contains(std::span<const Int> v) const {
    return coordinates(v).has_value();
  }

  friend bool operator==(const IntegerLattice &a, const IntegerLattice &b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

private:
  std::size_t dim_;
  std::vector<IntVector> gens_;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Hermite normal form of the row span; exposed for testing.
std::vector<IntVector> hermite_basis(std::size_t dimension,
                                     std::vector<IntVector> rows,
                                     std::vector<std::size_t> *pivots = nullptr);

/// V(S) = ker deg_S, a saturated lattice of rank e - 1.
IntegerLattice kernel_lattice(const NumericalSemigroup &s);

/// a_ij = a_i - a_j for rows of an RF matrix, 0-based i < j.
struct RowDifference {
  std::size_t i = 0;
  std::size_t j = 0;
  IntVector vector;
};

/// All e(e-1)/2 differences, zero ones included, in (i, j) order.
std::vector<RowDifference> row_differences(const RFMatrix &m);

/// W(S) for the chosen matrix: generated by the nonzero a_ij. Every
/// generator is checked to have degree 0.
IntegerLattice rf_difference_lattice(const NumericalSemigroup &s,
                                     const RFMatrix &m);

struct LatticeIndex {
  bool infinite = false;
  Int value = 0; // meaningful when !infinite
  friend bool operator==(const LatticeIndex &, const LatticeIndex &) = default;
};

/// [V : W] for W inside V. Infinite when rank W < rank V. Throws
/// NotSublattice if some generator of W is not in V.
LatticeIndex lattice_index(const IntegerLattice &sub,
                           const IntegerLattice &super);

} // namespace arfrf
