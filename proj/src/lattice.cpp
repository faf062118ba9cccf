#include "arfrf/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace arfrf {

namespace {

void axpy(IntVector &target, Int factor, const IntVector &source) {
  if (factor == 0)
    return;
  for (std::size_t k = 0; k < target.size(); ++k)
    target[k] = checked_sub(target[k], checked_mul(factor, source[k]));
}

bool is_zero(const IntVector &v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

} // namespace

Int degree(const NumericalSemigroup &s, std::span<const Int> v) {
  const auto &gens = s.generators();
  if (v.size() != gens.size())
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " against embedding dimension " +
                            std::to_string(gens.size()));
  Int d = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    d = checked_add(d, checked_mul(v[i], gens[i]));
  return d;
}

std::vector<IntVector> hermite_basis(std::size_t dimension,
                                     std::vector<IntVector> rows,
                                     std::vector<std::size_t> *pivots) {
  for (const auto &r : rows)
    if (r.size() != dimension)
      throw DimensionMismatch("lattice generator has wrong length");
  std::erase_if(rows, is_zero);
  std::vector<std::size_t> piv;
  std::size_t top = 0;
  for (std::size_t col = 0; col < dimension && top < rows.size(); ++col) {
    // Euclid on column `col` across rows top..end until one nonzero remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 &&
            (best == rows.size() ||
             std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
          best = i;
      if (best == rows.size())
        break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0)
          continue;
        axpy(rows[i], rows[i][col] / rows[top][col], rows[top]);
        if (rows[i][col] != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (rows[top][col] == 0)
      continue;
    if (rows[top][col] < 0)
      for (auto &x : rows[top])
        x = checked_neg(x);
    for (std::size_t i = 0; i < top; ++i)
      axpy(rows[i], floor_div(rows[i][col], rows[top][col]), rows[top]);
    piv.push_back(col);
    ++top;
  }
  rows.resize(top);
  if (pivots)
    *pivots = std::move(piv);
  return rows;
}

IntegerLattice::IntegerLattice(std::size_t dimension,
                               std::vector<IntVector> generators)
    : dim_(dimension), gens_(std::move(generators)) {
  basis_ = hermite_basis(dim_, gens_, &pivots_);
}

std::optional<IntVector>
IntegerLattice::coordinates(std::span<const Int> v) const {
  if (v.size() != dim_)
    throw DimensionMismatch("vector length differs from lattice dimension");
  IntVector rest(v.begin(), v.end());
  IntVector coeffs(basis_.size(), 0);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    for (std::size_t c = (k ? pivots_[k - 1] + 1 : 0); c < p; ++c)
      if (rest[c] != 0)
        return std::nullopt;
    if (rest[p] % basis_[k][p] != 0)
      return std::nullopt;
    coeffs[k] = rest[p] / basis_[k][p];
    axpy(rest, coeffs[k], basis_[k]);
  }
  if (!is_zero(rest))
    return std::nullopt;
  return coeffs;
}

IntegerLattice kernel_lattice(const NumericalSemigroup &s) {
  const auto &gens = s.generators();
  const std::size_t e = gens.size();
  // Column operations on the 1 x e row (n_1 ... n_e), mirrored on the
  // identity: the unimodular U with gens * U = (0 .. +-1 .. 0) has every
  // other column in the kernel, and those columns span it.
  IntVector a = gens;
  std::vector<IntVector> u(e, IntVector(e, 0)); // u[c] is column c of U
  for (std::size_t c = 0; c < e; ++c)
    u[c][c] = 1;
  std::size_t last = 0;
  for (;;) {
    std::size_t p = e;
    for (std::size_t c = 0; c < e; ++c)
      if (a[c] != 0 && (p == e || std::llabs(a[c]) < std::llabs(a[p])))
        p = c;
    bool single = true;
    for (std::size_t c = 0; c < e; ++c) {
      if (c == p || a[c] == 0)
        continue;
      const Int q = a[c] / a[p];
      a[c] = checked_sub(a[c], checked_mul(q, a[p]));
      axpy(u[c], q, u[p]);
      if (a[c] != 0)
        single = false;
    }
    last = p;
    if (single)
      break;
  }
  std::vector<IntVector> kernel;
  for (std::size_t c = 0; c < e; ++c)
    if (c != last)
      kernel.push_back(u[c]);
  return IntegerLattice(e, std::move(kernel));
}

std::vector<RowDifference> row_differences(const RFMatrix &m) {
  std::vector<RowDifference> out;
  const std::size_t e = m.size();
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = i + 1; j < e; ++j) {
      IntVector v(e);
      for (std::size_t k = 0; k < e; ++k)
        v[k] = checked_sub(m(i, k), m(j, k));
      out.push_back({i, j, std::move(v)});
    }
  return out;
}

IntegerLattice rf_difference_lattice(const NumericalSemigroup &s,
                                     const RFMatrix &m) {
  if (m.size() != s.embedding_dimension())
    throw DimensionMismatch("RF matrix size differs from embedding dimension");
  std::vector<IntVector> gens;
  for (auto &d : row_differences(m)) {
    if (is_zero(d.vector))
      continue;
    if (degree(s, d.vector) != 0)
      throw std::invalid_argument("rows of the matrix have different degrees");
    gens.push_back(std::move(d.vector));
  }
  return IntegerLattice(s.embedding_dimension(), std::move(gens));
}

LatticeIndex lattice_index(const IntegerLattice &sub,
                           const IntegerLattice &super) {
  if (sub.dimension() != super.dimension())
    throw DimensionMismatch("lattices live in different dimensions");
  for (const auto &g : sub.generators())
    if (!super.contains(g))
      throw NotSublattice("generator is not in the ambient lattice");
  if (sub.rank() < super.rank())
    return {true, 0};
  IntMatrix change(sub.rank(), super.rank());
  for (std::size_t k = 0; k < sub.rank(); ++k) {
    const auto c = super.coordinates(sub.basis()[k]);
    for (std::size_t j = 0; j < super.rank(); ++j)
      change(k, j) = (*c)[j];
  }
  return {false, std::llabs(determinant(change))};
}

} // namespace arfrf
