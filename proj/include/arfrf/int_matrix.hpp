#pragma once

#include "arfrf/checked.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace arfrf {

using IntVector = std::vector<Int>;

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);
  static IntMatrix from_rows(const std::vector<IntVector> &rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Int &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<Int> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const Int> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  IntVector row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }
  std::vector<IntVector> to_rows() const;

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;
  friend auto operator<=>(const IntMatrix &, const IntMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVector data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Intermediate
/// products are formed in 128 bits; every stored minor is range-checked.
Int determinant(const IntMatrix &m);

/// Row-per-line rendering with right-aligned signed entries.
std::string format_matrix(const IntMatrix &m, const std::string &indent = "");

} // namespace arfrf
