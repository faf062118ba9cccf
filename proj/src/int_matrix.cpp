#include "arfrf/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace arfrf {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector> &rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw DimensionMismatch("ragged matrix rows");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    out.push_back(row_vector(i));
  return out;
}

Int determinant(const IntMatrix &m) {
  if (!m.square())
    throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 num = static_cast<__int128>(a(i, j)) * a(k, k) -
                       static_cast<__int128>(a(i, k)) * a(k, j);
        // Bareiss guarantees exact division by the previous pivot.
        a(i, j) = narrow_int128(num / prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign < 0 ? checked_neg(a(n - 1, n - 1)) : a(n - 1, n - 1);
}

std::string format_matrix(const IntMatrix &m, const std::string &indent) {
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      width = std::max(width, std::to_string(m(i, j)).size());
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string cell = std::to_string(m(i, j));
      os << (j ? " " : "") << std::string(width - cell.size(), ' ') << cell;
    }
    os << "]\n";
  }
  return os.str();
}

} // namespace arfrf
