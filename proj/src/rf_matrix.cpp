#include "arfrf/rf_matrix.hpp"

#include "arfrf/factorization.hpp"

#include <algorithm>
#include <cstdlib>

namespace arfrf {

bool satisfies_rf_invariants(const NumericalSemigroup &s, Int f,
                             const IntMatrix &m, std::string *why) {
  auto fail = [&](const std::string &reason) {
    if (why)
      *why = reason;
    return false;
  };
  const auto &gens = s.generators();
  const std::size_t e = gens.size();
  if (m.rows() != e || m.cols() != e)
    return fail("matrix is not " + std::to_string(e) + "x" +
                std::to_string(e));
  for (std::size_t i = 0; i < e; ++i) {
    Int degree = 0;
    for (std::size_t j = 0; j < e; ++j) {
      const Int a = m(i, j);
      if (i == j && a != -1)
        return fail("a_" + std::to_string(i + 1) + std::to_string(j + 1) +
                    " is not -1");
      if (i != j && a < 0)
        return fail("a_" + std::to_string(i + 1) + std::to_string(j + 1) +
                    " is negative");
      degree = checked_add(degree, checked_mul(a, gens[j]));
    }
    if (degree != f)
      return fail("row " + std::to_string(i + 1) + " has degree " +
                  std::to_string(degree) + ", expected " + std::to_string(f));
  }
  return true;
}

std::vector<std::vector<IntVector>> rf_row_options(const NumericalSemigroup &s,
                                                   Int f) {
  if (!pseudo_frobenius(s).contains(f))
    throw NotPseudoFrobenius(std::to_string(f) +
                             " is not a pseudo-Frobenius number of " +
                             s.to_string());
  const auto &gens = s.generators();
  std::vector<std::vector<IntVector>> options(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto &fac : factorizations(s, checked_add(f, gens[i]), i)) {
      fac.coefficients[i] = -1;
      options[i].push_back(std::move(fac.coefficients));
    }
    // Largest first, so a_i1 starts at its maximum.
    std::reverse(options[i].begin(), options[i].end());
  }
  return options;
}

namespace {

std::uint64_t product_of_counts(const std::vector<std::vector<IntVector>> &o) {
  std::uint64_t count = 1;
  for (const auto &row : o)
    if (__builtin_mul_overflow(count, row.size(), &count))
      throw OverflowError("RF matrix count exceeds 64 bits");
  return count;
}

} // namespace

std::uint64_t count_rf_matrices(const NumericalSemigroup &s, Int f) {
  return product_of_counts(rf_row_options(s, f));
}

void for_each_rf_matrix(const NumericalSemigroup &s, Int f,
                        const std::function<bool(const RFMatrix &)> &visit) {
  const auto options = rf_row_options(s, f);
  const std::size_t e = options.size();
  for (const auto &row : options)
    if (row.empty())
      return; // cannot happen for a genuine pseudo-Frobenius number
  std::vector<std::size_t> choice(e, 0);
  RFMatrix m{IntMatrix(e, e), f, s.generators()};
  for (;;) {
    for (std::size_t i = 0; i < e; ++i) {
      const auto &r = options[i][choice[i]];
      std::copy(r.begin(), r.end(), m.entries.row(i).begin());
    }
    if (!visit(m))
      return;
    // odometer: last row varies fastest
    std::size_t i = e;
    while (i > 0) {
      --i;
      if (++choice[i] < options[i].size())
        break;
      choice[i] = 0;
      if (i == 0)
        return;
    }
  }
}

std::vector<RFMatrix> rf_matrices(const NumericalSemigroup &s, Int f,
                                  std::optional<std::uint64_t> limit) {
  const auto count = count_rf_matrices(s, f);
  if (limit && count > *limit)
    throw RfLimitExceeded("RF(" + std::to_string(f) + ") of " +
                              s.to_string() + " has " + std::to_string(count) +
                              " matrices, above the limit of " +
                              std::to_string(*limit),
                          count);
  std::vector<RFMatrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_rf_matrix(s, f, [&](const RFMatrix &m) {
    out.push_back(m);
    return true;
  });
  return out;
}

Int determinant(const RFMatrix &m) { return determinant(m.entries); }

std::optional<RFMatrix>
find_frobenius_det_witness(const NumericalSemigroup &s) {
  if (s.is_natural())
    return std::nullopt;
  const Int fr = s.frobenius();
  std::optional<RFMatrix> found;
  for_each_rf_matrix(s, fr, [&](const RFMatrix &m) {
    if (std::llabs(determinant(m)) == fr) {
      found = m;
      return false;
    }
    return true;
  });
  return found;
}

SignConjectureResult check_sign_conjecture(const NumericalSemigroup &s) {
  SignConjectureResult result;
  if (s.is_natural())
    return result;
  const Int fr = s.frobenius();
  const bool odd_e = s.embedding_dimension() % 2 == 1;
  result.expected_determinant = odd_e ? fr : -fr; // (-1)^{e+1} F
  for_each_rf_matrix(s, fr, [&](const RFMatrix &m) {
    ++result.scanned;
    if (determinant(m) == result.expected_determinant) {
      result.holds = true;
      result.witness = m;
      return false;
    }
    return true;
  });
  return result;
}

std::optional<ZeroPair> column_zero_pair(const IntMatrix &m) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, j) != 0)
        continue;
      for (std::size_t i2 = i + 1; i2 < m.rows(); ++i2)
        if (m(i2, j) == 0)
          return ZeroPair{i, i2, j};
    }
  return std::nullopt;
}

} // namespace arfrf
