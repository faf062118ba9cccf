#pragma once

#include "arfrf/int_matrix.hpp"
#include "arfrf/semigroup.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace arfrf {

/// Row-factorization matrix of a pseudo-Frobenius number f: e x e, a_ii = -1,
/// a_ij >= 0 off the diagonal, and every row has degree f.
struct RFMatrix {
  IntMatrix entries;
  Int pf_element = 0;
  std::vector<Int> generators;

  std::size_t size() const noexcept { return entries.rows(); }
  Int operator()(std::size_t i, std::size_t j) const { return entries(i, j); }

  friend bool operator==(const RFMatrix &a, const RFMatrix &b) {
    return a.pf_element == b.pf_element && a.entries == b.entries &&
           a.generators == b.generators;
  }
};

/// Checks the RF invariants of `m` against S and f (diagonal, signs, row
/// degrees). Does not require f to be pseudo-Frobenius; callers decide that.
/// On failure, `why` (if given) receives a one-line reason.
bool satisfies_rf_invariants(const NumericalSemigroup &s, Int f,
                             const IntMatrix &m, std::string *why = nullptr);

/// For each row i, all rows (with -1 at position i) factoring f + n_i over
/// the other generators, in decreasing lexicographic order. Throws
/// NotPseudoFrobenius.
std::vector<std::vector<IntVector>> rf_row_options(const NumericalSemigroup &s,
                                                   Int f);

/// Product of the per-row option counts, without materializing anything.
std::uint64_t count_rf_matrices(const NumericalSemigroup &s, Int f);

/// Visits RF(f) as the row-wise product of rf_row_options: row 1 varies
/// slowest, and each row runs through its options largest first.
/// The visitor returns false to stop early.
void for_each_rf_matrix(const NumericalSemigroup &s, Int f,
                        const std::function<bool(const RFMatrix &)> &visit);

/// The complete list RF(f). Throws RfLimitExceeded if `limit` is set and the
/// count exceeds it.
std::vector<RFMatrix> rf_matrices(const NumericalSemigroup &s, Int f,
                                  std::optional<std::uint64_t> limit = {});

Int determinant(const RFMatrix &m);

/// First M in RF(F(S)) with |det M| = F(S), if any.
std::optional<RFMatrix> find_frobenius_det_witness(const NumericalSemigroup &s);

struct SignConjectureResult {
  bool holds = false;
  Int expected_determinant = 0; // (-1)^{e+1} F(S)
  std::uint64_t scanned = 0;
  std::optional<RFMatrix> witness;
};

/// Scans RF(F(S)) for det M = (-1)^{e+1} F(S), sign included.
SignConjectureResult check_sign_conjecture(const NumericalSemigroup &s);

/// Rows i < i' and column j with a_ij = a_i'j = 0 (0-based).
struct ZeroPair {
  std::size_t row_a = 0;
  std::size_t row_b = 0;
  std::size_t column = 0;
  friend bool operator==(const ZeroPair &, const ZeroPair &) = default;
};

/// First such pair scanning columns left to right, then row pairs.
std::optional<ZeroPair> column_zero_pair(const IntMatrix &m);
inline std::optional<ZeroPair> column_zero_pair(const RFMatrix &m) {
  return column_zero_pair(m.entries);
}

} // namespace arfrf
