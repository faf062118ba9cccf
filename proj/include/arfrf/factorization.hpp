#pragma once

#include "arfrf/semigroup.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace arfrf {

/// n = sum_j coefficients[j] * n_j over the minimal generators of S.
struct Factorization {
  std::vector<Int> coefficients;
  Int value = 0;

  friend bool operator==(const Factorization &, const Factorization &) =
      default;
};

/// Every factorization of n over the minimal generators, in lexicographically
/// increasing coefficient order. With `excluded` set, that coordinate is
/// pinned to zero (vectors keep length e). Negative n yields nothing.
std::vector<Factorization>
factorizations(const NumericalSemigroup &s, Int n,
               std::optional<std::size_t> excluded = std::nullopt);

/// Number of factorizations of n (the denumerant), by a coin-counting DP that
/// never enumerates. Throws OverflowError past 2^64 - 1.
std::uint64_t count_factorizations(const NumericalSemigroup &s, Int n);

/// Denumerant with one generator index held at zero.
std::uint64_t count_factorizations(const NumericalSemigroup &s, Int n,
                                   std::optional<std::size_t> excluded);

} // namespace arfrf
