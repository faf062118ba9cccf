#pragma once

// Brute-force reference implementations. None of these touch the Apery
// machinery in semigroup.cpp; they exist to be compared against it.

#include "arfrf/int_matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace arfrf::oracle {

/// Reachability table over [0, n]: entry k is true iff k is a non-negative
/// combination of gens.
std::vector<bool> membership_table(std::span<const Int> gens, Int n);

bool membership(std::span<const Int> gens, Int n);

/// F(S) read off a reachability table. Requires gcd(gens) = 1. Returns -1
/// for S = N.
Int frobenius(std::span<const Int> gens);

/// z in [1, F] with z not in S and z + g in S for every generator g.
std::vector<Int> pseudo_frobenius(std::span<const Int> gens);

/// Definitional Arf test: 2x - y in S for all small elements y <= x.
bool is_arf(std::span<const Int> gens);

/// Number of ways to write n over gens (all coefficients free), by
/// top-down recursion on the last generator with memoization.
std::uint64_t denumerant(std::span<const Int> gens, Int n);

/// Laplace expansion along the first row.
Int cofactor_determinant(const IntMatrix &m);

} // namespace arfrf::oracle
