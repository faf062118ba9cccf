#include "arfrf/oracles.hpp"

#include "arfrf/error.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace arfrf::oracle {

std::vector<bool> membership_table(std::span<const Int> gens, Int n) {
  if (n < 0)
    return {};
  std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
  in[0] = true;
  for (Int k = 1; k <= n; ++k)
    for (Int g : gens)
      if (g > 0 && g <= k && in[static_cast<std::size_t>(k - g)]) {
        in[static_cast<std::size_t>(k)] = true;
        break;
      }
  return in;
}

bool membership(std::span<const Int> gens, Int n) {
  if (n < 0)
    return false;
  return membership_table(gens, n)[static_cast<std::size_t>(n)];
}

namespace {

// Every integer >= (a-1)(b-1) lies in <a, b> when gcd(a, b) = 1; in general
// the Frobenius number is below min * max.
Int table_bound(std::span<const Int> gens) {
  const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
  return checked_mul(*lo, *hi) + *hi;
}

} // namespace

Int frobenius(std::span<const Int> gens) {
  const Int bound = table_bound(gens);
  const auto in = membership_table(gens, bound);
  Int f = -1;
  for (Int k = 0; k <= bound; ++k)
    if (!in[static_cast<std::size_t>(k)])
      f = k;
  return f;
}

std::vector<Int> pseudo_frobenius(std::span<const Int> gens) {
  const Int bound = table_bound(gens);
  const auto in = membership_table(gens, 2 * bound);
  auto has = [&](Int k) { return bool(in[static_cast<std::size_t>(k)]); };
  Int f = -1;
  for (Int k = 0; k <= bound; ++k)
    if (!has(k))
      f = k;
  std::vector<Int> out;
  for (Int z = 1; z <= f; ++z) {
    if (has(z))
      continue;
    if (std::all_of(gens.begin(), gens.end(),
                    [&](Int g) { return has(z + g); }))
      out.push_back(z);
  }
  return out;
}

bool is_arf(std::span<const Int> gens) {
  const Int bound = table_bound(gens);
  const auto in = membership_table(gens, bound);
  Int f = -1;
  for (Int k = 0; k <= bound; ++k)
    if (!in[static_cast<std::size_t>(k)])
      f = k;
  std::vector<Int> small;
  for (Int k = 0; k <= f; ++k)
    if (in[static_cast<std::size_t>(k)])
      small.push_back(k);
  for (std::size_t a = 0; a < small.size(); ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      const Int z = 2 * small[a] - small[b];
      if (z <= f && !in[static_cast<std::size_t>(z)])
        return false;
    }
  return true;
}

namespace {

std::uint64_t count_ways(std::span<const Int> gens, std::size_t upto, Int n,
                         std::map<std::pair<std::size_t, Int>, std::uint64_t>
                             &memo) {
  if (n == 0)
    return 1;
  if (upto == 0)
    return 0;
  const auto key = std::make_pair(upto, n);
  if (auto it = memo.find(key); it != memo.end())
    return it->second;
  const Int g = gens[upto - 1];
  std::uint64_t total = 0;
  for (Int rest = n; rest >= 0; rest -= g) {
    const std::uint64_t part = count_ways(gens, upto - 1, rest, memo);
    if (__builtin_add_overflow(total, part, &total))
      throw OverflowError("denumerant exceeds 64 bits");
  }
  memo.emplace(key, total);
  return total;
}

} // namespace

std::uint64_t denumerant(std::span<const Int> gens, Int n) {
  if (n < 0)
    return 0;
  std::map<std::pair<std::size_t, Int>, std::uint64_t> memo;
  return count_ways(gens, gens.size(), n, memo);
}

namespace {

__int128 laplace(const IntMatrix &m, std::vector<std::size_t> &cols,
                 std::size_t row) {
  if (row == m.rows())
    return 1;
  __int128 total = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (m(row, c) == 0)
      continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    const __int128 minor = laplace(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    const __int128 term = static_cast<__int128>(m(row, c)) * minor;
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

} // namespace

Int cofactor_determinant(const IntMatrix &m) {
  if (!m.square())
    throw DimensionMismatch("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j)
    cols[j] = j;
  return narrow_int128(laplace(m, cols, 0));
}

} // namespace arfrf::oracle
