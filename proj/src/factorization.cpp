#include "arfrf/factorization.hpp"

#include <stdexcept>

namespace arfrf {

namespace {

struct Enumerator {
  const std::vector<Int> &gens;
  std::optional<std::size_t> excluded;
  // reachable[k][r]: r is a non-negative combination of generators k..e-1
  // (skipping the excluded one). Prunes every dead branch of the DFS.
  std::vector<std::vector<char>> reachable;
  std::vector<Int> current;
  std::vector<Factorization> out;
  Int target = 0;

  bool usable(std::size_t k) const { return !(excluded && *excluded == k); }

  void build_table(Int n) {
    const std::size_t e = gens.size();
    const auto width = static_cast<std::size_t>(n) + 1;
    reachable.assign(e + 1, std::vector<char>(width, 0));
    reachable[e][0] = 1;
    for (std::size_t k = e; k-- > 0;) {
      auto &row = reachable[k];
      const auto &next = reachable[k + 1];
      row = next;
      if (!usable(k))
        continue;
      const auto g = static_cast<std::size_t>(gens[k]);
      for (std::size_t r = g; r < width; ++r)
        if (row[r - g])
          row[r] = 1;
    }
  }

  void descend(std::size_t k, Int remaining) {
    if (k == gens.size()) {
      out.push_back({current, target});
      return;
    }
    if (!usable(k)) {
      current[k] = 0;
      descend(k + 1, remaining);
      return;
    }
    const Int g = gens[k];
    for (Int c = 0; c * g <= remaining; ++c) {
      const Int rest = remaining - c * g;
      if (!reachable[k + 1][static_cast<std::size_t>(rest)])
        continue;
      current[k] = c;
      descend(k + 1, rest);
    }
    current[k] = 0;
  }
};

} // namespace

std::vector<Factorization> factorizations(const NumericalSemigroup &s, Int n,
                                          std::optional<std::size_t> excluded) {
  const auto &gens = s.generators();
  if (excluded && *excluded >= gens.size())
    throw std::out_of_range("excluded generator index out of range");
  if (n < 0)
    return {};
  Enumerator en{gens, excluded, {}, std::vector<Int>(gens.size(), 0), {}, n};
  en.build_table(n);
  if (!en.reachable[0][static_cast<std::size_t>(n)])
    return {};
  en.descend(0, n);
  return std::move(en.out);
}

std::uint64_t count_factorizations(const NumericalSemigroup &s, Int n,
                                   std::optional<std::size_t> excluded) {
  if (n < 0)
    return 0;
  const auto width = static_cast<std::size_t>(n) + 1;
  std::vector<std::uint64_t> ways(width, 0);
  ways[0] = 1;
  const auto &gens = s.generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (excluded && *excluded == k)
      continue;
    const auto g = static_cast<std::size_t>(gens[k]);
    for (std::size_t v = g; v < width; ++v)
      if (__builtin_add_overflow(ways[v], ways[v - g], &ways[v]))
        throw OverflowError("denumerant exceeds 64 bits");
  }
  return ways[static_cast<std::size_t>(n)];
}

std::uint64_t count_factorizations(const NumericalSemigroup &s, Int n) {
  return count_factorizations(s, n, std::nullopt);
}

} // namespace arfrf
