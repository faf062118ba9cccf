#include "arfrf/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace arfrf {

namespace {

constexpr Int kUnreached = std::numeric_limits<Int>::max();

// Shortest-path relaxation over residues mod n with one edge per generator:
// dist[r] ends up as the least element of <gens> congruent to r.
std::vector<Int> residue_minima(std::span<const Int> gens, Int n) {
  const auto size = static_cast<std::size_t>(n);
  std::vector<Int> dist(size, kUnreached);
  using Item = std::pair<Int, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r])
      continue;
    for (Int g : gens) {
      const Int nd = checked_add(d, g);
      const auto nr = static_cast<std::size_t>((static_cast<Int>(r) + g) % n);
      if (nd < dist[nr]) {
        dist[nr] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  return dist;
}

} // namespace

NumericalSemigroup
NumericalSemigroup::from_generators(std::span<const Int> input) {
  if (input.empty())
    throw NotNumerical("empty generator set", 0);
  Int g = 0;
  for (Int x : input) {
    if (x <= 0)
      throw NotNumerical("generator " + std::to_string(x) +
                             " is not a positive integer",
                         0);
    g = std::gcd(g, x);
  }
  if (g != 1)
    throw NotNumerical("generators have gcd " + std::to_string(g) +
                           ", so they do not generate a numerical semigroup",
                       g);

  std::vector<Int> gens(input.begin(), input.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  NumericalSemigroup s;
  const Int m = gens.front();
  s.apery_ = residue_minima(gens, m);

  // A nonzero Apery element is a minimal generator iff it is not the sum of
  // two nonzero Apery elements.
  s.gens_.push_back(m);
  for (Int r = 1; r < m; ++r) {
    const Int w = s.apery_[static_cast<std::size_t>(r)];
    bool minimal = true;
    for (Int r2 = 1; r2 < m && minimal; ++r2) {
      if (r2 == r)
        continue;
      const Int a = s.apery_[static_cast<std::size_t>(r2)];
      const Int b = s.apery_[static_cast<std::size_t>(mod_pos(r - r2, m))];
      if (a < w && checked_add(a, b) <= w)
        minimal = false;
    }
    if (minimal)
      s.gens_.push_back(w);
  }
  std::sort(s.gens_.begin(), s.gens_.end());

  s.frobenius_ = *std::max_element(s.apery_.begin(), s.apery_.end()) - m;

  const Int limit = checked_add(s.conductor(), s.gens_.back());
  s.bitmap_.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (Int n = 0; n <= limit; ++n)
    s.bitmap_[static_cast<std::size_t>(n)] = s.contains(n) ? 1 : 0;
  return s;
}

bool NumericalSemigroup::contains(Int n) const noexcept {
  if (n < 0)
    return false;
  const Int m = gens_.front();
  return n >= apery_[static_cast<std::size_t>(n % m)];
}

bool NumericalSemigroup::bitmap_contains(Int n) const {
  if (n < 0)
    return false;
  if (n > bitmap_limit())
    throw std::out_of_range("bitmap lookup beyond cached range");
  return bitmap_[static_cast<std::size_t>(n)] != 0;
}

std::vector<Int> NumericalSemigroup::small_elements() const {
  std::vector<Int> out;
  for (Int n = 0; n < conductor(); ++n)
    if (contains(n))
      out.push_back(n);
  return out;
}

Int NumericalSemigroup::gap_count() const {
  return conductor() - static_cast<Int>(small_elements().size());
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < gens_.size(); ++i)
    os << (i ? "," : "") << gens_[i];
  os << '>';
  return os.str();
}

bool PseudoFrobeniusSet::contains(Int f) const {
  return std::binary_search(elements.begin(), elements.end(), f);
}

std::vector<Int> apery_set(const NumericalSemigroup &s, Int n) {
  if (n <= 0 || !s.contains(n))
    throw NotMember(std::to_string(n) + " is not a nonzero element of " +
                    s.to_string());
  return residue_minima(s.generators(), n);
}

PseudoFrobeniusSet pseudo_frobenius(const NumericalSemigroup &s) {
  PseudoFrobeniusSet pf;
  if (s.is_natural())
    return pf;
  const auto &ap = s.apery_table();
  const Int m = s.multiplicity();
  for (Int w : ap) {
    bool maximal = true;
    for (Int w2 : ap)
      if (w2 != w && s.contains(w2 - w)) {
        maximal = false;
        break;
      }
    if (maximal)
      pf.elements.push_back(w - m);
  }
  std::sort(pf.elements.begin(), pf.elements.end());
  return pf;
}

bool is_med(const NumericalSemigroup &s) {
  const bool by_count =
      static_cast<Int>(s.embedding_dimension()) == s.multiplicity();
  std::vector<Int> ap = s.apery_table();
  std::sort(ap.begin(), ap.end());
  std::vector<Int> expected{0};
  expected.insert(expected.end(), s.generators().begin() + 1,
                  s.generators().end());
  const bool by_apery = ap == expected;
  if (by_count != by_apery)
    throw std::logic_error("MED characterizations disagree for " +
                           s.to_string());
  return by_count;
}

bool is_arf(const NumericalSemigroup &s) {
  const auto small = s.small_elements();
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!s.contains(2 * small[i] - small[j]))
        return false;
  return true;
}

NumericalSemigroup arf_closure(const NumericalSemigroup &s) {
  NumericalSemigroup current = s;
  for (;;) {
    const auto small = current.small_elements();
    std::vector<Int> missing;
    for (std::size_t i = 0; i < small.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const Int candidate = 2 * small[i] - small[j];
        if (!current.contains(candidate))
          missing.push_back(candidate);
      }
    if (missing.empty())
      return current;
    std::vector<Int> gens = current.generators();
    gens.insert(gens.end(), missing.begin(), missing.end());
    current = NumericalSemigroup::from_generators(gens);
  }
}

} // namespace arfrf
