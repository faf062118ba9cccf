#pragma once

#include "arfrf/checked.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace arfrf {

/// A numerical semigroup S = <n_1 < ... < n_e> with its classical invariants
/// cached at construction. Immutable once built.
///
/// Membership is answered from the Apery table of the multiplicity:
/// n is in S iff n >= w(n mod n_1). A bounded bitmap over [0, c(S) + n_e]
/// is kept alongside purely for cross-checking.
class NumericalSemigroup {
public:
  /// Canonicalizes (sorts, dedups, drops redundant generators). Throws
  /// NotNumerical when gcd != 1 or an input is not positive.
  static NumericalSemigroup from_generators(std::span<const Int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()));
  }

  const std::vector<Int> &generators() const noexcept { return gens_; }
  Int generator(std::size_t i) const { return gens_.at(i); }
  Int multiplicity() const noexcept { return gens_.front(); }
  std::size_t embedding_dimension() const noexcept { return gens_.size(); }
  Int frobenius() const noexcept { return frobenius_; }
  Int conductor() const noexcept { return frobenius_ + 1; }
  bool is_natural() const noexcept { return gens_.front() == 1; }

  /// w(0), ..., w(n_1 - 1) for the multiplicity n_1, indexed by residue.
  const std::vector<Int> &apery_table() const noexcept { return apery_; }

  bool contains(Int n) const noexcept;

  /// Bitmap lookup; only valid for 0 <= n <= bitmap_limit().
  bool bitmap_contains(Int n) const;
  Int bitmap_limit() const noexcept {
    return static_cast<Int>(bitmap_.size()) - 1;
  }

  /// Elements of S strictly below the conductor, ascending.
  std::vector<Int> small_elements() const;
  /// Number of gaps (the genus).
  Int gap_count() const;

  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup &a,
                         const NumericalSemigroup &b) {
    return a.gens_ == b.gens_;
  }

private:
  NumericalSemigroup() = default;

  std::vector<Int> gens_;
  std::vector<Int> apery_;
  std::vector<char> bitmap_;
  Int frobenius_ = -1;
};

/// Pseudo-Frobenius numbers, ascending. type() is t(S).
struct PseudoFrobeniusSet {
  std::vector<Int> elements;
  std::size_t type() const noexcept { return elements.size(); }
  bool contains(Int f) const;
};

/// Ap(S, n) = {w(0), ..., w(n-1)}, indexed by residue mod n. Throws NotMember
/// if n is zero or not in S.
std::vector<Int> apery_set(const NumericalSemigroup &s, Int n);

/// PF(S) read off the <=_S-maximal elements of Ap(S, n_1). PF(N) is empty.
PseudoFrobeniusSet pseudo_frobenius(const NumericalSemigroup &s);

/// e(S) == m(S); also cross-checks Ap(S, n_1) = {0, n_2, ..., n_e}.
bool is_med(const NumericalSemigroup &s);

/// Closed under 2x - y for all y <= x in S.
bool is_arf(const NumericalSemigroup &s);

/// Smallest Arf numerical semigroup containing s.
NumericalSemigroup arf_closure(const NumericalSemigroup &s);

} // namespace arfrf
