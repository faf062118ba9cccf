#pragma once

#include "arfrf/lattice.hpp"
#include "arfrf/rf_matrix.hpp"
#include "arfrf/semigroup.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace arfrf {

/// x^plus - x^minus with disjoint supports.
struct Binomial {
  IntVector plus;
  IntVector minus;

  /// Splits v into v+ and v- = v+ - v.
  static Binomial from_difference(std::span<const Int> v);

  std::set<std::size_t> support() const; // 0-based
  bool full_support() const { return support().size() == plus.size(); }
  /// Same binomial up to sign, oriented so `plus` is lexicographically larger.
  Binomial canonical() const;
  /// "x2*x4 - x1^3*x3"; exponent 1 suppressed, an empty side renders as "1".
  std::string to_string() const;

  friend bool operator==(const Binomial &, const Binomial &) = default;
  friend auto operator<=>(const Binomial &, const Binomial &) = default;
};

/// x^v rendered as "x1^a*x2^b" (1-based indices); "1" for the zero vector.
std::string monomial_string(std::span<const Int> exponents);

/// phi_ij = x^{a_ij+} - x^{a_ij-} for i < j (0-based).
struct RfRelation {
  std::size_t i = 0;
  std::size_t j = 0;
  Binomial binomial;
};

/// The RF-relations of M, in (i, j) order. Zero differences are skipped and
/// counted in `skipped_zero` when given.
std::vector<RfRelation> rf_relations(const NumericalSemigroup &s,
                                     const RFMatrix &m,
                                     std::size_t *skipped_zero = nullptr);

enum class GenericityWitness {
  AllCriteriaPassed,
  MultipleRfMatrices,  // some RF(f) has more than one matrix
  ColumnCoincidence,   // the unique RF(f) has a_ij = a_i'j, i != i'
};

struct GenericityReport {
  bool generic = true;
  GenericityWitness witness = GenericityWitness::AllCriteriaPassed;
  Int pf_element = 0;
  std::vector<RFMatrix> matrices; // two distinct ones, or the unique one
  std::size_t row_a = 0;          // for ColumnCoincidence (0-based)
  std::size_t row_b = 0;
  std::size_t column = 0;
};

/// Eto's criterion: generic iff every f in PF(S) has a unique RF matrix whose
/// columns have pairwise-distinct entries. PF elements are scanned in
/// increasing order; the first failure is reported.
GenericityReport is_generic(const NumericalSemigroup &s);

/// Re-derives the verdict from the witness alone. Returns false (with a reason)
/// if the witness does not certify the verdict.
bool recheck_genericity_report(const NumericalSemigroup &s,
                               const GenericityReport &report,
                               std::string *why = nullptr);

std::string to_string(GenericityWitness w);

} // namespace arfrf
