#pragma once

#include "arfrf/int_matrix.hpp"
#include "arfrf/semigroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arfrf {

/// Which parametrized shape of Arf semigroup a FamilySpec names.
///   Standard     the single shape for (m, s mod m) when there is only one
///   WithK        m = 4, <4, 4k+2, s+1, s+3>
///   MinusTwo     m = 5, <5, s-2, s+1, s+2, s+4> (s = 0 mod 5) or
///                <5, s-2, s, s+2, s+4> (s = 4 mod 5)
///   Consecutive  m = 5, s = 0 mod 5, <5, s+1, s+2, s+3, s+4>
///   Lemma41      any m with m | s, <m, s+1, ..., s+m-1>
enum class FamilyVariant { Standard, WithK, MinusTwo, Consecutive, Lemma41 };

std::string to_string(FamilyVariant v);
/// Accepts the names printed by to_string(). Throws InvalidFamily.
FamilyVariant parse_variant(const std::string &name);

/// Multiplicity m, conductor s, a shape, and k for the WithK shape.
struct FamilySpec {
  int m = 2;
  Int s = 2;
  FamilyVariant variant = FamilyVariant::Standard;
  Int k = 0;

  std::string to_string() const;
  friend bool operator==(const FamilySpec &, const FamilySpec &) = default;
};

/// Throws InvalidFamily naming the violated congruence or range.
void validate(const FamilySpec &spec);

/// Generators of the family, ascending, after validation.
std::vector<Int> family_generators(const FamilySpec &spec);

/// Builds the semigroup and asserts it is Arf with multiplicity m and
/// conductor s and that the listed generators are exactly the minimal ones.
NumericalSemigroup build_family(const FamilySpec &spec);

/// Id of the claim that covers the spec, e.g. "Prop3.6" or
/// "Prop4.2" for Lemma41 shapes.
std::string family_claim(const FamilySpec &spec);

/// Pseudo-Frobenius numbers as listed by the closed-form statement.
std::vector<Int> closed_form_pf(const FamilySpec &spec);

/// A matrix produced by a closed-form statement. Not yet validated: entries
/// are exactly what the formula gives.
struct FormulaMatrix {
  IntMatrix entries;
  std::string label; // e.g. "rf(s-1)#2 a=1 b=0"
};

struct ClosedFormResult {
  std::string claim_id;
  std::string pf_label; // the formula naming f, e.g. "s-1"
  /// The statement lists every RF matrix of f (the m <= 5 tables); Prop4.2
  /// only exhibits one.
  bool full_list = true;
  std::vector<FormulaMatrix> matrices;
  /// Parameter points inside the stated ranges that produced a negative
  /// off-diagonal entry or an inexact division; skipped, one line each.
  std::vector<std::string> rejected;
};

/// Closed-form RF(f) for the family. Throws InvalidFamily, or
/// NotPseudoFrobenius if f is not among closed_form_pf(spec).
ClosedFormResult closed_form_rf(const FamilySpec &spec, Int f);

/// Every valid spec of multiplicity m in {2..5} with conductor <= s_max.
std::vector<FamilySpec> arf_family_specs(int m, Int s_max);
/// All of arf_family_specs for m = 2..5.
std::vector<FamilySpec> arf_family_specs_up_to_5(Int s_max);

/// Lemma41 shapes for m in [m_min, m_max] and s in {m, 2m, ..., mult_max*m}.
std::vector<FamilySpec> lemma41_specs(int m_min, int m_max, Int mult_max);

} // namespace arfrf
