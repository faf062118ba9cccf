#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arfrf/families.hpp"
#include "arfrf/oracles.hpp"
#include "arfrf/rf_matrix.hpp"
#include "formula.hpp"

#include <set>

using namespace arfrf;

namespace {

std::set<IntMatrix> formula_set(const ClosedFormResult &r) {
  std::set<IntMatrix> out;
  for (const auto &m : r.matrices)
    out.insert(m.entries);
  return out;
}

std::set<IntMatrix> enumerated_set(const NumericalSemigroup &s, Int f) {
  std::set<IntMatrix> out;
  for (const auto &m : rf_matrices(s, f, 2'000'000))
    out.insert(m.entries);
  return out;
}

} // namespace

TEST_CASE("formula evaluation") {
  using formula::evaluate;
  CHECK(evaluate("(s-5)/5", {{'s', 10}}) == 1);
  CHECK(evaluate("2+3*4", {}) == 14);
  CHECK(evaluate("(2+3)*4", {}) == 20);
  CHECK(evaluate("-a+1", {{'a', 4}}) == -3);
  CHECK(evaluate("s/2-a-(2*a-1)*k", {{'s', 20}, {'a', 2}, {'k', 1}}) == 5);
  CHECK(evaluate("7/2", {}, formula::Division::Floor) == 3);
  CHECK(evaluate("-7/2", {}, formula::Division::Floor) == -4);
  CHECK_THROWS_AS(evaluate("7/2", {}), formula::FormulaError);
  CHECK_THROWS_AS(evaluate("x+1", {{'s', 1}}), formula::FormulaError);
  CHECK_THROWS_AS(evaluate("(1+2", {}), formula::FormulaError);
  CHECK_THROWS_AS(evaluate("1 2", {}), formula::FormulaError);
  CHECK_THROWS_AS(evaluate("4/0", {}), formula::FormulaError);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(validate(FamilySpec{3, 4, FamilyVariant::Standard, 0}),
                  InvalidFamily);
  CHECK_THROWS_AS(validate(FamilySpec{2, 5, FamilyVariant::Standard, 0}),
                  InvalidFamily);
  CHECK_THROWS_AS(validate(FamilySpec{4, 8, FamilyVariant::WithK, 3}),
                  InvalidFamily);
  CHECK_THROWS_AS(validate(FamilySpec{4, 8, FamilyVariant::WithK, 0}),
                  InvalidFamily);
  CHECK_THROWS_AS(validate(FamilySpec{6, 24, FamilyVariant::Standard, 0}),
                  InvalidFamily);
  CHECK_THROWS_AS(validate(FamilySpec{6, 25, FamilyVariant::Lemma41, 0}),
                  InvalidFamily);
  CHECK_NOTHROW(validate(FamilySpec{6, 24, FamilyVariant::Lemma41, 0}));
  CHECK(parse_variant("minus2") == FamilyVariant::MinusTwo);
  CHECK_THROWS_AS(parse_variant("bogus"), InvalidFamily);
}

TEST_CASE("family generators and pseudo-Frobenius numbers") {
  FamilySpec k2{4, 20, FamilyVariant::WithK, 2};
  CHECK(family_generators(k2) == std::vector<Int>{4, 10, 21, 23});
  CHECK(family_claim(k2) == "Prop3.4");
  auto s = build_family(k2);
  CHECK(s.conductor() == 20);
  CHECK(closed_form_pf(k2) == std::vector<Int>{6, 17, 19});
  CHECK(oracle::pseudo_frobenius(s.generators()) == closed_form_pf(k2));

  FamilySpec two{2, 4, FamilyVariant::Standard, 0};
  CHECK(family_generators(two) == std::vector<Int>{2, 5});
  CHECK(closed_form_pf(two) == std::vector<Int>{3});

  FamilySpec l41{6, 24, FamilyVariant::Lemma41, 0};
  CHECK(family_generators(l41) == std::vector<Int>{6, 25, 26, 27, 28, 29});
  CHECK(closed_form_pf(l41) == std::vector<Int>{19, 20, 21, 22, 23});
  CHECK(family_claim(l41) == "Prop4.2");
}

TEST_CASE("closed forms reproduce single examples") {
  FamilySpec three{3, 6, FamilyVariant::Standard, 0};
  auto r = closed_form_rf(three, 4);
  CHECK(r.pf_label == "s-2");
  REQUIRE(r.matrices.size() == 1);
  CHECK(r.matrices[0].entries == IntMatrix{{-1, 1, 0}, {1, -1, 1}, {4, 0, -1}});
  CHECK_THROWS_AS(closed_form_rf(three, 3), NotPseudoFrobenius);

  FamilySpec l41{6, 24, FamilyVariant::Lemma41, 0};
  auto w = closed_form_rf(l41, 23);
  CHECK_FALSE(w.full_list);
  REQUIRE(w.matrices.size() == 1);
  CHECK(determinant(RFMatrix{w.matrices[0].entries, 23, {}}) == -23);
}

TEST_CASE("b = 0 boundary point is a genuine RF matrix") {
  FamilySpec spec{4, 8, FamilyVariant::WithK, 1};
  auto s = build_family(spec);
  auto r = closed_form_rf(spec, 5);
  REQUIRE(r.matrices.size() == 2);
  auto enumerated = enumerated_set(s, 5);
  for (const auto &m : r.matrices)
    CHECK(enumerated.count(m.entries) == 1);
  CHECK(enumerated.count(IntMatrix{
            {-1, 0, 1, 0}, {0, -1, 0, 1}, {2, 1, -1, 0}, {4, 0, 0, -1}}) == 1);
}

TEST_CASE("rf(s-1) table entry for the k-shape differs from enumeration") {
  FamilySpec spec{4, 6, FamilyVariant::WithK, 1};
  REQUIRE(family_claim(spec) == "Prop3.6");
  auto s = build_family(spec);
  auto formula = formula_set(closed_form_rf(spec, 5));
  auto enumerated = enumerated_set(s, 5);
  CHECK(formula.size() == 4);
  CHECK(enumerated.size() == 4);
  CHECK(formula != enumerated);
  std::size_t shared = 0;
  for (const auto &m : formula)
    shared += enumerated.count(m);
  CHECK(shared == 3);
}

TEST_CASE("rf(s-1) at m = 5, s = 9 has two more matrices than listed") {
  // 3 * 7 = 21 = 2 * 9 + 3 gives row 5 an extra factorization only at s = 9.
  FamilySpec spec{5, 9, FamilyVariant::MinusTwo, 0};
  auto s = build_family(spec);
  CHECK(s.generators() == std::vector<Int>{5, 7, 9, 11, 13});
  auto formula = formula_set(closed_form_rf(spec, 8));
  auto enumerated = enumerated_set(s, 8);
  CHECK(formula.size() == 4);
  CHECK(enumerated.size() == 6);
  for (const auto &m : formula)
    CHECK(enumerated.count(m) == 1);
}

TEST_CASE("closed forms agree with enumeration for conductors up to 60") {
  // Known table defects: the rf(s-1) entry of the k-shape, the rf(s-2)
  // entry of the standard m = 5, s = 4 mod 5 shape, and the s = 9 point above.
  auto is_known = [](const FamilySpec &spec, const ClosedFormResult &r) {
    if (r.claim_id == "Prop3.6" && r.pf_label == "s-1")
      return true;
    if (r.claim_id == "Prop3.12" && spec.variant == FamilyVariant::Standard &&
        r.pf_label == "s-2")
      return true;
    return spec.m == 5 && spec.s == 9 &&
           spec.variant == FamilyVariant::MinusTwo && r.pf_label == "s-1";
  };
  std::size_t compared = 0;
  std::size_t known = 0;
  for (const auto &spec : arf_family_specs_up_to_5(60)) {
    auto s = build_family(spec);
    CAPTURE(spec.to_string());
    CHECK(closed_form_pf(spec) == oracle::pseudo_frobenius(s.generators()));
    for (Int f : closed_form_pf(spec)) {
      auto r = closed_form_rf(spec, f);
      CHECK(r.full_list);
      bool equal = formula_set(r) == enumerated_set(s, f);
      if (is_known(spec, r)) {
        ++known;
        continue;
      }
      CAPTURE(r.pf_label);
      CHECK(equal);
      ++compared;
    }
  }
  CHECK(compared > 500);
  CHECK(known > 0);
}

TEST_CASE("family grids cover every Arf semigroup of small conductor") {
  // Counts of Arf semigroups with multiplicity m and conductor <= 16, found
  // by exhaustive search over subsets below the conductor.
  CHECK(arf_family_specs(2, 16).size() == 8);
  CHECK(arf_family_specs(3, 16).size() == 9);
  CHECK(arf_family_specs(4, 16).size() == 19);
  CHECK(arf_family_specs(5, 16).size() == 13);
  std::set<std::vector<Int>> distinct;
  for (const auto &spec : arf_family_specs_up_to_5(16))
    distinct.insert(family_generators(spec));
  CHECK(distinct.size() == 49);
}

TEST_CASE("Lemma41 shapes") {
  auto specs = lemma41_specs(6, 7, 3);
  CHECK(specs.size() == 6);
  for (const auto &spec : specs) {
    auto s = build_family(spec);
    CHECK(s.multiplicity() == spec.m);
    CHECK(s.conductor() == spec.s);
    for (Int f : closed_form_pf(spec)) {
      auto r = closed_form_rf(spec, f);
      REQUIRE(r.matrices.size() == 1);
      CHECK(satisfies_rf_invariants(s, f, r.matrices[0].entries));
    }
  }
}
