#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arfrf/factorization.hpp"
#include "arfrf/oracles.hpp"
#include "arfrf/rf_matrix.hpp"

#include <random>

using namespace arfrf;

namespace {

const NumericalSemigroup &med5() {
  static const auto s = NumericalSemigroup::from_generators({5, 19, 21, 22, 23});
  return s;
}

// The four matrices of RF(18) for <5,19,21,22,23>, in the order they are
// usually listed.
const std::vector<IntMatrix> kRf18 = {
    {{-1, 0, 0, 0, 1},
     {3, -1, 0, 1, 0},
     {4, 1, -1, 0, 0},
     {8, 0, 0, -1, 0},
     {4, 0, 1, 0, -1}},
    {{-1, 0, 0, 0, 1},
     {3, -1, 0, 1, 0},
     {4, 1, -1, 0, 0},
     {8, 0, 0, -1, 0},
     {0, 1, 0, 1, -1}},
    {{-1, 0, 0, 0, 1},
     {3, -1, 0, 1, 0},
     {4, 1, -1, 0, 0},
     {0, 1, 1, -1, 0},
     {4, 0, 1, 0, -1}},
    {{-1, 0, 0, 0, 1},
     {3, -1, 0, 1, 0},
     {4, 1, -1, 0, 0},
     {0, 1, 1, -1, 0},
     {0, 1, 0, 1, -1}},
};

} // namespace

TEST_CASE("RF(18) of <5,19,21,22,23>") {
  auto rf = rf_matrices(med5(), 18);
  REQUIRE(rf.size() == 4);
  CHECK(count_rf_matrices(med5(), 18) == 4);
  for (std::size_t i = 0; i < rf.size(); ++i) {
    CHECK(rf[i].entries == kRf18[i]);
    CHECK(rf[i].pf_element == 18);
    CHECK(satisfies_rf_invariants(med5(), 18, rf[i].entries));
  }
  CHECK(determinant(rf[0]) == 18);
  CHECK(determinant(rf[2]) == 0);
  auto zp = column_zero_pair(rf[0]);
  REQUIRE(zp);
  CHECK(*zp == ZeroPair{0, 3, 1});
  auto w = find_frobenius_det_witness(med5());
  REQUIRE(w);
  CHECK(w->entries == kRf18[0]);
  auto sign = check_sign_conjecture(med5());
  CHECK(sign.holds);
  CHECK(sign.expected_determinant == 18);
}

TEST_CASE("single-matrix cases") {
  auto a = NumericalSemigroup::from_generators({2, 5});
  auto rf = rf_matrices(a, 3);
  REQUIRE(rf.size() == 1);
  CHECK(rf[0].entries == IntMatrix{{-1, 1}, {4, -1}});
  CHECK(determinant(rf[0]) == -3);
  CHECK_FALSE(column_zero_pair(rf[0]));
  auto sign = check_sign_conjecture(a);
  CHECK(sign.holds);
  CHECK(sign.expected_determinant == -3);

  auto b = NumericalSemigroup::from_generators({3, 7, 8});
  auto rb = rf_matrices(b, 4);
  REQUIRE(rb.size() == 1);
  CHECK(rb[0].entries == IntMatrix{{-1, 1, 0}, {1, -1, 1}, {4, 0, -1}});
}

TEST_CASE("RF(19) of <4,10,21,23> starts with the usual matrix") {
  auto s = NumericalSemigroup::from_generators({4, 10, 21, 23});
  auto rf = rf_matrices(s, 19);
  REQUIRE(rf.size() == 9);
  IntMatrix expected{{-1, 0, 0, 1}, {2, -1, 1, 0}, {10, 0, -1, 0}, {8, 1, 0, -1}};
  CHECK(rf[0].entries == expected);
  CHECK(determinant(rf[0]) == -19);
  CHECK_THROWS_AS(rf_matrices(s, 19, 5), RfLimitExceeded);
  CHECK(rf_matrices(s, 19, 9).size() == 9);
}

TEST_CASE("Frobenius witness for <6,25,...,29>") {
  auto s = NumericalSemigroup::from_generators({6, 25, 26, 27, 28, 29});
  REQUIRE(s.frobenius() == 23);
  auto w = find_frobenius_det_witness(s);
  REQUIRE(w);
  // (-1)^(m-1) (s-1) with m = 6, s = 24.
  CHECK(determinant(*w) == -23);
  CHECK(check_sign_conjecture(s).holds);
}

TEST_CASE("non-pseudo-Frobenius input") {
  CHECK_THROWS_AS(rf_matrices(med5(), 15), NotPseudoFrobenius);
  CHECK_THROWS_AS(rf_row_options(med5(), 19), NotPseudoFrobenius);
  CHECK_THROWS_AS(count_rf_matrices(med5(), -1), NotPseudoFrobenius);
}

TEST_CASE("2x2 determinant formula") {
  for (Int s = 2; s <= 40; s += 2) {
    RFMatrix m{IntMatrix{{-1, 1}, {s, -1}}, s - 1, {2, s + 1}};
    CHECK(determinant(m) == 1 - s);
  }
}

TEST_CASE("invariant checker rejects broken matrices") {
  std::string why;
  IntMatrix bad = kRf18[0];
  bad(4, 0) = 3;
  CHECK_FALSE(satisfies_rf_invariants(med5(), 18, bad, &why));
  CHECK_FALSE(why.empty());
  IntMatrix diag = kRf18[0];
  diag(1, 1) = 0;
  CHECK_FALSE(satisfies_rf_invariants(med5(), 18, diag));
}

TEST_CASE("RF counts equal the product of row denumerants") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Int> value(3, 25);
  int checked = 0;
  while (checked < 60) {
    std::vector<Int> g{value(rng), value(rng), value(rng)};
    if (std::gcd(std::gcd(g[0], g[1]), g[2]) != 1)
      continue;
    auto s = NumericalSemigroup::from_generators(g);
    if (s.is_natural())
      continue;
    ++checked;
    const auto &gens = s.generators();
    for (Int f : pseudo_frobenius(s).elements) {
      std::uint64_t product = 1;
      for (std::size_t i = 0; i < gens.size(); ++i)
        product *= count_factorizations(s, f + gens[i], i);
      CHECK(count_rf_matrices(s, f) == product);
      auto rf = rf_matrices(s, f, 20000);
      CHECK(rf.size() == product);
      for (const auto &m : rf) {
        CHECK(satisfies_rf_invariants(s, f, m.entries));
        CHECK(determinant(m) == oracle::cofactor_determinant(m.entries));
      }
    }
  }
}
