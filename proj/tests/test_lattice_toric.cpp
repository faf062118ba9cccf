#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arfrf/lattice.hpp"
#include "arfrf/toric.hpp"

#include <random>

using namespace arfrf;

namespace {

const IntMatrix kRf19{
    {-1, 0, 0, 1}, {2, -1, 1, 0}, {10, 0, -1, 0}, {8, 1, 0, -1}};

RFMatrix rf19() { return RFMatrix{kRf19, 19, {4, 10, 21, 23}}; }

} // namespace

TEST_CASE("degree") {
  auto s = NumericalSemigroup::from_generators({4, 10, 21, 23});
  CHECK(degree(s, IntVector{1, 1, 1, 1}) == 58);
  CHECK(degree(s, IntVector{-3, 1, -1, 1}) == 0);
  CHECK_THROWS_AS(degree(s, IntVector{1, 2}), DimensionMismatch);
}

TEST_CASE("Hermite normal form") {
  auto b = hermite_basis(2, {{4, 6}, {6, 9}});
  CHECK(b == std::vector<IntVector>{{2, 3}});
  auto c = hermite_basis(2, {{2, 0}, {3, 1}});
  CHECK(c == std::vector<IntVector>{{1, 1}, {0, 2}});
  CHECK(hermite_basis(3, {{0, 0, 0}}).empty());
  std::vector<std::size_t> pivots;
  hermite_basis(3, {{0, 2, 4}, {0, 0, 3}}, &pivots);
  CHECK(pivots == std::vector<std::size_t>{1, 2});
}

TEST_CASE("lattice equality ignores the generating set") {
  IntegerLattice a(3, {{1, 2, 3}, {0, 1, 1}});
  IntegerLattice b(3, {{1, 3, 4}, {1, 1, 2}, {2, 5, 7}});
  CHECK(a == b);
  CHECK(a.rank() == 2);
  CHECK(a.contains(IntVector{3, 7, 10}));
  CHECK_FALSE(a.contains(IntVector{0, 0, 1}));
}

TEST_CASE("lattice index") {
  IntegerLattice z2(2, {{1, 0}, {0, 1}});
  IntegerLattice sub(2, {{2, 0}, {0, 1}});
  CHECK(lattice_index(sub, z2) == LatticeIndex{false, 2});
  IntegerLattice line(2, {{1, 1}});
  CHECK(lattice_index(line, z2).infinite);
  CHECK_THROWS_AS(lattice_index(z2, sub), NotSublattice);
  IntegerLattice sub6(2, {{2, 4}, {3, 0}});
  CHECK(lattice_index(sub6, z2).value == 12);
}

TEST_CASE("kernel of <2,5>") {
  auto s = NumericalSemigroup::from_generators({2, 5});
  auto v = kernel_lattice(s);
  CHECK(v.rank() == 1);
  CHECK(v.basis() == std::vector<IntVector>{{5, -2}});
  RFMatrix m{IntMatrix{{-1, 1}, {4, -1}}, 3, {2, 5}};
  auto rel = rf_relations(s, m);
  REQUIRE(rel.size() == 1);
  CHECK(rel[0].binomial.to_string() == "x2^2 - x1^5");
  CHECK(rel[0].binomial.canonical().to_string() == "x1^5 - x2^2");
  CHECK(lattice_index(rf_difference_lattice(s, m), v).value == 1);
}

TEST_CASE("kernel lattice is saturated of rank e-1") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Int> value(2, 30);
  for (int round = 0; round < 100; ++round) {
    std::vector<Int> g{value(rng), value(rng), value(rng), value(rng)};
    if (std::gcd(std::gcd(g[0], g[1]), std::gcd(g[2], g[3])) != 1)
      continue;
    auto s = NumericalSemigroup::from_generators(g);
    auto v = kernel_lattice(s);
    CHECK(v.rank() + 1 == s.embedding_dimension());
    for (const auto &row : v.basis())
      CHECK(degree(s, row) == 0);
  }
}

TEST_CASE("RF relations of <4,10,21,23>") {
  auto s = NumericalSemigroup::from_generators({4, 10, 21, 23});
  auto diffs = row_differences(rf19());
  REQUIRE(diffs.size() == 6);
  const std::vector<IntVector> expected_vectors = {
      {-3, 1, -1, 1}, {-11, 0, 1, 1}, {-9, -1, 0, 2},
      {-8, -1, 2, 0}, {-6, -2, 1, 1}, {2, -1, -1, 1}};
  for (std::size_t k = 0; k < 6; ++k)
    CHECK(diffs[k].vector == expected_vectors[k]);

  std::size_t skipped = 99;
  auto rel = rf_relations(s, rf19(), &skipped);
  CHECK(skipped == 0);
  REQUIRE(rel.size() == 6);
  const std::vector<std::string> expected = {
      "x2*x4 - x1^3*x3",    "x3*x4 - x1^11", "x4^2 - x1^9*x2",
      "x3^2 - x1^8*x2",     "x3*x4 - x1^6*x2^2", "x1^2*x4 - x2*x3"};
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(rel[k].binomial.to_string() == expected[k]);
    // Homogeneous: both monomials have the same S-degree.
    CHECK(degree(s, rel[k].binomial.plus) == degree(s, rel[k].binomial.minus));
  }
  CHECK(rel[0].i == 0);
  CHECK(rel[0].j == 1);
  CHECK(rel[5].i == 2);
  CHECK(rel[5].j == 3);

  auto w = rf_difference_lattice(s, rf19());
  auto v = kernel_lattice(s);
  CHECK(w == v);
  CHECK(lattice_index(w, v) == LatticeIndex{false, 1});
}

TEST_CASE("binomial helpers") {
  auto b = Binomial::from_difference(IntVector{-3, 1, 0, 2});
  CHECK(b.plus == IntVector{0, 1, 0, 2});
  CHECK(b.minus == IntVector{3, 0, 0, 0});
  CHECK(b.support() == std::set<std::size_t>{0, 1, 3});
  CHECK_FALSE(b.full_support());
  CHECK(b.to_string() == "x2*x4^2 - x1^3");
  CHECK(b.canonical().to_string() == "x1^3 - x2*x4^2");
  CHECK(b.canonical().canonical() == b.canonical());
  CHECK(monomial_string(IntVector{0, 0}) == "1");
  CHECK(Binomial::from_difference(IntVector{2, 0}).to_string() == "x1^2 - 1");
}

TEST_CASE("genericity") {
  auto a = NumericalSemigroup::from_generators({3, 7, 8});
  auto ra = is_generic(a);
  CHECK(ra.generic);
  CHECK(recheck_genericity_report(a, ra));

  auto b = NumericalSemigroup::from_generators({4, 10, 21, 23});
  auto rb = is_generic(b);
  CHECK_FALSE(rb.generic);
  CHECK(rb.witness == GenericityWitness::ColumnCoincidence);
  CHECK(rb.pf_element == 6);
  CHECK(rb.row_a == 2);
  CHECK(rb.row_b == 3);
  CHECK(rb.column == 1);
  std::string why;
  CHECK(recheck_genericity_report(b, rb, &why));

  // A tampered witness must not survive the re-check.
  auto forged = rb;
  forged.column = 0;
  CHECK_FALSE(recheck_genericity_report(b, forged, &why));
  CHECK_FALSE(why.empty());
  auto flipped = ra;
  flipped.generic = false;
  CHECK_FALSE(recheck_genericity_report(a, flipped));

  // PF = {7}; row 2 of RF(7) may be (3,-1,0) or (0,-1,2) since 12 = 3*4 = 2*6.
  auto c = NumericalSemigroup::from_generators({4, 5, 6});
  auto rc = is_generic(c);
  CHECK_FALSE(rc.generic);
  CHECK(rc.witness == GenericityWitness::MultipleRfMatrices);
  CHECK(rc.pf_element == 7);
  CHECK(rc.matrices.size() == 2);
  CHECK(rc.matrices[0].entries != rc.matrices[1].entries);
  CHECK(recheck_genericity_report(c, rc));
}
