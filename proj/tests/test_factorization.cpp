#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arfrf/factorization.hpp"
#include "arfrf/oracles.hpp"

#include <algorithm>
#include <random>

using namespace arfrf;

TEST_CASE("factorizations over <2,5>") {
  auto s = NumericalSemigroup::from_generators({2, 5});
  auto f8 = factorizations(s, 8);
  REQUIRE(f8.size() == 1);
  CHECK(f8[0].coefficients == IntVector{4, 0});
  CHECK(f8[0].value == 8);
  CHECK(count_factorizations(s, 10) == 2);
  auto f10 = factorizations(s, 10);
  REQUIRE(f10.size() == 2);
  CHECK(f10[0].coefficients == IntVector{0, 2});
  CHECK(f10[1].coefficients == IntVector{5, 0});
  CHECK(factorizations(s, 3).empty());
  CHECK(count_factorizations(s, 3) == 0);
  CHECK(factorizations(s, -2).empty());
}

TEST_CASE("zero has exactly the empty factorization") {
  auto s = NumericalSemigroup::from_generators({5, 19, 21, 22, 23});
  auto f = factorizations(s, 0);
  REQUIRE(f.size() == 1);
  CHECK(f[0].coefficients == IntVector(5, 0));
  CHECK(count_factorizations(s, 0) == 1);
}

TEST_CASE("excluded coordinate stays zero") {
  auto s = NumericalSemigroup::from_generators({5, 19, 21, 22, 23});
  auto f = factorizations(s, 23, std::size_t{0});
  REQUIRE(f.size() == 1);
  CHECK(f[0].coefficients == IntVector{0, 0, 0, 0, 1});
  // Without n_4 = 22 the only way to write 36 is 3*5 + 21.
  auto g = factorizations(s, 36, std::size_t{3});
  REQUIRE(g.size() == 1);
  CHECK(g[0].coefficients == IntVector{3, 0, 1, 0, 0});
  CHECK(factorizations(s, 36, std::size_t{0}).empty());
  CHECK(count_factorizations(s, 36, std::size_t{0}) == 0);
}

TEST_CASE("denumerants match the recursive oracle") {
  auto s = NumericalSemigroup::from_generators({3, 5, 7});
  CHECK(count_factorizations(s, 30) == 7);
  auto t = NumericalSemigroup::from_generators({5, 19, 21, 22, 23});
  CHECK(count_factorizations(t, 100) == 16);
}

TEST_CASE("random semigroups: enumeration, counting and oracle agree") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> count(2, 5);
  std::uniform_int_distribution<Int> value(2, 30);
  int rounds = 0;
  while (rounds < 200) {
    std::vector<Int> g;
    int e = count(rng);
    for (int i = 0; i < e; ++i)
      g.push_back(value(rng));
    Int d = 0;
    for (Int x : g)
      d = std::gcd(d, x);
    if (d != 1)
      continue;
    ++rounds;
    auto s = NumericalSemigroup::from_generators(g);
    const auto &gens = s.generators();
    CAPTURE(s.to_string());
    for (Int n = 0; n <= 120; n += 7) {
      auto fs = factorizations(s, n);
      CHECK(fs.size() == count_factorizations(s, n));
      CHECK(fs.size() == oracle::denumerant(gens, n));
      CHECK(std::is_sorted(fs.begin(), fs.end(),
                           [](const Factorization &a, const Factorization &b) {
                             return a.coefficients < b.coefficients;
                           }));
      for (const auto &f : fs) {
        Int sum = 0;
        for (std::size_t j = 0; j < gens.size(); ++j) {
          CHECK(f.coefficients[j] >= 0);
          sum += f.coefficients[j] * gens[j];
        }
        CHECK(sum == n);
      }
      for (std::size_t x = 0; x < gens.size(); ++x) {
        auto ex = factorizations(s, n, x);
        auto expected = std::count_if(fs.begin(), fs.end(), [&](auto &f) {
          return f.coefficients[x] == 0;
        });
        CHECK(ex.size() == static_cast<std::size_t>(expected));
        CHECK(count_factorizations(s, n, x) == ex.size());
      }
    }
  }
}
