#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arfrf/oracles.hpp"
#include "arfrf/verifier.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace arfrf;

namespace {

VerifyConfig small_config() {
  VerifyConfig c;
  c.s_max = 40;
  c.lemma41_mult_max = 3;
  c.m_max = 7;
  c.closure_samples = 10;
  c.random_instances = 50;
  return c;
}

VerifyConfig parse(const std::string &text) {
  std::istringstream in(text);
  return parse_config(in);
}

} // namespace

TEST_CASE("oracles on fixed examples") {
  const std::vector<Int> mc{6, 9, 20};
  CHECK(oracle::frobenius(mc) == 43);
  CHECK(oracle::pseudo_frobenius(mc) == std::vector<Int>{43});
  CHECK_FALSE(oracle::membership(mc, 43));
  CHECK(oracle::membership(mc, 44));
  const std::vector<Int> two{2, 5};
  CHECK_FALSE(oracle::membership(two, 3));
  CHECK(oracle::denumerant(two, 10) == 2);
  CHECK(oracle::pseudo_frobenius(std::vector<Int>{5, 19, 21, 22, 23}) ==
        std::vector<Int>{14, 16, 17, 18});
  CHECK(oracle::frobenius(std::vector<Int>{1}) == -1);
  CHECK_FALSE(oracle::is_arf(std::vector<Int>{4, 6, 9}));
  CHECK(oracle::is_arf(std::vector<Int>{3, 5, 7}));
  CHECK(oracle::cofactor_determinant(IntMatrix{{-1, 1}, {4, -1}}) == -3);
  CHECK(oracle::cofactor_determinant(
            IntMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}) == 6);
}

TEST_CASE("config parsing") {
  auto c = parse("# comment\n"
                 "s_max = 50   # trailing comment\n"
                 "claims = Prop3.1, Cor3.13\n"
                 "closure_m = 6 7\n"
                 "seed = 42\n");
  CHECK(c.s_max == 50);
  REQUIRE(c.claims);
  CHECK(*c.claims == std::vector<std::string>{"Prop3.1", "Cor3.13"});
  CHECK(c.closure_m == std::vector<int>{6, 7});
  CHECK(c.seed == 42);
  CHECK(selected_claims(c) == std::vector<std::string>{"Prop3.1", "Cor3.13"});

  CHECK(parse("") == VerifyConfig{});
  CHECK_THROWS_AS(parse("bogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("s_max = 10\ns_max = 20\n"), ConfigError);
  CHECK_THROWS_AS(parse("s_max = ten\n"), ConfigError);
  CHECK_THROWS_AS(parse("s_max\n"), ConfigError);
  CHECK_THROWS_AS(parse("s_max = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse("suite = tiny\n"), ConfigError);
  CHECK_THROWS_AS(parse("families = some\n"), ConfigError);
  CHECK_THROWS_AS(parse("claims = Prop9.9\n"), UnknownClaim);
  try {
    parse("s_max = 10\n\nbogus = 1\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError &e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("example config file parses to the defaults") {
  auto c = load_config(ARFRF_SOURCE_DIR "/data/verify.conf");
  c.fixtures_path.reset();
  CHECK(c == VerifyConfig{});
  CHECK_THROWS_AS(load_config(ARFRF_SOURCE_DIR "/data/missing.conf"),
                  ConfigError);
}

TEST_CASE("fixtures file matches the built-in copy") {
  CHECK(load_fixtures(ARFRF_SOURCE_DIR "/data/fixtures.txt") ==
        default_fixtures());
  REQUIRE(default_fixtures().size() == 2);
  CHECK(default_fixtures()[0].claim_id == "Prop3.6");
  CHECK(default_fixtures()[0].variant == "k");
  CHECK(default_fixtures()[0].pf_label == "s-1");
  std::istringstream in("# only a comment\n\nProp3.1 standard s-1 because\n");
  auto parsed = parse_fixtures(in);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].reason == "because");
}

TEST_CASE("suites and claim selection") {
  CHECK(suite_claims("default").size() == 14);
  CHECK(suite_claims("full").size() == known_claims().size());
  CHECK_THROWS_AS(suite_claims("nope"), ConfigError);
  VerifyConfig none;
  none.claims = std::vector<std::string>{};
  CHECK(selected_claims(none).empty());
  CHECK(verify_all(none).empty());
  CHECK(summary_json(verify_all(none))["verdict"] == "pass");
  CHECK_THROWS_AS(verify_claim("Prop9.9", small_config()), UnknownClaim);
}

TEST_CASE("a passing claim") {
  auto r = verify_claim("Prop3.1", small_config());
  CHECK(r.status == ClaimStatus::Pass);
  CHECK(r.instances > 0);
  CHECK(r.counterexamples.empty());
  CHECK(to_json(r)["status"] == "pass");
}

TEST_CASE("registered fixtures give mismatch-with-details") {
  auto r = verify_claim("Prop3.6", small_config());
  CHECK(r.status == ClaimStatus::MismatchWithDetails);
  CHECK(r.counterexamples.empty());
  REQUIRE_FALSE(r.expected_mismatches.empty());
  const auto &data = r.expected_mismatches.front().data;
  CHECK(data.contains("formula_only"));
  CHECK(data.contains("enumeration_only"));

  VerifyConfig no_fixtures = small_config();
  const std::string empty = (std::filesystem::temp_directory_path() /
                             "arfrf_empty_fixtures.txt")
                                .string();
  std::ofstream(empty) << "# none\n";
  no_fixtures.fixtures_path = empty;
  CHECK(verify_claim("Prop3.6", no_fixtures).status == ClaimStatus::Fail);
}

TEST_CASE("the s = 9 point is an unexpected failure") {
  auto r = verify_claim("Prop3.12", small_config());
  CHECK(r.status == ClaimStatus::Fail);
  REQUIRE_FALSE(r.counterexamples.empty());
  CHECK(r.counterexamples.front().spec.find("s=9") != std::string::npos);
  CHECK(r.counterexamples.front().spec.find("minus2") != std::string::npos);
  CHECK(has_unexpected_failure({r}));
  CHECK(summary_json({r})["verdict"] == "fail");
}

TEST_CASE("grid cap") {
  VerifyConfig c = small_config();
  c.grid_cap = 3;
  CHECK_THROWS_AS(verify_claim("Prop3.1-3.12", c), GridTooLarge);
}

TEST_CASE("structural claims pass on a small grid") {
  for (const char *id : {"Prop2.1", "Prop2.3", "Cor3.13", "Lemma4.1",
                         "Prop4.2", "Cor4.3", "Rem4.4", "Lemma4.5",
                         "Thm5.2-equiv", "Conj5.3", "Thm5.6", "Thm5.7",
                         "Oracles"}) {
    CAPTURE(id);
    auto r = verify_claim(id, small_config());
    CHECK(r.status == ClaimStatus::Pass);
    CHECK(r.checks > 0);
  }
}

TEST_CASE("reports are deterministic") {
  auto a = to_json(verify_claim("Lemma4.5", small_config())).dump();
  auto b = to_json(verify_claim("Lemma4.5", small_config())).dump();
  CHECK(a == b);
  auto x = closure_instances(small_config());
  auto y = closure_instances(small_config());
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    CHECK(x[i].semigroup == y[i].semigroup);
  VerifyConfig other = small_config();
  other.seed = 1;
  CHECK(to_json(verify_claim("Oracles", other)).dump() !=
        to_json(verify_claim("Oracles", small_config())).dump());
}

TEST_CASE("closure samples keep the multiplicity and are Arf") {
  auto c = small_config();
  for (const auto &inst : closure_instances(c)) {
    CAPTURE(inst.label);
    int m = static_cast<int>(inst.semigroup.multiplicity());
    CHECK(std::find(c.closure_m.begin(), c.closure_m.end(), m) !=
          c.closure_m.end());
    CHECK(oracle::is_arf(inst.semigroup.generators()));
  }
}

TEST_CASE("blow-up enumeration matches the family grids") {
  auto sets = enumerate_arf_small_sets(5, 16);
  // The natural numbers sit alone at conductor 0.
  REQUIRE(sets[0].size() == 1);
  CHECK(sets[0][0].empty());
  std::size_t total = 0;
  for (std::size_t c = 1; c < sets.size(); ++c)
    total += sets[c].size();
  CHECK(total == 49);
}

TEST_CASE("reports are written to disk") {
  auto dir = std::filesystem::temp_directory_path() / "arfrf_reports_test";
  std::filesystem::remove_all(dir);
  std::vector<ClaimReport> reports{verify_claim("Prop3.1", small_config())};
  write_reports(dir.string(), reports);
  CHECK(std::filesystem::exists(dir / "Prop3.1.json"));
  CHECK(std::filesystem::exists(dir / "summary.json"));
  std::ifstream in(dir / "summary.json");
  auto j = nlohmann::json::parse(in);
  CHECK(j["verdict"] == "pass");
  CHECK(to_text(reports[0]).find("Prop3.1: pass") != std::string::npos);
  std::filesystem::remove_all(dir);
}
