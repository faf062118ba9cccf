#pragma once

#include "arfrf/families.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace arfrf {

enum class ClaimStatus { Pass, Fail, MismatchWithDetails };

/// "pass", "fail" or "mismatch-with-details".
std::string to_string(ClaimStatus s);

/// One offending instance: a reproducible spec plus what went wrong.
struct Counterexample {
  std::string spec;   // e.g. "m=5 s=9 variant=minus2" or "<4,6,9>"
  std::string detail; // one line
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
};

struct ClaimReport {
  std::string claim_id;
  std::string statement; // what was checked, one line
  std::string grid;      // the swept universe, stated explicitly
  std::uint64_t instances = 0;
  std::uint64_t checks = 0;
  ClaimStatus status = ClaimStatus::Pass;
  /// Unexpected failures; the first ones in sweep order, smallest first.
  std::vector<Counterexample> counterexamples;
  std::uint64_t counterexample_total = 0;
  /// Mismatches that match a registered fixture.
  std::vector<Counterexample> expected_mismatches;
  std::vector<std::string> notes;
};

nlohmann::ordered_json to_json(const ClaimReport &r);
/// Human-readable rendering of the same fields.
std::string to_text(const ClaimReport &r);

/// A registered expected mismatch: a closed-form table entry known to differ
/// from enumeration.
struct Fixture {
  std::string claim_id;  // "Prop3.6"
  std::string variant;   // family variant name, e.g. "k"
  std::string pf_label;  // "s-1"
  std::string reason;
  friend bool operator==(const Fixture &, const Fixture &) = default;
};

/// Format: one fixture per line, "claim variant pf reason...", '#' comments.
std::vector<Fixture> parse_fixtures(std::istream &in);
std::vector<Fixture> load_fixtures(const std::string &path);
/// Built-in copy of data/fixtures.txt.
const std::vector<Fixture> &default_fixtures();

/// Flat "key = value" configuration; see README for the grammar.
struct VerifyConfig {
  std::string suite = "default";
  /// When set, replaces the suite's claim list (possibly with nothing).
  std::optional<std::vector<std::string>> claims;
  Int s_max = 200;          // conductor bound for m <= 5 families
  int m_max = 10;           // largest multiplicity of Lemma41 shapes
  Int lemma41_mult_max = 10; // s ranges over m, 2m, ..., this * m
  std::size_t closure_samples = 100;
  std::vector<int> closure_m{6, 7, 8};
  std::size_t random_instances = 1000;
  std::uint64_t seed = 20240611;
  /// all | arf-m-le-5 | lemma41 | closure
  std::string families = "all";
  std::optional<std::string> fixtures_path;
  std::uint64_t max_rf = 2'000'000; // per RF(f) enumeration
  std::uint64_t grid_cap = 100'000; // instances per family grid
  std::optional<std::string> output_dir;

  friend bool operator==(const VerifyConfig &, const VerifyConfig &) = default;
};

/// Throws ConfigError naming the line.
VerifyConfig parse_config(std::istream &in);
VerifyConfig load_config(const std::string &path);
/// Validates ranges and names; throws ConfigError or UnknownClaim.
void validate(const VerifyConfig &config);

/// Every claim id verify_claim accepts.
const std::vector<std::string> &known_claims();
/// "default" (14 claims) or "full". Throws ConfigError for other names.
std::vector<std::string> suite_claims(const std::string &suite);
/// The claim list a config selects.
std::vector<std::string> selected_claims(const VerifyConfig &config);

/// Throws UnknownClaim, GridTooLarge.
ClaimReport verify_claim(const std::string &claim_id,
                         const VerifyConfig &config);
std::vector<ClaimReport> verify_all(const VerifyConfig &config);

/// True if any report has status fail.
bool has_unexpected_failure(const std::vector<ClaimReport> &reports);

/// Summary document: per-claim status plus the aggregate verdict.
nlohmann::ordered_json summary_json(const std::vector<ClaimReport> &reports);

/// Writes <dir>/<claim_id>.json per report and <dir>/summary.json.
void write_reports(const std::string &dir,
                   const std::vector<ClaimReport> &reports);

// Instance universes shared by the claims, exposed for tests and the
// acceptance driver.

/// A labelled Arf semigroup from one of the sweep universes.
struct ArfInstance {
  std::string label;
  NumericalSemigroup semigroup;
  std::optional<FamilySpec> family; // unset for closure samples
};

std::vector<ArfInstance> family_instances_up_to_5(const VerifyConfig &config);
std::vector<ArfInstance> lemma41_instances(const VerifyConfig &config);
/// Seeded arf_closure samples of multiplicity in closure_m, deduplicated.
std::vector<ArfInstance> closure_instances(const VerifyConfig &config);

/// Arf semigroups with multiplicity <= m_max and conductor <= c_max, found
/// by the blow-up recursion S = {0} U (m + T) with T Arf and m in T. Every
/// candidate is re-checked with the definitional oracle. Returned as small
/// element lists below the conductor, grouped by conductor.
std::vector<std::vector<std::vector<Int>>> enumerate_arf_small_sets(int m_max,
                                                                    Int c_max);

} // namespace arfrf
