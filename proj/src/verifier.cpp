#include "arfrf/verifier.hpp"

#include "arfrf/factorization.hpp"
#include "arfrf/lattice.hpp"
#include "arfrf/oracles.hpp"
#include "arfrf/rf_matrix.hpp"
#include "arfrf/toric.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace arfrf {

using json = nlohmann::ordered_json;

std::string to_string(ClaimStatus s) {
  switch (s) {
  case ClaimStatus::Pass:
    return "pass";
  case ClaimStatus::Fail:
    return "fail";
  case ClaimStatus::MismatchWithDetails:
    return "mismatch-with-details";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kMaxCounterexamples = 20;
constexpr std::size_t kMaxNotes = 25;

json matrix_json(const IntMatrix &m) {
  json rows = json::array();
  for (const auto &r : m.to_rows())
    rows.push_back(r);
  return rows;
}

json matrices_json(const std::set<IntMatrix> &ms) {
  json out = json::array();
  for (const auto &m : ms)
    out.push_back(matrix_json(m));
  return out;
}

std::string join(const std::vector<Int> &v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return "{" + out + "}";
}

/// Accumulates one claim's findings.
class Recorder {
public:
  explicit Recorder(ClaimReport &report) : report_(report) {}

  void fail(std::string spec, std::string detail, json data = json::object()) {
    ++report_.counterexample_total;
    if (report_.counterexamples.size() < kMaxCounterexamples)
      report_.counterexamples.push_back(
          {std::move(spec), std::move(detail), std::move(data)});
  }

  /// Records the outcome of one check; `detail` is only built on failure.
  void check(bool ok, const std::string &spec,
             const std::function<std::string()> &detail) {
    ++report_.checks;
    if (!ok)
      fail(spec, detail());
  }

  void note(std::string line) {
    if (report_.notes.size() < kMaxNotes)
      report_.notes.push_back(std::move(line));
    else if (report_.notes.size() == kMaxNotes)
      report_.notes.push_back("further notes suppressed");
  }

private:
  ClaimReport &report_;
};

void finalize(ClaimReport &r) {
  if (r.counterexample_total > 0)
    r.status = ClaimStatus::Fail;
  else if (!r.expected_mismatches.empty())
    r.status = ClaimStatus::MismatchWithDetails;
  else
    r.status = ClaimStatus::Pass;
}

bool uses(const VerifyConfig &c, const std::string &family) {
  return c.families == "all" || c.families == family;
}

void cap_grid(const VerifyConfig &c, std::size_t n, const std::string &what) {
  if (n > c.grid_cap)
    throw GridTooLarge(what + " has " + std::to_string(n) +
                       " instances, above grid_cap " +
                       std::to_string(c.grid_cap));
}

std::string closure_grid(const VerifyConfig &c) {
  std::string ms;
  for (int m : c.closure_m)
    ms += (ms.empty() ? "" : ",") + std::to_string(m);
  return std::to_string(c.closure_samples) + " arf_closure samples with m in {" +
         ms + "}, seed " + std::to_string(c.seed);
}

std::string family_grid(const VerifyConfig &c) {
  return "Arf families m in 2..5, s <= " + std::to_string(c.s_max);
}

std::string lemma41_grid(const VerifyConfig &c) {
  return "<m, s+1, ..., s+m-1> with m in 6.." + std::to_string(c.m_max) +
         ", s in {m, ..., " + std::to_string(c.lemma41_mult_max) + "m}";
}

// ---------------------------------------------------------------------------
// Instance universes
// ---------------------------------------------------------------------------

std::vector<Int> random_generators(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> count(2, 6);
  std::uniform_int_distribution<Int> value(2, 60);
  for (;;) {
    std::vector<Int> gens(static_cast<std::size_t>(count(rng)));
    for (auto &g : gens)
      g = value(rng);
    Int g = 0;
    for (Int x : gens)
      g = std::gcd(g, x);
    if (g == 1)
      return gens;
  }
}

std::vector<ArfInstance> selected_m_gt_5(const VerifyConfig &c) {
  std::vector<ArfInstance> out;
  if (uses(c, "lemma41"))
    out = lemma41_instances(c);
  if (uses(c, "closure")) {
    auto more = closure_instances(c);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::string m_gt_5_grid(const VerifyConfig &c) {
  std::vector<std::string> parts;
  if (uses(c, "lemma41"))
    parts.push_back(lemma41_grid(c));
  if (uses(c, "closure"))
    parts.push_back(closure_grid(c));
  std::string out;
  for (const auto &p : parts)
    out += (out.empty() ? "" : "; ") + p;
  return out.empty() ? "no instances selected" : out;
}

// ---------------------------------------------------------------------------
// Claims
// ---------------------------------------------------------------------------

struct Context {
  const VerifyConfig &config;
  std::vector<Fixture> fixtures;
};

using ClaimFn = void (*)(Context &, ClaimReport &);

/// PF(S) read off the maximal elements of Ap(S, n), n a nonzero element.
std::vector<Int> pf_via_apery(const NumericalSemigroup &s, Int n) {
  const auto ap = apery_set(s, n);
  std::vector<Int> out;
  for (Int w : ap) {
    const bool maximal = std::none_of(ap.begin(), ap.end(), [&](Int w2) {
      return w2 != w && w2 > w && s.contains(w2 - w);
    });
    if (maximal)
      out.push_back(w - n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void claim_prop21(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  std::mt19937_64 rng(c.seed ^ 0x21u);
  r.statement = "PF(S) = {w - n : w maximal in Ap(S, n) under <=_S} for every "
                "generator n and for n = 2*multiplicity";
  r.grid = std::to_string(c.random_instances) +
           " random generator sets (e <= 6, values <= 60), seed " +
           std::to_string(c.seed);
  cap_grid(c, c.random_instances, "Prop2.1 grid");
  for (std::size_t t = 0; t < c.random_instances; ++t) {
    const auto gens = random_generators(rng);
    const auto s = NumericalSemigroup::from_generators(gens);
    const auto expected = oracle::pseudo_frobenius(gens);
    ++r.instances;
    std::vector<Int> probes = s.generators();
    probes.push_back(2 * s.multiplicity());
    for (Int n : probes) {
      const auto got = pf_via_apery(s, n);
      rec.check(got == expected, s.to_string(), [&] {
        return "n=" + std::to_string(n) + ": Apery gives " + join(got) +
               ", definition gives " + join(expected);
      });
    }
  }
}

/// Definitional closure and Arf test on a small-element set with conductor c.
bool small_set_is_arf_semigroup(const std::vector<Int> &small, Int c) {
  std::vector<char> in(static_cast<std::size_t>(c), 0);
  for (Int x : small)
    in[static_cast<std::size_t>(x)] = 1;
  auto has = [&](Int x) { return x >= c || in[static_cast<std::size_t>(x)]; };
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if (!has(small[i] + small[j]))
        return false;
      if (!has(2 * small[i] - small[j]))
        return false;
    }
  return true;
}

void claim_prop23(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "every Arf semigroup with m in 2..5 and conductor s is one of "
                "the listed shapes, and each listed shape is Arf";
  r.grid = "all Arf semigroups with m <= 5, conductor <= " +
           std::to_string(c.s_max) +
           " (blow-up recursion, definitional re-check)";
  const auto by_conductor = enumerate_arf_small_sets(5, c.s_max);
  std::map<std::pair<int, Int>, std::set<std::vector<Int>>> listed;
  for (const auto &spec : arf_family_specs_up_to_5(c.s_max)) {
    const auto s = build_family(spec);
    listed[{spec.m, spec.s}].insert(s.small_elements());
  }
  for (Int cond = 2; cond <= c.s_max; ++cond)
    for (int m = 2; m <= 5; ++m) {
      std::set<std::vector<Int>> found;
      for (const auto &small : by_conductor[static_cast<std::size_t>(cond)]) {
        const Int mult = small.size() > 1 ? small[1] : cond;
        if (mult == m)
          found.insert(small);
      }
      const auto &want = listed[{m, cond}];
      r.instances += found.size();
      rec.check(found == want,
                "m=" + std::to_string(m) + " s=" + std::to_string(cond), [&] {
                  return std::to_string(found.size()) +
                         " Arf semigroups found, " +
                         std::to_string(want.size()) + " listed";
                });
    }
}

struct FixtureHit {
  std::size_t index = 0; // into expected_mismatches
  std::uint64_t occurrences = 0;
};

void check_closed_forms(Context &ctx, ClaimReport &r,
                        const std::string &only_claim) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "closed-form PF(S) and RF(f) sets equal the enumerated ones";
  r.grid = family_grid(c) + (only_claim.empty() ? "" : ", " + only_claim);
  std::map<std::size_t, FixtureHit> hits;
  std::uint64_t rejected = 0;
  for (const auto &inst : family_instances_up_to_5(c)) {
    const auto &spec = *inst.family;
    const std::string claim = family_claim(spec);
    if (!only_claim.empty() && claim != only_claim)
      continue;
    ++r.instances;
    const auto &s = inst.semigroup;
    const auto pf_formula = closed_form_pf(spec);
    const auto pf_enum = pseudo_frobenius(s).elements;
    const auto pf_oracle = oracle::pseudo_frobenius(s.generators());
    rec.check(pf_formula == pf_enum && pf_enum == pf_oracle, inst.label, [&] {
      return claim + " PF: formula " + join(pf_formula) + ", Apery " +
             join(pf_enum) + ", definition " + join(pf_oracle);
    });
    for (Int f : pf_formula) {
      if (!pseudo_frobenius(s).contains(f))
        continue;
      const auto res = closed_form_rf(spec, f);
      rejected += res.rejected.size();
      for (const auto &line : res.rejected)
        rec.note(inst.label + " " + line);
      std::set<IntMatrix> formula, enumerated;
      for (const auto &m : res.matrices)
        formula.insert(m.entries);
      for (const auto &m : rf_matrices(s, f, c.max_rf))
        enumerated.insert(m.entries);
      ++r.checks;
      if (formula == enumerated)
        continue;
      std::set<IntMatrix> formula_only, enum_only;
      std::set_difference(formula.begin(), formula.end(), enumerated.begin(),
                          enumerated.end(),
                          std::inserter(formula_only, formula_only.end()));
      std::set_difference(enumerated.begin(), enumerated.end(), formula.begin(),
                          formula.end(),
                          std::inserter(enum_only, enum_only.end()));
      json data;
      data["claim"] = claim;
      data["pf_label"] = res.pf_label;
      data["f"] = f;
      data["matched"] = formula.size() - formula_only.size();
      data["formula_only"] = matrices_json(formula_only);
      data["enumeration_only"] = matrices_json(enum_only);
      data["enumerated"] = matrices_json(enumerated);
      const std::string detail =
          claim + " rf(" + res.pf_label + "), f=" + std::to_string(f) + ": " +
          std::to_string(formula_only.size()) + " formula-only, " +
          std::to_string(enum_only.size()) + " enumeration-only, " +
          std::to_string(formula.size() - formula_only.size()) + " matched";
      const auto fixture = std::find_if(
          ctx.fixtures.begin(), ctx.fixtures.end(), [&](const Fixture &fx) {
            return fx.claim_id == claim && fx.pf_label == res.pf_label &&
                   fx.variant == to_string(spec.variant);
          });
      if (fixture == ctx.fixtures.end()) {
        rec.fail(inst.label, detail, std::move(data));
        continue;
      }
      const auto key =
          static_cast<std::size_t>(fixture - ctx.fixtures.begin());
      auto it = hits.find(key);
      if (it == hits.end()) {
        data["fixture"] = fixture->reason;
        it = hits.emplace(key, FixtureHit{r.expected_mismatches.size(), 0})
                 .first;
        r.expected_mismatches.push_back({inst.label, detail, std::move(data)});
      }
      ++it->second.occurrences;
    }
  }
  for (const auto &[key, hit] : hits)
    r.expected_mismatches[hit.index].data["occurrences"] = hit.occurrences;
  for (std::size_t k = 0; k < ctx.fixtures.size(); ++k) {
    const auto &fx = ctx.fixtures[k];
    const bool in_scope = only_claim.empty() || fx.claim_id == only_claim;
    if (in_scope && !hits.count(k) && r.instances > 0)
      rec.note("fixture " + fx.claim_id + " " + fx.variant + " " +
               fx.pf_label + " did not occur in this grid");
  }
  if (rejected > 0)
    rec.note(std::to_string(rejected) +
             " parameter points rejected by the stated ranges");
}

void claim_prop3_all(Context &ctx, ClaimReport &r) {
  check_closed_forms(ctx, r, "");
}

template <int N> void claim_prop3_n(Context &ctx, ClaimReport &r) {
  check_closed_forms(ctx, r, "Prop3." + std::to_string(N));
}

void claim_cor313(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "F(S) = s-1 and some RF(s-1) has |det| = s-1";
  r.grid = family_grid(c);
  for (const auto &inst : family_instances_up_to_5(c)) {
    ++r.instances;
    const auto &s = inst.semigroup;
    rec.check(s.frobenius() == inst.family->s - 1, inst.label,
              [&] { return "F(S) = " + std::to_string(s.frobenius()); });
    const auto w = find_frobenius_det_witness(s);
    rec.check(w.has_value(), inst.label, [&] {
      return "no RF(" + std::to_string(s.frobenius()) +
             ") with |det| = F among " +
             std::to_string(count_rf_matrices(s, s.frobenius())) +
             " matrices";
    });
  }
}

void claim_lemma41(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "<m, s+1, ..., s+m-1> with m | s is Arf with multiplicity m, "
                "conductor s, and these generators are minimal";
  r.grid = lemma41_grid(c);
  for (const auto &spec : lemma41_specs(6, c.m_max, c.lemma41_mult_max)) {
    ++r.instances;
    std::vector<Int> gens{spec.m};
    for (Int i = 1; i < spec.m; ++i)
      gens.push_back(spec.s + i);
    const auto s = NumericalSemigroup::from_generators(gens);
    const std::string label = spec.to_string();
    rec.check(s.generators() == gens, label,
              [&] { return "minimal generators " + s.to_string(); });
    rec.check(s.conductor() == spec.s, label,
              [&] { return "conductor " + std::to_string(s.conductor()); });
    rec.check(is_arf(s) && oracle::is_arf(gens), label,
              [&] { return "not Arf"; });
  }
}

void claim_prop42(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "PF(S) = {s-m+1, ..., s-1} and the stated matrix is an RF "
                "matrix of s-k for every k (membership, not the full list)";
  r.grid = lemma41_grid(c);
  std::uint64_t not_unique = 0;
  for (const auto &inst : lemma41_instances(c)) {
    ++r.instances;
    const auto &spec = *inst.family;
    const auto &s = inst.semigroup;
    const auto pf = pseudo_frobenius(s).elements;
    const auto pf_oracle = oracle::pseudo_frobenius(s.generators());
    const auto stated = closed_form_pf(spec);
    rec.check(pf == stated && pf == pf_oracle, inst.label, [&] {
      return "PF " + join(pf) + ", stated " + join(stated);
    });
    for (Int f : stated) {
      const auto res = closed_form_rf(spec, f);
      const auto &m = res.matrices.front().entries;
      std::string why;
      const bool ok = satisfies_rf_invariants(s, f, m, &why);
      ++r.checks;
      if (!ok)
        rec.fail(inst.label, "rf(" + res.pf_label + "): " + why,
                 json{{"matrix", matrix_json(m)}});
      if (count_rf_matrices(s, f) > 1)
        ++not_unique;
    }
  }
  if (not_unique > 0)
    rec.note(std::to_string(not_unique) +
             " of the RF(s-k) sets have more than one matrix; the statement "
             "exhibits one of them");
}

void claim_cor43(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "the stated RF(s-1) has det = (-1)^(m-1) (s-1), and an "
                "enumerated RF(F) with |det| = F exists";
  r.grid = lemma41_grid(c);
  for (const auto &inst : lemma41_instances(c)) {
    ++r.instances;
    const auto &spec = *inst.family;
    const auto res = closed_form_rf(spec, spec.s - 1);
    const Int det = determinant(res.matrices.front().entries);
    const Int want = (spec.m % 2 == 1 ? 1 : -1) * (spec.s - 1);
    rec.check(det == want, inst.label, [&] {
      return "det " + std::to_string(det) + ", expected " +
             std::to_string(want);
    });
    rec.check(find_frobenius_det_witness(inst.semigroup).has_value(),
              inst.label, [&] { return "no enumerated det witness"; });
  }
}

void claim_rem44(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "Arf S with m > 5: >= 3 generators >= s, w(j-1) >= s or "
                "w(j) >= s, w(m-1) = s - sbar + m - 1, w(1) in "
                "{s+1, s - sbar + m + 1}";
  r.grid = m_gt_5_grid(c);
  for (const auto &inst : selected_m_gt_5(c)) {
    ++r.instances;
    const auto &s = inst.semigroup;
    const Int m = s.multiplicity();
    const Int cond = s.conductor();
    const Int sbar = mod_pos(cond, m);
    const auto &w = s.apery_table();
    const auto big = std::count_if(s.generators().begin(), s.generators().end(),
                                   [&](Int g) { return g >= cond; });
    rec.check(big >= 3, inst.label, [&] {
      return std::to_string(big) + " generators >= s=" + std::to_string(cond);
    });
    for (Int j = 2; j <= m - 1; ++j)
      rec.check(w[static_cast<std::size_t>(j - 1)] >= cond ||
                    w[static_cast<std::size_t>(j)] >= cond,
                inst.label,
                [&] { return "w(j-1), w(j) < s at j=" + std::to_string(j); });
    const Int last = w[static_cast<std::size_t>(m - 1)];
    rec.check(last == cond - sbar + m - 1, inst.label,
              [&] { return "w(m-1) = " + std::to_string(last); });
    rec.check(w[1] == cond + 1 || w[1] == cond - sbar + m + 1, inst.label,
              [&] { return "w(1) = " + std::to_string(w[1]); });
  }
}

void claim_lemma45(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "Arf S with m > 5: every RF(F) has rows i != i' and a column "
                "j with a_ij = a_i'j = 0";
  r.grid = m_gt_5_grid(c);
  for (const auto &inst : selected_m_gt_5(c)) {
    ++r.instances;
    const auto &s = inst.semigroup;
    const Int f = s.frobenius();
    const auto count = count_rf_matrices(s, f);
    if (count > c.max_rf) {
      rec.fail(inst.label, std::to_string(count) +
                               " RF matrices, above max_rf; not checked");
      continue;
    }
    for_each_rf_matrix(s, f, [&](const RFMatrix &m) {
      const bool ok = column_zero_pair(m).has_value();
      ++r.checks;
      if (!ok)
        rec.fail(inst.label, "RF(F) without a zero pair",
                 json{{"matrix", matrix_json(m.entries)}});
      return true;
    });
  }
}

std::vector<ArfInstance> equivalence_universe(const VerifyConfig &c) {
  std::vector<ArfInstance> out;
  if (uses(c, "arf-m-le-5"))
    out = family_instances_up_to_5(c);
  auto more = selected_m_gt_5(c);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

std::string equivalence_grid(const VerifyConfig &c) {
  std::string out = uses(c, "arf-m-le-5") ? family_grid(c) : "";
  const std::string rest = m_gt_5_grid(c);
  if (rest != "no instances selected")
    out += (out.empty() ? "" : "; ") + rest;
  return out.empty() ? "no instances selected" : out;
}

void claim_thm52(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "for every RF(F) matrix M: |det M| = F iff [V(S) : W_M(S)] = 1";
  r.grid = equivalence_grid(c);
  std::uint64_t both = 0;
  for (const auto &inst : equivalence_universe(c)) {
    ++r.instances;
    const auto &s = inst.semigroup;
    const Int f = s.frobenius();
    if (count_rf_matrices(s, f) > c.max_rf) {
      rec.fail(inst.label, "RF(F) above max_rf; not checked");
      continue;
    }
    const auto v = kernel_lattice(s);
    bool any_det = false, any_index = false;
    for_each_rf_matrix(s, f, [&](const RFMatrix &m) {
      const Int det = determinant(m);
      const auto idx = lattice_index(rf_difference_lattice(s, m), v);
      const bool det_ok = det == f || det == -f;
      const bool idx_ok = !idx.infinite && idx.value == 1;
      any_det = any_det || det_ok;
      any_index = any_index || idx_ok;
      ++r.checks;
      if (det_ok != idx_ok)
        rec.fail(inst.label,
                 "det " + std::to_string(det) + ", index " +
                     (idx.infinite ? std::string("infinite")
                                   : std::to_string(idx.value)),
                 json{{"matrix", matrix_json(m.entries)}});
      return true;
    });
    if (any_det && any_index)
      ++both;
    rec.check(any_det == any_index, inst.label,
              [&] { return "existence sides disagree"; });
  }
  rec.note(std::to_string(both) + " instances have a matrix with |det| = F "
                                  "and index 1");
}

void sign_conjecture_over(ClaimReport &r, Recorder &rec,
                          const std::vector<ArfInstance> &universe) {
  for (const auto &inst : universe) {
    ++r.instances;
    const auto res = check_sign_conjecture(inst.semigroup);
    rec.check(res.holds, inst.label, [&] {
      return "no RF(F) with det " + std::to_string(res.expected_determinant) +
             " among " + std::to_string(res.scanned);
    });
  }
}

void claim_conj53(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "some RF(F) has det = (-1)^(e+1) F(S)";
  std::vector<ArfInstance> universe;
  std::string grid;
  if (uses(c, "arf-m-le-5")) {
    universe = family_instances_up_to_5(c);
    grid = family_grid(c);
  }
  if (uses(c, "lemma41")) {
    auto more = lemma41_instances(c);
    universe.insert(universe.end(), more.begin(), more.end());
    grid += (grid.empty() ? "" : "; ") + lemma41_grid(c);
  }
  if (c.families == "closure") {
    universe = closure_instances(c);
    grid = closure_grid(c);
  }
  r.grid = grid.empty() ? "no instances selected" : grid;
  sign_conjecture_over(r, rec, universe);
}

void claim_thm541(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  r.statement = "sign conjecture for Arf semigroups with m <= 5";
  r.grid = family_grid(ctx.config);
  sign_conjecture_over(r, rec, family_instances_up_to_5(ctx.config));
}

void claim_thm542(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "sign conjecture for Arf semigroups with m | conductor";
  auto universe = lemma41_instances(c);
  for (auto &inst : closure_instances(c))
    if (mod_pos(inst.semigroup.conductor(), inst.semigroup.multiplicity()) ==
        0)
      universe.push_back(std::move(inst));
  r.grid = lemma41_grid(c) + "; closure samples with m | s";
  sign_conjecture_over(r, rec, universe);
}

void genericity_over(ClaimReport &r, Recorder &rec,
                     const std::vector<ArfInstance> &universe, bool want) {
  for (const auto &inst : universe) {
    ++r.instances;
    const auto report = is_generic(inst.semigroup);
    rec.check(report.generic == want, inst.label, [&] {
      return std::string(report.generic ? "generic" : "not generic") + " (" +
             to_string(report.witness) + ")";
    });
    std::string why;
    rec.check(recheck_genericity_report(inst.semigroup, report, &why),
              inst.label, [&] { return "witness does not re-check: " + why; });
  }
}

void claim_thm56(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "Arf S with m < 4 has a generic defining ideal";
  r.grid = "Arf families m in 2..3, s <= " + std::to_string(c.s_max);
  std::vector<ArfInstance> universe;
  for (auto &inst : family_instances_up_to_5(c))
    if (inst.family->m <= 3)
      universe.push_back(std::move(inst));
  genericity_over(r, rec, universe, true);
}

void claim_thm57(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "Arf S with m > 3 has a non-generic defining ideal";
  std::vector<ArfInstance> universe;
  std::string grid;
  if (uses(c, "arf-m-le-5")) {
    for (auto &inst : family_instances_up_to_5(c))
      if (inst.family->m >= 4)
        universe.push_back(std::move(inst));
    grid = "Arf families m in 4..5, s <= " + std::to_string(c.s_max);
  }
  auto more = selected_m_gt_5(c);
  universe.insert(universe.end(), more.begin(), more.end());
  const std::string rest = m_gt_5_grid(c);
  if (rest != "no instances selected")
    grid += (grid.empty() ? "" : "; ") + rest;
  r.grid = grid.empty() ? "no instances selected" : grid;
  genericity_over(r, rec, universe, false);
}

void claim_oracles(Context &ctx, ClaimReport &r) {
  Recorder rec(r);
  const auto &c = ctx.config;
  r.statement = "membership, PF, Frobenius, denumerant and determinant agree "
                "with brute-force oracles";
  r.grid = std::to_string(c.random_instances) +
           " random generator sets (e <= 6, generators <= 60, values <= 500), "
           "seed " +
           std::to_string(c.seed);
  cap_grid(c, c.random_instances, "oracle grid");
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<Int> value(0, 500);
  std::uniform_int_distribution<Int> entry(-9, 9);
  std::uniform_int_distribution<int> dim(1, 6);
  for (std::size_t t = 0; t < c.random_instances; ++t) {
    const auto gens = random_generators(rng);
    const auto s = NumericalSemigroup::from_generators(gens);
    const std::string label = s.to_string();
    ++r.instances;

    const auto table = oracle::membership_table(gens, 500);
    Int bad = -1;
    for (Int n = 0; n <= 500 && bad < 0; ++n) {
      const bool want = table[static_cast<std::size_t>(n)];
      if (s.contains(n) != want ||
          (n <= s.bitmap_limit() && s.bitmap_contains(n) != want))
        bad = n;
    }
    rec.check(bad < 0, label,
              [&] { return "membership differs at " + std::to_string(bad); });

    const Int f = oracle::frobenius(gens);
    rec.check(s.frobenius() == f, label, [&] {
      return "F " + std::to_string(s.frobenius()) + " vs " + std::to_string(f);
    });
    const auto pf = pseudo_frobenius(s).elements;
    const auto pf_oracle = oracle::pseudo_frobenius(gens);
    rec.check(pf == pf_oracle, label,
              [&] { return "PF " + join(pf) + " vs " + join(pf_oracle); });

    for (int q = 0; q < 4; ++q) {
      const Int n = value(rng);
      const auto dp = count_factorizations(s, n);
      const auto ref = oracle::denumerant(s.generators(), n);
      rec.check(dp == ref, label, [&] {
        return "denumerant(" + std::to_string(n) + ") " + std::to_string(dp) +
               " vs " + std::to_string(ref);
      });
      if (ref <= 20000) {
        const auto listed = factorizations(s, n).size();
        rec.check(listed == ref, label, [&] {
          return "factorizations(" + std::to_string(n) + ") lists " +
                 std::to_string(listed) + " vs " + std::to_string(ref);
        });
      }
    }

    int seen = 0;
    for_each_rf_matrix(s, f, [&](const RFMatrix &m) {
      const Int a = determinant(m);
      const Int b = oracle::cofactor_determinant(m.entries);
      rec.check(a == b, label, [&] {
        return "det " + std::to_string(a) + " vs cofactor " +
               std::to_string(b);
      });
      return ++seen < 8;
    });
    const auto d = static_cast<std::size_t>(dim(rng));
    IntMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        m(i, j) = entry(rng);
    const Int a = determinant(m);
    const Int b = oracle::cofactor_determinant(m);
    rec.check(a == b, label, [&] {
      return "random matrix det " + std::to_string(a) + " vs cofactor " +
             std::to_string(b);
    });
  }
}

struct ClaimEntry {
  const char *id;
  ClaimFn fn;
};

const std::vector<ClaimEntry> &registry() {
  static const std::vector<ClaimEntry> entries{
      {"Prop2.1", claim_prop21},
      {"Prop2.3", claim_prop23},
      {"Prop3.1-3.12", claim_prop3_all},
      {"Prop3.1", claim_prop3_n<1>},
      {"Prop3.2", claim_prop3_n<2>},
      {"Prop3.3", claim_prop3_n<3>},
      {"Prop3.4", claim_prop3_n<4>},
      {"Prop3.5", claim_prop3_n<5>},
      {"Prop3.6", claim_prop3_n<6>},
      {"Prop3.7", claim_prop3_n<7>},
      {"Prop3.8", claim_prop3_n<8>},
      {"Prop3.9", claim_prop3_n<9>},
      {"Prop3.10", claim_prop3_n<10>},
      {"Prop3.11", claim_prop3_n<11>},
      {"Prop3.12", claim_prop3_n<12>},
      {"Cor3.13", claim_cor313},
      {"Lemma4.1", claim_lemma41},
      {"Prop4.2", claim_prop42},
      {"Cor4.3", claim_cor43},
      {"Rem4.4", claim_rem44},
      {"Lemma4.5", claim_lemma45},
      {"Thm5.2-equiv", claim_thm52},
      {"Conj5.3", claim_conj53},
      {"Thm5.4.1", claim_thm541},
      {"Thm5.4.2", claim_thm542},
      {"Thm5.6", claim_thm56},
      {"Thm5.7", claim_thm57},
      {"Oracles", claim_oracles},
  };
  return entries;
}

const std::vector<std::string> kDefaultSuite{
    "Prop2.1",  "Prop2.3",  "Prop3.1-3.12", "Cor3.13",      "Lemma4.1",
    "Prop4.2",  "Cor4.3",   "Rem4.4",       "Lemma4.5",     "Thm5.2-equiv",
    "Conj5.3",  "Thm5.6",   "Thm5.7",       "Oracles"};

// ---------------------------------------------------------------------------
// Config parsing helpers
// ---------------------------------------------------------------------------

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string &v) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : v + ",") {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty())
        out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  return out;
}

std::uint64_t parse_uint(const std::string &key, const std::string &v,
                         std::size_t line) {
  std::uint64_t out = 0;
  std::size_t used = 0;
  try {
    if (!v.empty() && v[0] == '-')
      throw std::invalid_argument("negative");
    out = std::stoull(v, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != v.size())
    throw ConfigError("line " + std::to_string(line) + ": '" + key +
                      "' needs a non-negative integer, got '" + v + "'");
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Public API
// ---------------------------------------------------------------------------

json to_json(const ClaimReport &r) {
  json out;
  out["claim_id"] = r.claim_id;
  out["status"] = to_string(r.status);
  out["statement"] = r.statement;
  out["grid"] = {{"description", r.grid},
                 {"instances", r.instances},
                 {"checks", r.checks}};
  auto list = [](const std::vector<Counterexample> &cs) {
    json a = json::array();
    for (const auto &c : cs) {
      json item{{"spec", c.spec}, {"detail", c.detail}};
      if (!c.data.empty())
        item["data"] = c.data;
      a.push_back(std::move(item));
    }
    return a;
  };
  out["counterexamples"] = list(r.counterexamples);
  out["counterexample_total"] = r.counterexample_total;
  out["expected_mismatches"] = list(r.expected_mismatches);
  out["notes"] = r.notes;
  return out;
}

std::string to_text(const ClaimReport &r) {
  std::ostringstream os;
  os << r.claim_id << ": " << to_string(r.status) << " (" << r.instances
     << " instances, " << r.checks << " checks)\n";
  os << "  statement: " << r.statement << "\n";
  os << "  grid: " << r.grid << "\n";
  for (const auto &c : r.counterexamples)
    os << "  counterexample: " << c.spec << ": " << c.detail << "\n";
  if (r.counterexample_total > r.counterexamples.size())
    os << "  ... " << r.counterexample_total - r.counterexamples.size()
       << " more counterexamples\n";
  for (const auto &c : r.expected_mismatches) {
    os << "  expected mismatch: " << c.spec << ": " << c.detail;
    if (c.data.contains("occurrences"))
      os << " [" << c.data["occurrences"].get<std::uint64_t>()
         << " occurrences]";
    os << "\n";
    if (c.data.contains("fixture"))
      os << "    fixture: " << c.data["fixture"].get<std::string>() << "\n";
    for (const char *key : {"formula_only", "enumeration_only"})
      if (c.data.contains(key))
        for (const auto &m : c.data[key]) {
          os << "    " << key << ":\n";
          IntMatrix mm = IntMatrix::from_rows(m.get<std::vector<IntVector>>());
          os << format_matrix(mm, "      ");
        }
  }
  for (const auto &n : r.notes)
    os << "  note: " << n << "\n";
  return os.str();
}

std::vector<Fixture> parse_fixtures(std::istream &in) {
  std::vector<Fixture> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream is(line);
    Fixture fx;
    if (!(is >> fx.claim_id))
      continue;
    if (!(is >> fx.variant >> fx.pf_label))
      throw ConfigError("fixtures line " + std::to_string(number) +
                        ": expected 'claim variant pf reason'");
    std::getline(is, fx.reason);
    fx.reason = trim(fx.reason);
    out.push_back(std::move(fx));
  }
  return out;
}

std::vector<Fixture> load_fixtures(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open fixtures file '" + path + "'");
  return parse_fixtures(in);
}

const std::vector<Fixture> &default_fixtures() {
  static const std::vector<Fixture> fixtures = [] {
    std::istringstream in(
        "Prop3.6 k s-1 row 3 of the first matrix reads s/2-b-b*k where the "
        "row degree needs s/2-b-2*b*k\n"
        "Prop3.12 standard s-2 rows 2 and 3 of the third and fourth matrices "
        "carry a trailing 1, and rows 3 of the first two lack one\n");
    return parse_fixtures(in);
  }();
  return fixtures;
}

VerifyConfig parse_config(std::istream &in) {
  VerifyConfig c;
  std::set<std::string> seen;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(number) +
                        ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second)
      throw ConfigError("line " + std::to_string(number) + ": duplicate key '" +
                        key + "'");
    auto num = [&] { return parse_uint(key, value, number); };
    if (key == "suite")
      c.suite = value;
    else if (key == "claims")
      c.claims = split_list(value);
    else if (key == "s_max")
      c.s_max = static_cast<Int>(num());
    else if (key == "m_max")
      c.m_max = static_cast<int>(num());
    else if (key == "lemma41_mult_max")
      c.lemma41_mult_max = static_cast<Int>(num());
    else if (key == "closure_samples")
      c.closure_samples = num();
    else if (key == "closure_m") {
      c.closure_m.clear();
      for (const auto &item : split_list(value))
        c.closure_m.push_back(static_cast<int>(parse_uint(key, item, number)));
    } else if (key == "random_instances")
      c.random_instances = num();
    else if (key == "seed")
      c.seed = num();
    else if (key == "families")
      c.families = value;
    else if (key == "fixtures")
      c.fixtures_path = value;
    else if (key == "max_rf")
      c.max_rf = num();
    else if (key == "grid_cap")
      c.grid_cap = num();
    else if (key == "output_dir")
      c.output_dir = value;
    else
      throw ConfigError("line " + std::to_string(number) + ": unknown key '" +
                        key + "'");
  }
  validate(c);
  return c;
}

VerifyConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in);
}

void validate(const VerifyConfig &c) {
  suite_claims(c.suite);
  if (c.claims)
    for (const auto &id : *c.claims)
      if (std::find(known_claims().begin(), known_claims().end(), id) ==
          known_claims().end())
        throw UnknownClaim("unknown claim '" + id + "'");
  if (c.s_max < 2 || c.s_max > 5000)
    throw ConfigError("s_max must lie in [2, 5000]");
  if (c.m_max < 5 || c.m_max > 40)
    throw ConfigError("m_max must lie in [5, 40]");
  if (c.lemma41_mult_max < 1 || c.lemma41_mult_max > 1000)
    throw ConfigError("lemma41_mult_max must lie in [1, 1000]");
  for (int m : c.closure_m)
    if (m < 6 || m > 40)
      throw ConfigError("closure_m entries must lie in [6, 40]");
  if (c.closure_samples > 0 && c.closure_m.empty())
    throw ConfigError("closure_samples needs at least one closure_m value");
  static const std::set<std::string> families{"all", "arf-m-le-5", "lemma41",
                                              "closure"};
  if (!families.count(c.families))
    throw ConfigError("families must be one of all, arf-m-le-5, lemma41, "
                      "closure");
  if (c.max_rf == 0)
    throw ConfigError("max_rf must be positive");
}

const std::vector<std::string> &known_claims() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto &e : registry())
      out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::vector<std::string> suite_claims(const std::string &suite) {
  if (suite == "default")
    return kDefaultSuite;
  if (suite == "full")
    return known_claims();
  throw ConfigError("unknown suite '" + suite + "' (default, full)");
}

std::vector<std::string> selected_claims(const VerifyConfig &c) {
  if (c.claims)
    return *c.claims;
  return suite_claims(c.suite);
}

ClaimReport verify_claim(const std::string &claim_id,
                         const VerifyConfig &config) {
  const auto &entries = registry();
  const auto it =
      std::find_if(entries.begin(), entries.end(),
                   [&](const ClaimEntry &e) { return claim_id == e.id; });
  if (it == entries.end())
    throw UnknownClaim("unknown claim '" + claim_id + "'");
  validate(config);
  Context ctx{config, config.fixtures_path ? load_fixtures(*config.fixtures_path)
                                           : default_fixtures()};
  ClaimReport report;
  report.claim_id = claim_id;
  it->fn(ctx, report);
  finalize(report);
  return report;
}

std::vector<ClaimReport> verify_all(const VerifyConfig &config) {
  std::vector<ClaimReport> out;
  for (const auto &id : selected_claims(config))
    out.push_back(verify_claim(id, config));
  return out;
}

bool has_unexpected_failure(const std::vector<ClaimReport> &reports) {
  return std::any_of(reports.begin(), reports.end(), [](const ClaimReport &r) {
    return r.status == ClaimStatus::Fail;
  });
}

json summary_json(const std::vector<ClaimReport> &reports) {
  json claims = json::array();
  std::size_t failed = 0;
  for (const auto &r : reports) {
    claims.push_back({{"claim_id", r.claim_id},
                      {"status", to_string(r.status)},
                      {"instances", r.instances},
                      {"checks", r.checks},
                      {"counterexample_total", r.counterexample_total}});
    if (r.status == ClaimStatus::Fail)
      ++failed;
  }
  return {{"claims", claims},
          {"unexpected_failures", failed},
          {"verdict", failed == 0 ? "pass" : "fail"}};
}

void write_reports(const std::string &dir,
                   const std::vector<ClaimReport> &reports) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string &name, const json &doc) {
    std::ofstream out(std::filesystem::path(dir) / name);
    if (!out)
      throw ConfigError("cannot write report '" + name + "' in '" + dir + "'");
    out << doc.dump(2) << "\n";
  };
  for (const auto &r : reports)
    write(r.claim_id + ".json", to_json(r));
  write("summary.json", summary_json(reports));
}

std::vector<ArfInstance> family_instances_up_to_5(const VerifyConfig &config) {
  const auto specs = arf_family_specs_up_to_5(config.s_max);
  cap_grid(config, specs.size(), "m <= 5 family grid");
  std::vector<ArfInstance> out;
  out.reserve(specs.size());
  for (const auto &spec : specs)
    out.push_back({spec.to_string(), build_family(spec), spec});
  return out;
}

std::vector<ArfInstance> lemma41_instances(const VerifyConfig &config) {
  const auto specs = lemma41_specs(6, config.m_max, config.lemma41_mult_max);
  cap_grid(config, specs.size(), "Lemma41 grid");
  std::vector<ArfInstance> out;
  for (const auto &spec : specs)
    out.push_back({spec.to_string(), build_family(spec), spec});
  return out;
}

std::vector<ArfInstance> closure_instances(const VerifyConfig &config) {
  cap_grid(config, config.closure_samples, "closure sample grid");
  std::vector<ArfInstance> out;
  if (config.closure_m.empty())
    return out;
  std::mt19937_64 rng(config.seed ^ 0xA5F0u);
  std::set<std::vector<Int>> seen;
  std::uniform_int_distribution<int> extra(1, 4);
  const std::size_t max_attempts = 50 * config.closure_samples + 100;
  for (std::size_t attempt = 0;
       out.size() < config.closure_samples && attempt < max_attempts;
       ++attempt) {
    const Int m = config.closure_m[out.size() % config.closure_m.size()];
    std::uniform_int_distribution<Int> value(m + 1, 6 * m);
    std::vector<Int> gens{m};
    const int count = extra(rng);
    for (int i = 0; i < count; ++i)
      gens.push_back(value(rng));
    Int g = 0;
    for (Int x : gens)
      g = std::gcd(g, x);
    if (g != 1)
      continue;
    const auto s = arf_closure(NumericalSemigroup::from_generators(gens));
    if (s.multiplicity() != m || !seen.insert(s.generators()).second)
      continue;
    out.push_back({"closure" + s.to_string(), s, std::nullopt});
  }
  return out;
}

std::vector<std::vector<std::vector<Int>>> enumerate_arf_small_sets(int m_max,
                                                                    Int c_max) {
  // by_c[c] lists the small-element sets (elements below c) of Arf semigroups
  // of conductor c; N itself is the empty set at c = 0.
  std::vector<std::vector<std::vector<Int>>> by_c(
      static_cast<std::size_t>(c_max) + 1);
  by_c[0].push_back({});
  for (Int c = 2; c <= c_max; ++c)
    for (Int m = 2; m <= std::min<Int>(m_max, c); ++m)
      for (const auto &t : by_c[static_cast<std::size_t>(c - m)]) {
        const Int ct = c - m;
        if (m < ct && !std::binary_search(t.begin(), t.end(), m))
          continue;
        std::vector<Int> small{0};
        for (Int x : t)
          small.push_back(m + x);
        if (small_set_is_arf_semigroup(small, c))
          by_c[static_cast<std::size_t>(c)].push_back(std::move(small));
      }
  return by_c;
}

} // namespace arfrf
