#include "arfrf/cli.hpp"

#include "arfrf/lattice.hpp"
#include "arfrf/rf_matrix.hpp"
#include "arfrf/semigroup.hpp"
#include "arfrf/toric.hpp"
#include "arfrf/verifier.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <ostream>
#include <sstream>

namespace arfrf::cli {

using json = nlohmann::ordered_json;

namespace {

/// Unparsable or out-of-range command-line input.
class InputError : public Error {
public:
  using Error::Error;
};

NumericalSemigroup parse_semigroup(const std::vector<std::string> &tokens) {
  if (tokens.empty())
    throw InputError("at least one generator is required");
  std::vector<Int> gens;
  for (const auto &t : tokens) {
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
      throw InputError("'" + t + "' is not an integer");
    gens.push_back(v);
  }
  return NumericalSemigroup::from_generators(gens);
}

json matrix_json(const IntMatrix &m) {
  json rows = json::array();
  for (const auto &r : m.to_rows())
    rows.push_back(r);
  return rows;
}

IntMatrix matrix_from_json(const json &j) {
  return IntMatrix::from_rows(j.get<std::vector<IntVector>>());
}

json semigroup_header(const NumericalSemigroup &s) {
  return {{"semigroup", s.to_string()}, {"generators", s.generators()}};
}

std::string set_text(const json &values) {
  std::string out;
  for (const auto &v : values)
    out += (out.empty() ? "" : ", ") + v.dump();
  return "{" + out + "}";
}

std::string yes_no(const json &b) { return b.get<bool>() ? "yes" : "no"; }

std::string indent_matrix(const json &entries) {
  return format_matrix(matrix_from_json(entries), "  ");
}

// ---------------------------------------------------------------------------
// Text renderers, one per command, reading only the payload.
// ---------------------------------------------------------------------------

std::string text_analyze(const json &p) {
  std::ostringstream os;
  os << "S = " << p["semigroup"].get<std::string>() << "\n"
     << "multiplicity m = " << p["multiplicity"] << "\n"
     << "embedding dimension e = " << p["embedding_dimension"] << "\n"
     << "Frobenius number F = " << p["frobenius"] << "\n"
     << "conductor c = " << p["conductor"] << "\n"
     << "gaps = " << p["gaps"] << "\n"
     << "Ap(S, " << p["multiplicity"] << ") = " << set_text(p["apery"])
     << "  (by residue)\n"
     << "PF(S) = " << set_text(p["pseudo_frobenius"]) << "\n"
     << "type t = " << p["type"] << "\n"
     << "MED: " << yes_no(p["is_med"]) << "\n"
     << "Arf: " << yes_no(p["is_arf"]) << "\n";
  return os.str();
}

std::string text_matrix_entry(const json &m) {
  std::ostringstream os;
  os << "#" << m["index"];
  if (m.contains("determinant"))
    os << "  det = " << m["determinant"];
  os << "\n" << indent_matrix(m["entries"]);
  return os.str();
}

std::string text_rf(const json &p) {
  std::ostringstream os;
  os << "S = " << p["semigroup"].get<std::string>() << "\n"
     << "PF(S) = " << set_text(p["pseudo_frobenius"]) << "\n";
  for (const auto &r : p["rf"]) {
    os << "RF(" << r["f"] << "): " << r["count"]
       << (r["count"] == 1 ? " matrix\n" : " matrices\n");
    if (r.contains("matrices"))
      for (const auto &m : r["matrices"])
        os << text_matrix_entry(m);
  }
  if (p.contains("witness")) {
    const auto &w = p["witness"];
    os << "Frobenius det witness (|det| = " << w["frobenius"] << "): ";
    if (w["det_witness"].is_null())
      os << "none\n";
    else
      os << "\n" << text_matrix_entry(w["det_witness"]);
    const auto &sc = w["sign_conjecture"];
    os << "sign conjecture (det = " << sc["expected_determinant"]
       << "): " << (sc["holds"].get<bool>() ? "holds" : "fails") << " after "
       << sc["scanned"] << " matrices\n";
    if (!sc["witness"].is_null())
      os << text_matrix_entry(sc["witness"]);
  }
  return os.str();
}

std::string text_generic(const json &p) {
  std::ostringstream os;
  os << "S = " << p["semigroup"].get<std::string>() << "\n"
     << (p["generic"].get<bool>() ? "generic" : "not generic") << " ("
     << p["witness"].get<std::string>() << ")\n";
  if (!p["generic"].get<bool>()) {
    os << "pseudo-Frobenius number f = " << p["pf_element"] << "\n";
    if (p.contains("column"))
      os << "rows " << p["rows"][0] << " and " << p["rows"][1]
         << " agree in column " << p["column"] << "\n";
    for (const auto &m : p["matrices"])
      os << indent_matrix(m);
  }
  os << "witness re-check: " << (p["recheck"].get<bool>() ? "ok" : "FAILED")
     << "\n";
  return os.str();
}

std::string text_relations(const json &p) {
  std::ostringstream os;
  os << "S = " << p["semigroup"].get<std::string>() << "\n"
     << "F(S) = " << p["frobenius"] << ", RF(F) matrix " << p["matrix"]["index"]
     << " of " << p["rf_count"] << ", det = " << p["matrix"]["determinant"]
     << "\n"
     << indent_matrix(p["matrix"]["entries"]) << "convention: "
     << p["sign_convention"].get<std::string>() << "\n";
  for (const auto &r : p["relations"])
    os << "phi_" << r["i"] << r["j"] << " = " << r["binomial"].get<std::string>()
       << "   a_" << r["i"] << r["j"] << " = " << set_text(r["vector"])
       << "   canonical: " << r["canonical"].get<std::string>() << "\n";
  if (p["skipped_zero"].get<int>() > 0)
    os << "(" << p["skipped_zero"] << " zero differences skipped)\n";
  os << "W(S) basis (" << p["W"]["rank"] << "):\n";
  for (const auto &b : p["W"]["basis"])
    os << "  " << set_text(b) << "\n";
  os << "V(S) basis (" << p["V"]["rank"] << "):\n";
  for (const auto &b : p["V"]["basis"])
    os << "  " << set_text(b) << "\n";
  os << "[V(S):W(S)] = "
     << (p["index"]["infinite"].get<bool>() ? std::string("infinite")
                                            : p["index"]["value"].dump())
     << "\n";
  return os.str();
}

std::string text_closure(const json &p) {
  std::ostringstream os;
  os << "S = " << p["input"].get<std::string>() << "  (Arf: "
     << yes_no(p["input_is_arf"]) << ")\n"
     << "Arf closure = " << p["closure"].get<std::string>() << "\n"
     << "multiplicity m = " << p["multiplicity"] << ", conductor c = "
     << p["conductor"] << "\n"
     << "small elements = " << set_text(p["small_elements"]) << "\n";
  return os.str();
}

std::string text_verify(const json &p) {
  std::ostringstream os;
  for (const auto &r : p["reports"]) {
    os << r["claim_id"].get<std::string>() << ": "
       << r["status"].get<std::string>() << " (" << r["grid"]["instances"]
       << " instances, " << r["grid"]["checks"] << " checks)\n"
       << "  statement: " << r["statement"].get<std::string>() << "\n"
       << "  grid: " << r["grid"]["description"].get<std::string>() << "\n";
    for (const auto &c : r["counterexamples"])
      os << "  counterexample: " << c["spec"].get<std::string>() << ": "
         << c["detail"].get<std::string>() << "\n";
    const auto shown = r["counterexamples"].size();
    const auto total = r["counterexample_total"].get<std::size_t>();
    if (total > shown)
      os << "  ... " << total - shown << " more counterexamples\n";
    for (const auto &c : r["expected_mismatches"]) {
      os << "  expected mismatch: " << c["spec"].get<std::string>() << ": "
         << c["detail"].get<std::string>();
      if (c.contains("data") && c["data"].contains("occurrences"))
        os << " [" << c["data"]["occurrences"] << " occurrences]";
      os << "\n";
    }
    for (const auto &n : r["notes"])
      os << "  note: " << n.get<std::string>() << "\n";
  }
  const auto &s = p["summary"];
  os << "verdict: " << s["verdict"].get<std::string>() << " ("
     << s["claims"].size() << " claims, " << s["unexpected_failures"]
     << " unexpected failures)\n";
  return os.str();
}

json rf_entry(std::size_t index, const RFMatrix &m, bool with_det) {
  json out{{"index", index}, {"entries", matrix_json(m.entries)}};
  if (with_det)
    out["determinant"] = determinant(m);
  return out;
}

} // namespace

Output cmd_analyze(const std::vector<std::string> &gens) {
  const auto s = parse_semigroup(gens);
  json p = semigroup_header(s);
  p["multiplicity"] = s.multiplicity();
  p["embedding_dimension"] = s.embedding_dimension();
  p["frobenius"] = s.frobenius();
  p["conductor"] = s.conductor();
  p["gaps"] = s.gap_count();
  p["apery"] = s.apery_table();
  const auto pf = pseudo_frobenius(s);
  p["pseudo_frobenius"] = pf.elements;
  p["type"] = pf.type();
  p["is_med"] = is_med(s);
  p["is_arf"] = is_arf(s);
  return {p, kOk};
}

Output cmd_rf(const std::vector<std::string> &gens, const RfOptions &opts) {
  const auto s = parse_semigroup(gens);
  const auto pf = pseudo_frobenius(s);
  json p = semigroup_header(s);
  p["pseudo_frobenius"] = pf.elements;
  std::vector<Int> targets;
  for (long long f : opts.pf) {
    if (!pf.contains(f)) {
      std::string list;
      for (Int x : pf.elements)
        list += (list.empty() ? "" : ", ") + std::to_string(x);
      throw NotPseudoFrobenius(std::to_string(f) + " is not in PF(S) = {" +
                               list + "}");
    }
    targets.push_back(f);
  }
  if (opts.pf.empty())
    targets = pf.elements;
  json results = json::array();
  for (Int f : targets) {
    const auto count = count_rf_matrices(s, f);
    json r{{"f", f}, {"count", count}};
    if (!opts.count_only) {
      json ms = json::array();
      std::size_t index = 0;
      for (const auto &m : rf_matrices(s, f, opts.max_rf))
        ms.push_back(rf_entry(++index, m, opts.dets));
      r["matrices"] = std::move(ms);
    }
    results.push_back(std::move(r));
  }
  p["rf"] = std::move(results);
  if (opts.witness && !s.is_natural()) {
    const Int f = s.frobenius();
    json w{{"frobenius", f}};
    json det_witness = nullptr;
    std::size_t index = 0;
    for_each_rf_matrix(s, f, [&](const RFMatrix &m) {
      ++index;
      const Int d = determinant(m);
      if (d == f || d == -f) {
        det_witness = rf_entry(index, m, true);
        return false;
      }
      return true;
    });
    w["det_witness"] = det_witness;
    const auto sc = check_sign_conjecture(s);
    w["sign_conjecture"] = {
        {"holds", sc.holds},
        {"expected_determinant", sc.expected_determinant},
        {"scanned", sc.scanned},
        {"witness", sc.witness ? rf_entry(sc.scanned, *sc.witness, true)
                               : json(nullptr)}};
    p["witness"] = std::move(w);
  }
  return {p, kOk};
}

Output cmd_generic(const std::vector<std::string> &gens) {
  const auto s = parse_semigroup(gens);
  const auto report = is_generic(s);
  json p = semigroup_header(s);
  p["generic"] = report.generic;
  p["witness"] = to_string(report.witness);
  if (!report.generic) {
    p["pf_element"] = report.pf_element;
    json ms = json::array();
    for (const auto &m : report.matrices)
      ms.push_back(matrix_json(m.entries));
    p["matrices"] = std::move(ms);
    if (report.witness == GenericityWitness::ColumnCoincidence) {
      p["rows"] = {report.row_a + 1, report.row_b + 1};
      p["column"] = report.column + 1;
    }
  }
  p["recheck"] = recheck_genericity_report(s, report);
  return {p, report.generic ? kOk : kNegative};
}

Output cmd_relations(const std::vector<std::string> &gens,
                     unsigned long long index) {
  const auto s = parse_semigroup(gens);
  if (s.is_natural())
    throw InputError("S = N has no Frobenius number in PF(S), so no RF matrix");
  const Int f = s.frobenius();
  const auto total = count_rf_matrices(s, f);
  if (index > total)
    throw InputError("--index " + std::to_string(index) + " but RF(" +
                     std::to_string(f) + ") has " + std::to_string(total) +
                     " matrices");
  std::optional<RFMatrix> chosen;
  std::size_t chosen_index = 0, at = 0;
  for_each_rf_matrix(s, f, [&](const RFMatrix &m) {
    ++at;
    if (index != 0) {
      if (at == index) {
        chosen = m;
        chosen_index = at;
        return false;
      }
      return true;
    }
    if (!chosen) {
      chosen = m;
      chosen_index = at;
    }
    const Int d = determinant(m);
    if (d == f || d == -f) {
      chosen = m;
      chosen_index = at;
      return false;
    }
    return true;
  });
  const auto &m = *chosen;
  json p = semigroup_header(s);
  p["frobenius"] = f;
  p["rf_count"] = total;
  p["matrix"] = rf_entry(chosen_index, m, true);
  p["sign_convention"] = "phi_ij = x^(a_i - a_j)+ - x^(a_i - a_j)-, i < j; "
                         "canonical puts the lexicographically larger "
                         "exponent first";
  json diffs = json::array();
  for (const auto &d : row_differences(m))
    diffs.push_back({{"i", d.i + 1}, {"j", d.j + 1}, {"vector", d.vector}});
  p["differences"] = std::move(diffs);
  std::size_t skipped = 0;
  json rels = json::array();
  for (const auto &r : rf_relations(s, m, &skipped)) {
    IntVector diff;
    for (std::size_t k = 0; k < r.binomial.plus.size(); ++k)
      diff.push_back(r.binomial.plus[k] - r.binomial.minus[k]);
    rels.push_back({{"i", r.i + 1},
                    {"j", r.j + 1},
                    {"vector", diff},
                    {"binomial", r.binomial.to_string()},
                    {"canonical", r.binomial.canonical().to_string()},
                    {"plus", r.binomial.plus},
                    {"minus", r.binomial.minus},
                    {"full_support", r.binomial.full_support()}});
  }
  p["relations"] = std::move(rels);
  p["skipped_zero"] = skipped;
  const auto w = rf_difference_lattice(s, m);
  const auto v = kernel_lattice(s);
  p["W"] = {{"rank", w.rank()}, {"generators", w.generators()},
            {"basis", w.basis()}};
  p["V"] = {{"rank", v.rank()}, {"basis", v.basis()}};
  const auto idx = lattice_index(w, v);
  p["index"] = {{"infinite", idx.infinite},
                {"value", idx.infinite ? json(nullptr) : json(idx.value)}};
  return {p, kOk};
}

Output cmd_closure(const std::vector<std::string> &gens) {
  const auto s = parse_semigroup(gens);
  const auto c = arf_closure(s);
  json p;
  p["input"] = s.to_string();
  p["input_is_arf"] = is_arf(s);
  p["closure"] = c.to_string();
  p["generators"] = c.generators();
  p["multiplicity"] = c.multiplicity();
  p["conductor"] = c.conductor();
  p["frobenius"] = c.frobenius();
  p["small_elements"] = c.small_elements();
  return {p, kOk};
}

Output cmd_verify(const VerifyOptions &opts) {
  VerifyConfig config;
  if (!opts.config_path.empty())
    config = load_config(opts.config_path);
  if (!opts.suite.empty())
    config.suite = opts.suite;
  if (!opts.claims.empty())
    config.claims = opts.claims;
  if (opts.s_max >= 0)
    config.s_max = opts.s_max;
  if (opts.m_max >= 0)
    config.m_max = static_cast<int>(opts.m_max);
  if (opts.seed >= 0)
    config.seed = static_cast<std::uint64_t>(opts.seed);
  if (opts.max_rf >= 0)
    config.max_rf = static_cast<std::uint64_t>(opts.max_rf);
  if (!opts.families.empty())
    config.families = opts.families;
  if (!opts.out_dir.empty())
    config.output_dir = opts.out_dir;
  validate(config);
  const auto reports = verify_all(config);
  if (config.output_dir)
    write_reports(*config.output_dir, reports);
  json list = json::array();
  for (const auto &r : reports)
    list.push_back(to_json(r));
  json p{{"summary", summary_json(reports)}, {"reports", std::move(list)}};
  return {p, has_unexpected_failure(reports) ? kNegative : kOk};
}

std::string render_text(const std::string &command, const json &payload) {
  if (command == "analyze")
    return text_analyze(payload);
  if (command == "rf")
    return text_rf(payload);
  if (command == "generic")
    return text_generic(payload);
  if (command == "relations")
    return text_relations(payload);
  if (command == "closure")
    return text_closure(payload);
  if (command == "verify")
    return text_verify(payload);
  return payload.dump(2) + "\n";
}

json document(const std::vector<std::string> &argv, const json &payload) {
  json cmd = json::array();
  cmd.push_back("arfrf");
  for (const auto &a : argv)
    cmd.push_back(a);
  return {{"schema_version", kSchemaVersion},
          {"command", std::move(cmd)},
          {"payload", payload}};
}

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Numerical semigroups: Arf families, RF matrices, genericity "
               "and claim verification",
               "arfrf"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> gens;
  auto add_gens = [&](CLI::App *sub) {
    sub->add_option("gens", gens, "Generators of S")->required();
  };
  auto *analyze = app.add_subcommand("analyze", "Invariants of S");
  add_gens(analyze);

  RfOptions rf_opts;
  auto *rf = app.add_subcommand("rf", "RF matrices of pseudo-Frobenius numbers");
  add_gens(rf);
  rf->add_option("--pf", rf_opts.pf, "Pseudo-Frobenius number (repeatable)");
  rf->add_flag("--dets", rf_opts.dets, "Print determinants");
  rf->add_flag("--count-only", rf_opts.count_only, "Only count RF(f)");
  rf->add_flag("--witness", rf_opts.witness,
               "Search RF(F) for |det| = F and the sign conjecture");
  rf->add_option("--max-rf", rf_opts.max_rf, "Enumeration cap per f");

  auto *generic = app.add_subcommand("generic", "Genericity of the toric ideal");
  add_gens(generic);
  bool generic_witness = false;
  generic->add_flag("--witness", generic_witness,
                    "Accepted for symmetry; the witness is always printed");

  unsigned long long rel_index = 0;
  auto *relations =
      app.add_subcommand("relations", "RF(F)-relations and [V(S):W(S)]");
  add_gens(relations);
  relations->add_option("--index", rel_index,
                        "1-based RF(F) matrix to use (default: det witness)");

  auto *closure = app.add_subcommand("closure", "Arf closure of S");
  add_gens(closure);

  VerifyOptions v;
  auto *verify = app.add_subcommand("verify", "Run the claim verification suite");
  verify->add_option("--config", v.config_path, "key = value config file");
  verify->add_option("--suite", v.suite, "default or full");
  verify->add_option("--claim", v.claims, "Claim id (repeatable)");
  verify->add_option("--s-max", v.s_max, "Conductor bound for m <= 5");
  verify->add_option("--m-max", v.m_max, "Largest multiplicity of m | s shapes");
  verify->add_option("--seed", v.seed, "Seed for sampled instances");
  verify->add_option("--max-rf", v.max_rf, "Enumeration cap per RF(f)");
  verify->add_option("--families", v.families,
                     "all, arf-m-le-5, lemma41 or closure");
  verify->add_option("--out", v.out_dir, "Directory for report files");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  std::string command;
  for (auto *sub : app.get_subcommands())
    command = sub->get_name();
  try {
    Output result;
    if (command == "analyze")
      result = cmd_analyze(gens);
    else if (command == "rf")
      result = cmd_rf(gens, rf_opts);
    else if (command == "generic")
      result = cmd_generic(gens);
    else if (command == "relations")
      result = cmd_relations(gens, rel_index);
    else if (command == "closure")
      result = cmd_closure(gens);
    else
      result = cmd_verify(v);
    if (format == "json")
      out << document(args, result.payload).dump(2) << "\n";
    else
      out << render_text(command, result.payload);
    return result.exit_code;
  } catch (const NotNumerical &e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NotPseudoFrobenius &e) {
    err << "error: " << e.what() << "\n";
    return kNotPf;
  } catch (const RfLimitExceeded &e) {
    err << "error: " << e.what() << " (" << e.count()
        << " matrices; raise --max-rf)\n";
    return kRfLimit;
  } catch (const ConfigError &e) {
    err << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const UnknownClaim &e) {
    err << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const GridTooLarge &e) {
    err << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

} // namespace arfrf::cli
