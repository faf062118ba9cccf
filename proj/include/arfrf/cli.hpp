#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace arfrf::cli {

inline constexpr const char *kSchemaVersion = "1.0";

/// Exit codes of the arfrf tool.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,       // not generic, or verify found an unexpected failure
  kInvalidInput = 2,   // gcd != 1, non-positive or unparsable generators
  kNotPf = 3,          // --pf names a number outside PF(S)
  kConfig = 4,         // bad config, unknown claim, grid too large
  kRfLimit = 5,        // RF enumeration above --max-rf
  kUsage = 64,         // command-line syntax
};

/// A command's result: the payload document and the exit code it implies.
struct Output {
  nlohmann::ordered_json payload;
  int exit_code = kOk;
};

struct RfOptions {
  std::vector<long long> pf; // empty: all of PF(S)
  bool dets = false;
  bool count_only = false;
  bool witness = false;
  unsigned long long max_rf = 100000;
};

struct VerifyOptions {
  std::string config_path;
  std::string suite;
  std::vector<std::string> claims;
  long long s_max = -1;
  long long m_max = -1;
  long long seed = -1;
  long long max_rf = -1;
  std::string families;
  std::string out_dir;
};

// Each command takes the raw generator tokens; domain errors propagate as
// arfrf::Error subclasses and are mapped to exit codes by run().
Output cmd_analyze(const std::vector<std::string> &gens);
Output cmd_rf(const std::vector<std::string> &gens, const RfOptions &opts);
Output cmd_generic(const std::vector<std::string> &gens);
/// `index` is 1-based into RF(F) enumeration order; 0 picks the first
/// matrix with |det| = F, or the first matrix if there is none.
Output cmd_relations(const std::vector<std::string> &gens,
                     unsigned long long index);
Output cmd_closure(const std::vector<std::string> &gens);
Output cmd_verify(const VerifyOptions &opts);

/// Text rendering of a payload produced by the named command.
std::string render_text(const std::string &command,
                        const nlohmann::ordered_json &payload);

/// Full document: schema_version, command echo, payload.
nlohmann::ordered_json document(const std::vector<std::string> &argv,
                                const nlohmann::ordered_json &payload);

/// Parses argv (without the program name), runs the command, writes the
/// output document to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace arfrf::cli
