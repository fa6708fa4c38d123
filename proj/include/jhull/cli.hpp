#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace jhull::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitConfigError = 2;

/// Bad flag values, unknown tolerance keys and the like.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::map<std::string, double> default_tolerances();

struct RunConfig {
  std::string lambda = "4";
  int digits = 32;
  int depth = 12;
  int truncation = 1024;
  std::map<std::string, double> tolerances = default_tolerances();
  std::uint64_t seed = 1;
  std::string out;
  bool allow_small_lambda = false;
  /// Fault injection: replace this exact row of the coefficient table.
  long corrupt_row = -1;

  double tol(const std::string& key) const;
  /// Applies "key=value"; throws ConfigError on an unknown key or bad number.
  void set_tolerance(const std::string& assignment);
};

/// Build identifier, "jhull <version>" plus the git revision when known.
std::string artifact_version();

/// Header every output carries.
nlohmann::ordered_json make_header(const RunConfig& config);

struct VerifyOutcome {
  nlohmann::ordered_json report;
  bool pass = false;
};

/// Runs every invariant suite at the configured tolerances. The report holds
/// no timings, so it is byte-identical across runs for a fixed config.
VerifyOutcome cmd_verify(const RunConfig& config);

/// Entry point shared by the executable and the tests. Writes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jhull::cli
