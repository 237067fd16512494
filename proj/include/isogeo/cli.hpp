#pragma once

// Batch commands behind the `isogeo` executable: generate (OBJ mesh plus
// metadata), verify (eigen-residual report) and spectrum (CSV plus JSON).

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace isogeo::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitInconclusive = 2,
  kExitInvalidInput = 3,
  kExitIoError = 4,
};

/// Everything a run depends on. Every field has a CLI flag and a config-file
/// key of the same name (`grid` is [nu, nt]; `gauss_map`, `mode`).
struct RunConfig {
  std::string command;
  std::string family;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  int nu = 41;
  int nt = 17;
  std::optional<double> tol;
  /// Output stem; extensions are appended per command.
  std::string out;
  /// "minimal" or "parabolic".
  std::string gauss_map = "minimal";
  /// "closed_form", "generic_exact" or "finite_difference".
  std::string mode = "closed_form";
};

/// Reads a JSON config; throws Error(IoError) if unreadable and
/// Error(InvalidFamilyParams) on malformed content.
RunConfig load_config(const std::string& path);
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const RunConfig& c);

/// Each command returns an ExitCode and writes diagnostics to `log`.
int cmd_generate(const RunConfig& config, std::ostream& log);
int cmd_verify(const RunConfig& config, std::ostream& log);
int cmd_spectrum(const RunConfig& config, std::ostream& log);

/// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isogeo::cli
