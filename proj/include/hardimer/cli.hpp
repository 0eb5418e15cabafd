#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace hardimer::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "HARDIMER_OUTPUT_DIR";

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceError = 3,
};

/// Everything needed to rerun a command; written next to each output file.
struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  std::string rng_algorithm;
  std::string tool_version{kToolVersion};
  std::string timestamp;
  std::vector<std::string> outputs;

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
};

/// "<data file>.manifest.json"
std::filesystem::path manifest_path(const std::filesystem::path& data_file);

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

/// Output directory from the environment, or "." when unset.
std::filesystem::path default_output_dir();

/// Runs one command line (without the program name). Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardimer::cli
