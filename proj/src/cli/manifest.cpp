#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

#include "hardimer/cli.hpp"
#include "hardimer/error.hpp"

namespace hardimer::cli {

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  j["rng_algorithm"] = rng_algorithm;
  j["tool_version"] = tool_version;
  j["timestamp"] = timestamp;
  j["outputs"] = outputs;
  return j;
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.parameters = j.at("parameters");
  if (!j.at("seed").is_null()) m.seed = j.at("seed").get<std::uint64_t>();
  m.rng_algorithm = j.at("rng_algorithm").get<std::string>();
  m.tool_version = j.at("tool_version").get<std::string>();
  m.timestamp = j.at("timestamp").get<std::string>();
  m.outputs = j.value("outputs", std::vector<std::string>{});
  return m;
}

std::filesystem::path manifest_path(const std::filesystem::path& data_file) {
  return std::filesystem::path(data_file.string() + ".manifest.json");
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write manifest " + path.string());
  f << manifest.to_json().dump(2) << '\n';
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::filesystem::path default_output_dir() {
  const char* dir = std::getenv(kOutputDirEnv);
  return dir && *dir ? std::filesystem::path(dir) : std::filesystem::path(".");
}

}  // namespace hardimer::cli
