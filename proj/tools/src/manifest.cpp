#include "manifest.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <ctime>

#include "json.hpp"

#ifndef STELLAR_VERSION
#define STELLAR_VERSION "unknown"
#endif

namespace stellar::cli {

RunManifest make_manifest(std::string command, std::map<std::string, std::string> parameters,
                          std::uint64_t seed) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return {std::move(command), std::move(parameters), seed, STELLAR_VERSION, stamp};
}

std::string manifest_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["parameters"] = m.parameters;
  j["seed"] = m.seed;
  j["version"] = m.version;
  j["timestamp"] = m.timestamp;
  return j.dump(2) + "\n";
}

std::uint64_t default_seed() {
  const char* env = std::getenv("STELLAR_SEED");
  if (env == nullptr) return 0;
  std::uint64_t v = 0;
  const auto* end = env + std::strlen(env);
  const auto res = std::from_chars(env, end, v);
  return res.ec == std::errc() && res.ptr == end ? v : 0;
}

}  // namespace stellar::cli
