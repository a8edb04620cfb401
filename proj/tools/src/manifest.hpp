#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace stellar::cli {

struct RunManifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  std::string version;
  std::string timestamp;  // UTC, ISO 8601
};

RunManifest make_manifest(std::string command, std::map<std::string, std::string> parameters,
                          std::uint64_t seed);
std::string manifest_json(const RunManifest& m);

// STELLAR_SEED if set and numeric, otherwise 0.
std::uint64_t default_seed();

}  // namespace stellar::cli
