#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "stellar/entanglement.hpp"

namespace stellar::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitNoConvergence = 3;
inline constexpr int kExitCertificate = 4;

struct OptimizerFlags {
  int grid = 0;  // 0 selects 4N+8
  double tolerance = 1e-12;
  int max_steps = 200;

  OptimizerConfig config(std::uint64_t seed) const;
};

// Exactly one of dicke_path / majorana_path is set; "-" reads standard input.
struct StateInput {
  std::string dicke_path;
  std::string majorana_path;
};

struct EntangleArgs {
  StateInput input;
  OptimizerFlags optimizer;
};

struct ScanArgs {
  std::string family;
  std::optional<double> gamma;
  std::optional<int> k;
  int n_min = 2;
  int n_max = 20;
  int restarts = 0;
  std::uint64_t seed = 0;
  OptimizerFlags optimizer;
};

struct SearchArgs {
  int n = 4;
  int restarts = 64;
  std::uint64_t seed = 0;
  std::string majorana_out;
  OptimizerFlags optimizer;
};

struct ArrangementArgs {
  std::string kind = "coulomb";
  int n = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
  std::string import_path;
  bool no_header = false;
  OptimizerFlags optimizer;
};

struct FitArgs {
  std::string in_path;
  std::string model = "inverse_n_plus_1";
};

struct QuantumnessArgs {
  StateInput input;
  OptimizerFlags optimizer;
};

// Each command writes its primary output to `out` and returns an exit code.
// Library exceptions propagate; run_guarded maps them to exit codes.
int cmd_entangle(const EntangleArgs& args, std::ostream& out);
int cmd_scan(const ScanArgs& args, std::ostream& out);
int cmd_search_max(const SearchArgs& args, std::ostream& out);
int cmd_arrangement(const ArrangementArgs& args, std::ostream& out);
int cmd_fit(const FitArgs& args, std::ostream& out);
int cmd_quantumness(const QuantumnessArgs& args, std::ostream& out);

std::string read_text(const std::string& path);

// The asymptotic model value reported in the scan CSV, if the family has one.
std::optional<double> scan_asymptotic(const std::string& family, std::optional<double> gamma, int n);

}  // namespace stellar::cli
