#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "commands.hpp"
#include "manifest.hpp"
#include "stellar/errors.hpp"

#ifndef STELLAR_VERSION
#define STELLAR_VERSION "unknown"
#endif

namespace {

using namespace stellar::cli;

void add_optimizer_flags(CLI::App* sub, OptimizerFlags& f) {
  sub->add_option("--grid", f.grid, "Seed grid size per angle (0: 4N+8)")->check(CLI::NonNegativeNumber);
  sub->add_option("--tol", f.tolerance, "Refinement tolerance on overlap^2")->check(CLI::PositiveNumber);
  sub->add_option("--max-steps", f.max_steps, "Refinement step limit")->check(CLI::PositiveNumber);
}

void add_state_input(CLI::App* sub, StateInput& in) {
  auto* group = sub->add_option_group("state", "Input state (exactly one)");
  group->add_option("--dicke", in.dicke_path, "Dicke-basis JSON file ('-' for stdin)");
  group->add_option("--majorana", in.majorana_path, "Majorana 'theta phi' text file ('-' for stdin)");
  group->require_option(1, 1);
}

std::map<std::string, std::string> parameters_of(const CLI::App* sub) {
  std::map<std::string, std::string> params;
  for (const auto* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string joined;
    for (const auto& r : opt->results()) joined += (joined.empty() ? "" : " ") + r;
    params[opt->get_name()] = joined.empty() ? "true" : joined;
  }
  return params;
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const stellar::ParseError& e) {
    std::cerr << "stellar: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const stellar::ConvergenceError& e) {
    std::cerr << "stellar: optimizer did not converge: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "stellar: invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::domain_error& e) {
    std::cerr << "stellar: invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "stellar: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric entanglement of symmetric multiqubit states"};
  app.set_version_flag("--version", STELLAR_VERSION);
  app.require_subcommand(1);

  std::string out_path;
  std::string manifest_path;
  const std::uint64_t env_seed = default_seed();

  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write output here (a .manifest.json sidecar is added)");
    sub->add_option("--manifest", manifest_path, "Write the run manifest to this path");
  };

  EntangleArgs entangle;
  auto* s_entangle = app.add_subcommand("entangle", "Geometric entanglement of a state");
  add_state_input(s_entangle, entangle.input);
  add_optimizer_flags(s_entangle, entangle.optimizer);
  add_output(s_entangle);

  ScanArgs scan;
  scan.seed = env_seed;
  auto* s_scan = app.add_subcommand("scan", "E_G over a range of N for one family (CSV)");
  s_scan->add_option("--family", scan.family, "ghz, dicke_balanced, dicke_k, quadratic_phase, linear_phase, coulomb, tammes, covering")
      ->required();
  s_scan->add_option("--gamma", scan.gamma, "Phase coefficient for phase families");
  s_scan->add_option("--k", scan.k, "Excitations for dicke_k");
  s_scan->add_option("--n-min", scan.n_min, "Smallest N")->required();
  s_scan->add_option("--n-max", scan.n_max, "Largest N")->required();
  s_scan->add_option("--restarts", scan.restarts, "Arrangement restarts (0: default)")->check(CLI::NonNegativeNumber);
  s_scan->add_option("--seed", scan.seed, "Seed (default: STELLAR_SEED or 0)");
  add_optimizer_flags(s_scan, scan.optimizer);
  add_output(s_scan);

  SearchArgs search;
  search.seed = env_seed;
  auto* s_search = app.add_subcommand("search-max", "Search for the most entangled N-qubit symmetric state");
  s_search->add_option("--n", search.n, "Number of qubits")->required()->check(CLI::Range(2, 64));
  s_search->add_option("--restarts", search.restarts, "Multistart count")->check(CLI::PositiveNumber);
  s_search->add_option("--seed", search.seed, "Seed (default: STELLAR_SEED or 0)");
  s_search->add_option("--majorana-out", search.majorana_out, "Also write the configuration as 'theta phi' text");
  add_optimizer_flags(s_search, search.optimizer);
  add_output(s_search);

  ArrangementArgs arrangement;
  arrangement.seed = env_seed;
  auto* s_arr = app.add_subcommand("arrangement", "Optimize or import a sphere arrangement");
  s_arr->add_option("--kind", arrangement.kind, "coulomb, tammes or covering");
  auto* arr_n = s_arr->add_option("--n", arrangement.n, "Number of points")->check(CLI::PositiveNumber);
  s_arr->add_option("--restarts", arrangement.restarts, "Restarts (0: default)")->check(CLI::NonNegativeNumber);
  s_arr->add_option("--seed", arrangement.seed, "Seed (default: STELLAR_SEED or 0)");
  auto* arr_import = s_arr->add_option("--import", arrangement.import_path, "Read 'x y z' points from a file");
  s_arr->add_flag("--no-header", arrangement.no_header, "Imported file has no leading point count");
  arr_import->excludes(arr_n);
  add_optimizer_flags(s_arr, arrangement.optimizer);
  add_output(s_arr);

  FitArgs fit;
  auto* s_fit = app.add_subcommand("fit", "Fit a scaling constant to an n,e_g CSV");
  s_fit->add_option("--in", fit.in_path, "CSV file with n and e_g columns ('-' for stdin)")->required();
  s_fit->add_option("--model", fit.model, "inverse_n_plus_1 or sqrt_over_n_plus_1");
  add_output(s_fit);

  QuantumnessArgs quantumness;
  auto* s_q = app.add_subcommand("quantumness", "Bures quantumness of a pure symmetric state");
  add_state_input(s_q, quantumness.input);
  add_optimizer_flags(s_q, quantumness.optimizer);
  add_output(s_q);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  const CLI::App* sub = app.get_subcommands().front();
  std::function<int(std::ostream&)> body;
  std::uint64_t seed = 0;
  if (sub == s_entangle) {
    body = [&](std::ostream& o) { return cmd_entangle(entangle, o); };
  } else if (sub == s_scan) {
    body = [&](std::ostream& o) { return cmd_scan(scan, o); };
    seed = scan.seed;
  } else if (sub == s_search) {
    body = [&](std::ostream& o) { return cmd_search_max(search, o); };
    seed = search.seed;
  } else if (sub == s_arr) {
    body = [&](std::ostream& o) { return cmd_arrangement(arrangement, o); };
    seed = arrangement.seed;
  } else if (sub == s_fit) {
    body = [&](std::ostream& o) { return cmd_fit(fit, o); };
  } else {
    body = [&](std::ostream& o) { return cmd_quantumness(quantumness, o); };
  }

  return run_guarded([&] {
    std::ostringstream buffer;
    const int code = body(buffer);
    if (out_path.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw stellar::ParseError("cannot write '" + out_path + "'");
      f << buffer.str();
    }
    const auto manifest = manifest_json(make_manifest(sub->get_name(), parameters_of(sub), seed));
    std::string target = manifest_path;
    if (target.empty() && !out_path.empty()) target = out_path + ".manifest.json";
    if (!target.empty()) {
      std::ofstream m(target, std::ios::binary);
      if (!m) throw stellar::ParseError("cannot write '" + target + "'");
      m << manifest;
    }
    return code;
  });
}
