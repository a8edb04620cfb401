#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "commands.hpp"
#include "json.hpp"
#include "manifest.hpp"
#include "stellar/stellar.hpp"

using namespace stellar;
using namespace stellar::cli;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("stellar_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto p = (dir_ / name).string();
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  static std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  // Runs the installed binary and returns its exit status.
  int run(const std::string& args, const std::string& out_name = "stdout.txt") const {
    const std::string cmd = std::string(STELLAR_CLI_PATH) + " " + args + " > " + (dir_ / out_name).string() + " 2> " +
                            (dir_ / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

std::string ghz4_json() { return "{\"n\":4,\"re\":[1,0,0,0,1],\"im\":[0,0,0,0,0]}"; }

}  // namespace

TEST_F(CliTest, EntangleKnownStates) {
  EntangleArgs args;
  args.input.dicke_path = write("ghz.json", ghz4_json());
  std::ostringstream out;
  EXPECT_EQ(cmd_entangle(args, out), kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_NEAR(j["e_g"].get<double>(), 0.5, 1e-9);
  EXPECT_NEAR(j["bound"].get<double>(), 0.8, 1e-15);
  EXPECT_EQ(j["n"].get<int>(), 4);

  args.input.dicke_path = write("d63.json", format_dicke_json(DickeVector::basis(6, 3)));
  std::ostringstream out2;
  cmd_entangle(args, out2);
  EXPECT_NEAR(nlohmann::json::parse(out2.str())["e_g"].get<double>(), 0.6875, 1e-9);

  args.input.dicke_path.clear();
  args.input.majorana_path = write("tetra.txt", format_majorana_text(reference_maximal_configuration(4)));
  std::ostringstream out3;
  cmd_entangle(args, out3);
  EXPECT_NEAR(nlohmann::json::parse(out3.str())["e_g"].get<double>(), 2.0 / 3.0, 1e-9);
}

TEST_F(CliTest, ExitCodes) {
  const auto bad = write("bad.json", "{\"n\": 4,");
  EXPECT_EQ(run("entangle --dicke " + bad), kExitParse);
  EXPECT_NE(slurp((dir_ / "stderr.txt").string()).find("line"), std::string::npos);
  EXPECT_EQ(run("entangle --dicke " + write("ok.json", ghz4_json())), kExitOk);
  EXPECT_EQ(run("entangle"), kExitParse);
  EXPECT_EQ(run("no-such-command"), kExitParse);
  EXPECT_EQ(run("arrangement --import " + write("short.txt", "3\n0 0 1\n0 0 -1\n")), kExitParse);
  EXPECT_NE(slurp((dir_ / "stderr.txt").string()).find("line 4"), std::string::npos);
  EXPECT_EQ(run("entangle --max-steps 1 --tol 1e-15 --dicke " + write("r.json", "{\"n\":9,\"re\":[0.3,-0.2,0.5,0.1,0.7,-0.4,0.2,0.9,-0.1,0.35],\"im\":[0.1,0.6,-0.3,0.2,0.0,0.45,-0.7,0.05,0.3,-0.2]}")),
            kExitNoConvergence);
  EXPECT_EQ(run("scan --family ghz --n-min 5 --n-max 2"), kExitParse);
  EXPECT_EQ(run("--version"), kExitOk);
}

TEST_F(CliTest, ScanColumnsAndBound) {
  ScanArgs args;
  args.family = "dicke_balanced";
  args.n_min = 2;
  args.n_max = 30;
  std::ostringstream out;
  cmd_scan(args, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,e_g,bound,asymptotic");
  int n = 2;
  while (std::getline(in, line)) {
    double e = 0;
    double bound = 0;
    double asym = 0;
    int got = 0;
    ASSERT_EQ(std::sscanf(line.c_str(), "%d,%lf,%lf,%lf", &got, &e, &bound, &asym), 4);
    EXPECT_EQ(got, n);
    EXPECT_NEAR(e, dicke_entanglement_closed_form(n, n / 2), 1e-9);
    EXPECT_LT(e, bound);
    EXPECT_EQ(asym, std::stod(format_double(balanced_dicke_asymptotic(n))));
    ++n;
  }
  EXPECT_EQ(n, 31);
}

TEST_F(CliTest, ScanAsymptoticCell) {
  EXPECT_FALSE(scan_asymptotic("ghz", {}, 5).has_value());
  EXPECT_FALSE(scan_asymptotic("quadratic_phase", 0.3, 5).has_value());
  EXPECT_NEAR(*scan_asymptotic("quadratic_phase", 0.6667, 9), 1.0 - 0.222, 1e-15);
  EXPECT_NEAR(*scan_asymptotic("linear_phase", 0.6667, 100), linear_phase_asymptotic(100), 0.0);
  EXPECT_NEAR(*scan_asymptotic("coulomb", {}, 9), 1.0 - 0.171, 1e-15);
}

TEST_F(CliTest, ScanIsByteIdenticalAcrossRuns) {
  const std::string a = write("a.csv", "");
  const std::string b = write("b.csv", "");
  ASSERT_EQ(run("scan --family coulomb --n-min 3 --n-max 7 --restarts 3 --seed 5 --out " + a), kExitOk);
  ASSERT_EQ(run("scan --family coulomb --n-min 3 --n-max 7 --restarts 3 --seed 5 --out " + b), kExitOk);
  EXPECT_EQ(slurp(a), slurp(b));
  const auto m = nlohmann::json::parse(slurp(a + ".manifest.json"));
  EXPECT_EQ(m["command"], "scan");
  EXPECT_EQ(m["seed"], 5);
  EXPECT_EQ(m["parameters"]["--family"], "coulomb");
  EXPECT_FALSE(m["timestamp"].get<std::string>().empty());
}

TEST_F(CliTest, SeedFromEnvironment) {
  ::setenv("STELLAR_SEED", "77", 1);
  EXPECT_EQ(default_seed(), 77U);
  ::setenv("STELLAR_SEED", "x", 1);
  EXPECT_EQ(default_seed(), 0U);
  ::unsetenv("STELLAR_SEED");
  EXPECT_EQ(default_seed(), 0U);
}

TEST_F(CliTest, FitRoundTripReproducesInProcessConstant) {
  ScanArgs args;
  args.family = "quadratic_phase";
  args.gamma = 1.0;
  args.n_min = 10;
  args.n_max = 40;
  std::ostringstream csv;
  cmd_scan(args, csv);
  std::vector<ScalingRow> rows;
  for (int n = 10; n <= 40; ++n) rows.push_back({n, geometric_entanglement(quadratic_phase_state(n, 1.0)).e_g});
  const double direct = fit_scaling(ScalingDataset(rows), ScalingModel::inverse_n_plus_1).constant;

  FitArgs fit;
  fit.in_path = write("q.csv", csv.str());
  std::ostringstream out;
  EXPECT_EQ(cmd_fit(fit, out), kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_NEAR(j["constant"].get<double>(), direct, 1e-12);
  EXPECT_EQ(j["residuals"].size(), 31U);

  fit.in_path = write("syn.csv", "n,e_g\n5,0.6666666666666667\n10,0.8181818181818181\n20,0.9047619047619048\n");
  std::ostringstream syn;
  cmd_fit(fit, syn);
  EXPECT_NEAR(nlohmann::json::parse(syn.str())["constant"].get<double>(), 2.0, 1e-12);
}

TEST_F(CliTest, ArrangementImportAndOptimize) {
  ArrangementArgs args;
  args.import_path = write("tetra.txt", format_arrangement(Arrangement(reference_maximal_configuration(4).vectors(), ArrangementKind::imported)));
  std::ostringstream out;
  cmd_arrangement(args, out);
  EXPECT_NE(out.str().find("# coulomb_energy: 3.67423461417476"), std::string::npos);
  EXPECT_NE(out.str().find("# e_g: 0.6666666666"), std::string::npos);
  // The emitted text is itself importable.
  EXPECT_EQ(import_arrangement(out.str()).n_points(), 4);

  ArrangementArgs opt;
  opt.kind = "coulomb";
  opt.n = 5;
  opt.restarts = 8;
  std::ostringstream out5;
  cmd_arrangement(opt, out5);
  const auto pos = out5.str().find("# e_g: ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NEAR(std::stod(out5.str().substr(pos + 7)), 0.6875, 1e-4);

  args.import_path = write("nohdr.txt", "0 0 1\n0 0 -1\n");
  args.no_header = true;
  std::ostringstream out2;
  cmd_arrangement(args, out2);
  const auto at = out2.str().find("# e_g: ");
  ASSERT_NE(at, std::string::npos);
  EXPECT_NEAR(std::stod(out2.str().substr(at + 7)), 0.5, 1e-12);
}

TEST_F(CliTest, SearchMaxReportsCertificates) {
  SearchArgs args;
  args.n = 4;
  args.majorana_out = (dir_ / "best.txt").string();
  std::ostringstream out;
  EXPECT_EQ(cmd_search_max(args, out), kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_TRUE(j["certificates_passed"].get<bool>());
  EXPECT_NEAR(j["e_g"].get<double>(), 2.0 / 3.0, 1e-9);
  EXPECT_EQ(parse_majorana_text(slurp(args.majorana_out)).n_qubits(), 4);
}

TEST_F(CliTest, Quantumness) {
  QuantumnessArgs args;
  args.input.dicke_path = write("ghz.json", ghz4_json());
  std::ostringstream out;
  cmd_quantumness(args, out);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_NEAR(j["q_b"].get<double>(), 0.7653669, 1e-7);
  args.input.dicke_path = write("coh.json", format_dicke_json(coherent_state(5, BlochPoint(0.4, 0.2))));
  std::ostringstream out2;
  cmd_quantumness(args, out2);
  EXPECT_NEAR(nlohmann::json::parse(out2.str())["q_b"].get<double>(), 0.0, 1e-7);
}
