#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "ddmac/single_letter.hpp"

using namespace ddmac::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "ddmac_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  std::ostringstream log;
  return run_guarded(fn, log);
}

}  // namespace

TEST_CASE("region CSV") {
  RegionArgs args;
  args.steps = 11;
  args.grid = 128;
  args.out = scratch_dir() / "region.csv";
  std::ostringstream log;
  REQUIRE(cmd_region(args, log) == kOk);
  const auto rows = lines(slurp(args.out));
  REQUIRE(rows.size() == 12);
  CHECK(rows[0] == "q,capacity,fmax,envelope,gap,alpha_opt");
  CHECK(rows[1].rfind("0.000000,0.000000,0.000000,0.000000,0.000000,", 0) == 0);
  CHECK(rows[7].rfind("0.300000,0.881291,0.762582,0.762582,0.118709,0.300000", 0) == 0);
  const auto manifest = nlohmann::json::parse(slurp(fs::path(args.out.string() + ".manifest.json")));
  CHECK(manifest["command"] == "region");
  CHECK(manifest["params"]["steps"] == 11);
  CHECK(manifest["outputs"][0] == args.out.string());
  CHECK(rows[1].find("nan") == std::string::npos);

  args.q_min = 0.4;
  args.q_max = 0.3;
  CHECK(guarded([&] { return cmd_region(args, log); }) == kUsage);
  args.q_min = 0.0;
  args.q_max = 0.6;
  CHECK(guarded([&] { return cmd_region(args, log); }) == kUsage);
}

TEST_CASE("simulate JSON and exit codes") {
  SimulateArgs args;
  args.q1 = args.q2 = 1.0 / 7.0;
  args.trials = 10000;
  std::ostringstream out, log;
  REQUIRE(cmd_simulate(args, out, log) == kOk);
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["decode_errors"] == 0);
  CHECK(doc["manifest"]["code_sha256"] == ddmac::sha256_hex(ddmac::format_code_text(ddmac::hamming74_parity_check())));

  args.q1 = 0.1;
  CHECK(guarded([&] { return cmd_simulate(args, out, log); }) == kConfiguration);
  args.q1 = 0.2;
  args.l1 = 1;
  args.l2 = 1;
  CHECK(guarded([&] { return cmd_simulate(args, out, log); }) == kUsage);
  args.l1.reset();
  args.l2.reset();
  args.code = (scratch_dir() / "missing.txt").string();
  CHECK(guarded([&] { return cmd_simulate(args, out, log); }) == kUsage);

  const fs::path bad = scratch_dir() / "bad_code.txt";
  std::ofstream(bad) << "4 2\n1100\n1100\n";
  args.code = bad.string();
  CHECK(guarded([&] { return cmd_simulate(args, out, log); }) == kConfiguration);
}

TEST_CASE("simulate accepts code files") {
  const fs::path file = scratch_dir() / "golay.txt";
  std::ofstream(file) << ddmac::format_code_text(ddmac::golay23_parity_check());
  SimulateArgs args;
  args.code = file.string();
  args.q1 = args.q2 = 3.0 / 23.0;
  args.l1 = 6;
  args.trials = 500;
  args.out = scratch_dir() / "golay.json";
  std::ostringstream out, log;
  REQUIRE(cmd_simulate(args, out, log) == kOk);
  const auto doc = nlohmann::json::parse(slurp(*args.out));
  CHECK(doc["l2"] == 5);
  CHECK(doc["covering_radius"] == 3);
  CHECK(doc["manifest"]["code_sha256"] == ddmac::sha256_hex(slurp(file)));
}

TEST_CASE("kmdemo CSV") {
  KmdemoArgs args;
  args.theta = {0.0, 0.1};
  args.trials = 2000;
  args.out = scratch_dir() / "km.csv";
  std::ostringstream log;
  REQUIRE(cmd_kmdemo(args, log) == kOk);
  const auto rows = lines(slurp(args.out));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "theta,km_bound,sw_bound,gap,empirical_error_rate,code_rate");
  CHECK(rows[1] == "0.000000,0.000000,1.000000,1.000000,0.000000,0.428571");
  args.theta = {0.7};
  CHECK(guarded([&] { return cmd_kmdemo(args, log); }) == kUsage);
}

TEST_CASE("gaussian command") {
  GaussianArgs args;
  args.config = scratch_dir() / "nope.json";
  std::ostringstream out, log;
  CHECK(guarded([&] { return cmd_gaussian(args, out, log); }) == kUsage);

  const fs::path cfg = scratch_dir() / "g.json";
  std::ofstream(cfg) << R"({"samples": 100000, "bootstrap": 3, "seed": 5})";
  args.config = cfg;
  args.calibration_samples = 100000;
  REQUIRE(cmd_gaussian(args, out, log) == kOk);
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(std::abs(doc["gap"].get<double>() - 0.25) <= 0.03);
  CHECK(std::abs(doc["calibration_residual"].get<double>()) < 0.01);
  CHECK(doc["manifest"]["seed"] == 5);

  std::ofstream(cfg) << R"({"samples": "many"})";
  CHECK(guarded([&] { return cmd_gaussian(args, out, log); }) == kUsage);
}

TEST_CASE("table cap environment override") {
  ::setenv(kTableCapEnv, "10", 1);
  SimulateArgs args;
  args.q1 = args.q2 = 0.2;
  std::ostringstream out, log;
  CHECK(guarded([&] { return cmd_simulate(args, out, log); }) == kConfiguration);
  ::setenv(kTableCapEnv, "junk", 1);
  CHECK(guarded([&] { return cmd_simulate(args, out, log); }) == kUsage);
  ::unsetenv(kTableCapEnv);
  CHECK(table_cap_bits() == ddmac::kDefaultTableCapBits);
}

TEST_CASE("csv numbers") {
  CHECK(csv_number(-1e-9) == "0.000000");
  CHECK(csv_number(0.1234567) == "0.123457");
  CHECK_THROWS(csv_number(std::nan("")));
}
