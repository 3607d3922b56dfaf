#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ddmac/coset_code.hpp"

namespace ddmac::cli {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr const char* kTableCapEnv = "DDMAC_COSET_TABLE_CAP_BITS";

enum ExitCode : int { kOk = 0, kUsage = 1, kConfiguration = 2, kInternal = 3 };

/// Bad command-line input (range, missing file, inconsistent lengths).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Table cap from the environment, or the library default.
std::uint64_t table_cap_bits();

struct ResolvedCode {
  std::string id;      ///< builtin name or file path as given
  std::string sha256;  ///< of the file bytes, or of the canonical text for builtins
  Gf2Matrix parity_check;
};

/// "hamming7" and "golay23" name the fixtures; anything else is a code file.
ResolvedCode resolve_code(const std::string& spec);

struct RegionArgs {
  double q_min = 0.0;
  double q_max = 0.5;
  std::size_t steps = 512;
  std::size_t grid = 1024;
  std::filesystem::path out;
};

struct SimulateArgs {
  std::string code = "hamming7";
  double q1 = 0.5;
  double q2 = 0.5;
  std::optional<std::size_t> l1;  ///< defaults to n - k
  std::optional<std::size_t> l2;  ///< defaults to 0
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out;
};

struct KmdemoArgs {
  std::vector<double> theta{0.02};
  std::string code = "hamming7";
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::filesystem::path out;
};

struct GaussianArgs {
  std::optional<std::filesystem::path> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out;
  std::size_t calibration_samples = 1000000;
};

// Each command writes its artefact (and manifest) and returns an exit code.
// Errors propagate as exceptions; run_guarded maps them to exit codes.
int cmd_region(const RegionArgs& args, std::ostream& log);
int cmd_simulate(const SimulateArgs& args, std::ostream& stdout_stream, std::ostream& log);
int cmd_kmdemo(const KmdemoArgs& args, std::ostream& log);
int cmd_gaussian(const GaussianArgs& args, std::ostream& stdout_stream, std::ostream& log);

template <typename Fn>
int run_guarded(Fn&& fn, std::ostream& log);

/// Maps the current exception to an exit code and prints it.
int report_exception(std::ostream& log);

template <typename Fn>
int run_guarded(Fn&& fn, std::ostream& log) {
  try {
    return fn();
  } catch (...) {
    return report_exception(log);
  }
}

/// Fixed six-decimal CSV number; rounds tiny magnitudes to an unsigned zero.
std::string csv_number(double x);

nlohmann::json make_manifest(const std::string& command, const nlohmann::json& params, std::uint64_t seed,
                             const std::optional<std::string>& code_sha256,
                             const std::vector<std::string>& outputs);

}  // namespace ddmac::cli
