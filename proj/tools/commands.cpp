#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ddmac/errors.hpp"
#include "ddmac/gaussian.hpp"
#include "ddmac/korner_marton.hpp"
#include "ddmac/linear_scheme.hpp"
#include "ddmac/rng.hpp"
#include "ddmac/single_letter.hpp"

namespace ddmac::cli {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path.string());
  out << bytes;
  if (!out) throw UsageError("write failed for " + path.string());
}

std::filesystem::path sidecar_path(const std::filesystem::path& out) {
  return std::filesystem::path(out.string() + ".manifest.json");
}

void require_out(const std::filesystem::path& out) {
  if (out.empty()) throw UsageError("--out is required");
}

}  // namespace

std::uint64_t table_cap_bits() {
  const char* env = std::getenv(kTableCapEnv);
  if (env == nullptr || *env == '\0') return kDefaultTableCapBits;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) {
    throw UsageError(std::string(kTableCapEnv) + " must be a positive integer");
  }
  return v;
}

ResolvedCode resolve_code(const std::string& spec) {
  if (spec == "hamming7" || spec == "golay23") {
    Gf2Matrix h = spec == "hamming7" ? hamming74_parity_check() : golay23_parity_check();
    return {spec, sha256_hex(format_code_text(h)), std::move(h)};
  }
  const std::string text = read_file(spec);
  return {spec, sha256_hex(text), parse_code_text(text)};
}

std::string csv_number(double x) {
  if (!std::isfinite(x)) throw std::logic_error("non-finite value in CSV output");
  if (std::abs(x) < 5e-7) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

nlohmann::json make_manifest(const std::string& command, const nlohmann::json& params, std::uint64_t seed,
                             const std::optional<std::string>& code_sha256,
                             const std::vector<std::string>& outputs) {
  nlohmann::json m = {
      {"command", command},
      {"params", params},
      {"seed", seed},
      {"version", kArtifactVersion},
      {"rng", CounterRng::kName},
      {"outputs", outputs},
  };
  m["code_sha256"] = code_sha256 ? nlohmann::json(*code_sha256) : nlohmann::json(nullptr);
  return m;
}

int report_exception(std::ostream& log) {
  try {
    throw;
  } catch (const UsageError& e) {
    log << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    log << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    log << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    log << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    log << "configuration error: " << e.what() << '\n';
    return kConfiguration;
  }
}

int cmd_region(const RegionArgs& args, std::ostream& log) {
  require_out(args.out);
  if (!(args.q_min >= 0.0 && args.q_min < args.q_max && args.q_max <= 0.5)) {
    throw UsageError("need 0 <= q_min < q_max <= 0.5");
  }
  if (args.steps < 2) throw UsageError("--steps must be at least 2");
  if (args.grid < 2) throw UsageError("--grid must be at least 2");

  const std::vector<double> q = linear_grid(args.q_min, args.q_max, args.steps);
  const FmaxCurve sampled = sample_fmax_diagonal(q, args.grid);
  const RegionCurve envelope = upper_convex_envelope(sampled.curve);

  std::ostringstream csv;
  csv << "q,capacity,fmax,envelope,gap,alpha_opt\n";
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double cap = capacity_sum(q[i], q[i]);
    csv << csv_number(q[i]) << ',' << csv_number(cap) << ',' << csv_number(sampled.curve.values[i]) << ','
        << csv_number(envelope.values[i]) << ',' << csv_number(cap - envelope.values[i]) << ','
        << csv_number(sampled.alpha[i]) << '\n';
  }
  write_file(args.out, csv.str());

  const nlohmann::json params = {{"q_min", args.q_min}, {"q_max", args.q_max}, {"steps", args.steps},
                                 {"grid", args.grid},   {"breakpoints", envelope.breakpoints}};
  write_file(sidecar_path(args.out),
             make_manifest("region", params, 0, std::nullopt, {args.out.string()}).dump(2) + "\n");
  log << "wrote " << q.size() << " rows to " << args.out.string() << '\n';
  return kOk;
}

int cmd_simulate(const SimulateArgs& args, std::ostream& stdout_stream, std::ostream& log) {
  const ResolvedCode resolved = resolve_code(args.code);
  const LinearCode code = LinearCode::build(resolved.parity_check, table_cap_bits());
  const std::size_t r = code.redundancy();
  if ((args.l1 && *args.l1 > r) || (args.l2 && *args.l2 > r)) {
    throw UsageError("message lengths cannot exceed n - k = " + std::to_string(r));
  }
  const std::size_t l1 = args.l1 ? *args.l1 : r - args.l2.value_or(0);
  const std::size_t l2 = args.l2 ? *args.l2 : r - l1;
  if (l1 + l2 != r) {
    throw UsageError("l1 + l2 = " + std::to_string(l1 + l2) + " but n - k = " + std::to_string(r));
  }

  ChannelConfig cfg;
  cfg.n = code.n();
  cfg.q1 = args.q1;
  cfg.q2 = args.q2;
  cfg.seed = args.seed;
  const SchemeReport report = run_simulation(cfg, code, SplitSpec{l1, l2}, args.trials, resolved.id);

  nlohmann::json doc = to_json(report);
  const nlohmann::json params = {{"code", args.code}, {"q1", args.q1}, {"q2", args.q2}, {"l1", l1},
                                 {"l2", l2},          {"trials", args.trials}};
  std::vector<std::string> outputs;
  if (args.out) outputs.push_back(args.out->string());
  doc["manifest"] = make_manifest("simulate", params, args.seed, resolved.sha256, outputs);
  const std::string text = doc.dump(2) + "\n";
  if (args.out) {
    write_file(*args.out, text);
  } else {
    stdout_stream << text;
  }
  if (report.decode_errors > 0) {
    log << "decode errors: " << report.decode_errors << " of " << report.trials << '\n';
    return kInternal;
  }
  return kOk;
}

int cmd_kmdemo(const KmdemoArgs& args, std::ostream& log) {
  require_out(args.out);
  if (args.theta.empty()) throw UsageError("need at least one --theta");
  const ResolvedCode resolved = resolve_code(args.code);
  const LinearCode code = LinearCode::build(resolved.parity_check, table_cap_bits());

  std::ostringstream csv;
  csv << "theta,km_bound,sw_bound,gap,empirical_error_rate,code_rate\n";
  for (double theta : args.theta) {
    const KmReport r = km_scheme_demo(KmSourceConfig{code.n(), theta, args.seed}, code, args.trials);
    const double km = km_rate_sum(theta);
    const double sw = sw_rate_sum(theta);
    csv << csv_number(theta) << ',' << csv_number(km) << ',' << csv_number(sw) << ',' << csv_number(sw - km) << ','
        << csv_number(r.error_rate) << ',' << csv_number(r.code_rate) << '\n';
  }
  write_file(args.out, csv.str());
  const nlohmann::json params = {{"theta", args.theta}, {"code", args.code}, {"trials", args.trials}};
  write_file(sidecar_path(args.out),
             make_manifest("kmdemo", params, args.seed, resolved.sha256, {args.out.string()}).dump(2) + "\n");
  log << "wrote " << args.theta.size() << " rows to " << args.out.string() << '\n';
  return kOk;
}

int cmd_gaussian(const GaussianArgs& args, std::ostream& stdout_stream, std::ostream& log) {
  GaussianConfig cfg;
  if (args.config) {
    const std::string text = read_file(*args.config);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    try {
      cfg = gaussian_config_from_json(j);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
  }
  if (args.seed) cfg.seed = *args.seed;

  const ModDeltaReport report = mod_delta_sum_rate_estimate(cfg);
  const double calibration = entropy_calibration_residual(args.calibration_samples, cfg.seed);

  nlohmann::json doc = {
      {"config", to_json(cfg)},
      {"capacity", report.capacity},
      {"mod_delta_estimate", report.estimate},
      {"gap", report.gap},
      {"std_error", report.std_error},
      {"shaping_loss", shaping_loss()},
      {"calibration_residual", calibration},
      {"calibration_samples", args.calibration_samples},
      {"details", to_json(report)},
  };
  std::vector<std::string> outputs;
  if (args.out) outputs.push_back(args.out->string());
  nlohmann::json params = to_json(cfg);
  params["calibration_samples"] = args.calibration_samples;
  doc["manifest"] = make_manifest("gaussian", params, cfg.seed, std::nullopt, outputs);
  const std::string text = doc.dump(2) + "\n";
  if (args.out) {
    write_file(*args.out, text);
  } else {
    stdout_stream << text;
  }
  log << "gap " << report.gap << " (shaping loss " << shaping_loss() << ")\n";
  return kOk;
}

}  // namespace ddmac::cli
