#include "ddmac/korner_marton.hpp"

#include <cmath>
#include <string>

#include "ddmac/errors.hpp"
#include "ddmac/rng.hpp"
#include "ddmac/single_letter.hpp"

namespace ddmac {
namespace {

constexpr std::uint64_t kSourceStream = 0x4b4d534f55ULL;

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= 0.5)) throw DomainError("theta must lie in [0, 1/2]");
}

}  // namespace

double km_rate_sum(double theta) {
  check_theta(theta);
  return 2.0 * binary_entropy(theta);
}

double sw_rate_sum(double theta) {
  check_theta(theta);
  return 1.0 + binary_entropy(theta);
}

double km_single_error_block_rate(double theta, std::size_t n) {
  check_theta(theta);
  const double dn = static_cast<double>(n);
  return 1.0 - std::pow(1.0 - theta, dn) - dn * theta * std::pow(1.0 - theta, dn - 1.0);
}

void KmSourceConfig::validate() const {
  if (n < 1 || n > BitVector::kMaxLength) throw DomainError("block length must be in [1, 64]");
  check_theta(theta);
}

KmBlock draw_source_block(const KmSourceConfig& cfg, std::uint64_t draw_index) {
  cfg.validate();
  CounterRng rng(cfg.seed, kSourceStream ^ (draw_index * 0x9e3779b97f4a7c15ULL));
  const BitVector x(cfg.n, rng.bits(static_cast<unsigned>(cfg.n)));
  BitVector z(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    if (rng.bernoulli(cfg.theta)) z.set(i, true);
  }
  return {x, x ^ z, z};
}

BitVector km_decode(const BitVector& syndrome_x, const BitVector& syndrome_y, const LinearCode& code) {
  if (syndrome_x.size() != code.redundancy() || syndrome_y.size() != code.redundancy()) {
    throw DimensionError("syndrome length must be n - k");
  }
  return code.leader(syndrome_x ^ syndrome_y);
}

KmReport km_scheme_demo(const KmSourceConfig& cfg, const LinearCode& code, std::uint64_t trials) {
  cfg.validate();
  if (cfg.n != code.n()) {
    throw DimensionError("source block length " + std::to_string(cfg.n) + " differs from code length " +
                         std::to_string(code.n()));
  }
  KmReport report;
  report.trials = trials;
  report.theta = cfg.theta;
  report.n = code.n();
  report.k = code.k();
  report.code_rate = static_cast<double>(code.redundancy()) / static_cast<double>(code.n());
  report.seed = cfg.seed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const KmBlock block = draw_source_block(cfg, t);
    const BitVector z_hat = km_decode(code.syndrome(block.x), code.syndrome(block.y), code);
    if (z_hat != block.z) ++report.block_errors;
  }
  if (trials > 0) report.error_rate = static_cast<double>(report.block_errors) / static_cast<double>(trials);
  return report;
}

nlohmann::json to_json(const KmReport& report) {
  return {
      {"trials", report.trials},
      {"block_errors", report.block_errors},
      {"error_rate", report.error_rate},
      {"theta", report.theta},
      {"n", report.n},
      {"k", report.k},
      {"code_rate", report.code_rate},
      {"seed", report.seed},
      {"rng", CounterRng::kName},
  };
}

}  // namespace ddmac
