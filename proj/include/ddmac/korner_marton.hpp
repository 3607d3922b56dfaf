#pragma once

#include <cstddef>
#include <cstdint>

#include "json.hpp"

#include "ddmac/coset_code.hpp"
#include "ddmac/gf2.hpp"

namespace ddmac {

// Distributed encoding of the modulo-two sum Z = X ^ Y of a doubly symmetric
// binary source pair, P(X != Y) = theta.

/// 2 H_b(theta): both encoders send H x and H y.
double km_rate_sum(double theta);

/// 1 + H_b(theta) = H(X, Y).
double sw_rate_sum(double theta);

/// 1 - (1-theta)^n - n theta (1-theta)^{n-1}: probability that a length-n
/// BSC(theta) error pattern has weight at least two.
double km_single_error_block_rate(double theta, std::size_t n);

struct KmSourceConfig {
  std::size_t n = 0;
  double theta = 0.0;
  std::uint64_t seed = 0;

  /// Throws DomainError unless 1 <= n <= 64 and theta in [0, 1/2].
  void validate() const;
};

struct KmBlock {
  BitVector x;
  BitVector y;
  BitVector z;
};

/// Source pair number `draw_index`: x uniform, z i.i.d. Bernoulli(theta), y = x ^ z.
KmBlock draw_source_block(const KmSourceConfig& cfg, std::uint64_t draw_index);

/// z_hat = f(H x ^ H y).
BitVector km_decode(const BitVector& syndrome_x, const BitVector& syndrome_y, const LinearCode& code);

struct KmReport {
  std::uint64_t trials = 0;
  std::uint64_t block_errors = 0;
  double error_rate = 0.0;
  double theta = 0.0;
  std::size_t n = 0;
  std::size_t k = 0;
  double code_rate = 0.0;  ///< per-encoder rate (n - k) / n
  std::uint64_t seed = 0;
};

/// Throws DimensionError if cfg.n differs from the code length.
KmReport km_scheme_demo(const KmSourceConfig& cfg, const LinearCode& code, std::uint64_t trials);

nlohmann::json to_json(const KmReport& report);

}  // namespace ddmac
