#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ddmac/rng.hpp"

namespace ddmac {

// Gaussian doubly-dirty MAC  Y = X1 + X2 + S1 + S2 + Z,  S_i ~ N(0, Q_i),
// Z ~ N(0, N). Closed forms plus Monte-Carlo evaluation of the sum-rate
// functional for fixed strategy families.

/// (1/2) log2(min(P1, P2) / N).
double high_snr_sum_capacity(double p1, double p2, double noise);

/// (1/2) log2(pi e / 6).
double shaping_loss();
/// The same loss as a power ratio, 10 log10(pi e / 6).
double shaping_loss_db();

/// (1/2) log2(2 pi e variance).
double gaussian_entropy_bits(double variance);

/// I(U1,U2;Y) - I(U1;S1) - I(U2;S2) for U_i = X_i + alpha_i S_i with
/// X_i ~ N(0, P_i) independent of S_i, before clamping. Throws DomainError for
/// non-positive variances, DegenerateConfigurationError for a singular
/// covariance.
double gaussian_costa_sum_rate_raw(double p1, double p2, double noise, double q1, double q2, double alpha1,
                                   double alpha2);
double gaussian_costa_sum_rate(double p1, double p2, double noise, double q1, double q2, double alpha1,
                               double alpha2);

struct CostaSweep {
  double max_value = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
};

/// Maximum of the clamped rate over alpha_i in `alpha_grid` x `alpha_grid`.
CostaSweep gaussian_costa_sweep(double p1, double p2, double noise, double q1, double q2,
                                const std::vector<double>& alpha_grid);

// Differential entropy estimators (bits).

/// m-spacings estimate: mean ln(x_(i+m) - x_(i)) + psi(n+1) - psi(m), with
/// m = round(n^(1/3)) when `m` is 0. Sorts its argument. Throws PrecisionError
/// on fewer than 16 samples or a zero spacing.
double mspacings_entropy_bits(std::vector<double> samples, std::size_t m = 0);

/// Plug-in entropy of integer labels with the Miller-Madow correction.
double miller_madow_entropy_bits(const std::vector<long long>& labels);

/// h(W) = H(J) + h(R) with J = round(W / spacing), R = W - spacing J, for
/// variables concentrated near a lattice where m-spacings alone breaks down.
double lattice_split_entropy_bits(const std::vector<double>& samples, double spacing, std::size_t m = 0);

/// Estimator residual on `samples` draws of N(0, 1): estimate - (1/2) log2(2 pi e).
double entropy_calibration_residual(std::size_t samples, std::uint64_t seed);

// Sum-rate functional
//   G = [h(V1) + h(V2) - h(V1' + V2' + Z) + h(S1 + S2) - h(S1) - h(S2)]^+.

/// Draws S_i.
using InterferenceSampler = std::function<double(CounterRng&)>;
/// Draws (V_i, V_i') given S_i.
using PairSampler = std::function<std::pair<double, double>(double s, CounterRng&)>;
using NoiseSampler = std::function<double(CounterRng&)>;

/// N(0, variance) draws.
InterferenceSampler gaussian_sampler(double variance);

struct GOptions {
  std::size_t samples = 1000000;
  std::uint64_t seed = 0;
  std::size_t bootstrap = 10;
  /// When set, h(V1' + V2' + Z) uses the lattice split at this spacing.
  std::optional<double> lattice_spacing;
  std::size_t spacing_m = 0;  ///< 0 selects n^(1/3)
  double max_std_error = 0.05;
};

inline constexpr std::size_t kMinEntropySamples = 10000;

struct GEstimate {
  double value = 0.0;
  double raw = 0.0;
  double std_error = 0.0;
  double h_v1 = 0.0;
  double h_v2 = 0.0;
  double h_w = 0.0;  ///< h(V1' + V2' + Z)
  double h_s_sum = 0.0;
  double h_s1 = 0.0;
  double h_s2 = 0.0;
  double mean_sq_diff1 = 0.0;  ///< sample E(V1 - V1')^2
  double mean_sq_diff2 = 0.0;
};

/// Throws PrecisionError when samples < 10^4, the estimate is not finite, or
/// the bootstrap standard error exceeds options.max_std_error.
GEstimate g_functional(const PairSampler& pair1, const PairSampler& pair2, const NoiseSampler& noise,
                       const InterferenceSampler& interference1, const InterferenceSampler& interference2,
                       const GOptions& options);

/// Centered modulo: x mod delta in [-delta/2, delta/2).
double centered_mod(double x, double delta);

struct GaussianConfig {
  double p1 = 1.0;
  double p2 = 1.0;
  double noise = 1e-3;
  double q1 = 1e6;
  double q2 = 1e6;
  std::size_t samples = 1000000;
  std::uint64_t seed = 1;
  std::size_t bootstrap = 10;
};

GaussianConfig gaussian_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GaussianConfig& cfg);

struct ModDeltaReport {
  double capacity = 0.0;
  double estimate = 0.0;
  double raw = 0.0;
  double gap = 0.0;
  double std_error = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double h_v1 = 0.0;
  double h_v2 = 0.0;
  double h_s1 = 0.0;
  double h_s2 = 0.0;
  double mean_sq_diff1 = 0.0;
  double mean_sq_diff2 = 0.0;
};

/// G at the mod-Delta family, Delta_i = sqrt(12 P_i), conditioned on U_i = 0:
/// V_i = S_i and V_i' = S_i + (-S_i mod Delta_i). Requires min(P1,P2)/N >= 100
/// and Q_i >= 10^4 P_i (DomainError otherwise).
ModDeltaReport mod_delta_sum_rate_estimate(const GaussianConfig& cfg);

nlohmann::json to_json(const ModDeltaReport& report);

}  // namespace ddmac
