#include "ddmac/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <boost/math/special_functions/digamma.hpp>

#include "ddmac/errors.hpp"

namespace ddmac {
namespace {

constexpr std::uint64_t kInterferenceStream1 = 0x47533100ULL;
constexpr std::uint64_t kInterferenceStream2 = 0x47533200ULL;
constexpr std::uint64_t kPairStream1 = 0x47563100ULL;
constexpr std::uint64_t kPairStream2 = 0x47563200ULL;
constexpr std::uint64_t kNoiseStream = 0x475a0000ULL;
constexpr std::uint64_t kBootstrapStream = 0x47420000ULL;
constexpr std::uint64_t kCalibrationStream = 0x47430000ULL;

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be positive and finite");
}

double log2_det3(const double a[3][3]) {
  const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                     a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (!(det > 0.0)) throw DegenerateConfigurationError("covariance of (U1, U2, Y) is singular");
  return std::log2(det);
}

struct TermSamples {
  std::vector<double> v1, v2, w, s_sum, s1, s2;
};

struct Terms {
  double h_v1, h_v2, h_w, h_s_sum, h_s1, h_s2;
  double raw() const { return h_v1 + h_v2 - h_w + h_s_sum - h_s1 - h_s2; }
};

Terms estimate_terms(TermSamples t, const GOptions& options) {
  Terms out{};
  out.h_v1 = mspacings_entropy_bits(std::move(t.v1), options.spacing_m);
  out.h_v2 = mspacings_entropy_bits(std::move(t.v2), options.spacing_m);
  out.h_w = options.lattice_spacing ? lattice_split_entropy_bits(t.w, *options.lattice_spacing, options.spacing_m)
                                    : mspacings_entropy_bits(std::move(t.w), options.spacing_m);
  out.h_s_sum = mspacings_entropy_bits(std::move(t.s_sum), options.spacing_m);
  out.h_s1 = mspacings_entropy_bits(std::move(t.s1), options.spacing_m);
  out.h_s2 = mspacings_entropy_bits(std::move(t.s2), options.spacing_m);
  return out;
}

}  // namespace

double high_snr_sum_capacity(double p1, double p2, double noise) {
  check_positive(p1, "P1");
  check_positive(p2, "P2");
  check_positive(noise, "N");
  return 0.5 * std::log2(std::min(p1, p2) / noise);
}

double shaping_loss() { return 0.5 * std::log2(std::numbers::pi * std::numbers::e / 6.0); }

double shaping_loss_db() { return 10.0 * std::log10(std::numbers::pi * std::numbers::e / 6.0); }

double gaussian_entropy_bits(double variance) {
  check_positive(variance, "variance");
  return 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e * variance);
}

double gaussian_costa_sum_rate_raw(double p1, double p2, double noise, double q1, double q2, double alpha1,
                                   double alpha2) {
  check_positive(p1, "P1");
  check_positive(p2, "P2");
  check_positive(noise, "N");
  check_positive(q1, "Q1");
  check_positive(q2, "Q2");
  const double var_u1 = p1 + alpha1 * alpha1 * q1;
  const double var_u2 = p2 + alpha2 * alpha2 * q2;
  const double var_y = p1 + p2 + q1 + q2 + noise;
  const double c1 = p1 + alpha1 * q1;
  const double c2 = p2 + alpha2 * q2;
  const double sigma[3][3] = {{var_u1, 0.0, c1}, {0.0, var_u2, c2}, {c1, c2, var_y}};
  const double i_joint = 0.5 * (std::log2(var_u1) + std::log2(var_u2) + std::log2(var_y) - log2_det3(sigma));
  const double i_s1 = 0.5 * std::log2(var_u1 / p1);
  const double i_s2 = 0.5 * std::log2(var_u2 / p2);
  return i_joint - i_s1 - i_s2;
}

double gaussian_costa_sum_rate(double p1, double p2, double noise, double q1, double q2, double alpha1,
                               double alpha2) {
  return std::max(0.0, gaussian_costa_sum_rate_raw(p1, p2, noise, q1, q2, alpha1, alpha2));
}

CostaSweep gaussian_costa_sweep(double p1, double p2, double noise, double q1, double q2,
                                const std::vector<double>& alpha_grid) {
  if (alpha_grid.empty()) throw DomainError("empty alpha grid");
  CostaSweep best{-1.0, 0.0, 0.0};
  for (double a1 : alpha_grid) {
    for (double a2 : alpha_grid) {
      const double v = gaussian_costa_sum_rate(p1, p2, noise, q1, q2, a1, a2);
      if (v > best.max_value) best = {v, a1, a2};
    }
  }
  return best;
}

double mspacings_entropy_bits(std::vector<double> samples, std::size_t m) {
  const std::size_t n = samples.size();
  if (n < 16) throw PrecisionError("m-spacings estimator needs at least 16 samples");
  if (m == 0) m = static_cast<std::size_t>(std::lround(std::cbrt(static_cast<double>(n))));
  if (m >= n) throw PrecisionError("spacing order must be below the sample count");
  std::sort(samples.begin(), samples.end());
  double acc = 0.0;
  for (std::size_t i = 0; i + m < n; ++i) {
    const double gap = samples[i + m] - samples[i];
    if (!(gap > 0.0)) throw PrecisionError("zero spacing in entropy estimate (discrete or duplicated samples)");
    acc += std::log(gap);
  }
  const double nats = acc / static_cast<double>(n - m) + boost::math::digamma(static_cast<double>(n) + 1.0) -
                      boost::math::digamma(static_cast<double>(m));
  return nats / std::numbers::ln2;
}

double miller_madow_entropy_bits(const std::vector<long long>& labels) {
  if (labels.empty()) throw PrecisionError("no samples");
  std::vector<long long> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double nats = 0.0;
  std::size_t bins = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double p = static_cast<double>(j - i) / n;
    nats -= p * std::log(p);
    ++bins;
    i = j;
  }
  nats += static_cast<double>(bins - 1) / (2.0 * n);
  return nats / std::numbers::ln2;
}

double lattice_split_entropy_bits(const std::vector<double>& samples, double spacing, std::size_t m) {
  check_positive(spacing, "lattice spacing");
  std::vector<long long> labels(samples.size());
  std::vector<double> residual(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double j = std::round(samples[i] / spacing);
    labels[i] = static_cast<long long>(j);
    residual[i] = samples[i] - spacing * j;
  }
  return miller_madow_entropy_bits(labels) + mspacings_entropy_bits(std::move(residual), m);
}

InterferenceSampler gaussian_sampler(double variance) {
  if (!(variance >= 0.0)) throw DomainError("variance must be non-negative");
  const double sd = std::sqrt(variance);
  return [sd](CounterRng& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    return sd * dist(rng);
  };
}

double entropy_calibration_residual(std::size_t samples, std::uint64_t seed) {
  CounterRng rng(seed, kCalibrationStream);
  std::normal_distribution<double> dist(0.0, 1.0);
  std::vector<double> x(samples);
  for (double& v : x) v = dist(rng);
  return mspacings_entropy_bits(std::move(x)) - gaussian_entropy_bits(1.0);
}

GEstimate g_functional(const PairSampler& pair1, const PairSampler& pair2, const NoiseSampler& noise,
                       const InterferenceSampler& interference1, const InterferenceSampler& interference2,
                       const GOptions& options) {
  const std::size_t n = options.samples;
  if (n < kMinEntropySamples) {
    throw PrecisionError("entropy estimation needs at least " + std::to_string(kMinEntropySamples) + " samples");
  }
  CounterRng rng_s1(options.seed, kInterferenceStream1);
  CounterRng rng_s2(options.seed, kInterferenceStream2);
  CounterRng rng_p1(options.seed, kPairStream1);
  CounterRng rng_p2(options.seed, kPairStream2);
  CounterRng rng_z(options.seed, kNoiseStream);

  TermSamples all;
  for (auto* v : {&all.v1, &all.v2, &all.w, &all.s_sum, &all.s1, &all.s2}) v->resize(n);
  double sq1 = 0.0;
  double sq2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double s1 = interference1(rng_s1);
    const double s2 = interference2(rng_s2);
    const auto [v1, v1p] = pair1(s1, rng_p1);
    const auto [v2, v2p] = pair2(s2, rng_p2);
    const double z = noise(rng_z);
    all.v1[i] = v1;
    all.v2[i] = v2;
    all.w[i] = v1p + v2p + z;
    all.s_sum[i] = s1 + s2;
    all.s1[i] = s1;
    all.s2[i] = s2;
    sq1 += (v1 - v1p) * (v1 - v1p);
    sq2 += (v2 - v2p) * (v2 - v2p);
  }

  std::vector<double> replicates;
  replicates.reserve(options.bootstrap);
  for (std::size_t b = 0; b < options.bootstrap; ++b) {
    CounterRng rng(options.seed, kBootstrapStream + b);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    TermSamples r;
    for (auto* v : {&r.v1, &r.v2, &r.w, &r.s_sum, &r.s1, &r.s2}) v->resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = pick(rng);
      r.v1[i] = all.v1[k];
      r.v2[i] = all.v2[k];
      r.w[i] = all.w[k];
      r.s_sum[i] = all.s_sum[k];
      r.s1[i] = all.s1[k];
      r.s2[i] = all.s2[k];
    }
    replicates.push_back(estimate_terms(std::move(r), options).raw());
  }

  const Terms t = estimate_terms(std::move(all), options);
  GEstimate out;
  out.raw = t.raw();
  out.value = std::max(0.0, out.raw);
  out.h_v1 = t.h_v1;
  out.h_v2 = t.h_v2;
  out.h_w = t.h_w;
  out.h_s_sum = t.h_s_sum;
  out.h_s1 = t.h_s1;
  out.h_s2 = t.h_s2;
  out.mean_sq_diff1 = sq1 / static_cast<double>(n);
  out.mean_sq_diff2 = sq2 / static_cast<double>(n);
  if (replicates.size() >= 2) {
    double mean = 0.0;
    for (double v : replicates) mean += v;
    mean /= static_cast<double>(replicates.size());
    double ss = 0.0;
    for (double v : replicates) ss += (v - mean) * (v - mean);
    out.std_error = std::sqrt(ss / static_cast<double>(replicates.size() - 1));
  }
  if (!std::isfinite(out.raw) || !std::isfinite(out.std_error)) throw PrecisionError("non-finite G estimate");
  if (out.std_error > options.max_std_error) {
    throw PrecisionError("bootstrap standard error " + std::to_string(out.std_error) + " exceeds " +
                         std::to_string(options.max_std_error));
  }
  return out;
}

double centered_mod(double x, double delta) {
  check_positive(delta, "modulus");
  double r = x - delta * std::floor(x / delta + 0.5);
  if (r >= 0.5 * delta) r -= delta;
  if (r < -0.5 * delta) r += delta;
  return r;
}

GaussianConfig gaussian_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("gaussian config must be a JSON object");
  GaussianConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "P1") cfg.p1 = value.get<double>();
      else if (key == "P2") cfg.p2 = value.get<double>();
      else if (key == "N") cfg.noise = value.get<double>();
      else if (key == "Q1") cfg.q1 = value.get<double>();
      else if (key == "Q2") cfg.q2 = value.get<double>();
      else if (key == "samples") cfg.samples = value.get<std::size_t>();
      else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
      else if (key == "bootstrap") cfg.bootstrap = value.get<std::size_t>();
      else throw ParseError("unknown gaussian config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad gaussian config value: ") + e.what());
  }
  return cfg;
}

nlohmann::json to_json(const GaussianConfig& cfg) {
  return {{"P1", cfg.p1},           {"P2", cfg.p2},     {"N", cfg.noise},
          {"Q1", cfg.q1},           {"Q2", cfg.q2},     {"samples", cfg.samples},
          {"seed", cfg.seed},       {"bootstrap", cfg.bootstrap}};
}

ModDeltaReport mod_delta_sum_rate_estimate(const GaussianConfig& cfg) {
  const double capacity = high_snr_sum_capacity(cfg.p1, cfg.p2, cfg.noise);
  check_positive(cfg.q1, "Q1");
  check_positive(cfg.q2, "Q2");
  if (std::min(cfg.p1, cfg.p2) / cfg.noise < 100.0) throw DomainError("mod-Delta estimate needs SNR >= 100");
  if (cfg.q1 < 1e4 * cfg.p1 || cfg.q2 < 1e4 * cfg.p2) {
    throw DomainError("mod-Delta estimate needs Q_i >= 10^4 P_i");
  }

  const double delta1 = std::sqrt(12.0 * cfg.p1);
  const double delta2 = std::sqrt(12.0 * cfg.p2);
  auto family = [](double delta) -> PairSampler {
    return [delta](double s, CounterRng&) { return std::pair{s, s + centered_mod(-s, delta)}; };
  };

  GOptions options;
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  options.bootstrap = cfg.bootstrap;
  if (delta1 == delta2) options.lattice_spacing = delta1;

  const GEstimate g = g_functional(family(delta1), family(delta2), gaussian_sampler(cfg.noise),
                                   gaussian_sampler(cfg.q1), gaussian_sampler(cfg.q2), options);
  ModDeltaReport r;
  r.capacity = capacity;
  r.estimate = g.value;
  r.raw = g.raw;
  r.gap = capacity - g.value;
  r.std_error = g.std_error;
  r.delta1 = delta1;
  r.delta2 = delta2;
  r.h_v1 = g.h_v1;
  r.h_v2 = g.h_v2;
  r.h_s1 = g.h_s1;
  r.h_s2 = g.h_s2;
  r.mean_sq_diff1 = g.mean_sq_diff1;
  r.mean_sq_diff2 = g.mean_sq_diff2;
  return r;
}

nlohmann::json to_json(const ModDeltaReport& r) {
  return {
      {"capacity", r.capacity},
      {"estimate", r.estimate},
      {"estimate_raw", r.raw},
      {"gap", r.gap},
      {"std_error", r.std_error},
      {"delta1", r.delta1},
      {"delta2", r.delta2},
      {"h_v1", r.h_v1},
      {"h_v2", r.h_v2},
      {"h_s1", r.h_s1},
      {"h_s2", r.h_s2},
      {"mean_sq_diff1", r.mean_sq_diff1},
      {"mean_sq_diff2", r.mean_sq_diff2},
  };
}

}  // namespace ddmac
