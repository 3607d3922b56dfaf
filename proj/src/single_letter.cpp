#include "ddmac/single_letter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ddmac/errors.hpp"

namespace ddmac {
namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kAlphaTolerance = 1e-6;

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError(std::string(what) + " must lie in [0, 1]");
}

void check_constraint(double q, const char* what) {
  if (!(q >= 0.0 && q <= 0.5)) throw DomainError(std::string(what) + " must lie in [0, 1/2]");
}

// Entropy without domain checks, for inner loops over validated inputs.
inline double hb(double p) noexcept {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

inline double conv(double x, double y) noexcept { return x + y - 2.0 * x * y; }

inline double reduced_objective(double a1, double a2, double q1, double q2) noexcept {
  return hb(a1) + hb(a2) - hb(conv(positive_part(a1 - q1), positive_part(a2 - q2))) - 1.0;
}

// Golden-section maximisation of g on [lo, hi]; returns the best evaluated point.
template <typename Fn>
std::pair<double, double> golden_max(Fn&& g, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double gc = g(c);
  double gd = g(d);
  while (b - a > kAlphaTolerance) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - kInvPhi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + kInvPhi * (b - a);
      gd = g(d);
    }
  }
  return gc >= gd ? std::pair{c, gc} : std::pair{d, gd};
}

// Best point of g on [lo, hi], evaluating the kink separately when it is inside.
template <typename Fn>
std::pair<double, double> refine_coordinate(Fn&& g, double lo, double hi, double kink) {
  std::pair<double, double> best{lo, g(lo)};
  auto consider = [&best](std::pair<double, double> cand) {
    if (cand.second > best.second) best = cand;
  };
  consider({hi, g(hi)});
  if (kink > lo && kink < hi) {
    consider({kink, g(kink)});
    consider(golden_max(g, lo, kink));
    consider(golden_max(g, kink, hi));
  } else {
    consider(golden_max(g, lo, hi));
  }
  return best;
}

}  // namespace

double binary_entropy(double p) {
  check_probability(p, "binary_entropy argument");
  return hb(p);
}

double binary_convolution(double x, double y) {
  check_probability(x, "binary_convolution argument");
  check_probability(y, "binary_convolution argument");
  return (1.0 - x) * y + (1.0 - y) * x;
}

double entropy_bits(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double capacity_sum(double q1, double q2) {
  check_constraint(q1, "q1");
  check_constraint(q2, "q2");
  return std::min(hb(q1), hb(q2));
}

double one_dirty_capacity(double q1) {
  check_constraint(q1, "q1");
  return hb(q1);
}

JointDist2x2::JointDist2x2(const Table& p) : p_(p) {
  double total = 0.0;
  for (const auto& row : p_) {
    for (double v : row) {
      if (!(v >= 0.0)) throw InvalidDistributionError("joint table has a negative or NaN entry");
      total += v;
    }
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw InvalidDistributionError("joint table sums to " + std::to_string(total));
  }
}

JointDist2x2 JointDist2x2::from_transitions(double alpha, double delta, double gamma) {
  check_probability(alpha, "alpha");
  check_probability(delta, "delta");
  check_probability(gamma, "gamma");
  return JointDist2x2(Table{{{(1.0 - alpha) * (1.0 - delta), (1.0 - alpha) * delta},
                             {alpha * gamma, alpha * (1.0 - gamma)}}});
}

double f_general_raw(const JointDist2x2& d1, const JointDist2x2& d2) {
  const double sum_one = conv(d1.prob_v_prime_one(), d2.prob_v_prime_one());
  return hb(d1.prob_v_one()) + hb(d2.prob_v_one()) - hb(sum_one) - 1.0;
}

double f_general(const JointDist2x2& d1, const JointDist2x2& d2) { return positive_part(f_general_raw(d1, d2)); }

double f_reduced_raw(double alpha1, double alpha2, double q1, double q2) {
  check_constraint(alpha1, "alpha1");
  check_constraint(alpha2, "alpha2");
  check_constraint(q1, "q1");
  check_constraint(q2, "q2");
  return reduced_objective(alpha1, alpha2, q1, q2);
}

double f_reduced(double alpha1, double alpha2, double q1, double q2) {
  return positive_part(f_reduced_raw(alpha1, alpha2, q1, q2));
}

FmaxResult f_max(double q1, double q2, std::size_t grid_resolution) {
  check_constraint(q1, "q1");
  check_constraint(q2, "q2");
  if (grid_resolution < 2) throw DomainError("f_max grid needs at least 2 points per axis");

  const std::size_t g = grid_resolution;
  const double step = 0.5 / static_cast<double>(g - 1);
  std::vector<double> alpha(g), h(g), excess1(g), excess2(g);
  for (std::size_t i = 0; i < g; ++i) {
    alpha[i] = i + 1 == g ? 0.5 : static_cast<double>(i) * step;
    h[i] = hb(alpha[i]);
    excess1[i] = positive_part(alpha[i] - q1);
    excess2[i] = positive_part(alpha[i] - q2);
  }

  double best = -std::numeric_limits<double>::infinity();
  std::size_t bi = 0;
  std::size_t bj = 0;
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      const double v = h[i] + h[j] - hb(conv(excess1[i], excess2[j])) - 1.0;
      if (v > best) {
        best = v;
        bi = i;
        bj = j;
      }
    }
  }

  double a1 = alpha[bi];
  double a2 = alpha[bj];
  for (int round = 0; round < 8; ++round) {
    const double before = best;
    auto along1 = [&](double a) { return reduced_objective(a, a2, q1, q2); };
    auto r1 = refine_coordinate(along1, std::max(0.0, a1 - step), std::min(0.5, a1 + step), q1);
    if (r1.second > best) {
      a1 = r1.first;
      best = r1.second;
    }
    auto along2 = [&](double a) { return reduced_objective(a1, a, q1, q2); };
    auto r2 = refine_coordinate(along2, std::max(0.0, a2 - step), std::min(0.5, a2 + step), q2);
    if (r2.second > best) {
      a2 = r2.first;
      best = r2.second;
    }
    if (best - before <= 1e-15) break;
  }
  return {positive_part(best), best, a1, a2};
}

std::vector<double> linear_grid(double lo, double hi, std::size_t steps) {
  if (steps < 2) throw DomainError("grid needs at least two points");
  std::vector<double> out(steps);
  const double width = hi - lo;
  for (std::size_t i = 0; i < steps; ++i) {
    out[i] = lo + width * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  out.back() = hi;
  return out;
}

RegionCurve upper_convex_envelope(const RegionCurve& curve) {
  const auto& x = curve.q_grid;
  const auto& y = curve.values;
  if (x.size() != y.size()) throw DomainError("curve grid and values differ in size");
  if (x.empty()) throw DomainError("empty curve");
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) throw DomainError("curve grid must be strictly increasing");
  }

  // Monotone chain, upper hull, left to right. Collinear points are kept so
  // that chords only appear where samples are strictly below the hull.
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < x.size(); ++i) {
    while (hull.size() >= 2) {
      const std::size_t o = hull[hull.size() - 2];
      const std::size_t a = hull.back();
      const double cross = (x[a] - x[o]) * (y[i] - y[o]) - (y[a] - y[o]) * (x[i] - x[o]);
      if (cross > 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }

  RegionCurve out;
  out.q_grid = x;
  out.values = y;
  out.envelope_applied = true;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const std::size_t left = hull[h];
    const std::size_t right = hull[h + 1];
    if (right - left < 2) continue;
    const double slope = (y[right] - y[left]) / (x[right] - x[left]);
    for (std::size_t i = left + 1; i < right; ++i) out.values[i] = y[left] + slope * (x[i] - x[left]);
    if (left != 0) out.breakpoints.push_back(x[left]);
    if (right != x.size() - 1) out.breakpoints.push_back(x[right]);
  }
  std::sort(out.breakpoints.begin(), out.breakpoints.end());
  out.breakpoints.erase(std::unique(out.breakpoints.begin(), out.breakpoints.end()), out.breakpoints.end());
  return out;
}

bool is_concave(const RegionCurve& curve, double tolerance) {
  const auto& x = curve.q_grid;
  const auto& y = curve.values;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const double t = (x[i] - x[i - 1]) / (x[i + 1] - x[i - 1]);
    const double chord = (1.0 - t) * y[i - 1] + t * y[i + 1];
    if (y[i] < chord - tolerance) return false;
  }
  return true;
}

FmaxCurve sample_fmax_diagonal(const std::vector<double>& q_grid, std::size_t grid_resolution) {
  FmaxCurve out;
  out.curve.q_grid = q_grid;
  out.curve.values.reserve(q_grid.size());
  out.alpha.reserve(q_grid.size());
  for (double q : q_grid) {
    const FmaxResult r = f_max(q, q, grid_resolution);
    out.curve.values.push_back(r.value);
    out.alpha.push_back(r.alpha1);
  }
  return out;
}

double outer_bound_shape(double x) {
  if (!(x > 0.0 && x <= 0.5)) throw DomainError("outer_bound_shape needs x in (0, 1/2]");
  const double r = 1.0 / x - 1.0;
  return x - 1.0 / (1.0 + r * r);
}

CriticalConstants critical_constants() {
  CriticalConstants c;
  c.q_star = 1.0 - 1.0 / std::sqrt(2.0);
  c.c_star = (2.0 * hb(c.q_star) - 1.0) / c.q_star;

  // sign(f'(x)) = sign of the quartic, positive at 0 and negative at 1/2; its
  // only root in between is where f turns from increasing to decreasing.
  auto quartic = [](double x) { return (((4.0 * x - 8.0) * x + 10.0) * x - 6.0) * x + 1.0; };
  double lo = 0.0;
  double hi = 0.5;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    (quartic(mid) > 0.0 ? lo : hi) = mid;
  }
  c.x_at_qc = 0.5 * (lo + hi);
  c.q_c = outer_bound_shape(c.x_at_qc);
  return c;
}

double bsl_sum_rate(double q) {
  check_constraint(q, "q");
  static const CriticalConstants c = critical_constants();
  return q >= c.q_star ? 2.0 * hb(q) - 1.0 : c.c_star * q;
}

AuxChannelSpec::AuxChannelSpec(std::size_t aux_size, std::vector<double> table)
    : aux_size_(aux_size), table_(std::move(table)) {
  if (aux_size_ == 0) throw InvalidDistributionError("auxiliary alphabet must be non-empty");
  if (table_.size() != 2 * aux_size_ * 2) throw InvalidDistributionError("table size must be 4 |U|");
  for (int s = 0; s < 2; ++s) {
    double total = 0.0;
    for (std::size_t u = 0; u < aux_size_; ++u) {
      for (int x = 0; x < 2; ++x) {
        const double v = prob(u, x, s);
        if (!(v >= 0.0)) throw InvalidDistributionError("negative or NaN conditional probability");
        total += v;
      }
    }
    if (std::abs(total - 1.0) > kNormTolerance) {
      throw InvalidDistributionError("P(u, x | s=" + std::to_string(s) + ") sums to " + std::to_string(total));
    }
  }
}

double AuxChannelSpec::prob(std::size_t u, int x, int s) const {
  return table_[(static_cast<std::size_t>(s) * aux_size_ + u) * 2 + static_cast<std::size_t>(x)];
}

AuxChannelSpec AuxChannelSpec::constant_aux(double q) {
  check_probability(q, "q");
  return AuxChannelSpec(1, {1.0 - q, q, 1.0 - q, q});
}

AuxChannelSpec AuxChannelSpec::state_xor_input(double q) {
  check_probability(q, "q");
  // [s][u][x]: u = s ^ x.
  return AuxChannelSpec(2, {1.0 - q, 0.0, 0.0, q,  // s = 0
                            0.0, q, 1.0 - q, 0.0});  // s = 1
}

AuxChannelSpec AuxChannelSpec::input_only(double q) {
  check_probability(q, "q");
  return AuxChannelSpec(2, {1.0 - q, 0.0, 0.0, q, 1.0 - q, 0.0, 0.0, q});
}

PentagonBounds pentagon_region(const AuxChannelSpec& spec1, const AuxChannelSpec& spec2,
                               std::size_t max_aux_alphabet) {
  if (spec1.aux_size() > max_aux_alphabet || spec2.aux_size() > max_aux_alphabet) {
    throw DomainError("auxiliary alphabet larger than " + std::to_string(max_aux_alphabet));
  }
  const std::size_t n1 = spec1.aux_size();
  const std::size_t n2 = spec2.aux_size();

  // Per user: P(u, z) with z = x ^ s, and P(u, s). States are uniform.
  auto user_tables = [](const AuxChannelSpec& spec, std::vector<double>& uz, std::vector<double>& us) {
    const std::size_t m = spec.aux_size();
    uz.assign(m * 2, 0.0);
    us.assign(m * 2, 0.0);
    for (std::size_t u = 0; u < m; ++u) {
      for (int s = 0; s < 2; ++s) {
        for (int x = 0; x < 2; ++x) {
          const double p = 0.5 * spec.prob(u, x, s);
          uz[u * 2 + static_cast<std::size_t>(x ^ s)] += p;
          us[u * 2 + static_cast<std::size_t>(s)] += p;
        }
      }
    }
  };
  std::vector<double> uz1, us1, uz2, us2;
  user_tables(spec1, uz1, us1);
  user_tables(spec2, uz2, us2);

  // Y = Z1 ^ Z2 with (U1, Z1) independent of (U2, Z2).
  std::vector<double> joint(n1 * n2 * 2, 0.0);  // [u1][u2][y]
  std::vector<double> u1u2(n1 * n2, 0.0), u1y(n1 * 2, 0.0), u2y(n2 * 2, 0.0), y(2, 0.0);
  std::vector<double> u1(n1, 0.0), u2(n2, 0.0);
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      for (int z1 = 0; z1 < 2; ++z1) {
        for (int z2 = 0; z2 < 2; ++z2) {
          const double p = uz1[a * 2 + static_cast<std::size_t>(z1)] * uz2[b * 2 + static_cast<std::size_t>(z2)];
          const auto yy = static_cast<std::size_t>(z1 ^ z2);
          joint[(a * n2 + b) * 2 + yy] += p;
          u1u2[a * n2 + b] += p;
          u1y[a * 2 + yy] += p;
          u2y[b * 2 + yy] += p;
          y[yy] += p;
          u1[a] += p;
          u2[b] += p;
        }
      }
    }
  }

  const double h_joint = entropy_bits(joint);
  const double h_u1u2 = entropy_bits(u1u2);
  const double h_u1y = entropy_bits(u1y);
  const double h_u2y = entropy_bits(u2y);
  const double h_y = entropy_bits(y);
  const double h_u1 = entropy_bits(u1);
  const double h_u2 = entropy_bits(u2);

  PentagonBounds b;
  b.i_u1_y_given_u2 = h_u1u2 + h_u2y - h_u2 - h_joint;
  b.i_u2_y_given_u1 = h_u1u2 + h_u1y - h_u1 - h_joint;
  b.i_u1u2_y = h_u1u2 + h_y - h_joint;
  b.i_u1_s1 = h_u1 + 1.0 - entropy_bits(us1);
  b.i_u2_s2 = h_u2 + 1.0 - entropy_bits(us2);
  b.bound_r1 = positive_part(b.i_u1_y_given_u2 - b.i_u1_s1);
  b.bound_r2 = positive_part(b.i_u2_y_given_u1 - b.i_u2_s2);
  b.bound_sum = positive_part(b.i_u1u2_y - b.i_u1_s1 - b.i_u2_s2);
  return b;
}

ConverseCheck one_dirty_converse_check(double q, std::size_t grid) {
  check_constraint(q, "q");
  if (grid < 1) throw DomainError("grid needs at least one interval");
  auto objective = [q](double a) { return hb(a) - hb(positive_part(a - q)); };
  ConverseCheck best{-std::numeric_limits<double>::infinity(), 0.0};
  auto consider = [&](double a) {
    const double v = objective(a);
    if (v > best.max_value) best = {v, a};
  };
  for (std::size_t i = 0; i <= grid; ++i) {
    consider(i == grid ? 0.5 : 0.5 * static_cast<double>(i) / static_cast<double>(grid));
  }
  consider(q);
  return best;
}

LemmaReport lemma_checks(double step) {
  if (!(step > 0.0 && step < 0.5)) throw DomainError("lemma_checks step must be in (0, 1/2)");
  const CriticalConstants c = critical_constants();
  LemmaReport r;

  r.f2_min_margin = std::numeric_limits<double>::infinity();
  for (double q = c.q_c;; q = std::min(0.5, q + step)) {
    for (double a = q;; a = std::min(0.5, a + step)) {
      const double margin = hb(a - q) - 2.0 * hb(a) + 2.0 * hb(q);
      if (margin < r.f2_min_margin) {
        r.f2_min_margin = margin;
        r.f2_worst_q = q;
        r.f2_worst_alpha = a;
      }
      if (a >= 0.5) break;
    }
    if (q >= 0.5) break;
  }

  r.gr_max = -std::numeric_limits<double>::infinity();
  for (double x = 0.0;; x = std::min(0.5, x + step)) {
    const double v = hb(x) - 1.0 - c.c_star * x;
    if (v > r.gr_max) {
      r.gr_max = v;
      r.gr_argmax = x;
    }
    if (x >= 0.5) break;
  }

  r.shape_at_0257 = outer_bound_shape(0.257);
  r.chord_chain_constant = hb(c.q_star) - hb(0.5 * c.q_star) + 0.5;
  r.entropy_at_qc = hb(c.q_c);
  return r;
}

}  // namespace ddmac
