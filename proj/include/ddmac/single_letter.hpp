#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace ddmac {

// Binary information measures. All entropies are in bits.

/// H_b(p) = -p log2 p - (1-p) log2(1-p), with 0 log 0 = 0.
double binary_entropy(double p);

/// x * y = (1-x) y + (1-y) x, crossover of two cascaded BSCs.
double binary_convolution(double x, double y);

/// Shannon entropy of a probability vector; zero entries contribute nothing.
double entropy_bits(std::span<const double> probabilities);

inline double positive_part(double x) noexcept { return x > 0.0 ? x : 0.0; }

/// Sum capacity of the binary doubly-dirty MAC, min{H_b(q1), H_b(q2)}.
double capacity_sum(double q1, double q2);

/// Common-message capacity with one dirty user (S2 = 0): H_b(q1).
double one_dirty_capacity(double q1);

/// Joint law of a binary pair (V, V'), p[v][v'].
class JointDist2x2 {
 public:
  using Table = std::array<std::array<double, 2>, 2>;

  /// Throws InvalidDistributionError unless entries are >= 0 and sum to 1 (1e-12).
  explicit JointDist2x2(const Table& p);

  /// alpha = P(V=1), delta = P(V'=1 | V=0), gamma = P(V'=0 | V=1).
  static JointDist2x2 from_transitions(double alpha, double delta, double gamma);

  double p(int v, int v_prime) const { return p_.at(v).at(v_prime); }
  double prob_v_one() const noexcept { return p_[1][0] + p_[1][1]; }
  double prob_v_prime_one() const noexcept { return p_[0][1] + p_[1][1]; }
  double prob_differ() const noexcept { return p_[0][1] + p_[1][0]; }

 private:
  Table p_;
};

/// H(V1) + H(V2) - H(V1' ^ V2') - 1 for independent pairs, before clamping.
double f_general_raw(const JointDist2x2& d1, const JointDist2x2& d2);
/// [f_general_raw]^+.
double f_general(const JointDist2x2& d1, const JointDist2x2& d2);

/// H_b(a1) + H_b(a2) - H_b([a1-q1]^+ * [a2-q2]^+) - 1, before clamping.
double f_reduced_raw(double alpha1, double alpha2, double q1, double q2);
/// [f_reduced_raw]^+ (the Z-channel evaluation of the constrained maximum).
double f_reduced(double alpha1, double alpha2, double q1, double q2);

struct FmaxResult {
  double value = 0.0;  ///< clamped maximum
  double raw = 0.0;    ///< unclamped maximum of the reduced objective
  double alpha1 = 0.0;
  double alpha2 = 0.0;
};

/// Maximises f_reduced_raw over (alpha1, alpha2) in [0, 1/2]^2: a
/// `grid_resolution`^2 grid, then golden-section coordinate refinement that
/// treats the kinks at alpha_i = q_i as explicit candidates.
FmaxResult f_max(double q1, double q2, std::size_t grid_resolution = 1024);

/// Sampled rate curve q -> value.
struct RegionCurve {
  std::vector<double> q_grid;
  std::vector<double> values;
  bool envelope_applied = false;
  /// Interior grid points where the envelope switches between a chord
  /// (time sharing) and the curve itself.
  std::vector<double> breakpoints;
};

/// Concave majorant through the upper hull of the samples, evaluated on the
/// same grid. Throws DomainError if the grid is not strictly increasing or
/// sizes differ.
RegionCurve upper_convex_envelope(const RegionCurve& curve);

/// Midpoint test on every consecutive triple (handles uneven spacing).
bool is_concave(const RegionCurve& curve, double tolerance = 1e-12);

struct FmaxCurve {
  RegionCurve curve;  ///< F_max(q, q), not enveloped
  std::vector<double> alpha;  ///< maximising alpha1 on the diagonal
};

FmaxCurve sample_fmax_diagonal(const std::vector<double>& q_grid, std::size_t grid_resolution = 1024);

/// `steps` evenly spaced points from lo to hi inclusive.
std::vector<double> linear_grid(double lo, double hi, std::size_t steps);

struct CriticalConstants {
  double q_star = 0.0;   ///< 1 - 1/sqrt(2), end of the time-sharing chord
  double c_star = 0.0;   ///< (2 H_b(q*) - 1) / q*, chord slope
  double q_c = 0.0;      ///< max of x - 1/(1 + (1/x - 1)^2) on (0, 1/2]
  double x_at_qc = 0.0;  ///< its maximiser, root of 4x^4 - 8x^3 + 10x^2 - 6x + 1
};

CriticalConstants critical_constants();

/// x - 1/(1 + (1/x - 1)^2) on (0, 1/2].
double outer_bound_shape(double x);

/// u.c.e of [2 H_b(q) - 1]^+ in closed form: C* q below q*, 2 H_b(q) - 1 above.
double bsl_sum_rate(double q);

/// Finite-alphabet auxiliary channel P(u, x | s) for one user; s, x binary.
class AuxChannelSpec {
 public:
  /// `table` is indexed [(s * aux_size + u) * 2 + x]. Each s-slice must sum
  /// to 1 within 1e-12.
  AuxChannelSpec(std::size_t aux_size, std::vector<double> table);

  /// U constant, X ~ Bernoulli(q) independent of S.
  static AuxChannelSpec constant_aux(double q);
  /// U = S ^ X, X ~ Bernoulli(q) independent of S.
  static AuxChannelSpec state_xor_input(double q);
  /// U = X, X ~ Bernoulli(q) independent of S.
  static AuxChannelSpec input_only(double q);

  std::size_t aux_size() const noexcept { return aux_size_; }
  double prob(std::size_t u, int x, int s) const;

 private:
  std::size_t aux_size_;
  std::vector<double> table_;
};

inline constexpr std::size_t kDefaultMaxAuxAlphabet = 4;

struct PentagonBounds {
  double i_u1_y_given_u2 = 0.0;
  double i_u2_y_given_u1 = 0.0;
  double i_u1u2_y = 0.0;
  double i_u1_s1 = 0.0;
  double i_u2_s2 = 0.0;
  double bound_r1 = 0.0;   ///< [I(U1;Y|U2) - I(U1;S1)]^+
  double bound_r2 = 0.0;   ///< [I(U2;Y|U1) - I(U2;S2)]^+
  double bound_sum = 0.0;  ///< [I(U1,U2;Y) - I(U1;S1) - I(U2;S2)]^+
};

/// Exact pentagon bounds for Y = X1 ^ X2 ^ S1 ^ S2 with uniform independent
/// states and P(u1,u2,x1,x2|s1,s2) = P(u1,x1|s1) P(u2,x2|s2).
PentagonBounds pentagon_region(const AuxChannelSpec& spec1, const AuxChannelSpec& spec2,
                               std::size_t max_aux_alphabet = kDefaultMaxAuxAlphabet);

struct ConverseCheck {
  double max_value = 0.0;
  double argmax = 0.0;
};

/// Grid maximum of H_b(a) - H_b([a - q]^+) over a in [0, 1/2] (`grid`
/// intervals plus the kink a = q).
ConverseCheck one_dirty_converse_check(double q, std::size_t grid = 100000);

struct LemmaReport {
  double f2_min_margin = 0.0;  ///< min of H_b(a-q) - 2H_b(a) + 2H_b(q), q_c <= q <= a <= 1/2
  double f2_worst_q = 0.0;
  double f2_worst_alpha = 0.0;
  double gr_argmax = 0.0;  ///< grid argmax of H_b(x) - 1 - C* x
  double gr_max = 0.0;
  double shape_at_0257 = 0.0;       ///< outer_bound_shape(0.257)
  double chord_chain_constant = 0.0;  ///< H_b(q*) - H_b(q*/2) + 1/2
  double entropy_at_qc = 0.0;         ///< H_b(q_c); must not exceed the above
};

LemmaReport lemma_checks(double step = 1e-3);

}  // namespace ddmac
