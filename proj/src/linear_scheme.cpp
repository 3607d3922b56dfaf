#include "ddmac/linear_scheme.hpp"

#include <algorithm>

#include "ddmac/errors.hpp"
#include "ddmac/rng.hpp"

namespace ddmac {
namespace {

constexpr std::uint64_t kMessageStream = 0x4d455353414745ULL;

void check_block(const BitVector& v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                         std::to_string(n));
  }
}

}  // namespace

BitVector encode_user1(const BitVector& v1, const BitVector& s1, const LinearCode& code) {
  check_block(v1, code.redundancy(), "syndrome v1");
  check_block(s1, code.n(), "state s1");
  return code.leader(v1 ^ code.syndrome(s1));
}

BitVector encode_helper(const BitVector& s2, const LinearCode& code) {
  check_block(s2, code.n(), "state s2");
  return code.reduce(s2);
}

BitVector decode(const BitVector& y, const LinearCode& code) {
  check_block(y, code.n(), "channel output");
  return code.syndrome(y);
}

EncodedPair encode_split(const BitVector& m1, const BitVector& m2, const BitVector& s1, const BitVector& s2,
                         const LinearCode& code, const SplitSpec& split) {
  if (split.l1 + split.l2 != code.redundancy()) {
    throw DimensionError("split lengths must sum to n - k");
  }
  check_block(m1, split.l1, "message m1");
  check_block(m2, split.l2, "message m2");
  const BitVector v1 = concat(m1, BitVector(split.l2));
  const BitVector v2 = concat(BitVector(split.l1), m2);
  return {encode_user1(v1, s1, code), encode_user1(v2, s2, code)};
}

MessagePair split_syndrome(const BitVector& v, const SplitSpec& split) {
  check_block(v, split.l1 + split.l2, "syndrome");
  return {slice(v, 0, split.l1), slice(v, split.l1, split.l2)};
}

SchemeReport run_simulation(const ChannelConfig& cfg, const LinearCode& code, const SplitSpec& split,
                            std::uint64_t trials, const std::string& code_id) {
  cfg.validate();
  if (cfg.n != code.n()) {
    throw ConfigurationError("channel block length " + std::to_string(cfg.n) + " differs from code length " +
                             std::to_string(code.n()));
  }
  if (split.l1 + split.l2 != code.redundancy()) {
    throw ConfigurationError("l1 + l2 = " + std::to_string(split.l1 + split.l2) + " but n - k = " +
                             std::to_string(code.redundancy()));
  }
  const Rational radius{code.covering_radius(), code.n()};
  if (!satisfies_constraint(radius, std::min(cfg.q1, cfg.q2))) {
    throw ConfigurationError("covering radius " + radius.to_string() + " exceeds min(q1, q2)");
  }

  SchemeReport report;
  report.trials = trials;
  report.n = code.n();
  report.k = code.k();
  report.covering_radius = code.covering_radius();
  report.split = split;
  report.q1 = cfg.q1;
  report.q2 = cfg.q2;
  report.rate1 = Rational{split.l1, code.n()};
  report.rate2 = Rational{split.l2, code.n()};
  report.max_norm_weight1 = Rational{0, code.n()};
  report.max_norm_weight2 = Rational{0, code.n()};
  report.code_id = code_id;
  report.seed = cfg.seed;

  std::uint64_t total_weight1 = 0;
  std::uint64_t total_weight2 = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const StatePair states = draw_states(cfg, t);
    CounterRng rng(cfg.seed, kMessageStream ^ (t * 0x9e3779b97f4a7c15ULL));
    const BitVector m1(split.l1, rng.bits(static_cast<unsigned>(split.l1)));
    const BitVector m2(split.l2, rng.bits(static_cast<unsigned>(split.l2)));

    const EncodedPair x = encode_split(m1, m2, states.s1, states.s2, code, split);
    const TransmissionRecord rec = transmit(x.x1, x.x2, states.s1, states.s2);
    const MessagePair decoded = split_syndrome(decode(rec.y, code), split);

    if (decoded.m1 != m1 || decoded.m2 != m2) ++report.decode_errors;
    if (!satisfies_constraint(rec.weight1, cfg.q1) || !satisfies_constraint(rec.weight2, cfg.q2)) {
      ++report.constraint_violations;
    }
    report.max_norm_weight1 = std::max(report.max_norm_weight1, rec.weight1);
    report.max_norm_weight2 = std::max(report.max_norm_weight2, rec.weight2);
    total_weight1 += rec.weight1.num;
    total_weight2 += rec.weight2.num;
  }
  if (trials > 0) {
    const double denom = static_cast<double>(trials) * static_cast<double>(code.n());
    report.mean_norm_weight1 = static_cast<double>(total_weight1) / denom;
    report.mean_norm_weight2 = static_cast<double>(total_weight2) / denom;
  }
  return report;
}

nlohmann::json to_json(const SchemeReport& report) {
  return {
      {"trials", report.trials},
      {"decode_errors", report.decode_errors},
      {"constraint_violations", report.constraint_violations},
      {"n", report.n},
      {"k", report.k},
      {"covering_radius", report.covering_radius},
      {"l1", report.split.l1},
      {"l2", report.split.l2},
      {"q1", report.q1},
      {"q2", report.q2},
      {"rate1", report.rate1.value()},
      {"rate2", report.rate2.value()},
      {"rate1_exact", report.rate1.to_string()},
      {"rate2_exact", report.rate2.to_string()},
      {"max_norm_weight1", report.max_norm_weight1.to_string()},
      {"max_norm_weight2", report.max_norm_weight2.to_string()},
      {"mean_norm_weight1", report.mean_norm_weight1},
      {"mean_norm_weight2", report.mean_norm_weight2},
      {"code_id", report.code_id},
      {"seed", report.seed},
      {"rng", CounterRng::kName},
  };
}

}  // namespace ddmac
