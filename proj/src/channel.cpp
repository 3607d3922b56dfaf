#include "ddmac/channel.hpp"

#include "ddmac/errors.hpp"
#include "ddmac/rng.hpp"

namespace ddmac {
namespace {

constexpr std::uint64_t kStateStream = 0x5354415445ULL;

}  // namespace

void ChannelConfig::validate() const {
  if (n < 1 || n > BitVector::kMaxLength) throw DomainError("block length must be in [1, 64]");
  if (!(q1 >= 0.0 && q1 <= 0.5) || !(q2 >= 0.0 && q2 <= 0.5)) {
    throw DomainError("input constraints must lie in [0, 1/2]");
  }
}

StatePair draw_states(const ChannelConfig& cfg, std::uint64_t draw_index) {
  cfg.validate();
  CounterRng rng(cfg.seed, kStateStream ^ (draw_index * 0x9e3779b97f4a7c15ULL));
  const auto n = static_cast<unsigned>(cfg.n);
  BitVector s1(cfg.n, rng.bits(n));
  const std::uint64_t second = rng.bits(n);
  BitVector s2(cfg.n, cfg.one_dirty ? 0 : second);
  return {s1, s2};
}

TransmissionRecord transmit(const BitVector& x1, const BitVector& x2, const BitVector& s1, const BitVector& s2) {
  const std::size_t n = x1.size();
  if (x2.size() != n || s1.size() != n || s2.size() != n) {
    throw DimensionError("transmit: all blocks must have the same length");
  }
  if (n == 0) throw DimensionError("transmit: empty block");
  TransmissionRecord rec{s1, s2, x1, x2, x1 ^ x2 ^ s1 ^ s2, {}, {}};
  rec.weight1 = Rational{hamming_weight(x1), n};
  rec.weight2 = Rational{hamming_weight(x2), n};
  return rec;
}

bool satisfies_constraint(const Rational& normalized_weight, double q) noexcept {
  // Slack absorbs q values like 1/7 that are not exact in binary.
  return static_cast<double>(normalized_weight.num) <= q * static_cast<double>(normalized_weight.den) + 1e-9;
}

nlohmann::json to_json(const TransmissionRecord& record) {
  return {
      {"s1", record.s1.to_string()},
      {"s2", record.s2.to_string()},
      {"x1", record.x1.to_string()},
      {"x2", record.x2.to_string()},
      {"y", record.y.to_string()},
      {"weight1", record.weight1.to_string()},
      {"weight2", record.weight2.to_string()},
  };
}

}  // namespace ddmac
