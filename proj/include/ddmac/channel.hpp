#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

#include "json.hpp"

#include "ddmac/gf2.hpp"

namespace ddmac {

/// Exact non-negative fraction, used for normalised weights and rates.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num * b.den == b.num * a.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    return a.num * b.den <=> b.num * a.den;
  }
};

/// Binary doubly-dirty MAC  Y = X1 ^ X2 ^ S1 ^ S2  with Bernoulli(1/2) states.
struct ChannelConfig {
  std::size_t n = 0;
  double q1 = 0.5;
  double q2 = 0.5;
  bool one_dirty = false;  ///< forces S2 = 0
  std::uint64_t seed = 0;

  /// Throws DomainError unless 1 <= n <= 64 and 0 <= q_i <= 1/2.
  void validate() const;
};

struct StatePair {
  BitVector s1;
  BitVector s2;
};

/// States for draw number `draw_index`; a pure function of (seed, draw_index).
StatePair draw_states(const ChannelConfig& cfg, std::uint64_t draw_index);

struct TransmissionRecord {
  BitVector s1, s2, x1, x2, y;
  Rational weight1;  ///< w_H(x1)/n
  Rational weight2;  ///< w_H(x2)/n
};

TransmissionRecord transmit(const BitVector& x1, const BitVector& x2, const BitVector& s1, const BitVector& s2);

/// Per-block input constraint w_H(x)/n <= q.
bool satisfies_constraint(const Rational& normalized_weight, double q) noexcept;

/// One JSON-lines trial log entry.
nlohmann::json to_json(const TransmissionRecord& record);

}  // namespace ddmac
