#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "json.hpp"

#include "ddmac/channel.hpp"
#include "ddmac/coset_code.hpp"
#include "ddmac/gf2.hpp"

namespace ddmac {

// Coset (syndrome) coding for the binary doubly-dirty MAC.
//
// Each user sends the leader of the coset v_i ^ H s_i. The receiver sees
// y = x1 ^ x2 ^ s1 ^ s2, which lies in the coset v1 ^ v2, so H y recovers the
// message syndrome without knowing either state. Every transmitted block is a
// coset leader, hence has weight at most the covering radius.

/// Message split: user 1 owns the first l1 syndrome bits, user 2 the last l2.
struct SplitSpec {
  std::size_t l1 = 0;
  std::size_t l2 = 0;
};

struct EncodedPair {
  BitVector x1;
  BitVector x2;
};

struct MessagePair {
  BitVector m1;
  BitVector m2;
};

/// x1 = f(v1 ^ H s1).
BitVector encode_user1(const BitVector& v1, const BitVector& s1, const LinearCode& code);

/// x2 = s2 mod C = f(H s2).
BitVector encode_helper(const BitVector& s2, const LinearCode& code);

/// v_hat = H y.
BitVector decode(const BitVector& y, const LinearCode& code);

/// v1 = [m1 | 0^{l2}], v2 = [0^{l1} | m2], x_i = f(v_i ^ H s_i).
EncodedPair encode_split(const BitVector& m1, const BitVector& m2, const BitVector& s1, const BitVector& s2,
                         const LinearCode& code, const SplitSpec& split);

/// Reads (m1, m2) positionally off a decoded syndrome v = v1 ^ v2.
MessagePair split_syndrome(const BitVector& v, const SplitSpec& split);

struct SchemeReport {
  std::uint64_t trials = 0;
  std::uint64_t decode_errors = 0;
  std::uint64_t constraint_violations = 0;  ///< blocks with w_H(x_i)/n > q_i
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t covering_radius = 0;
  SplitSpec split;
  double q1 = 0.0;
  double q2 = 0.0;
  Rational rate1;
  Rational rate2;
  Rational max_norm_weight1;
  Rational max_norm_weight2;
  double mean_norm_weight1 = 0.0;
  double mean_norm_weight2 = 0.0;
  std::string code_id;
  std::uint64_t seed = 0;
};

/// Monte-Carlo run of the split scheme (the helper corner point is l2 = 0).
/// Throws ConfigurationError when rho/n > min(q1, q2), when cfg.n differs from
/// the code length, or when l1 + l2 != n - k.
SchemeReport run_simulation(const ChannelConfig& cfg, const LinearCode& code, const SplitSpec& split,
                            std::uint64_t trials, const std::string& code_id = {});

nlohmann::json to_json(const SchemeReport& report);

}  // namespace ddmac
