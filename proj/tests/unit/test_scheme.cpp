#include "doctest.h"

#include "ddmac/channel.hpp"
#include "ddmac/errors.hpp"
#include "ddmac/linear_scheme.hpp"
#include "ddmac/rng.hpp"

using namespace ddmac;

TEST_CASE("counter rng is a pure function of seed, stream and index") {
  CounterRng a(5, 9);
  CounterRng b(5, 9);
  CounterRng c(5, 10);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
  }
  CounterRng u(1, 0);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double v = u.uniform01();
    CHECK((v >= 0.0 && v < 1.0));
    sum += v;
  }
  CHECK(sum / 100000.0 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("channel output is the xor of inputs and states") {
  const auto x1 = BitVector::from_string("1000000");
  const auto x2 = BitVector::from_string("0000001");
  const auto s1 = BitVector::from_string("1111000");
  const auto s2 = BitVector::from_string("0011110");
  const TransmissionRecord rec = transmit(x1, x2, s1, s2);
  CHECK(rec.y.to_string() == "0100111");
  CHECK(rec.weight1 == Rational{1, 7});
  CHECK(rec.weight1.to_string() == "1/7");
  CHECK(satisfies_constraint(rec.weight1, 1.0 / 7.0));
  CHECK_FALSE(satisfies_constraint(rec.weight1, 0.1));
  CHECK_THROWS_AS(transmit(x1, BitVector(6), s1, s2), DimensionError);
  const auto j = to_json(rec);
  CHECK(j["y"] == "0100111");
}

TEST_CASE("state draws are reproducible and one-dirty clears s2") {
  ChannelConfig cfg{23, 0.2, 0.2, false, 77};
  const StatePair a = draw_states(cfg, 12);
  const StatePair b = draw_states(cfg, 12);
  CHECK(a.s1 == b.s1);
  CHECK(a.s2 == b.s2);
  cfg.one_dirty = true;
  CHECK(draw_states(cfg, 12).s2.none());
  CHECK(draw_states(cfg, 12).s1 == a.s1);
  cfg.q1 = 0.7;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("helper corner: decoder recovers v1 for every state pair") {
  const LinearCode code = LinearCode::build(hamming74_parity_check());
  const auto v1 = BitVector::from_string("101");
  for (std::uint64_t a = 0; a < 128; a += 5) {
    for (std::uint64_t b = 0; b < 128; b += 3) {
      const BitVector s1(7, a);
      const BitVector s2(7, b);
      const BitVector x1 = encode_user1(v1, s1, code);
      const BitVector x2 = encode_helper(s2, code);
      CHECK(hamming_weight(x1) <= 1);
      CHECK(hamming_weight(x2) <= 1);
      CHECK(decode(transmit(x1, x2, s1, s2).y, code) == v1);
    }
  }
}

TEST_CASE("split scheme round trip") {
  const LinearCode code = LinearCode::build(golay23_parity_check());
  const SplitSpec split{6, 5};
  const auto m1 = BitVector::from_string("110101");
  const auto m2 = BitVector::from_string("01110");
  const BitVector s1(23, 0x3a5f01);
  const BitVector s2(23, 0x12ab77);
  const EncodedPair x = encode_split(m1, m2, s1, s2, code, split);
  const MessagePair out = split_syndrome(decode(transmit(x.x1, x.x2, s1, s2).y, code), split);
  CHECK(out.m1 == m1);
  CHECK(out.m2 == m2);
  CHECK_THROWS_AS(encode_split(m1, m2, s1, s2, code, SplitSpec{6, 4}), DimensionError);
}

TEST_CASE("simulation report and preconditions") {
  const LinearCode code = LinearCode::build(hamming74_parity_check());
  ChannelConfig cfg{7, 1.0 / 7.0, 1.0 / 7.0, false, 3};
  const SchemeReport r = run_simulation(cfg, code, SplitSpec{2, 1}, 2000, "hamming7");
  CHECK(r.decode_errors == 0);
  CHECK(r.constraint_violations == 0);
  CHECK(r.rate1 == Rational{2, 7});
  CHECK(r.rate2 == Rational{1, 7});
  CHECK(r.max_norm_weight1 <= Rational{1, 7});
  // A uniform syndrome lands on the zero coset with probability 1/8.
  CHECK(r.mean_norm_weight1 == doctest::Approx(7.0 / 8.0 / 7.0).epsilon(0.05));
  const auto j = to_json(r);
  CHECK(j["rate1_exact"] == "2/7");

  cfg.q1 = 0.1;
  CHECK_THROWS_AS(run_simulation(cfg, code, SplitSpec{3, 0}, 10), ConfigurationError);
  cfg.q1 = 0.2;
  CHECK_THROWS_AS(run_simulation(cfg, code, SplitSpec{1, 1}, 10), ConfigurationError);
  cfg.n = 8;
  CHECK_THROWS_AS(run_simulation(cfg, code, SplitSpec{3, 0}, 10), ConfigurationError);
}

TEST_CASE("one dirty user runs with the same encoder") {
  const LinearCode code = LinearCode::build(golay23_parity_check());
  ChannelConfig cfg{23, 0.14, 0.14, true, 8};
  const SchemeReport r = run_simulation(cfg, code, SplitSpec{11, 0}, 500);
  CHECK(r.decode_errors == 0);
  CHECK(r.max_norm_weight2 == Rational{0, 23});
}

TEST_CASE("state bits are fair") {
  const ChannelConfig cfg{64, 0.5, 0.5, false, 99};
  std::uint64_t ones = 0;
  const std::uint64_t draws = 100000 / 64 + 1;
  for (std::uint64_t i = 0; i < draws; ++i) ones += hamming_weight(draw_states(cfg, i).s1);
  const double mean = static_cast<double>(ones) / static_cast<double>(draws * 64);
  CHECK(mean >= 0.497);
  CHECK(mean <= 0.503);
}

TEST_CASE("transmit identities") {
  CounterRng rng(31, 0);
  for (int i = 0; i < 200; ++i) {
    const BitVector x1(20, rng.bits(20)), x2(20, rng.bits(20)), s1(20, rng.bits(20)), s2(20, rng.bits(20));
    const TransmissionRecord r = transmit(x1, x2, s1, s2);
    BitVector y(20);
    for (std::size_t b = 0; b < 20; ++b) y.set(b, x1[b] != x2[b] != s1[b] != s2[b]);
    CHECK(r.y == y);
    CHECK(transmit(x2, x1, s2, s1).y == r.y);
    CHECK(transmit(s1, s2, s1, s2).y.none());
  }
}

TEST_CASE("encoder fixed points and interference invariance") {
  const LinearCode code = LinearCode::build(hamming74_parity_check());
  const BitVector zero3(3), zero7(7);
  CHECK(encode_user1(zero3, zero7, code).none());
  const BitVector codeword = BitVector::from_string("1110000");
  const BitVector v1 = BitVector::from_string("101");
  CHECK(encode_user1(v1, codeword, code) == code.leader(v1));
  CHECK(encode_helper(codeword, code).none());
  CHECK(encode_helper(BitVector::unit(7, 3), code) == BitVector::unit(7, 3));
  CHECK(decode(zero7, code).none());
  for (std::uint64_t a = 0; a < 128; ++a) {
    const BitVector s1(7, a);
    const BitVector x1 = encode_user1(v1, s1, code);
    // Brute-force minimum-weight solution of H x = v1 ^ H s1.
    std::size_t best = 8;
    for (std::uint64_t w = 0; w < 128; ++w) {
      if (matvec(code.parity_check(), BitVector(7, w)) == (v1 ^ matvec(code.parity_check(), s1))) {
        best = std::min(best, hamming_weight(BitVector(7, w)));
      }
    }
    CHECK(hamming_weight(x1) == best);
    CHECK(encode_user1(v1, s1 ^ codeword, code) == x1);
  }
}

TEST_CASE("report edge cases") {
  const LinearCode code = LinearCode::build(hamming74_parity_check());
  const ChannelConfig cfg{7, 1.0 / 7.0, 1.0 / 7.0, false, 5};
  const SchemeReport empty = run_simulation(cfg, code, SplitSpec{3, 0}, 0);
  CHECK(empty.trials == 0);
  CHECK(empty.decode_errors == 0);
  const SchemeReport r = run_simulation(cfg, code, SplitSpec{3, 0}, 10000);
  CHECK(r.decode_errors == 0);
  CHECK(r.max_norm_weight1 == Rational{1, 7});
  CHECK(Rational{r.rate1.num + r.rate2.num, 7} == Rational{3, 7});
}
