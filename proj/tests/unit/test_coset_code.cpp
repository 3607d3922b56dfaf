#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "ddmac/coset_code.hpp"
#include "ddmac/errors.hpp"

using namespace ddmac;

namespace {

// Leaders by exhaustive enumeration of Z_2^n through matvec, independent of
// the shell search: minimum weight, then smallest string.
std::vector<BitVector> brute_force_leaders(const Gf2Matrix& h) {
  const std::size_t n = h.cols();
  const std::size_t r = h.rows();
  std::vector<BitVector> best(std::size_t{1} << r);
  std::vector<bool> found(best.size(), false);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    const BitVector x(n, w);
    const std::uint64_t s = matvec(h, x).word();
    if (!found[s]) {
      best[s] = x;
      found[s] = true;
      continue;
    }
    const auto wx = hamming_weight(x);
    const auto wb = hamming_weight(best[s]);
    if (wx < wb || (wx == wb && x.to_string() < best[s].to_string())) best[s] = x;
  }
  return best;
}

std::size_t brute_force_covering_radius(const Gf2Matrix& h) {
  const std::size_t n = h.cols();
  std::vector<BitVector> codewords;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    if (matvec(h, BitVector(n, w)).none()) codewords.emplace_back(n, w);
  }
  std::size_t radius = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    std::size_t d = std::numeric_limits<std::size_t>::max();
    for (const auto& c : codewords) d = std::min(d, hamming_weight(BitVector(n, w) ^ c));
    radius = std::max(radius, d);
  }
  return radius;
}

void check_against_oracle(const Gf2Matrix& h) {
  const LinearCode code = LinearCode::build(h);
  const auto leaders = brute_force_leaders(h);
  for (std::uint64_t s = 0; s < leaders.size(); ++s) {
    CHECK(code.leader(BitVector(h.rows(), s)) == leaders[s]);
  }
  CHECK(code.covering_radius() == brute_force_covering_radius(h));
}

}  // namespace

TEST_CASE("hamming(7,4) leaders are the unit vectors") {
  const LinearCode code = LinearCode::build(hamming74_parity_check());
  CHECK(code.n() == 7);
  CHECK(code.k() == 4);
  CHECK(code.coset_count() == 8);
  CHECK(code.covering_radius() == 1);
  CHECK(code.leader(BitVector(3)).none());
  for (std::size_t j = 0; j < 7; ++j) {
    const BitVector e = BitVector::unit(7, j);
    CHECK(code.leader(code.syndrome(e)) == e);
  }
  CHECK(code.reduce(BitVector::from_string("1110001")).to_string() == "0000001");
  CHECK(code.is_codeword(BitVector::from_string("1110000")));
}

TEST_CASE("leader tables match exhaustive enumeration") {
  check_against_oracle(hamming74_parity_check());
  check_against_oracle(repetition_parity_check(5));
  check_against_oracle(single_parity_check(6));
  check_against_oracle(Gf2Matrix::from_strings({"1101000", "0110100", "0011010"}));
  check_against_oracle(Gf2Matrix::from_strings({"10110100", "01011010", "00101101", "11100001"}));
}

TEST_CASE("golay(23,12) is perfect with radius 3") {
  const LinearCode code = LinearCode::build(golay23_parity_check());
  CHECK(code.redundancy() == 11);
  CHECK(code.covering_radius() == 3);
  // Perfect: the spheres of radius 3 exactly fill the 2^11 cosets.
  CHECK(1 + 23 + 253 + 1771 == 2048);
  const BitVector e = BitVector::from_string("10000000001000000000001");
  CHECK(code.leader(code.syndrome(e)) == e);
}

TEST_CASE("repetition code radius is floor(n/2)") {
  for (std::size_t n = 2; n <= 9; ++n) {
    CHECK(LinearCode::build(repetition_parity_check(n)).covering_radius() == n / 2);
  }
  CHECK(LinearCode::build(single_parity_check(9)).covering_radius() == 1);
}

TEST_CASE("mod-C properties") {
  const LinearCode code = LinearCode::build(golay23_parity_check());
  for (std::uint64_t w : {0x1ULL, 0x7ffffeULL, 0x123456ULL, 0x5a5a5aULL}) {
    const BitVector a(23, w);
    const BitVector r = code.reduce(a);
    CHECK(code.syndrome(r) == code.syndrome(a));
    CHECK(hamming_weight(r) <= code.covering_radius());
    CHECK(code.reduce(r) == r);
    CHECK(code.is_codeword(a ^ r));
  }
}

TEST_CASE("invalid codes and resource cap") {
  CHECK_THROWS_AS(LinearCode::build(Gf2Matrix::from_strings({"1100", "1100"})), InvalidCodeError);
  CHECK_THROWS_AS(LinearCode::build(Gf2Matrix::identity(4)), InvalidCodeError);
  CHECK_THROWS_AS(LinearCode::build(golay23_parity_check(), 1000), ResourceError);
  const LinearCode code = LinearCode::build(hamming74_parity_check());
  CHECK_THROWS_AS(code.syndrome(BitVector(6)), DimensionError);
  CHECK_THROWS_AS(code.leader(BitVector(4)), DimensionError);
}

TEST_CASE("code file round trip") {
  const Gf2Matrix h = golay23_parity_check();
  const std::string text = format_code_text(h);
  CHECK(text.rfind("23 12\n", 0) == 0);
  CHECK(parse_code_text(text) == h);
  CHECK_THROWS_AS(parse_code_text("7 4\n0001111\n0110011\n"), ParseError);
  CHECK_THROWS_AS(parse_code_text("7 4\n0001111\n0110011\n0111100\n"), InvalidCodeError);
  CHECK_THROWS_AS(parse_code_text("x"), ParseError);
}

TEST_CASE("sha256 of known strings") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("random covering search is deterministic and honest") {
  const LinearCode a = random_covering_search(10, 5, 3, 20);
  const LinearCode b = random_covering_search(10, 5, 3, 20);
  CHECK(a.parity_check() == b.parity_check());
  CHECK(a.covering_radius() == brute_force_covering_radius(a.parity_check()));
  CHECK(rank(a.parity_check()) == 5);
}

TEST_CASE("cosets partition the space and codewords do not move the reduction") {
  for (const Gf2Matrix& h : {hamming74_parity_check(), repetition_parity_check(6),
                             Gf2Matrix::from_strings({"1101000", "0110100", "0011010"})}) {
    const LinearCode code = LinearCode::build(h);
    const std::size_t n = h.cols();
    std::vector<std::size_t> size(code.coset_count(), 0);
    std::vector<BitVector> codewords;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      const BitVector x(n, w);
      ++size[code.syndrome(x).word()];
      if (code.is_codeword(x)) codewords.push_back(x);
    }
    for (std::size_t s : size) CHECK(s == (std::size_t{1} << code.k()));
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); w += 3) {
      const BitVector a(n, w);
      for (const auto& c : codewords) CHECK(code.reduce(a ^ c) == code.reduce(a));
    }
  }
  const LinearCode hamming = LinearCode::build(hamming74_parity_check());
  const BitVector leader = hamming.reduce(BitVector::from_string("1100000"));
  CHECK(hamming_weight(leader) == 1);
  CHECK(leader.to_string() == "0010000");
}

TEST_CASE("certified codes respect the covering bound") {
  for (const Gf2Matrix& h : {hamming74_parity_check(), golay23_parity_check()}) {
    const LinearCode code = LinearCode::build(h);
    const double rate = static_cast<double>(code.redundancy()) / static_cast<double>(code.n());
    const double p = static_cast<double>(code.covering_radius()) / static_cast<double>(code.n());
    CHECK(rate <= -p * std::log2(p) - (1 - p) * std::log2(1 - p));
  }
}

TEST_CASE("random covering search outcomes") {
  CHECK(random_covering_search(7, 4, 1, 200).covering_radius() <= 1);
  for (std::size_t n = 3; n <= 9; ++n) CHECK(random_covering_search(n, n - 1, n, 5).covering_radius() == 1);
  const LinearCode c = random_covering_search(15, 10, 2, 500);
  CHECK(c.covering_radius() == brute_force_covering_radius(c.parity_check()));
}
