#include "doctest.h"

#include <cmath>

#include "ddmac/errors.hpp"
#include "ddmac/korner_marton.hpp"
#include "ddmac/single_letter.hpp"

using namespace ddmac;

TEST_CASE("rate sums") {
  CHECK(km_rate_sum(0.0) == 0.0);
  CHECK(km_rate_sum(0.5) == 2.0);
  CHECK(km_rate_sum(0.11) == doctest::Approx(0.999831916329056).epsilon(1e-12));
  CHECK(sw_rate_sum(0.0) == 1.0);
  CHECK(sw_rate_sum(0.5) == 2.0);
  CHECK(sw_rate_sum(0.11) == doctest::Approx(1.499915958164528).epsilon(1e-12));
  CHECK_THROWS_AS(km_rate_sum(0.6), DomainError);
  CHECK_THROWS_AS(sw_rate_sum(-0.1), DomainError);
}

TEST_CASE("gap identity") {
  for (int i = 0; i < 50; ++i) {
    const double theta = 0.01 * i;
    const double gap = sw_rate_sum(theta) - km_rate_sum(theta);
    CHECK(gap == doctest::Approx(1.0 - binary_entropy(theta)).epsilon(1e-15));
    CHECK(gap > 0.0);
  }
}

TEST_CASE("analytic block error of a single-error-correcting code") {
  CHECK(km_single_error_block_rate(0.02, 7) == doctest::Approx(0.00785653343232).epsilon(1e-10));
  CHECK(km_single_error_block_rate(0.0, 7) == 0.0);
}

TEST_CASE("hamming(7,4) recovers every z of weight at most one, and no other") {
  const LinearCode code = LinearCode::build(hamming74_parity_check());
  for (std::uint64_t zw = 0; zw < 128; ++zw) {
    const BitVector z(7, zw);
    for (std::uint64_t xw : {0ULL, 0x55ULL, 0x7fULL}) {
      const BitVector x(7, xw);
      const BitVector y = x ^ z;
      const BitVector z_hat = km_decode(code.syndrome(x), code.syndrome(y), code);
      CHECK((z_hat == z) == (hamming_weight(z) <= 1));
      // Decoder output depends on (x, y) only through z.
      CHECK(z_hat == code.leader(code.syndrome(z)));
    }
  }
}

TEST_CASE("demo report") {
  const LinearCode code = LinearCode::build(hamming74_parity_check());
  const KmReport zero = km_scheme_demo(KmSourceConfig{7, 0.0, 1}, code, 1000);
  CHECK(zero.block_errors == 0);
  CHECK(zero.code_rate == doctest::Approx(3.0 / 7.0));
  const KmReport r = km_scheme_demo(KmSourceConfig{7, 0.05, 2}, code, 20000);
  const double p = km_single_error_block_rate(0.05, 7);
  CHECK(std::abs(r.error_rate - p) <= 4.0 * std::sqrt(p * (1 - p) / 20000.0));
  CHECK_THROWS_AS(km_scheme_demo(KmSourceConfig{8, 0.05, 2}, code, 10), DimensionError);
  const KmBlock b = draw_source_block(KmSourceConfig{7, 0.3, 9}, 4);
  CHECK((b.x ^ b.y) == b.z);
}
