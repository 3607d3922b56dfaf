#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ddmac/gf2.hpp"

namespace ddmac {

/// Default cap on the coset-leader table, in bits (2^{n-k} leaders of n bits).
inline constexpr std::uint64_t kDefaultTableCapBits = std::uint64_t{1} << 28;

/// Binary linear code C(n, k) viewed as a partition of Z_2^n into cosets.
///
/// Holds the parity-check matrix H, the syndrome -> coset-leader table f(.)
/// and the covering radius. Leaders are minimum-weight members of their coset;
/// among equal weights the lexicographically smallest bit string wins.
/// Immutable after construction.
class LinearCode {
 public:
  /// Builds the leader table by scanning weight shells in increasing order.
  /// Throws InvalidCodeError if H is rank deficient, ResourceError if the
  /// table would exceed `table_cap_bits`.
  static LinearCode build(const Gf2Matrix& parity_check,
                          std::uint64_t table_cap_bits = kDefaultTableCapBits);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return n_ - redundancy_; }
  std::size_t redundancy() const noexcept { return redundancy_; }
  std::uint64_t coset_count() const noexcept { return leaders_.size(); }
  std::size_t covering_radius() const noexcept { return covering_radius_; }
  const Gf2Matrix& parity_check() const noexcept { return parity_check_; }

  /// H x.
  BitVector syndrome(const BitVector& x) const;
  /// f(v): the leader of the coset with syndrome v.
  BitVector leader(const BitVector& syndrome) const;
  /// a mod C = f(H a).
  BitVector reduce(const BitVector& a) const { return leader(syndrome(a)); }

  bool is_codeword(const BitVector& x) const { return syndrome(x).none(); }

 private:
  LinearCode() = default;

  std::size_t n_ = 0;
  std::size_t redundancy_ = 0;
  std::size_t covering_radius_ = 0;
  Gf2Matrix parity_check_;
  std::vector<std::uint64_t> column_syndromes_;
  std::vector<std::uint64_t> leaders_;
};

inline LinearCode build_code(const Gf2Matrix& h, std::uint64_t table_cap_bits = kDefaultTableCapBits) {
  return LinearCode::build(h, table_cap_bits);
}

inline BitVector mod_code(const BitVector& a, const LinearCode& code) { return code.reduce(a); }

inline std::size_t covering_radius(const LinearCode& code) { return code.covering_radius(); }

/// Among `attempts` random full-rank (n-k) x n parity-check matrices (with
/// distinct nonzero columns whenever n < 2^(n-k)), the one
/// whose code has the smallest covering radius (first found on ties).
LinearCode random_covering_search(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t attempts,
                                  std::uint64_t table_cap_bits = kDefaultTableCapBits);

// Fixture parity-check matrices.

/// 3 x 7, column j (1-based) is the binary expansion of j, MSB in row 0.
Gf2Matrix hamming74_parity_check();
/// 11 x 23 parity check of the cyclic Golay code, g(x) = x^11+x^10+x^6+x^5+x^4+x^2+1.
Gf2Matrix golay23_parity_check();
/// (n-1) x n, row i checks positions i and i+1.
Gf2Matrix repetition_parity_check(std::size_t n);
/// 1 x n all-ones row.
Gf2Matrix single_parity_check(std::size_t n);

// Code files: first line "n k", then n-k rows of H as '0'/'1' strings.

Gf2Matrix parse_code_text(std::string_view text);
Gf2Matrix load_code_file(const std::filesystem::path& path);
std::string format_code_text(const Gf2Matrix& h);

/// Lower-case hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

}  // namespace ddmac
