#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ddmac {

/// Fixed-length vector over Z_2, at most 64 bits, packed into one word.
///
/// Bit index 0 is the leftmost character of the textual form. Internally
/// bit i lives at word position (size - 1 - i), so comparing the packed
/// words of two equal-length vectors is the same as comparing their
/// strings lexicographically.
///
/// A zero-length vector is permitted; it only appears as an empty message
/// in degenerate rate splits.
class BitVector {
 public:
  static constexpr std::size_t kMaxLength = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length);
  BitVector(std::size_t length, std::uint64_t word);

  static BitVector from_string(std::string_view text);
  static BitVector ones(std::size_t length);
  /// Vector of the given length with a single one at `index`.
  static BitVector unit(std::size_t length, std::size_t index);

  std::size_t size() const noexcept { return length_; }
  std::uint64_t word() const noexcept { return word_; }

  bool test(std::size_t index) const;
  bool operator[](std::size_t index) const { return test(index); }
  void set(std::size_t index, bool value = true);

  bool none() const noexcept { return word_ == 0; }
  std::string to_string() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::uint8_t length_ = 0;
  std::uint64_t word_ = 0;
};

/// Mask with the low `length` bits set.
constexpr std::uint64_t low_mask(std::size_t length) noexcept {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

std::size_t hamming_weight(const BitVector& v) noexcept;

/// [a | b]: a occupies the leading positions.
BitVector concat(const BitVector& a, const BitVector& b);

/// Positions [offset, offset + length) of v.
BitVector slice(const BitVector& v, std::size_t offset, std::size_t length);

/// Dense matrix over GF(2) stored as packed rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);
  explicit Gf2Matrix(std::vector<BitVector> rows);

  static Gf2Matrix identity(std::size_t size);
  /// One '0'/'1' string per row.
  static Gf2Matrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  const BitVector& row(std::size_t r) const { return rows_.at(r); }
  BitVector& row(std::size_t r) { return rows_.at(r); }
  BitVector column(std::size_t c) const;

  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_.at(r).set(c, value); }

  /// Rows of '0'/'1' strings separated by newlines (trailing newline included).
  std::string to_string() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::vector<BitVector> rows_;
  std::size_t cols_ = 0;
};

/// H x over GF(2); result has length rows(H).
BitVector matvec(const Gf2Matrix& h, const BitVector& x);

/// Reduced row echelon form. Zero rows are kept at the bottom.
Gf2Matrix row_reduce(Gf2Matrix m);

std::size_t rank(const Gf2Matrix& m);

}  // namespace ddmac
