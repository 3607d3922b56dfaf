#include "ddmac/gf2.hpp"

#include <bit>
#include <utility>

#include "ddmac/errors.hpp"

namespace ddmac {
namespace {

void check_length(std::size_t length) {
  if (length > BitVector::kMaxLength) {
    throw DimensionError("bit vector length " + std::to_string(length) + " exceeds 64");
  }
}

std::uint64_t position_mask(std::size_t length, std::size_t index) {
  return std::uint64_t{1} << (length - 1 - index);
}

}  // namespace

BitVector::BitVector(std::size_t length) : BitVector(length, 0) {}

BitVector::BitVector(std::size_t length, std::uint64_t word) {
  check_length(length);
  if ((word & ~low_mask(length)) != 0) {
    throw DimensionError("word has bits beyond length " + std::to_string(length));
  }
  length_ = static_cast<std::uint8_t>(length);
  word_ = word;
}

BitVector BitVector::from_string(std::string_view text) {
  check_length(text.size());
  BitVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.set(i);
    } else if (text[i] != '0') {
      throw ParseError("invalid bit character '" + std::string(1, text[i]) + "'");
    }
  }
  return v;
}

BitVector BitVector::ones(std::size_t length) { return BitVector(length, low_mask(length)); }

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  BitVector v(length);
  v.set(index);
  return v;
}

bool BitVector::test(std::size_t index) const {
  if (index >= length_) throw DimensionError("bit index out of range");
  return (word_ & position_mask(length_, index)) != 0;
}

void BitVector::set(std::size_t index, bool value) {
  if (index >= length_) throw DimensionError("bit index out of range");
  const std::uint64_t mask = position_mask(length_, index);
  word_ = value ? (word_ | mask) : (word_ & ~mask);
}

std::string BitVector::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (length_ != other.length_) {
    throw DimensionError("xor of vectors with lengths " + std::to_string(length_) + " and " +
                         std::to_string(other.length_));
  }
  word_ ^= other.word_;
  return *this;
}

std::size_t hamming_weight(const BitVector& v) noexcept {
  return static_cast<std::size_t>(std::popcount(v.word()));
}

BitVector concat(const BitVector& a, const BitVector& b) {
  const std::size_t length = a.size() + b.size();
  check_length(length);
  // a's bits become the high (leading) part of the packed word.
  const std::uint64_t high = b.size() >= 64 ? 0 : (a.word() << b.size());
  return BitVector(length, high | b.word());
}

BitVector slice(const BitVector& v, std::size_t offset, std::size_t length) {
  if (offset + length > v.size()) throw DimensionError("slice out of range");
  const std::size_t shift = v.size() - offset - length;
  const std::uint64_t shifted = shift >= 64 ? 0 : (v.word() >> shift);
  return BitVector(length, shifted & low_mask(length));
}

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows, BitVector(cols)), cols_(cols) {}

Gf2Matrix::Gf2Matrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
  if (!rows_.empty()) cols_ = rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw DimensionError("matrix rows have different lengths");
  }
}

Gf2Matrix Gf2Matrix::identity(std::size_t size) {
  Gf2Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
  return Gf2Matrix(std::move(parsed));
}

BitVector Gf2Matrix::column(std::size_t c) const {
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out.set(r, get(r, c));
  return out;
}

std::string Gf2Matrix::to_string() const {
  std::string out;
  for (const auto& r : rows_) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

BitVector matvec(const Gf2Matrix& h, const BitVector& x) {
  if (h.cols() != x.size()) {
    throw DimensionError("matvec: matrix has " + std::to_string(h.cols()) + " columns, vector has " +
                         std::to_string(x.size()) + " bits");
  }
  BitVector out(h.rows());
  for (std::size_t r = 0; r < h.rows(); ++r) {
    if (std::popcount(h.row(r).word() & x.word()) & 1) out.set(r);
  }
  return out;
}

Gf2Matrix row_reduce(Gf2Matrix m) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t found = pivot_row;
    while (found < m.rows() && !m.get(found, c)) ++found;
    if (found == m.rows()) continue;
    std::swap(m.row(pivot_row), m.row(found));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != pivot_row && m.get(r, c)) m.row(r) ^= m.row(pivot_row);
    }
    ++pivot_row;
  }
  return m;
}

std::size_t rank(const Gf2Matrix& m) {
  const Gf2Matrix reduced = row_reduce(m);
  std::size_t r = 0;
  for (std::size_t i = 0; i < reduced.rows(); ++i) {
    if (!reduced.row(i).none()) ++r;
  }
  return r;
}

}  // namespace ddmac
