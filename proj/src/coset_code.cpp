#include "ddmac/coset_code.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <iomanip>
#include <limits>
#include <memory>
#include <sstream>

#include "ddmac/errors.hpp"
#include "ddmac/rng.hpp"

namespace ddmac {
namespace {

// Next larger word with the same popcount (Gosper). Returns false once the
// enumeration leaves the low `n` bits.
bool next_same_weight(std::uint64_t& v, std::size_t n) {
  if (v == 0) return false;
  const std::uint64_t c = v & (~v + 1);
  const std::uint64_t r = v + c;
  if (r == 0) return false;  // wrapped past bit 63
  const std::uint64_t next = (((r ^ v) >> 2) / c) | r;
  if (n < 64 && (next >> n) != 0) return false;
  v = next;
  return true;
}

}  // namespace

LinearCode LinearCode::build(const Gf2Matrix& parity_check, std::uint64_t table_cap_bits) {
  const std::size_t n = parity_check.cols();
  const std::size_t r = parity_check.rows();
  if (n == 0 || r == 0) throw InvalidCodeError("parity-check matrix must be non-empty");
  if (r >= n) throw InvalidCodeError("parity-check matrix needs fewer rows than columns (k >= 1)");
  if (rank(parity_check) != r) throw InvalidCodeError("parity-check matrix is rank deficient");

  const bool too_many = r >= 58 || ((std::uint64_t{1} << r) > table_cap_bits / n);
  if (too_many) {
    throw ResourceError("coset table of 2^" + std::to_string(r) + " leaders x " + std::to_string(n) +
                        " bits exceeds cap of " + std::to_string(table_cap_bits) + " bits");
  }

  LinearCode code;
  code.n_ = n;
  code.redundancy_ = r;
  code.parity_check_ = parity_check;
  code.column_syndromes_.resize(n);
  for (std::size_t j = 0; j < n; ++j) code.column_syndromes_[j] = parity_check.column(j).word();

  const std::uint64_t cosets = std::uint64_t{1} << r;
  code.leaders_.assign(cosets, 0);
  std::vector<bool> seen(cosets, false);
  std::uint64_t found = 0;

  // Weight shells in increasing order; inside a shell, increasing word order
  // is lexicographic order of the bit strings.
  for (std::size_t w = 0; w <= n && found < cosets; ++w) {
    std::uint64_t v = low_mask(w);
    do {
      std::uint64_t s = 0;
      for (std::uint64_t bits = v; bits != 0; bits &= bits - 1) {
        const auto pos = static_cast<std::size_t>(std::countr_zero(bits));
        s ^= code.column_syndromes_[n - 1 - pos];
      }
      if (!seen[s]) {
        seen[s] = true;
        code.leaders_[s] = v;
        code.covering_radius_ = w;
        if (++found == cosets) break;
      }
    } while (next_same_weight(v, n));
  }
  return code;
}

BitVector LinearCode::syndrome(const BitVector& x) const {
  if (x.size() != n_) {
    throw DimensionError("vector of length " + std::to_string(x.size()) + " for code of length " +
                         std::to_string(n_));
  }
  std::uint64_t s = 0;
  for (std::uint64_t bits = x.word(); bits != 0; bits &= bits - 1) {
    const auto pos = static_cast<std::size_t>(std::countr_zero(bits));
    s ^= column_syndromes_[n_ - 1 - pos];
  }
  return BitVector(redundancy_, s);
}

BitVector LinearCode::leader(const BitVector& syndrome) const {
  if (syndrome.size() != redundancy_) {
    throw DimensionError("syndrome of length " + std::to_string(syndrome.size()) + ", expected " +
                         std::to_string(redundancy_));
  }
  return BitVector(n_, leaders_[syndrome.word()]);
}

LinearCode random_covering_search(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t attempts,
                                  std::uint64_t table_cap_bits) {
  if (k < 1 || k >= n || n > BitVector::kMaxLength) {
    throw DomainError("random_covering_search requires 1 <= k < n <= 64");
  }
  const std::size_t r = n - k;
  CounterRng rng(seed, 0x636f766572ULL);
  std::unique_ptr<LinearCode> best;
  const std::size_t rounds = attempts == 0 ? 1 : attempts;
  const bool distinct_columns = r < 63 && n <= (std::size_t{1} << r) - 1;
  for (std::size_t a = 0; a < rounds; ++a) {
    Gf2Matrix h(r, n);
    do {
      if (distinct_columns) {
        // Zero or repeated columns never help covering, so skip them when there is room.
        std::vector<std::uint64_t> cols;
        while (cols.size() < n) {
          const std::uint64_t c = rng.bits(static_cast<unsigned>(r));
          if (c != 0 && std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
        }
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t i = 0; i < r; ++i) h.set(i, j, (cols[j] >> (r - 1 - i)) & 1);
        }
      } else {
        for (std::size_t i = 0; i < r; ++i) h.row(i) = BitVector(n, rng.bits(static_cast<unsigned>(n)));
      }
    } while (rank(h) != r);
    LinearCode candidate = LinearCode::build(h, table_cap_bits);
    if (!best || candidate.covering_radius() < best->covering_radius()) {
      best = std::make_unique<LinearCode>(std::move(candidate));
    }
  }
  return std::move(*best);
}

Gf2Matrix hamming74_parity_check() {
  return Gf2Matrix::from_strings({"0001111", "0110011", "1010101"});
}

Gf2Matrix golay23_parity_check() {
  return Gf2Matrix::from_strings({
      "10000000000111110010010",
      "01000000000011111001001",
      "00100000000110001110110",
      "00010000000011000111011",
      "00001000000110010001111",
      "00000100000100111010101",
      "00000010000101101111000",
      "00000001000010110111100",
      "00000000100001011011110",
      "00000000010000101101111",
      "00000000001111100100101",
  });
}

Gf2Matrix repetition_parity_check(std::size_t n) {
  if (n < 2) throw DomainError("repetition code needs n >= 2");
  Gf2Matrix h(n - 1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h.set(i, i);
    h.set(i, i + 1);
  }
  return h;
}

Gf2Matrix single_parity_check(std::size_t n) {
  if (n < 2) throw DomainError("single parity check needs n >= 2");
  return Gf2Matrix({BitVector::ones(n)});
}

Gf2Matrix parse_code_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  std::size_t k = 0;
  if (!(in >> n >> k)) throw ParseError("code file: expected header line \"n k\"");
  if (n == 0 || n > BitVector::kMaxLength || k == 0 || k >= n) {
    throw ParseError("code file: header needs 1 <= k < n <= 64");
  }
  std::vector<std::string> rows;
  std::string token;
  while (in >> token) rows.push_back(token);
  if (rows.size() != n - k) {
    throw ParseError("code file: expected " + std::to_string(n - k) + " rows, found " +
                     std::to_string(rows.size()));
  }
  for (const auto& row : rows) {
    if (row.size() != n) throw ParseError("code file: row \"" + row + "\" does not have n bits");
  }
  Gf2Matrix h = Gf2Matrix::from_strings(rows);
  if (rank(h) != n - k) throw InvalidCodeError("code file: parity-check matrix is rank deficient");
  return h;
}

Gf2Matrix load_code_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open code file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_code_text(buffer.str());
}

std::string format_code_text(const Gf2Matrix& h) {
  return std::to_string(h.cols()) + " " + std::to_string(h.cols() - h.rows()) + "\n" + h.to_string();
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) out << std::setw(2) << static_cast<int>(digest[i]);
  return out.str();
}

}  // namespace ddmac
