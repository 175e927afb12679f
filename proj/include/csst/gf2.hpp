#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace csst {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Packed vector over GF(2). Coordinate i lives in bit (i % 64) of word (i / 64).
/// Bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

  /// Parses a string of '0'/'1' characters, coordinate 0 first.
  static BitVector from_string(std::string_view bits);
  static BitVector ones(std::size_t length);
  static BitVector unit(std::size_t length, std::size_t index);
  /// Builds a vector from packed words; excess bits are cleared.
  static BitVector from_words(std::size_t length, std::span<const Word> words);

  std::size_t size() const noexcept { return length_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  bool get(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (Word x : words_) w += static_cast<std::size_t>(std::popcount(x));
    return w;
  }
  bool is_zero() const noexcept {
    for (Word x : words_)
      if (x) return false;
    return true;
  }
  /// Index of the lowest set coordinate, or size() when zero.
  std::size_t first_set() const noexcept;
  std::vector<std::size_t> support() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend bool operator==(const BitVector& a, const BitVector& b) = default;

  /// Order of the 0/1 strings read from coordinate 0 (so "0011" < "1100").
  bool lex_less(const BitVector& other) const;

  BitVector slice(std::size_t start, std::size_t count) const;
  std::string to_string() const;

 private:
  std::size_t length_ = 0;
  std::vector<Word> words_;
};

BitVector concat(const BitVector& a, const BitVector& b);
BitVector concat(std::initializer_list<const BitVector*> parts);

/// Coordinate-wise AND.
BitVector schur_product(const BitVector& u, const BitVector& v);
/// Parity of the overlap, i.e. the standard inner product u . v.
bool dot(const BitVector& u, const BitVector& v);
/// Parity of wt(u * v * w).
bool triple_overlap_parity(const BitVector& u, const BitVector& v, const BitVector& w);

class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t cols) : cols_(cols) {}
  BitMatrix(std::size_t cols, std::vector<BitVector> rows);

  static BitMatrix from_strings(const std::vector<std::string>& rows);
  static BitMatrix identity(std::size_t n);

  std::size_t n_rows() const noexcept { return rows_.size(); }
  std::size_t n_cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_.empty(); }
  const std::vector<BitVector>& rows() const noexcept { return rows_; }
  const BitVector& row(std::size_t i) const { return rows_[i]; }
  const BitVector& operator[](std::size_t i) const { return rows_[i]; }
  BitVector& operator[](std::size_t i) { return rows_[i]; }

  void push_back(BitVector row);
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }

  std::size_t max_row_weight() const noexcept;
  BitMatrix transpose() const;
  /// Rows of `top` followed by rows of `bottom`.
  static BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);
  /// Column-wise concatenation; row counts must agree.
  static BitMatrix hstack(const BitMatrix& left, const BitMatrix& right);
  /// Matrix-vector product M v^T, one bit per row.
  BitVector multiply(const BitVector& v) const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix matrix;  // nonzero rows only
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; the result is unique for a given row space.
RrefResult rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);
/// Basis (in RREF) of { v : M v^T = 0 }.
BitMatrix kernel(const BitMatrix& m);
/// True iff v lies in the row space of m.
bool member(const BitVector& v, const BitMatrix& m);
bool same_row_space(const BitMatrix& a, const BitMatrix& b);

/// Row space kept in RREF for repeated reduction and membership queries.
class RowReducer {
 public:
  RowReducer() = default;
  explicit RowReducer(const BitMatrix& m);

  std::size_t rank() const noexcept { return basis_.n_rows(); }
  const BitMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Clears every pivot coordinate of v using the basis rows.
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const;
  /// Adds v to the span if independent; returns whether the rank grew.
  bool insert(const BitVector& v);

 private:
  BitMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace csst
