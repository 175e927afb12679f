#pragma once

#include <cstddef>
#include <vector>

#include "csst/gf2.hpp"
#include "csst/poly.hpp"

namespace csst {

/// Binary linear [n, k] code. The generator is kept in RREF together with an
/// RREF basis of the dual, so equality of codes is equality of generators.
class LinearCode {
 public:
  LinearCode() = default;

  /// Row space of `rows`; ragged input is rejected by BitMatrix itself.
  static LinearCode from_rows(const BitMatrix& rows);
  static LinearCode zero(std::size_t n);
  static LinearCode full(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return gen_.n_rows(); }
  const BitMatrix& generator() const noexcept { return gen_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// RREF generator of the dual code.
  const BitMatrix& parity_check() const noexcept { return check_; }

  LinearCode dual() const;
  bool contains(const BitVector& v) const;
  bool contains(const LinearCode& sub) const;
  /// Codeword for a message given in generator-row coordinates.
  BitVector encode(std::uint64_t message) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.n_ == b.n_ && a.gen_ == b.gen_;
  }

 private:
  std::size_t n_ = 0;
  BitMatrix gen_;
  std::vector<std::size_t> pivots_;
  BitMatrix check_;
};

struct CodeClassification {
  bool is_even = false;
  bool is_doubly_even = false;
  bool is_self_orthogonal = false;
  bool is_self_dual = false;
  bool contains_all_ones = false;
};

/// Flags decided from basis weights and pairwise basis overlaps, never by
/// enumerating codewords.
CodeClassification classify(const LinearCode& c);

/// Span of b_i * b_j over basis pairs i <= j.
LinearCode schur_square(const LinearCode& c);
/// Span of x * y for x in a, y in b.
LinearCode schur_product(const LinearCode& a, const LinearCode& b);

/// Codewords vanishing at `index`, with that coordinate removed.
LinearCode shorten(const LinearCode& c, std::size_t index);
/// Every codeword with coordinate `index` removed.
LinearCode puncture(const LinearCode& c, std::size_t index);
LinearCode augment(const LinearCode& c, const BitVector& v);
/// Code spanned by both arguments.
LinearCode code_sum(const LinearCode& a, const LinearCode& b);
/// Image under the coordinate map i -> perm[i].
LinearCode permute(const LinearCode& c, const std::vector<std::size_t>& perm);
BitVector permute(const BitVector& v, const std::vector<std::size_t>& perm);

/// Cyclic code of odd length n generated by g, which must divide x^n - 1.
LinearCode cyclic_code(std::size_t n, const Gf2Poly& g);
/// Cyclic right shift by one coordinate.
BitVector cyclic_shift(const BitVector& v);

}  // namespace csst
