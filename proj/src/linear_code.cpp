#include "csst/linear_code.hpp"

#include <algorithm>

#include "csst/errors.hpp"

namespace csst {

LinearCode LinearCode::from_rows(const BitMatrix& rows) {
  if (rows.n_cols() == 0) throw DimensionError("code needs at least one coordinate");
  LinearCode c;
  c.n_ = rows.n_cols();
  auto r = rref(rows);
  c.gen_ = std::move(r.matrix);
  c.pivots_ = std::move(r.pivots);
  c.check_ = kernel(c.gen_);
  return c;
}

LinearCode LinearCode::zero(std::size_t n) { return from_rows(BitMatrix(n)); }

LinearCode LinearCode::full(std::size_t n) { return from_rows(BitMatrix::identity(n)); }

LinearCode LinearCode::dual() const { return from_rows(check_); }

bool LinearCode::contains(const BitVector& v) const {
  if (v.size() != n_) throw DimensionError("codeword length " + std::to_string(v.size()) + " vs code length " +
                                           std::to_string(n_));
  BitVector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    if (r.get(pivots_[i])) r ^= gen_[i];
  return r.is_zero();
}

bool LinearCode::contains(const LinearCode& sub) const {
  if (sub.n_ != n_) return false;
  for (const auto& row : sub.gen_.rows())
    if (!contains(row)) return false;
  return true;
}

BitVector LinearCode::encode(std::uint64_t message) const {
  BitVector v(n_);
  for (std::size_t i = 0; i < k() && message; ++i, message >>= 1)
    if (message & 1U) v ^= gen_[i];
  return v;
}

CodeClassification classify(const LinearCode& c) {
  CodeClassification out;
  const auto& rows = c.generator().rows();
  bool even = true;
  bool basis_mod4 = true;
  for (const auto& r : rows) {
    const std::size_t w = r.weight();
    even = even && (w % 2 == 0);
    basis_mod4 = basis_mod4 && (w % 4 == 0);
  }
  // wt(x + y) = wt(x) + wt(y) - 2 wt(x * y): with all basis weights 0 mod 4,
  // every sum stays 0 mod 4 iff each pairwise overlap is even.
  bool pairwise_even = true;
  for (std::size_t i = 0; i < rows.size() && pairwise_even; ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (dot(rows[i], rows[j])) {
        pairwise_even = false;
        break;
      }
  out.is_even = even;
  out.is_doubly_even = basis_mod4 && pairwise_even;
  out.is_self_orthogonal = even && pairwise_even;
  out.is_self_dual = out.is_self_orthogonal && 2 * c.k() == c.n();
  out.contains_all_ones = c.contains(BitVector::ones(c.n()));
  return out;
}

LinearCode schur_square(const LinearCode& c) { return schur_product(c, c); }

LinearCode schur_product(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n()) throw DimensionError("schur product of codes with different lengths");
  RowReducer span(BitMatrix(a.n()));
  const auto& ra = a.generator().rows();
  const auto& rb = b.generator().rows();
  const bool symmetric = (a == b);
  for (std::size_t i = 0; i < ra.size(); ++i) {
    for (std::size_t j = symmetric ? i : 0; j < rb.size(); ++j) {
      span.insert(ra[i] & rb[j]);
      if (span.rank() == a.n()) return LinearCode::full(a.n());
    }
  }
  return LinearCode::from_rows(span.basis());
}

LinearCode shorten(const LinearCode& c, std::size_t index) {
  if (index >= c.n()) throw InvalidArgument("shorten index " + std::to_string(index) + " out of range");
  if (c.n() == 1) throw InvalidArgument("cannot shorten a length-1 code");
  std::vector<BitVector> rows = c.generator().rows();
  // Use one row with a 1 at `index` to clear the coordinate from the others,
  // then drop it.
  auto it = std::find_if(rows.begin(), rows.end(), [&](const BitVector& r) { return r.get(index); });
  if (it != rows.end()) {
    const BitVector pivot = *it;
    rows.erase(it);
    for (auto& r : rows)
      if (r.get(index)) r ^= pivot;
  }
  BitMatrix out(c.n() - 1);
  for (const auto& r : rows) {
    BitVector s(c.n() - 1);
    for (std::size_t i : r.support())
      if (i != index) s.set(i < index ? i : i - 1);
    out.push_back(std::move(s));
  }
  return LinearCode::from_rows(out);
}

LinearCode puncture(const LinearCode& c, std::size_t index) {
  if (index >= c.n()) throw InvalidArgument("puncture index " + std::to_string(index) + " out of range");
  if (c.n() == 1) throw InvalidArgument("cannot puncture a length-1 code");
  BitMatrix out(c.n() - 1);
  for (const auto& r : c.generator().rows()) {
    BitVector s(c.n() - 1);
    for (std::size_t i : r.support())
      if (i != index) s.set(i < index ? i : i - 1);
    out.push_back(std::move(s));
  }
  return LinearCode::from_rows(out);
}

LinearCode augment(const LinearCode& c, const BitVector& v) {
  if (v.size() != c.n()) throw DimensionError("augment: vector length mismatch");
  BitMatrix rows = c.generator();
  rows.push_back(v);
  return LinearCode::from_rows(rows);
}

LinearCode code_sum(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n()) throw DimensionError("code_sum: length mismatch");
  return LinearCode::from_rows(BitMatrix::vstack(a.generator(), b.generator()));
}

BitVector permute(const BitVector& v, const std::vector<std::size_t>& perm) {
  if (perm.size() != v.size()) throw DimensionError("permutation size mismatch");
  BitVector out(v.size());
  for (std::size_t i : v.support()) out.set(perm[i]);
  return out;
}

LinearCode permute(const LinearCode& c, const std::vector<std::size_t>& perm) {
  if (perm.size() != c.n()) throw DimensionError("permutation size mismatch");
  std::vector<char> hit(perm.size(), 0);
  for (std::size_t p : perm) {
    if (p >= perm.size() || hit[p]) throw InvalidArgument("not a permutation");
    hit[p] = 1;
  }
  BitMatrix rows(c.n());
  for (const auto& r : c.generator().rows()) rows.push_back(permute(r, perm));
  return LinearCode::from_rows(rows);
}

BitVector cyclic_shift(const BitVector& v) {
  BitVector out(v.size());
  for (std::size_t i : v.support()) out.set((i + 1) % v.size());
  return out;
}

LinearCode cyclic_code(std::size_t n, const Gf2Poly& g) {
  if (n == 0) throw InvalidArgument("cyclic code of length 0");
  if (g.is_zero() || !g.divides(Gf2Poly::x_pow_minus_one(n)))
    throw InvalidArgument("generator " + g.to_string() + " does not divide x^" + std::to_string(n) + " - 1");
  const auto deg = static_cast<std::size_t>(g.degree());
  if (deg == n) return LinearCode::zero(n);
  BitMatrix rows(n);
  BitVector shifted = g.to_bits(n);
  for (std::size_t i = 0; i < n - deg; ++i) {
    rows.push_back(shifted);
    shifted = cyclic_shift(shifted);
  }
  return LinearCode::from_rows(rows);
}

}  // namespace csst
