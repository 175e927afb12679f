#include "csst/gf2.hpp"

#include <algorithm>
#include <stdexcept>

#include "csst/errors.hpp"

namespace csst {

namespace {

void require_same_length(const BitVector& a, const BitVector& b, const char* op) {
  if (a.size() != b.size())
    throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
}

Word tail_mask(std::size_t length) {
  const std::size_t r = length % kWordBits;
  return r == 0 ? ~Word{0} : ((Word{1} << r) - 1);
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw InvalidArgument("bit string contains '" + std::string(1, bits[i]) + "'");
  }
  return v;
}

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length);
  for (auto& w : v.words_) w = ~Word{0};
  if (!v.words_.empty()) v.words_.back() &= tail_mask(length);
  return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  BitVector v(length);
  v.set(index);
  return v;
}

BitVector BitVector::from_words(std::size_t length, std::span<const Word> words) {
  BitVector v(length);
  std::copy_n(words.begin(), std::min(words.size(), v.words_.size()), v.words_.begin());
  if (!v.words_.empty()) v.words_.back() &= tail_mask(length);
  return v;
}

std::size_t BitVector::first_set() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return length_;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    Word x = words_[w];
    while (x) {
      s.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return s;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_length(*this, other, "xor");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_length(*this, other, "and");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool BitVector::lex_less(const BitVector& other) const {
  require_same_length(*this, other, "lex_less");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word diff = words_[i] ^ other.words_[i];
    if (diff) return ((words_[i] >> std::countr_zero(diff)) & 1U) == 0;
  }
  return false;
}

BitVector BitVector::slice(std::size_t start, std::size_t count) const {
  if (start + count > length_) throw DimensionError("slice out of range");
  BitVector out(count);
  for (std::size_t i = 0; i < count; ++i)
    if (get(start + i)) out.set(i);
  return out;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitVector concat(const BitVector& a, const BitVector& b) { return concat({&a, &b}); }

BitVector concat(std::initializer_list<const BitVector*> parts) {
  std::size_t total = 0;
  for (const auto* p : parts) total += p->size();
  BitVector out(total);
  std::size_t offset = 0;
  for (const auto* p : parts) {
    for (std::size_t i : p->support()) out.set(offset + i);
    offset += p->size();
  }
  return out;
}

BitVector schur_product(const BitVector& u, const BitVector& v) {
  require_same_length(u, v, "schur_product");
  return u & v;
}

bool dot(const BitVector& u, const BitVector& v) {
  require_same_length(u, v, "dot");
  Word acc = 0;
  const auto a = u.words();
  const auto b = v.words();
  for (std::size_t i = 0; i < a.size(); ++i) acc ^= a[i] & b[i];
  return std::popcount(acc) & 1;
}

bool triple_overlap_parity(const BitVector& u, const BitVector& v, const BitVector& w) {
  require_same_length(u, v, "triple_overlap_parity");
  require_same_length(u, w, "triple_overlap_parity");
  Word acc = 0;
  const auto a = u.words();
  const auto b = v.words();
  const auto c = w.words();
  for (std::size_t i = 0; i < a.size(); ++i) acc ^= a[i] & b[i] & c[i];
  return std::popcount(acc) & 1;
}

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != cols_)
      throw DimensionError("row of length " + std::to_string(r.size()) + " in matrix with " +
                           std::to_string(cols_) + " columns");
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) return BitMatrix{};
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
  const std::size_t cols = parsed.front().size();
  return BitMatrix(cols, std::move(parsed));
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.rows_.push_back(BitVector::unit(n, i));
  return m;
}

void BitMatrix::push_back(BitVector row) {
  if (row.size() != cols_)
    throw DimensionError("row of length " + std::to_string(row.size()) + " pushed into matrix with " +
                         std::to_string(cols_) + " columns");
  rows_.push_back(std::move(row));
}

std::size_t BitMatrix::max_row_weight() const noexcept {
  std::size_t w = 0;
  for (const auto& r : rows_) w = std::max(w, r.weight());
  return w;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(rows_.size());
  t.rows_.assign(cols_, BitVector(rows_.size()));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c : rows_[r].support()) t.rows_[c].set(r);
  return t;
}

BitMatrix BitMatrix::vstack(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.empty() && top.cols_ == 0) return bottom;
  if (bottom.empty() && bottom.cols_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw DimensionError("vstack: column mismatch");
  BitMatrix out = top;
  for (const auto& r : bottom.rows_) out.rows_.push_back(r);
  return out;
}

BitMatrix BitMatrix::hstack(const BitMatrix& left, const BitMatrix& right) {
  if (left.n_rows() != right.n_rows()) throw DimensionError("hstack: row count mismatch");
  BitMatrix out(left.cols_ + right.cols_);
  for (std::size_t i = 0; i < left.n_rows(); ++i) out.rows_.push_back(concat(left.rows_[i], right.rows_[i]));
  return out;
}

BitVector BitMatrix::multiply(const BitVector& v) const {
  if (v.size() != cols_) throw DimensionError("multiply: length mismatch");
  BitVector out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (dot(rows_[i], v)) out.set(i);
  return out;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.to_string());
  return out;
}

RrefResult rref(const BitMatrix& m) {
  std::vector<BitVector> rows = m.rows();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.n_cols() && next < rows.size(); ++col) {
    std::size_t sel = next;
    while (sel < rows.size() && !rows[sel].get(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[next], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  RrefResult out;
  out.rank = next;
  out.pivots = std::move(pivots);
  out.matrix = BitMatrix(m.n_cols(), std::move(rows));
  return out;
}

std::size_t rank(const BitMatrix& m) { return RowReducer(m).rank(); }

BitMatrix kernel(const BitMatrix& m) {
  const std::size_t rows = m.n_rows();
  const std::size_t cols = m.n_cols();
  // Row j of the augmented system is [column j of M | e_j]; rows whose left
  // part reduces to zero carry kernel vectors on the right.
  std::vector<BitVector> aug;
  aug.reserve(cols);
  const BitMatrix mt = m.transpose();
  for (std::size_t j = 0; j < cols; ++j) {
    BitVector left = rows ? mt.row(j) : BitVector(0);
    aug.push_back(concat(left, BitVector::unit(cols, j)));
  }
  std::size_t next = 0;
  for (std::size_t c = 0; c < rows && next < aug.size(); ++c) {
    std::size_t sel = next;
    while (sel < aug.size() && !aug[sel].get(c)) ++sel;
    if (sel == aug.size()) continue;
    std::swap(aug[next], aug[sel]);
    for (std::size_t r = 0; r < aug.size(); ++r)
      if (r != next && aug[r].get(c)) aug[r] ^= aug[next];
    ++next;
  }
  BitMatrix ker(cols);
  for (std::size_t r = next; r < aug.size(); ++r) ker.push_back(aug[r].slice(rows, cols));
  return rref(ker).matrix;
}

bool member(const BitVector& v, const BitMatrix& m) {
  if (v.size() != m.n_cols() && !(m.empty() && m.n_cols() == 0))
    throw DimensionError("member: length mismatch");
  if (v.is_zero()) return true;
  return RowReducer(m).contains(v);
}

bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
  if (a.n_cols() != b.n_cols()) return false;
  return rref(a).matrix == rref(b).matrix;
}

RowReducer::RowReducer(const BitMatrix& m) {
  auto r = rref(m);
  basis_ = std::move(r.matrix);
  pivots_ = std::move(r.pivots);
}

BitVector RowReducer::reduce(BitVector v) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    if (v.get(pivots_[i])) v ^= basis_[i];
  return v;
}

bool RowReducer::contains(const BitVector& v) const {
  if (basis_.n_cols() != v.size() && basis_.n_rows() > 0) throw DimensionError("contains: length mismatch");
  return reduce(v).is_zero();
}

bool RowReducer::insert(const BitVector& v) {
  if (basis_.n_cols() == 0 && basis_.empty()) basis_ = BitMatrix(v.size());
  BitVector r = reduce(v);
  if (r.is_zero()) return false;
  const std::size_t p = r.first_set();
  // Keep the basis fully reduced: clear the new pivot from existing rows.
  for (std::size_t i = 0; i < basis_.n_rows(); ++i)
    if (basis_[i].get(p)) basis_[i] ^= r;
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  std::vector<BitVector> rows = basis_.rows();
  rows.insert(rows.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, p);
  basis_ = BitMatrix(v.size(), std::move(rows));
  return true;
}

}  // namespace csst
