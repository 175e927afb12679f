#include <gtest/gtest.h>

#include "csst/errors.hpp"
#include "csst/gf2.hpp"
#include "helpers.hpp"

using namespace csst;

namespace {

BitVector bv(const char* s) { return BitVector::from_string(s); }
BitMatrix mat(std::vector<std::string> rows) { return BitMatrix::from_strings(rows); }

}  // namespace

TEST(BitVector, TailBitsStayClear) {
  auto v = BitVector::ones(70);
  EXPECT_EQ(v.weight(), 70U);
  EXPECT_EQ(v.words()[1] >> 6, 0U);
  auto w = BitVector::from_words(3, std::vector<Word>{~Word{0}});
  EXPECT_EQ(w.weight(), 3U);
  EXPECT_EQ(v.slice(60, 10).weight(), 10U);
}

TEST(BitVector, LexOrderReadsFromCoordinateZero) {
  EXPECT_TRUE(bv("0011").lex_less(bv("1100")));
  EXPECT_FALSE(bv("1100").lex_less(bv("0011")));
  EXPECT_FALSE(bv("0110").lex_less(bv("0110")));
}

TEST(SchurProduct, Examples) {
  EXPECT_EQ(schur_product(bv("1100"), bv("1010")), bv("1000"));
  EXPECT_EQ(schur_product(bv("1111"), bv("0110")), bv("0110"));
  EXPECT_EQ(schur_product(bv("0000"), bv("1011")), bv("0000"));
  EXPECT_THROW(schur_product(bv("110"), bv("1100")), DimensionError);
}

TEST(TripleOverlapParity, Examples) {
  EXPECT_TRUE(triple_overlap_parity(bv("111"), bv("111"), bv("111")));
  EXPECT_TRUE(triple_overlap_parity(bv("1100"), bv("1010"), bv("1001")));
  EXPECT_FALSE(triple_overlap_parity(bv("1100"), bv("0011"), bv("1111")));
  EXPECT_THROW(triple_overlap_parity(bv("11"), bv("11"), bv("111")), DimensionError);
}

TEST(Rref, Examples) {
  auto a = rref(mat({"11", "01"}));
  EXPECT_EQ(a.matrix, mat({"10", "01"}));
  EXPECT_EQ(a.rank, 2U);
  auto b = rref(mat({"110", "110"}));
  EXPECT_EQ(b.matrix, mat({"110"}));
  EXPECT_EQ(b.rank, 1U);
  auto c = rref(mat({"1111", "1100", "0011"}));
  EXPECT_EQ(c.rank, 2U);
  EXPECT_EQ(c.pivots, (std::vector<std::size_t>{0, 2}));
}

TEST(Kernel, Examples) {
  auto k1 = kernel(mat({"1111"}));
  EXPECT_EQ(k1.n_rows(), 3U);
  for (const char* v : {"1100", "0110", "0011"}) EXPECT_TRUE(member(bv(v), k1));
  EXPECT_EQ(kernel(mat({"10", "01"})).n_rows(), 0U);
  EXPECT_TRUE(same_row_space(kernel(mat({"1100", "0011"})), mat({"1100", "0011"})));
}

TEST(Member, Examples) {
  const auto m = mat({"1111", "1100"});
  EXPECT_TRUE(member(bv("0011"), m));
  EXPECT_FALSE(member(bv("1000"), m));
  EXPECT_TRUE(member(bv("0000"), m));
  EXPECT_THROW(member(bv("001"), m), DimensionError);
}

TEST(BitMatrix, RaggedRowsRejected) {
  EXPECT_THROW(BitMatrix::from_strings({"101", "10"}), DimensionError);
}

TEST(RowReducer, InsertKeepsReducedBasis) {
  RowReducer r(BitMatrix(4));
  EXPECT_TRUE(r.insert(bv("1100")));
  EXPECT_TRUE(r.insert(bv("0110")));
  EXPECT_FALSE(r.insert(bv("1010")));
  EXPECT_TRUE(r.contains(bv("1010")));
  EXPECT_EQ(r.basis(), rref(r.basis()).matrix);
}

class Gf2Property : public ::testing::TestWithParam<int> {};

TEST_P(Gf2Property, AlgebraicIdentities) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 130;
    const std::size_t rows = rng() % 12;
    const BitMatrix m = gen::random_matrix(rows, n, rng);
    const auto u = gen::random_vector(n, rng);
    const auto v = gen::random_vector(n, rng);
    EXPECT_EQ((u ^ v).weight() + 2 * (u & v).weight(), u.weight() + v.weight());

    const auto r = rref(m);
    EXPECT_EQ(rref(r.matrix).matrix, r.matrix);
    for (std::size_t i = 1; i < r.pivots.size(); ++i) EXPECT_LT(r.pivots[i - 1], r.pivots[i]);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      for (std::size_t j = 0; j < r.matrix.n_rows(); ++j) EXPECT_EQ(r.matrix.get(j, r.pivots[i]), i == j);

    const BitMatrix ker = kernel(m);
    EXPECT_EQ(r.rank + ker.n_rows(), n);
    for (const auto& kr : ker.rows())
      for (const auto& mr : m.rows()) EXPECT_FALSE(dot(kr, mr));
    EXPECT_TRUE(same_row_space(kernel(ker), r.matrix));

    // Shuffled and recombined rows give the same canonical form.
    BitMatrix mixed(n);
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
      BitVector acc = m[i];
      if (i + 1 < m.n_rows()) acc ^= m[i + 1];
      mixed.push_back(acc);
    }
    if (m.n_rows()) mixed.push_back(m[m.n_rows() - 1]);
    EXPECT_EQ(rref(mixed).matrix, r.matrix);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, Gf2Property, ::testing::Values(1, 2, 3, 4));
