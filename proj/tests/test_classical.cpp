#include <gtest/gtest.h>

#include <fstream>

#include "csst/distance.hpp"
#include "csst/errors.hpp"
#include "csst/io.hpp"
#include "csst/linear_code.hpp"
#include "helpers.hpp"

using namespace csst;

namespace {

BitVector bv(const char* s) { return BitVector::from_string(s); }
LinearCode code(std::vector<std::string> rows) { return LinearCode::from_rows(BitMatrix::from_strings(rows)); }

LinearCode hamming7() { return cyclic_code(7, Gf2Poly::from_string("1101")); }

LinearCode code89() {
  std::ifstream f(std::string(CSST_DATA_DIR) + "/cyclic89.txt");
  std::string spec;
  std::getline(f, spec);
  return parse_poly_spec(spec);
}

DistanceOptions with(DistanceMethod m) {
  DistanceOptions o;
  o.method = m;
  return o;
}

}  // namespace

TEST(Poly, Arithmetic) {
  const auto a = Gf2Poly::from_string("11");   // 1 + x
  const auto b = Gf2Poly::from_string("111");  // 1 + x + x^2
  EXPECT_EQ(a * b, Gf2Poly::from_string("1001"));
  const auto dm = Gf2Poly::from_string("1001").divmod(a);
  EXPECT_EQ(dm.quotient, b);
  EXPECT_TRUE(dm.remainder.is_zero());
  EXPECT_EQ(Gf2Poly::x_pow_minus_one(3), Gf2Poly::from_string("1001"));
  EXPECT_EQ(Gf2Poly().degree(), -1);
}

TEST(Poly, CyclotomicCosets) {
  const auto c = cyclotomic_cosets(7);
  ASSERT_EQ(c.size(), 3U);
  EXPECT_EQ(c[0], (std::vector<std::size_t>{0}));
  EXPECT_EQ(c[1], (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_EQ(c[2], (std::vector<std::size_t>{3, 5, 6}));
}

TEST(Poly, CyclicDivisorsExamples) {
  EXPECT_EQ(cyclic_divisors(7).size(), 8U);
  EXPECT_EQ(cyclic_divisors(3).size(), 4U);
  EXPECT_EQ(cyclic_divisors(9).size(), 8U);
  EXPECT_THROW(cyclic_divisors(8), InvalidArgument);
}

TEST(Poly, DivisorsDivideAndAreDistinct) {
  for (std::size_t n : {3, 5, 7, 9, 15, 17, 21, 23, 31, 33}) {
    const auto divs = cyclic_divisors(n);
    const auto f = Gf2Poly::x_pow_minus_one(n);
    const auto factors = cyclotomic_factors(n);
    EXPECT_EQ(divs.size(), std::size_t{1} << factors.size()) << n;
    for (std::size_t i = 0; i < divs.size(); ++i) {
      EXPECT_TRUE(divs[i].divides(f));
      if (i) {
        EXPECT_TRUE(divs[i - 1] < divs[i]);
        EXPECT_LE(divs[i - 1].degree(), divs[i].degree());
      }
    }
    Gf2Poly prod = Gf2Poly::one();
    for (const auto& g : factors) prod = prod * g;
    EXPECT_EQ(prod, f) << n;
  }
}

TEST(LinearCode, FromRowsExamples) {
  const auto a = code({"1111", "1100"});
  EXPECT_EQ(a.n(), 4U);
  EXPECT_EQ(a.k(), 2U);
  EXPECT_EQ(code({"0000"}).k(), 0U);
  EXPECT_EQ(code({"110", "011", "101"}).k(), 2U);
  EXPECT_THROW(LinearCode::from_rows(BitMatrix(0)), DimensionError);
}

TEST(LinearCode, CyclicExamples) {
  const auto h = hamming7();
  EXPECT_EQ(h.k(), 4U);
  EXPECT_EQ(oracle::min_distance(oracle::words_of(h)), 3);
  for (std::size_t n : {3, 5, 9}) {
    const auto even = cyclic_code(n, Gf2Poly::from_string("11"));
    EXPECT_EQ(even.k(), n - 1);
    EXPECT_TRUE(classify(even).is_even);
  }
  EXPECT_THROW(cyclic_code(7, Gf2Poly::from_string("111")), InvalidArgument);
  EXPECT_EQ(cyclic_code(7, Gf2Poly::x_pow_minus_one(7)).k(), 0U);
}

TEST(LinearCode, Cyclic89IsSelfOrthogonalWithDualPlusOnes) {
  const auto c = code89();
  EXPECT_EQ(c.n(), 89U);
  EXPECT_EQ(c.k(), 44U);
  EXPECT_TRUE(classify(c).is_self_orthogonal);
  EXPECT_EQ(c.dual(), augment(c, BitVector::ones(89)));
}

TEST(LinearCode, ShortenExamples) {
  const auto rep = code({"11"});
  EXPECT_EQ(shorten(rep, 0).k(), 0U);
  EXPECT_EQ(shorten(rep, 0).n(), 1U);
  const auto s = shorten(code({"1100", "0011"}), 0);
  EXPECT_EQ(s, code({"011"}));
  EXPECT_THROW(shorten(s, 3), InvalidArgument);
}

TEST(LinearCode, AugmentExamples) {
  const auto c = code({"011"});
  EXPECT_EQ(augment(c, bv("111")).k(), 2U);
  EXPECT_EQ(augment(c, bv("000")), c);
  EXPECT_THROW(augment(c, bv("11")), DimensionError);
}

TEST(Classify, Examples) {
  const auto a = classify(code({"1100", "0011"}));
  EXPECT_TRUE(a.is_self_dual);
  EXPECT_TRUE(a.is_even);
  EXPECT_FALSE(a.is_doubly_even);

  // Every one of the 8 codewords has weight divisible by 4.
  const auto b = code({"11110000", "00111100", "00001111"});
  for (auto w : oracle::words_of(b)) EXPECT_EQ(oracle::wt(w) % 4, 0);
  EXPECT_TRUE(classify(b).is_doubly_even);

  const auto z = classify(LinearCode::zero(4));
  EXPECT_TRUE(z.is_even);
  EXPECT_TRUE(z.is_doubly_even);
  EXPECT_TRUE(z.is_self_orthogonal);
  EXPECT_FALSE(z.is_self_dual);
  EXPECT_FALSE(z.contains_all_ones);
}

TEST(Classify, MatchesEnumeration) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 12;
    const auto c = gen::random_code(n, 1 + rng() % (n / 2 + 1), rng);
    const auto words = oracle::words_of(c);
    const auto dual = oracle::dual_words(words, n);
    bool even = true;
    bool de = true;
    bool so = true;
    for (auto w : words) {
      even = even && oracle::wt(w) % 2 == 0;
      de = de && oracle::wt(w) % 4 == 0;
      so = so && oracle::contains(dual, w);
    }
    const auto f = classify(c);
    EXPECT_EQ(f.is_even, even);
    EXPECT_EQ(f.is_doubly_even, de);
    EXPECT_EQ(f.is_self_orthogonal, so);
    EXPECT_EQ(f.is_self_dual, so && words.size() == dual.size());
    EXPECT_EQ(f.contains_all_ones, oracle::contains(words, (oracle::Mask{1} << n) - 1));
  }
}

TEST(SchurSquare, Examples) {
  const auto c = code({"1111", "1100"});
  EXPECT_EQ(schur_square(c), c);
  EXPECT_EQ(schur_square(code({"1000"})), code({"1000"}));
  EXPECT_EQ(schur_square(hamming7()), LinearCode::full(7));
}

TEST(MinDistance, Examples) {
  for (auto m : {DistanceMethod::exhaustive, DistanceMethod::information_set, DistanceMethod::automatic}) {
    const auto r = min_distance(hamming7(), with(m));
    EXPECT_EQ(r.value, 3U);
    ASSERT_TRUE(r.certificate);
    EXPECT_EQ(r.certificate->weight(), 3U);
    EXPECT_TRUE(hamming7().contains(*r.certificate));
  }
  for (std::size_t n : {1, 5, 70, 130}) {
    const auto rep = LinearCode::from_rows(BitMatrix(n, {BitVector::ones(n)}));
    EXPECT_EQ(min_distance(rep).value, n);
    EXPECT_EQ(min_distance(rep, with(DistanceMethod::information_set)).value, n);
  }
  EXPECT_THROW(min_distance(LinearCode::zero(5)), InvalidArgument);
}

TEST(MinDistance, ExhaustiveLimitIsAGuard) {
  DistanceOptions o = with(DistanceMethod::exhaustive);
  o.exhaustive_limit = 3;
  EXPECT_THROW(min_distance(hamming7(), o), ResourceGuardError);
}

TEST(MinDistance, Code89PlusOnesDistances) {
  const auto c = code89();
  const auto c1 = c.dual();
  const auto dx = coset_min_weight(c1, c, with(DistanceMethod::information_set));
  EXPECT_EQ(dx.value, 17U);
  EXPECT_EQ(dx.certificate->weight(), 17U);
  EXPECT_TRUE(c1.contains(*dx.certificate));
  EXPECT_FALSE(c.contains(*dx.certificate));
  EXPECT_EQ(min_distance(c1).value, 12U);
}

TEST(CosetMinWeight, Examples) {
  const auto r = coset_min_weight(code({"1111", "1100"}), code({"1111"}));
  EXPECT_EQ(r.value, 2U);
  EXPECT_EQ(r.certificate, bv("0011"));
  EXPECT_EQ(coset_min_weight(code({"110", "011"}), code({"110"})).value, 2U);
  EXPECT_EQ(coset_min_weight(LinearCode::full(2), LinearCode::zero(2)).value, 1U);
  EXPECT_THROW(coset_min_weight(code({"1100"}), code({"0011"})), ContainmentError);
  EXPECT_THROW(coset_min_weight(hamming7(), hamming7()), InvalidArgument);
}

class DistanceOracle : public ::testing::TestWithParam<int> {};

TEST_P(DistanceOracle, EnginesAgreeWithEnumeration) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 4 + rng() % 40;
    const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 12);
    const auto c = gen::random_code(n, k, rng);
    const auto words = oracle::words_of(c);
    const int d = oracle::min_distance(words);
    DistanceOptions ex = with(DistanceMethod::exhaustive);
    DistanceOptions is = with(DistanceMethod::information_set);
    is.seed = rng();
    const auto re = min_distance(c, ex);
    const auto ri = min_distance(c, is);
    EXPECT_EQ(re.value, static_cast<std::size_t>(d));
    EXPECT_EQ(ri.value, static_cast<std::size_t>(d));
    EXPECT_EQ(oracle::to_mask(*re.certificate), oracle::lex_smallest(words, d, n));
    EXPECT_TRUE(oracle::contains(words, oracle::to_mask(*ri.certificate)));
    EXPECT_EQ(static_cast<int>(ri.certificate->weight()), d);

    if (k >= 2) {
      const auto pair = gen::random_pair(n, k, 1 + rng() % (k - 1), rng);
      const auto outer = oracle::words_of(pair.c1);
      const auto inner = oracle::words_of(pair.c2);
      const int dc = oracle::min_weight_excluding(outer, inner);
      const auto ce = coset_min_weight(pair.c1, pair.c2, ex);
      const auto ci = coset_min_weight(pair.c1, pair.c2, is);
      EXPECT_EQ(ce.value, static_cast<std::size_t>(dc));
      EXPECT_EQ(ci.value, static_cast<std::size_t>(dc));
      for (const auto* r : {&ce, &ci}) {
        EXPECT_TRUE(pair.c1.contains(*r->certificate));
        EXPECT_FALSE(pair.c2.contains(*r->certificate));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DistanceOracle, ::testing::Values(1, 2, 3, 4, 5));

TEST(DistanceEngine, DeterministicAcrossWorkerCounts) {
  std::mt19937_64 rng(5);
  const auto c = gen::random_code(90, 30, rng);
  DistanceOptions a = with(DistanceMethod::information_set);
  a.workers = 1;
  DistanceOptions b = a;
  b.workers = 4;
  const auto ra = min_distance(c, a);
  const auto rb = min_distance(c, b);
  EXPECT_EQ(ra.value, rb.value);
  EXPECT_EQ(ra.certificate, rb.certificate);
}

TEST(DistanceEngine, BudgetYieldsConsistentBounds) {
  std::mt19937_64 rng(9);
  const auto c = gen::random_code(200, 100, rng);
  DistanceOptions o = with(DistanceMethod::information_set);
  o.budget = std::chrono::milliseconds(30);
  const auto r = min_distance(c, o);
  EXPECT_LE(r.lower_bound, r.upper_bound);
  if (!r.known()) {
    EXPECT_FALSE(r.value);
  }
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->weight(), r.upper_bound);
  EXPECT_TRUE(c.contains(*r.certificate));
}

TEST(DistanceEngine, WindowStopsEarlyWithValidBounds) {
  const auto h = hamming7();
  DistanceOptions o = with(DistanceMethod::information_set);
  o.window_lo = 5;
  const auto r = min_distance(h, o);
  EXPECT_LT(r.upper_bound, 5U);
  EXPECT_LE(r.lower_bound, 3U);
  EXPECT_GE(r.upper_bound, 3U);
}

TEST(DistanceEngine, BoundOnly) {
  const auto r = min_distance(hamming7(), with(DistanceMethod::bound_only));
  EXPECT_FALSE(r.known() && r.upper_bound != 3);
  EXPECT_GE(r.upper_bound, 3U);
  EXPECT_EQ(r.method, DistanceMethod::bound_only);
}

TEST(ClassicalProperty, ShortenDualIsPuncturedDual) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 11;
    const auto c = gen::random_code(n, 1 + rng() % (n - 1), rng);
    const std::size_t i = rng() % n;
    EXPECT_EQ(shorten(c, i).dual(), puncture(c.dual(), i));
    EXPECT_EQ(c.dual().dual(), c);
    EXPECT_TRUE(schur_square(c).contains(c));
  }
}

TEST(ClassicalProperty, ShortenedSelfDualIsSelfOrthogonal) {
  const auto db = load_selfdual_db(std::string(CSST_DATA_DIR) + "/selfdual.txt");
  std::vector<LinearCode> codes{code({"1100", "0011"})};
  for (const auto& e : db) codes.push_back(e.code);
  for (const auto& c : codes)
    for (std::size_t i = 0; i < c.n(); ++i) {
      const auto s = shorten(c, i);
      EXPECT_EQ(s.k(), c.n() / 2 - 1);
      EXPECT_TRUE(classify(s).is_self_orthogonal);
    }
}

TEST(ClassicalProperty, CyclicCodesAreShiftInvariant) {
  for (std::size_t n : {7, 9, 15, 21}) {
    for (const auto& g : cyclic_divisors(n)) {
      const auto c = cyclic_code(n, g);
      EXPECT_EQ(c.k(), n - static_cast<std::size_t>(g.degree()));
      for (const auto& r : c.generator().rows()) EXPECT_TRUE(c.contains(cyclic_shift(r)));
    }
  }
}
