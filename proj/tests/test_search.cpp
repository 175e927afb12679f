#include <gtest/gtest.h>

#include "csst/csst.hpp"
#include "csst/errors.hpp"
#include "csst/search.hpp"
#include "helpers.hpp"

using namespace csst;

TEST(Search, LengthThreeFullList) {
  SearchTask task;
  task.n = 3;
  const auto results = search_cyclic_csst(task);
  // Divisors 1, x+1, x^2+x+1, x^3-1 give five strictly nested pairs.
  ASSERT_EQ(results.size(), 5U);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    EXPECT_EQ(r.pair.n, 6U);
    EXPECT_TRUE(r.g1.divides(r.g2));
    EXPECT_EQ(r.csst.schur_ok, true);
    EXPECT_TRUE(oracle::triple_parity_ok(r.pair));
    const auto [dx, dz] = oracle::css_distances(r.pair);
    EXPECT_EQ(r.params.d_x.value, static_cast<std::size_t>(dx));
    EXPECT_EQ(r.params.d_z.value, static_cast<std::size_t>(dz));
    if (i) {
      const auto& prev = results[i - 1];
      EXPECT_GE(prev.params.k, r.params.k);
      if (prev.params.k == r.params.k) EXPECT_GE(*prev.params.d.value, *r.params.d.value);
    }
  }
  // (1, x^3 - 1): C1 is the full space and C2 = {0}.
  EXPECT_EQ(results.front().params.k, 3U);
}

TEST(Search, LengthSevenTarget) {
  SearchTask task;
  task.n = 7;
  task.target = SearchTarget{14, 3, 3};
  const auto results = search_cyclic_csst(task);
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) {
    EXPECT_EQ(r.params.n, 14U);
    EXPECT_EQ(r.params.k, 3U);
    EXPECT_EQ(r.params.d.value, 3U);
    EXPECT_EQ(r.params.z_degenerate, true);
    const auto [dx, dz] = oracle::css_distances(r.pair);
    EXPECT_EQ(std::min(dx, dz), 3);
  }
}

TEST(Search, RejectsBadLengths) {
  SearchTask task;
  task.n = 8;
  EXPECT_THROW(search_cyclic_csst(task), InvalidArgument);
  task.n = 35;
  EXPECT_THROW(search_cyclic_csst(task), InvalidArgument);
}

TEST(Search, MaxPairsCapsTheScan) {
  SearchTask task;
  task.n = 7;
  task.max_pairs = 3;
  EXPECT_LE(search_cyclic_csst(task).size(), 3U);
}

TEST(NphiIdentityParams, MatchesDirectComputation) {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 2 + rng() % 12;
    const std::size_t k1 = 1 + rng() % std::min<std::size_t>(n, 7);
    const auto q = gen::random_pair(n, k1, 1 + rng() % k1, rng);
    const auto doubled = nphi(q, PhiMap::identity(n));
    const auto fast = nphi_identity_params(q, doubled, {});
    const auto slow = css_params(doubled);
    EXPECT_EQ(fast.d_x.value, slow.d_x.value);
    EXPECT_EQ(fast.d_z.value, slow.d_z.value);
    EXPECT_EQ(fast.d.value, slow.d.value);
    EXPECT_EQ(fast.d_c1.value, slow.d_c1.value);
    EXPECT_EQ(fast.d_c2perp.value, slow.d_c2perp.value);
    EXPECT_EQ(fast.x_degenerate, slow.x_degenerate);
    EXPECT_EQ(fast.z_degenerate, slow.z_degenerate);
    ASSERT_TRUE(fast.d_z.certificate);
    EXPECT_TRUE(doubled.c2.dual().contains(*fast.d_z.certificate));
    EXPECT_FALSE(doubled.c1.dual().contains(*fast.d_z.certificate));
  }
}

TEST(NphiIdentityParams, TargetModeSettlesOnlyTheTarget) {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + rng() % 10;
    const std::size_t k1 = 1 + rng() % std::min<std::size_t>(n, 6);
    const auto q = gen::random_pair(n, k1, 1 + rng() % k1, rng);
    const auto doubled = nphi(q, PhiMap::identity(n));
    const auto exact = css_params(doubled);
    const std::size_t d = *exact.d.value;
    const auto hit = nphi_identity_params(q, doubled, {}, SearchTarget{2 * n, q.k, d});
    EXPECT_EQ(hit.d.value, d);
    const auto miss = nphi_identity_params(q, doubled, {}, SearchTarget{2 * n, q.k, d + 1});
    EXPECT_NE(miss.d.value, std::optional<std::size_t>(d + 1));
  }
}
