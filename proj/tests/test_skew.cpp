#include <gtest/gtest.h>

#include "brute.hpp"
#include "kron/skew.hpp"

using namespace kron;

namespace {

// s_mu * s_kappa via LR coefficients.
SchurExpansion product(const Partition& mu, const Partition& kappa) {
  SchurExpansion e(mu.size() + kappa.size());
  for (const auto& nu : enumerate_partitions(mu.size() + kappa.size())) e.add(nu, lr_coefficient(nu, mu, kappa));
  return e;
}

}  // namespace

TEST(ReverseLexFilling, LabelsRowsRightToLeft) {
  const ReverseLexFilling f(Partition{3, 3});
  EXPECT_EQ(f.label(0, 2), 1);
  EXPECT_EQ(f.label(0, 0), 3);
  EXPECT_EQ(f.label(1, 2), 4);
  EXPECT_EQ(f.label(1, 0), 6);
  for (int x = 1; x <= 6; ++x) {
    const auto [i, j] = f.position(x);
    EXPECT_EQ(f.label(i, j), x);
  }
}

TEST(SkewExpand, WorkedExample) {
  const auto e = skew_expand(Partition{4, 4, 2, 2}, Partition{3, 3});
  SchurExpansion want(6);
  want.add({3, 3}, 1);
  want.add({3, 2, 1}, 1);
  want.add({2, 2, 1, 1}, 1);
  EXPECT_EQ(e, want);
}

TEST(SkewExpand, StraightShapeAndEmptyInner) {
  EXPECT_EQ(skew_expand(Partition{3, 1}, Partition{}), SchurExpansion::single({3, 1}));
  EXPECT_EQ(skew_expand(Partition{3, 1}, Partition{3, 1}), SchurExpansion::single({}));
  EXPECT_THROW(skew_expand(Partition{3, 3}, Partition{4}), DomainError);
}

TEST(SkewExpand, AgreesWithLittlewoodRichardsonAndPruningIsExact) {
  std::size_t shapes = 0;
  for (int n = 1; n <= 9; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int m = 0; m <= n; ++m)
        for (const auto& mu : enumerate_partitions(m, {.inside = lambda})) {
          const auto e = skew_expand(lambda, mu);
          ASSERT_EQ(e, skew_expand(lambda, mu, {.prune = false}));
          for (const auto& nu : enumerate_partitions(n - m))
            ASSERT_EQ(e.coefficient(nu), lr_coefficient(lambda, mu, nu))
                << to_string(lambda) << "/" << to_string(mu) << " nu=" << to_string(nu);
          ++shapes;
        }
  EXPECT_GT(shapes, 1000u);
}

TEST(SkewExpand, SmallestTermIsSortedRowDifferences) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int m = 0; m < n; ++m)
        for (const auto& alpha : enumerate_partitions(m, {.inside = lambda})) {
          const auto e = skew_expand(lambda, alpha);
          const Partition lo = min_lex_term(lambda, alpha);
          ASSERT_EQ(e.min_key(), lo);
          ASSERT_EQ(e.coefficient(lo), 1);
        }
  EXPECT_EQ(min_lex_term({5, 4, 1}, {3, 1}), Partition({3, 2, 1}));
}

TEST(SkewExpand, JoinGivesProduct) {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; a + b <= 8; ++b)
      for (const auto& lambda : enumerate_partitions(a))
        for (const auto& mu : enumerate_partitions(b))
          ASSERT_EQ(skew_expand(join(SkewShape(lambda), SkewShape(mu))), product(lambda, mu));
  // Joins of skew pieces multiply their skew Schur functions too.
  const SkewShape upper(Partition{2, 2}, Partition{1});
  const SkewShape lower(Partition{3, 1}, Partition{2});
  SchurExpansion want(5);
  for (const auto& [x, cx] : skew_expand(upper))
    for (const auto& [y, cy] : skew_expand(lower))
      for (const auto& [nu, c] : product(x, y)) want.add(nu, c * cx * cy);
  EXPECT_EQ(skew_expand(join(upper, lower)), want);
}

TEST(SkewTimesAlpha, MatchesBruteForceAndProduct) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int m = 0; m <= std::min(n, 4); ++m)
        for (const auto& alpha : enumerate_partitions(m, {.inside = lambda})) {
          const auto got = skew_times_alpha(lambda, alpha);
          SchurExpansion want(n);
          for (const auto& [nu, c] : brute::alpha_lattice_expansion(lambda, alpha)) want.add(nu, c);
          ASSERT_EQ(got, want) << to_string(lambda) << " alpha=" << to_string(alpha);
          SchurExpansion prod(n);
          for (const auto& [kappa, c] : skew_expand(lambda, alpha)) {
            for (const auto& [nu, d] : product(alpha, kappa)) prod.add(nu, c * d);
          }
          ASSERT_EQ(got, prod);
        }
}

TEST(AlphaMinus, RemovesOneBoxFromFirstRow) {
  EXPECT_EQ(alpha_minus({3, 1}), Partition({2, 1}));
  EXPECT_EQ(alpha_minus({1}), Partition{});
  EXPECT_THROW(alpha_minus({2, 2}), DomainError);
  EXPECT_THROW(alpha_minus({}), DomainError);
}

TEST(Positivity, FlagIffFirstRowLongEnough) {
  for (int n = 1; n <= 9; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int p = 1; p <= std::min(n, 4); ++p)
        for (const auto& alpha : enumerate_partitions(p, {.inside = lambda})) {
          if (alpha[0] == alpha[1]) continue;
          const auto r = positivity_diff(lambda, alpha);
          ASSERT_EQ(r.schur_positive, lambda[0] >= 2 * alpha[0] - 1)
              << to_string(lambda) << " alpha=" << to_string(alpha);
          ASSERT_EQ(r.schur_positive, r.expansion.is_positive());
        }
}

TEST(Positivity, Examples) {
  EXPECT_TRUE(positivity_diff({5, 3}, {2, 1}).schur_positive);
  const auto r = positivity_diff({4, 2}, {3});
  EXPECT_FALSE(r.schur_positive);
  EXPECT_EQ(r.expansion.coefficient({4, 2}), -1);
}
