#include <gtest/gtest.h>

#include "brute.hpp"
#include "kron/kronecker.hpp"

using namespace kron;

namespace {

std::vector<std::vector<int>> full_grid(const SkewShape& s, const std::vector<std::vector<int>>& skew_rows) {
  std::vector<std::vector<int>> g(s.rows());
  for (int r = 0; r < s.rows(); ++r) {
    g[r].assign(s.outer[r], 0);
    for (int c = s.inner[r]; c < s.outer[r]; ++c) g[r][c] = skew_rows[r][c - s.inner[r]];
  }
  return g;
}

// Kronecker tableaux counted straight from the definition: alpha-lattice SSYT of
// shape lambda/alpha whose type is nu/alpha, and either alpha_1 = alpha_2, or
// row 2 holds alpha_1 - alpha_2 ones, or row 1 holds alpha_1 - alpha_2 twos.
std::map<Partition, long> brute_kronecker(const Partition& lambda, const Partition& alpha) {
  const SkewShape s(lambda, alpha);
  const int gap = alpha[0] - alpha[1];
  std::map<Partition, long> out;
  brute::for_each_filling(s, alpha.length() + lambda.length(), [&](const auto& g) {
    if (!brute::semistandard(s, g) || !brute::alpha_lattice(brute::reading_word(g), alpha)) return;
    auto count = [&](int row, int value) {
      return row < s.rows() ? static_cast<int>(std::count(g[row].begin(), g[row].end(), value)) : 0;
    };
    if (gap != 0 && count(1, 1) != gap && count(0, 2) != gap) return;
    auto t = brute::content(g);
    t.resize(std::max<std::size_t>(t.size(), alpha.length()), 0);
    for (int i = 0; i < alpha.length(); ++i) t[i] += alpha[i];
    ++out[Partition(t)];
  });
  return out;
}

}  // namespace

TEST(KroneckerCondition, OneAtCornerMeansFullRunOfOnes) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int p = 1; p <= 3; ++p)
        for (const auto& alpha : enumerate_partitions(p, {.inside = lambda})) {
          if (alpha[0] == alpha[1] || lambda[1] < alpha[0]) continue;
          const SkewShape s(lambda, alpha);
          brute::for_each_filling(s, 3, [&](const auto& g) {
            if (!brute::semistandard(s, g) || !brute::alpha_lattice(brute::reading_word(g), alpha)) return;
            const int ones = static_cast<int>(std::count(g[1].begin(), g[1].end(), 1));
            const auto grid = full_grid(s, g);
            ASSERT_EQ(grid[1][alpha[0] - 1] == 1, ones == alpha[0] - alpha[1]);
          });
        }
}

TEST(KroneckerTableaux, MatchesDefinitionByBruteForce) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int p = 1; p <= 3; ++p)
        for (const auto& alpha : enumerate_partitions(p, {.inside = lambda})) {
          SchurExpansion want(n);
          for (const auto& [nu, c] : brute_kronecker(lambda, alpha)) want.add(nu, c);
          ASSERT_EQ(kronecker_tableau_expansion(lambda, alpha), want)
              << to_string(lambda) << " alpha=" << to_string(alpha);
          for (const auto& nu : enumerate_partitions(n))
            ASSERT_EQ(kronecker_tableau_count(lambda, alpha, nu), want.coefficient(nu));
        }
}

TEST(KroneckerTableaux, EqualPositivityDifferenceWhenFirstRowLongEnough) {
  for (int n = 2; n <= 10; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int p = 1; p <= 4; ++p)
        for (const auto& alpha : enumerate_partitions(p, {.inside = lambda})) {
          if (alpha[0] == alpha[1] || lambda[0] < 2 * alpha[0] - 1) continue;
          ASSERT_EQ(kronecker_tableau_expansion(lambda, alpha), positivity_diff(lambda, alpha).expansion)
              << to_string(lambda) << " alpha=" << to_string(alpha);
        }
}

TEST(KronCoeff, WorkedExampleAllRoutes) {
  const Partition lambda{6, 4, 4, 1}, nu{5, 4, 3, 3};
  const auto r = kron_coeff(15, 3, lambda, nu);
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(r.method, KronMethod::kronecker_tableaux);
  EXPECT_EQ(oracle_tworow_signed_coeff(15, 3, lambda, nu), 4);
  EXPECT_EQ(kron_expand_tworow(15, 3, lambda).expansion.coefficient(nu), 4);
}

TEST(KronCoeff, UpperBoundCanBeStrict) {
  const Partition lambda{4, 3};
  for (const Partition nu : {Partition{4, 2, 1}, Partition{3, 2, 2}}) {
    const auto r = kron_coeff(7, 3, lambda, nu);
    EXPECT_EQ(r.value, 1);
    EXPECT_EQ(*r.upper_bound, 2);
  }
}

TEST(KronCoeff, UpperBoundDominatesEverywhere) {
  for (int n = 2; n <= 10; ++n)
    for (int p = 1; 2 * p <= n; ++p)
      for (const auto& lambda : enumerate_partitions(n)) {
        const auto truth = oracle_tworow_signed_sum(n, p, lambda);
        for (const auto& nu : enumerate_partitions(n)) {
          const auto r = kron_coeff(n, p, lambda, nu);
          ASSERT_EQ(r.value, truth.coefficient(nu));
          ASSERT_GE(*r.upper_bound, r.value);
        }
      }
}

TEST(KronExpand, RoutesAgreeWhereBothApply) {
  for (int n = 2; n <= 11; ++n)
    for (int p = 1; 2 * p <= n; ++p)
      for (const auto& lambda : enumerate_partitions(n)) {
        if (lambda[0] < 2 * p - 1 || lambda.length() < 2 * p - 1) continue;
        ASSERT_EQ(detail::tableau_route_expansion(p, lambda),
                  detail::tableau_route_expansion(p, conjugate(lambda)).conjugated())
            << "n=" << n << " p=" << p << " lambda=" << to_string(lambda);
      }
}

TEST(KronExpand, ConjugationSymmetry) {
  for (int n = 2; n <= 10; ++n)
    for (int p = 0; 2 * p <= n; ++p)
      for (const auto& lambda : enumerate_partitions(n))
        ASSERT_EQ(kron_expand_tworow(n, p, conjugate(lambda)).expansion,
                  kron_expand_tworow(n, p, lambda).expansion.conjugated());
}

TEST(KronExpand, SupportBounds) {
  for (int n = 2; n <= 11; ++n)
    for (int p = 1; 2 * p <= n; ++p)
      for (const auto& lambda : enumerate_partitions(n))
        for (const auto& [nu, c] : kron_expand_tworow(n, p, lambda).expansion) {
          ASSERT_GT(c, 0);
          ASSERT_GE(intersect(lambda, nu).size(), n - p);
          ASSERT_LE(nu.length(), lambda.length() + std::min(p, lambda.length()));
        }
}

TEST(KronExpand, TrivialCases) {
  EXPECT_EQ(kron_expand_tworow(6, 0, {3, 2, 1}).expansion, SchurExpansion::single({3, 2, 1}));
  EXPECT_EQ(kron_expand_tworow(6, 1, {6}).expansion, SchurExpansion::single({5, 1}));
  EXPECT_EQ(kron_expand_tworow(6, 2, {1, 1, 1, 1, 1, 1}).expansion, SchurExpansion::single({2, 2, 1, 1}));
  EXPECT_EQ(kron_coeff(6, 0, {3, 3}, {3, 3}).value, 1);
  EXPECT_EQ(kron_coeff(6, 0, {3, 3}, {4, 2}).value, 0);
}

TEST(KronExpand, RouteSelection) {
  EXPECT_EQ(kron_expand_tworow(15, 3, {6, 4, 4, 1}).method, KronMethod::kronecker_tableaux);
  EXPECT_EQ(kron_expand_tworow(15, 3, {4, 4, 4, 1, 1, 1}).method, KronMethod::kronecker_tableaux_conjugate);
  EXPECT_EQ(kron_expand_tworow(16, 3, {4, 4, 4, 4}).method, KronMethod::oracle_fallback);
}

TEST(KronExpand, DomainErrors) {
  EXPECT_THROW(kron_expand_tworow(7, 4, {4, 3}), DomainError);
  EXPECT_THROW(kron_expand_tworow(7, 2, {4, 2}), DomainError);
  EXPECT_THROW(kron_coeff(7, 2, {4, 3}, {4, 2}), DomainError);
}
