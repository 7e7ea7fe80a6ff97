#include <gtest/gtest.h>

#include <set>

#include "kron/partition.hpp"

using namespace kron;

TEST(Partition, RejectsIncreasingOrNegativeParts) {
  EXPECT_THROW(Partition({2, 3}), DomainError);
  EXPECT_THROW(Partition({2, -1}), DomainError);
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
}

TEST(Partition, IndexingPastLengthIsZero) {
  const Partition p{4, 2};
  EXPECT_EQ(p[0], 4);
  EXPECT_EQ(p[1], 2);
  EXPECT_EQ(p[5], 0);
  EXPECT_EQ(p.size(), 6);
  EXPECT_EQ(p.length(), 2);
}

TEST(Partition, CountsMatchPartitionNumbers) {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(enumerate_partitions(n).size(), expected[n]) << n;
}

TEST(Partition, EnumerationIsDescendingLexAndDistinct) {
  for (int n = 1; n <= 12; ++n) {
    const auto all = enumerate_partitions(n);
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
    for (const auto& p : all) EXPECT_EQ(p.size(), n);
  }
}

TEST(Partition, ConstraintsFilterTheFullList) {
  const Partition box{4, 3, 3, 1};
  for (int n = 0; n <= 11; ++n) {
    std::set<Partition> want;
    for (const auto& p : enumerate_partitions(n))
      if (p.length() <= 3 && p[0] <= 3 && contains(p, box)) want.insert(p);
    const auto got = enumerate_partitions(n, {.max_length = 3, .max_part = 3, .inside = box});
    EXPECT_EQ(std::set<Partition>(got.begin(), got.end()), want) << n;
  }
}

TEST(Partition, ConjugateIsAnInvolution) {
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      const Partition c = conjugate(p);
      EXPECT_EQ(c.size(), n);
      EXPECT_EQ(conjugate(c), p);
      EXPECT_EQ(c[0], p.length());
    }
  EXPECT_EQ(conjugate(Partition{4, 2, 1}), Partition({3, 2, 1, 1}));
}

TEST(Partition, ContainmentAndIntersection) {
  EXPECT_TRUE(contains(Partition{2, 1}, Partition{3, 1, 1}));
  EXPECT_FALSE(contains(Partition{2, 2}, Partition{3, 1, 1}));
  EXPECT_TRUE(contains(Partition{}, Partition{1}));
  EXPECT_EQ(intersect(Partition{5, 1}, Partition{2, 2, 2}), Partition({2, 1}));
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : enumerate_partitions(n))
      for (const auto& b : enumerate_partitions(n)) {
        const Partition m = intersect(a, b);
        EXPECT_TRUE(contains(m, a));
        EXPECT_TRUE(contains(m, b));
        EXPECT_EQ(contains(a, b), m == a);
      }
}

TEST(Partition, ShapePredicates) {
  EXPECT_TRUE(is_rectangle(Partition{3, 3, 3}));
  EXPECT_FALSE(is_rectangle(Partition{3, 3, 2}));
  EXPECT_TRUE(is_hook(Partition{5, 1, 1}));
  EXPECT_TRUE(is_hook(Partition{5}));
  EXPECT_FALSE(is_hook(Partition{5, 2}));
  EXPECT_EQ(descent_count(Partition{5}), 0);
  EXPECT_EQ(descent_count(Partition{3, 3}), 0);
  EXPECT_EQ(descent_count(Partition{4, 2, 2, 1}), 2);
  EXPECT_EQ(rectangle(3, 2), Partition({3, 3}));
}

TEST(Partition, LexCompare) {
  EXPECT_EQ(lex_compare(Partition{3, 1}, Partition{2, 2}), std::strong_ordering::greater);
  EXPECT_EQ(lex_compare(Partition{2, 1, 1}, Partition{2, 2}), std::strong_ordering::less);
  EXPECT_EQ(lex_compare(Partition{2, 2}, Partition{2, 2}), std::strong_ordering::equal);
}

TEST(SkewShape, RequiresContainment) {
  EXPECT_THROW(SkewShape(Partition{2, 2}, Partition{3}), DomainError);
  const SkewShape s(Partition{4, 4, 2, 2}, Partition{3, 3});
  EXPECT_EQ(s.size(), 6);
  EXPECT_EQ(s.row_length(0), 1);
  EXPECT_EQ(s.row_length(2), 2);
}

TEST(SkewShape, JoinPlacesUpperAboveAndRight) {
  const SkewShape j = join(SkewShape(Partition{2, 1}), SkewShape(Partition{3}));
  EXPECT_EQ(j.outer, Partition({5, 4, 3}));
  EXPECT_EQ(j.inner, Partition({3, 3}));
  EXPECT_EQ(j.size(), 6);
}

TEST(Parse, AcceptsExponentsAndEmpty) {
  EXPECT_EQ(parse_partition("6,4,4,1"), Partition({6, 4, 4, 1}));
  EXPECT_EQ(parse_partition("3^2,1"), Partition({3, 3, 1}));
  EXPECT_EQ(parse_partition(" 2 , 1 "), Partition({2, 1}));
  EXPECT_EQ(parse_partition(""), Partition{});
  EXPECT_EQ(to_string(Partition{3, 3, 1}), "3,3,1");
}

TEST(Parse, RejectsMalformedText) {
  EXPECT_THROW(parse_partition("3,x"), ParseError);
  EXPECT_THROW(parse_partition("1,3"), ParseError);
  EXPECT_THROW(parse_partition("3,,1"), ParseError);
  EXPECT_THROW(parse_partition("-1"), ParseError);
}

TEST(Parse, RoundTrips) {
  for (int n = 0; n <= 9; ++n)
    for (const auto& p : enumerate_partitions(n)) EXPECT_EQ(parse_partition(to_string(p)), p);
}
