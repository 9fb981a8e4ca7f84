#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "bouquet/homology.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace bouquet;

TEST(Homology, AbelianizeCountsLetters) {
  EXPECT_EQ(abelianize(fixtures::lowgrow()), (HomologyMatrix{{1, 1, 1}, {0, 0, 0}, {1, 0, 1}}));
  EXPECT_EQ(abelianize(fixtures::reversing_doubling()), (HomologyMatrix{{-2}}));
  const MapAction id(3, {Word::from_string("a1"), Word::from_string("a2"), Word::from_string("a3")},
                     BranchClass::free());
  EXPECT_EQ(abelianize(id), HomologyMatrix::identity(3));
}

TEST(Homology, MatrixPowers) {
  const HomologyMatrix m = abelianize(fixtures::lowgrow());
  EXPECT_EQ(mat_pow(m, 3), (HomologyMatrix{{4, 2, 4}, {0, 0, 0}, {4, 2, 4}}));
  EXPECT_EQ(mat_pow(m, 0), HomologyMatrix::identity(3));
  const HomologyMatrix six = mat_pow(abelianize(fixtures::sixcycle()), 6);
  EXPECT_EQ(six, (HomologyMatrix{{1, 6, 6, 6}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(norm1(HomologyMatrix::identity(3)), 3);
  EXPECT_EQ(trace(m), 2);
  EXPECT_EQ(column_norm1(m, 1), 1);
}

TEST(Homology, MatrixPowerIsExactForLargeExponents) {
  const HomologyMatrix two{{2}};
  BigInt expected = 1;
  expected <<= 200;
  EXPECT_EQ(mat_pow(two, 200)(0, 0), expected);
}

TEST(Homology, Mobius) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(4), 0);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(30), -1);
  for (std::uint64_t m = 1; m <= 200; ++m) {
    EXPECT_EQ(mobius(m), oracle::mobius(m)) << m;
    int sum = 0;
    for (auto d : divisors(m)) sum += mobius(d);
    EXPECT_EQ(sum, m == 1 ? 1 : 0);
  }
  for (std::uint64_t a = 1; a <= 30; ++a)
    for (std::uint64_t b = 1; b <= 30; ++b)
      if (std::gcd(a, b) == 1) {
        EXPECT_EQ(mobius(a * b), mobius(a) * mobius(b));
      }
}

TEST(Homology, DivisorsAndPrimes) {
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(prime_factors(12), (std::vector<std::uint64_t>{2, 3}));
  EXPECT_TRUE(prime_factors(1).empty());
}

TEST(Homology, LefschetzNumbers) {
  const HomologyMatrix d{{-2}};
  EXPECT_EQ(lefschetz(d, 1), 3);
  EXPECT_EQ(lefschetz(d, 2), -3);
  EXPECT_EQ(periodic_lefschetz(d, 2), -6);
  const HomologyMatrix six = abelianize(fixtures::sixcycle());
  EXPECT_EQ(lefschetz(six, 2), 0);
  EXPECT_EQ(lefschetz(six, 3), -3);
  EXPECT_EQ(periodic_lefschetz(six, 3), -3);
  EXPECT_EQ(lefschetz(HomologyMatrix(2), 5), 1);
  const HomologyMatrix m = abelianize(fixtures::m0_three());
  EXPECT_EQ(periodic_lefschetz(m, 1), lefschetz(m, 1));
}

TEST(Homology, SixcyclePeriodicLefschetzVanishesAfterThree) {
  const auto table = lefschetz_table(abelianize(fixtures::sixcycle()), 24);
  for (std::uint64_t m = 4; m <= 24; ++m) EXPECT_EQ(table.at(m).l, 0) << m;
}

TEST(Homology, MifCheck) {
  EXPECT_TRUE(mif_check(abelianize(fixtures::lowgrow()), 12).holds);
  EXPECT_TRUE(mif_check(HomologyMatrix{{-2}}, 12).holds);
}

TEST(HomologyProperty, FunctorialityAndTraceBridge) {
  oracle::Generator gen(99);
  for (int trial = 0; trial < 100; ++trial) {
    const MapAction f = gen.action(3, 4, false);
    const HomologyMatrix d = abelianize(f);
    const auto images = oracle::raw_images(f);
    for (std::uint64_t m = 1; m <= 5; ++m) {
      const auto expected = oracle::chi_matrix(images, m);
      const HomologyMatrix power = mat_pow(d, m);
      for (std::size_t i = 0; i < f.n(); ++i)
        for (std::size_t j = 0; j < f.n(); ++j) ASSERT_EQ(power(i, j), expected[i][j]);
      BigInt sum = 0;
      for (std::size_t j = 1; j <= f.n(); ++j) sum += chi_of_iterate(f, m, j);
      EXPECT_EQ(sum, trace(power));
    }
  }
}

TEST(HomologyProperty, MifOnRandomMatrices) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    HomologyMatrix m(4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = entry(rng);
    ASSERT_TRUE(mif_check(m, 10).holds);
    // independent inversion: L(f^m) = sum over r | m of l(f^r)
    const auto table = lefschetz_table(m, 10);
    for (std::uint64_t k = 1; k <= 10; ++k) {
      BigInt sum = 0;
      for (std::uint64_t r = 1; r <= k; ++r)
        if (k % r == 0) sum += table.at(r).l;
      EXPECT_EQ(sum, table.at(k).L);
    }
  }
}
