#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "surfaut/dedekind.hpp"
#include "surfaut/error.hpp"

namespace surfaut {
namespace {

Rational frac(long n, long d) { return Rational(Integer(n), Integer(d)); }

// s(q,p) + s(p,q) = -1/4 + (p/q + q/p + 1/(pq)) / 12 for coprime p, q >= 1.
Rational reciprocity_rhs(long q, long p) {
  return frac(-1, 4) + (frac(p, q) + frac(q, p) + frac(1, p * q)) / Rational(12);
}

TEST(SawtoothTest, Examples) {
  EXPECT_EQ(sawtooth(frac(1, 2)), Rational(0));
  EXPECT_EQ(sawtooth(Rational(7)), Rational(0));
  EXPECT_EQ(sawtooth(frac(1, 3)), frac(-1, 6));
  EXPECT_EQ(sawtooth(frac(-1, 3)), frac(1, 6));
}

TEST(SawtoothTest, PeriodicOddAndBounded) {
  for (long d = 1; d <= 24; ++d) {
    for (long n = -60; n <= 60; ++n) {
      const Rational x = frac(n, d);
      const Rational s = sawtooth(x);
      EXPECT_EQ(sawtooth(x + Rational(1)), s);
      EXPECT_EQ(sawtooth(-x), -s);
      EXPECT_GT(s, frac(-1, 2));
      EXPECT_LT(s, frac(1, 2));
    }
  }
}

TEST(DedekindInputTest, RejectsNonCoprimeAndBadModulus) {
  EXPECT_THROW(DedekindInput(2, 4), NotCoprime);
  EXPECT_THROW(DedekindInput(0, 3), NotCoprime);
  EXPECT_THROW(DedekindInput(1, 0), InputError);
  EXPECT_NO_THROW(DedekindInput(5, 1));
}

TEST(DedekindSumTest, DirectExamples) {
  EXPECT_EQ(dedekind_sum_direct({1, 3}), frac(1, 18));
  EXPECT_EQ(dedekind_sum_direct({1, 2}), Rational(0));
  EXPECT_EQ(dedekind_sum_direct({-1, 3}), frac(-1, 18));
  // Frozen from an independent Fraction evaluation of the defining sum.
  EXPECT_EQ(dedekind_sum_direct({3, 7}), frac(-1, 14));
  EXPECT_EQ(dedekind_sum_direct({5, 13}), Rational(0));
  EXPECT_EQ(dedekind_sum_direct({7, 100}), frac(7, 8));
  EXPECT_EQ(dedekind_sum_direct({-3, 11}), frac(-3, 22));
  EXPECT_EQ(dedekind_sum_direct({4, 1}), Rational(0));
}

TEST(DedekindSumTest, ClosedExamples) {
  EXPECT_EQ(dedekind_sum_closed({1, 3}), frac(1, 18));
  EXPECT_EQ(dedekind_sum_closed({-1, 3}), frac(-1, 18));
  EXPECT_EQ(dedekind_sum_closed({-1, 2}), Rational(0));
  EXPECT_EQ(dedekind_sum_closed({1000, 2001}), frac(-499000, 6003));
  EXPECT_THROW(dedekind_sum_closed({1, 1}), InputError);
  EXPECT_THROW(dedekind_sum_closed({3, 6}), NotCoprime);
}

TEST(FpTest, Examples) {
  EXPECT_EQ(f_p(1, 3), 0);
  EXPECT_EQ(f_p(-1, 3), -3);
  EXPECT_EQ(f_p(5, 13), 211);
  for (long p = 2; p <= 200; ++p) EXPECT_EQ(f_p(-1, p), Integer(p * (1 - p) / 2)) << p;
  EXPECT_THROW(f_p(2, 4), NotCoprime);
  EXPECT_THROW(f_p(1, 1), InputError);
}

TEST(DedekindSumTest, ClosedEqualsDirectForAllSmallPairs) {
  for (long p = 2; p <= 120; ++p) {
    for (long q = -p; q <= p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      ASSERT_EQ(dedekind_sum_direct({q, p}), dedekind_sum_closed({q, p})) << q << "/" << p;
    }
  }
}

TEST(DedekindSumTest, ClosedEqualsDirectOnSampledLargePairs) {
  std::mt19937_64 rng(2000);
  int checked = 0;
  while (checked < 400) {
    const long p = std::uniform_int_distribution<long>(121, 2000)(rng);
    const long q = std::uniform_int_distribution<long>(-p, p)(rng);
    if (std::gcd(q, p) != 1) continue;
    ASSERT_EQ(dedekind_sum_direct({q, p}), dedekind_sum_closed({q, p})) << q << "/" << p;
    ++checked;
  }
}

TEST(DedekindSumTest, PeriodicityAndOddness) {
  for (long p = 1; p <= 60; ++p) {
    for (long q = -2 * p; q <= 2 * p; ++q) {
      if (std::gcd(q, p) != 1) continue;
      const Rational s = dedekind_sum_direct({q, p});
      EXPECT_EQ(dedekind_sum_direct({q + p, p}), s);
      EXPECT_EQ(dedekind_sum_direct({-q, p}), -s);
    }
  }
}

TEST(DedekindSumTest, Reciprocity) {
  for (long p = 1; p <= 120; ++p) {
    for (long q = 1; q <= 120; ++q) {
      if (std::gcd(q, p) != 1) continue;
      EXPECT_EQ(dedekind_sum_direct({q, p}) + dedekind_sum_direct({p, q}), reciprocity_rhs(q, p))
          << q << "," << p;
    }
  }
}

TEST(DedekindSumTest, SixPTimesSumIsIntegral) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const long p = std::uniform_int_distribution<long>(2, 3000)(rng);
    const long q = std::uniform_int_distribution<long>(-p, p)(rng);
    if (std::gcd(q, p) != 1) continue;
    EXPECT_TRUE((dedekind_sum_closed({q, p}) * Rational(6 * p)).is_integer());
  }
}

}  // namespace
}  // namespace surfaut
