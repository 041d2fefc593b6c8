#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "surfaut/covering.hpp"
#include "surfaut/equivindex.hpp"
#include "surfaut/error.hpp"

namespace surfaut {
namespace {

OrbifoldData orbifold(long h, long g, std::vector<MarkedPoint> marks, long degree) {
  return OrbifoldData{Integer(h), g, std::move(marks), Integer(degree)};
}

TEST(MarkedPointTest, Validation) {
  EXPECT_NO_THROW(MarkedPoint(3, 1, 2));
  EXPECT_THROW(MarkedPoint(1, 1, 1), InputError);
  EXPECT_THROW(MarkedPoint(3, 0, 2), InputError);
  EXPECT_THROW(MarkedPoint(3, 1, 3), InputError);
  EXPECT_TRUE(MarkedPoint(5, 2, 3).sl2());
  EXPECT_FALSE(MarkedPoint(5, 1, 1).sl2());
}

TEST(CrIndexTest, Examples) {
  EXPECT_EQ(cr_index(orbifold(1, 1, {}, 0)), 0);
  EXPECT_EQ(cr_index(orbifold(2, 0, {{2, 1, 1}, {2, 1, 1}}, 4)), 2);
  try {
    cr_index(orbifold(2, 0, {{2, 1, 1}}, 1));
    FAIL() << "expected NonIntegralIndex";
  } catch (const NonIntegralIndex& e) {
    EXPECT_EQ(e.value(), Rational(Integer(3), Integer(2)));
  }
  EXPECT_EQ(cr_index_exact(orbifold(3, 0, {{3, 1, 1}}, 0)), Rational(Integer(4), Integer(3)));
}

TEST(CrIndexTest, SpecialLinearMarksCollapse) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const long h = std::uniform_int_distribution<long>(1, 12)(rng);
    const long g = std::uniform_int_distribution<long>(0, 5)(rng);
    const long k = std::uniform_int_distribution<long>(0, 8)(rng);
    const long degree = h * std::uniform_int_distribution<long>(-20, 20)(rng);
    std::vector<MarkedPoint> marks;
    for (long i = 0; i < k; ++i) {
      const long m = std::uniform_int_distribution<long>(2, 9)(rng);
      const long m1 = std::uniform_int_distribution<long>(1, m - 1)(rng);
      marks.emplace_back(m, m1, m - m1);
    }
    EXPECT_EQ(cr_index(orbifold(h, g, marks, degree)), degree / h + 2 - 2 * g - k);
  }
}

TEST(ModuliDimTest, Table) {
  EXPECT_EQ(moduli_dim(0, 3), 0);
  EXPECT_EQ(moduli_dim(1, 0), 1);
  EXPECT_EQ(moduli_dim(2, 5), 8);
  EXPECT_EQ(moduli_dim(0, 0), 0);
  EXPECT_EQ(moduli_dim(0, 4), 1);
  EXPECT_EQ(moduli_dim(1, 1), 0);
  EXPECT_EQ(moduli_dim(1, 4), 3);
  EXPECT_EQ(moduli_dim(2, 0), 3);
  EXPECT_THROW(moduli_dim(-1, 0), InputError);
}

TEST(ModuliDimTest, SeamsAsPrinted) {
  // g = 0 rows agree at k = 3; the g = 1 rows jump at k = 0.
  EXPECT_EQ(moduli_dim(0, 3), 3 - 3);
  EXPECT_EQ(moduli_dim(1, 1), 1 - 1);
  EXPECT_EQ(moduli_dim(1, 0), 1);
  EXPECT_NE(moduli_dim(1, 0), 0 - 1);
}

TEST(CaseClassifyTest, Examples) {
  const CaseReport a = case_classify(orbifold(2, 1, {}, 0));
  EXPECT_EQ(a.governing, IndexCase::kIIIPrime);
  EXPECT_EQ(a.governing_lhs, Rational(0));
  EXPECT_TRUE(a.satisfied);
  EXPECT_EQ(a.base, IndexCase::kIII);
  EXPECT_EQ(a.base_lhs, Rational(1));

  const CaseReport b = case_classify(orbifold(3, 2, {}, -3));
  EXPECT_EQ(b.governing, IndexCase::kV);
  EXPECT_EQ(b.governing_lhs, Rational(0));
  EXPECT_TRUE(b.satisfied);
  EXPECT_FALSE(b.base.has_value());

  const CaseReport c = case_classify(orbifold(1, 0, {}, 0));
  EXPECT_EQ(c.governing, IndexCase::kIPrime);
  EXPECT_EQ(c.governing_lhs, Rational(-1));
  EXPECT_FALSE(c.satisfied);
  EXPECT_EQ(c.base, IndexCase::kI);
  EXPECT_EQ(c.base_lhs, Rational(2));
  EXPECT_EQ(c.base_satisfied, true);
}

TEST(CaseClassifyTest, CaseSelection) {
  const MarkedPoint sl(4, 1, 3);
  EXPECT_EQ(case_classify(orbifold(1, 0, {sl, sl, sl, sl}, 1)).governing, IndexCase::kII);
  EXPECT_EQ(case_classify(orbifold(1, 1, {sl}, 1)).governing, IndexCase::kIV);
  EXPECT_EQ(case_classify(orbifold(1, 0, {sl, sl, sl}, 1)).governing, IndexCase::kIPrime);
}

TEST(CaseClassifyTest, RejectsNonSpecialLinearPoint) {
  try {
    case_classify(orbifold(2, 0, {{4, 1, 3}, {4, 1, 1}}, 4));
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("marked point 1"), std::string::npos);
  }
}

TEST(CaseClassifyTest, InvariantUnderScaling) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const long h = std::uniform_int_distribution<long>(1, 6)(rng);
    const long g = std::uniform_int_distribution<long>(0, 4)(rng);
    const long k = std::uniform_int_distribution<long>(0, 6)(rng);
    const long degree = std::uniform_int_distribution<long>(-12, 12)(rng);
    const long t = std::uniform_int_distribution<long>(1, 7)(rng);
    std::vector<MarkedPoint> marks(static_cast<std::size_t>(k), MarkedPoint(2, 1, 1));
    const CaseReport a = case_classify(orbifold(h, g, marks, degree));
    const CaseReport b = case_classify(orbifold(t * h, g, marks, t * degree));
    EXPECT_EQ(a.governing, b.governing);
    EXPECT_EQ(a.satisfied, b.satisfied);
    EXPECT_EQ(a.governing_lhs, b.governing_lhs);
  }
}

TEST(Claim2Test, Examples) {
  EXPECT_EQ(claim2_check(2, 2, true).status, Claim2Status::kHolds);
  EXPECT_EQ(claim2_check(2, 2, true).adjunction_genus, Integer(3));
  const Claim2Verdict v = claim2_check(-1, -1, true);
  EXPECT_EQ(v.status, Claim2Status::kMinimalityContradiction);
  EXPECT_EQ(v.adjunction_genus, Integer(0));
  EXPECT_EQ(v.c1_dot, 1);
  EXPECT_EQ(claim2_check(0, 0, true).status, Claim2Status::kHolds);
  EXPECT_EQ(claim2_check(-1, -1, false).status, Claim2Status::kNotApplicable);
  EXPECT_EQ(claim2_check(-3, -1, true).status, Claim2Status::kViolation);
}

// Curve lists satisfying every conclusion of the decomposition: positive
// curves fixed by G with genus = 1 mod |G|, plus tori of any multiplicity.
struct Scenario {
  Integer c1sq;
  Integer order;
  std::vector<CurveDatum> curves;
};

Scenario generate(std::mt19937_64& rng) {
  const long order = std::uniform_int_distribution<long>(1, 16)(rng);
  const long positives = std::uniform_int_distribution<long>(1, 3)(rng);
  const long tori = std::uniform_int_distribution<long>(0, 3)(rng);
  Scenario s{0, order, {}};
  for (long i = 0; i < positives; ++i) {
    const long square = order * std::uniform_int_distribution<long>(1, 6)(rng);
    s.curves.push_back({square + 1, square, 1, order, square});
    s.c1sq += square;
  }
  std::vector<long> divisors;
  for (long d = 1; d <= order; ++d) {
    if (order % d == 0) divisors.push_back(d);
  }
  for (long i = 0; i < tori; ++i) {
    const long n = std::uniform_int_distribution<long>(1, 4)(rng);
    const long stab = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
    s.curves.push_back({1, 0, n, stab, 0});
  }
  std::shuffle(s.curves.begin(), s.curves.end(), rng);
  return s;
}

TEST(DecompositionAuditTest, Examples) {
  EXPECT_TRUE(decomposition_audit(16, 4, {{17, 16, 1, 4, 16}}).pass);

  const AuditReport r = decomposition_audit(16, 4, {{16, 15, 1, 4, 15}});
  EXPECT_FALSE(r.pass);
  const auto failed = r.failed_checks();
  EXPECT_NE(std::find(failed.begin(), failed.end(), "divisibility"), failed.end());
  EXPECT_EQ(std::find(failed.begin(), failed.end(), "adjunction"), failed.end());

  EXPECT_TRUE(decomposition_audit(1, 1, {{2, 1, 1, 1, 1}, {1, 0, 3, 1, 0}}).pass);
}

TEST(DecompositionAuditTest, GeneratedListsPass) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 1000; ++trial) {
    const Scenario s = generate(rng);
    const AuditReport r = decomposition_audit(s.c1sq, s.order, s.curves);
    ASSERT_TRUE(r.pass) << trial;
    // The total space of each positive curve is a free cover of its quotient.
    for (const auto& c : s.curves) {
      if (c.square <= 0) continue;
      const CoveringData cov = riemann_hurwitz_free(KnownGenus::kTotal, c.genus, s.order);
      EXPECT_EQ(riemann_hurwitz_free(KnownGenus::kQuotient, cov.quotient_genus, s.order)
                    .total_genus,
                c.genus);
    }
  }
}

TEST(DecompositionAuditTest, NegativeSquareSkipsGenusSum) {
  const AuditReport r = decomposition_audit(1, 1, {{2, 1, 1, 1, 1}, {0, -2, 1, 1, 0}});
  EXPECT_FALSE(r.pass);  // self-intersection sum becomes -1
  bool skipped = false;
  for (const auto& c : r.checks) skipped |= c.name == "genus_sum" && c.status == AuditStatus::kSkipped;
  EXPECT_TRUE(skipped);
}

}  // namespace
}  // namespace surfaut
