#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "surfaut/covering.hpp"
#include "surfaut/error.hpp"

namespace surfaut {
namespace {

// Smith normal form of diag(n_1, ..., n_s): repeatedly replace a pair (a, b)
// by (gcd, lcm) until the diagonal is a divisor chain, then drop the 1s.
std::vector<Integer> smith_diagonal(std::vector<Integer> d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const Integer g = gcd(d[i], d[j]);
      const Integer l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  }
  std::vector<Integer> out;
  for (const auto& x : d) {
    if (x != 1) out.push_back(x);
  }
  return out;
}

std::vector<Integer> invariant_factors(const GroupProfile& g) {
  if (const auto* e = std::get_if<ElementaryAbelian>(&g.structure())) {
    return std::vector<Integer>(static_cast<std::size_t>(e->rank), e->prime);
  }
  return std::get<Abelian>(g.structure()).factors;
}

TEST(RiemannHurwitzTest, Examples) {
  EXPECT_EQ(riemann_hurwitz_free(KnownGenus::kQuotient, 2, 4).total_genus, 5);
  for (long k = 1; k <= 10; ++k) {
    EXPECT_EQ(riemann_hurwitz_free(KnownGenus::kQuotient, 1, k).total_genus, 1);
  }
  EXPECT_THROW(riemann_hurwitz_free(KnownGenus::kTotal, 4, 4), InputError);
  EXPECT_EQ(riemann_hurwitz_free(KnownGenus::kTotal, 5, 4).quotient_genus, 2);
  EXPECT_THROW(riemann_hurwitz_free(KnownGenus::kQuotient, 2, 0), InputError);
}

TEST(RiemannHurwitzTest, RoundTrip) {
  for (long n = 0; n <= 30; ++n) {
    for (long order = 1; order <= 30; ++order) {
      const CoveringData c = riemann_hurwitz_free(KnownGenus::kQuotient, n, order);
      EXPECT_EQ(c.total_genus - 1, order * (Integer(n) - 1));
      if (c.total_genus < 0) continue;
      EXPECT_EQ(riemann_hurwitz_free(KnownGenus::kTotal, c.total_genus, order), c);
    }
  }
}

TEST(FreeGenusTest, Examples) {
  const auto z2 = free_genus_bounds(parse_group_spec("C2"));
  EXPECT_EQ(z2.lower, 1);
  EXPECT_EQ(z2.upper, 1);
  const auto z2_7 = free_genus_bounds(parse_group_spec("C2^7"));
  EXPECT_EQ(z2_7.lower, 385);
  EXPECT_EQ(z2_7.upper, 769);
  const auto z2_2 = free_genus_bounds(parse_group_spec("C2^2"));
  EXPECT_EQ(z2_2.lower, 1);
  EXPECT_EQ(z2_2.upper, 5);
  EXPECT_THROW(free_genus_bounds(GroupProfile::opaque(1, 0)), InputError);
}

TEST(FreeGenusTest, LowerNeverExceedsUpper) {
  for (long r = 1; r <= 40; ++r) {
    for (long order : {2L, 3L, 8L, 243L, 1000L}) {
      const auto b = free_genus_bounds(GroupProfile::opaque(order, r));
      EXPECT_LE(b.lower, b.upper);
    }
  }
}

TEST(FreeGenusTest, CyclicPrimeHasFreeGenusOne) {
  for (long p : {2L, 3L, 5L, 7L, 101L, 7919L}) {
    const auto b = free_genus_bounds(GroupProfile::elementary_abelian(p, 1));
    EXPECT_EQ(b.lower, 1);
    EXPECT_EQ(b.upper, 1);
  }
}

TEST(ParseGroupSpecTest, Examples) {
  const GroupProfile a = parse_group_spec("C2^6");
  EXPECT_EQ(a.structure(), GroupStructure(ElementaryAbelian{2, 6}));
  EXPECT_EQ(a.order(), 64);
  EXPECT_EQ(a.min_generators(), 6);

  const GroupProfile b = parse_group_spec("C3xC9");
  EXPECT_EQ(b.structure(), GroupStructure(Abelian{{3, 9}}));
  EXPECT_EQ(b.order(), 27);
  EXPECT_EQ(b.min_generators(), 2);

  const GroupProfile c = parse_group_spec("C2xC4xC2");
  EXPECT_EQ(c.structure(), GroupStructure(Abelian{{2, 2, 4}}));
  EXPECT_EQ(c.order(), 16);
  EXPECT_EQ(c.min_generators(), 3);
  EXPECT_EQ(c.exponent(), Integer(4));

  // C6 = C2 x C3 is cyclic: one generator.
  const GroupProfile d = parse_group_spec("C2xC3");
  EXPECT_EQ(d.structure(), GroupStructure(Abelian{{6}}));
  EXPECT_EQ(d.min_generators(), 1);

  EXPECT_EQ(parse_group_spec("C3").structure(), GroupStructure(ElementaryAbelian{3, 1}));
  EXPECT_EQ(parse_group_spec("C4").structure(), GroupStructure(Abelian{{4}}));
  EXPECT_EQ(parse_group_spec("C1xC5").order(), 5);
}

TEST(ParseGroupSpecTest, Errors) {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_group_spec(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return static_cast<std::size_t>(-1);
  };
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("D4"), 0u);
  EXPECT_EQ(position_of("C"), 1u);
  EXPECT_EQ(position_of("C2x"), 3u);
  EXPECT_EQ(position_of("C2*C3"), 2u);
  EXPECT_EQ(position_of("C2^"), 3u);
  EXPECT_EQ(position_of("C0"), 1u);
  EXPECT_EQ(position_of("C2^0"), 3u);
  EXPECT_THROW(parse_group_spec("C1"), InputError);
  EXPECT_THROW(parse_group_spec("C1^4"), InputError);
}

TEST(ParseGroupSpecTest, InvariantFactorsMatchSmithNormalForm) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> count(1, 5), order(1, 60);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Integer> cyclic;
    std::string spec;
    const long n = count(rng);
    for (long i = 0; i < n; ++i) {
      const long m = order(rng);
      cyclic.emplace_back(m);
      spec += (i ? "xC" : "C") + std::to_string(m);
    }
    const std::vector<Integer> expected = smith_diagonal(cyclic);
    if (expected.empty()) {
      EXPECT_THROW(parse_group_spec(spec), InputError);
      continue;
    }
    const GroupProfile g = parse_group_spec(spec);
    EXPECT_EQ(invariant_factors(g), expected) << spec;
    EXPECT_EQ(g.min_generators(), static_cast<long>(expected.size()));
    Integer prod = 1;
    for (const auto& c : cyclic) prod *= c;
    EXPECT_EQ(g.order(), prod);
  }
}

TEST(ParseGroupSpecTest, CanonicalRenderingIsAFixedPoint) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> count(1, 6), order(2, 40);
  for (int trial = 0; trial < 300; ++trial) {
    std::string spec;
    const long n = count(rng);
    for (long i = 0; i < n; ++i) spec += (i ? "xC" : "C") + std::to_string(order(rng));
    const GroupProfile g = parse_group_spec(spec);
    const GroupProfile again = parse_group_spec(g.canonical());
    EXPECT_EQ(again, g) << spec << " -> " << g.canonical();
    EXPECT_EQ(again.canonical(), g.canonical());
  }
}

TEST(GroupProfileTest, OpaqueValidation) {
  EXPECT_THROW(GroupProfile::opaque(1, 1), InputError);
  EXPECT_THROW(GroupProfile::opaque(9, 0), InputError);
  EXPECT_THROW(GroupProfile::opaque(27, 2, Integer(2)), InputError);
  const GroupProfile h = GroupProfile::opaque(27, 2, Integer(3));
  EXPECT_TRUE(h.is_p_group(3));
  EXPECT_FALSE(h.is_p_group(2));
  EXPECT_EQ(h.canonical(), "opaque(order=27,r=2,exponent=3)");
}

}  // namespace
}  // namespace surfaut
