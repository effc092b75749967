#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ecw/arith.hpp"
#include "ecw/errors.hpp"
#include "oracles.hpp"

using namespace ecw;

TEST(Factor, SmallExamples) {
  const auto f12 = factor(12);
  EXPECT_EQ(f12.sign, 1);
  ASSERT_EQ(f12.factors.size(), 2u);
  EXPECT_EQ(f12.factors[0], (PrimePower{2, 2}));
  EXPECT_EQ(f12.factors[1], (PrimePower{3, 1}));

  const auto fm1 = factor(-1);
  EXPECT_EQ(fm1.sign, -1);
  EXPECT_TRUE(fm1.factors.empty());

  const auto f = factor(10403);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, 101);
  EXPECT_EQ(f.factors[1].prime, 103);
}

TEST(Factor, ZeroIsDomainError) {
  EXPECT_THROW(factor(0), DomainError);
  EXPECT_THROW(omega(0), DomainError);
  EXPECT_THROW(squarefree_part(0), DomainError);
  EXPECT_THROW(mobius(0), DomainError);
  EXPECT_THROW(rational_stats(Rational(0)), DomainError);
}

TEST(Factor, AgreesWithTrialDivision) {
  for (long n = -3000; n <= 3000; ++n) {
    if (n == 0) continue;
    const auto f = factor(n);
    const auto ref = oracle::trial_factor(n);
    ASSERT_EQ(f.factors.size(), ref.size()) << n;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      EXPECT_EQ(f.factors[i].prime, ref[i].first) << n;
      EXPECT_EQ(f.factors[i].exponent, ref[i].second) << n;
    }
    EXPECT_EQ(f.value(), n);
    EXPECT_EQ(f.sign, n < 0 ? -1 : 1);
  }
}

TEST(Factor, RoundTripLargeRandom) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Integer n = Integer(static_cast<unsigned long>(rng() >> 3)) * Integer(static_cast<unsigned long>(rng() >> 30)) + 1;
    if (i % 2) n = -n;
    const auto f = factor(n);
    EXPECT_EQ(f.value(), n);
    for (std::size_t k = 0; k < f.factors.size(); ++k) {
      EXPECT_TRUE(is_prime(f.factors[k].prime));
      EXPECT_GE(f.factors[k].exponent, 1u);
      if (k) EXPECT_LT(f.factors[k - 1].prime, f.factors[k].prime);
    }
  }
}

TEST(Factor, SemiprimeNearEightyBits) {
  const Integer p("1099511627791");   // 2^40 + 15
  const Integer q("1099511628401");
  ASSERT_TRUE(is_prime(p));
  ASSERT_TRUE(is_prime(q));
  const auto f = factor(p * q);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, p);
  EXPECT_EQ(f.factors[1].prime, q);
}

TEST(Factor, CacheDoesNotChangeResults) {
  const Integer n("123456789012345678901");
  set_factor_cache_enabled(false);
  const auto without = factor(n);
  set_factor_cache_enabled(true);
  clear_factor_cache();
  const auto first = factor(n);
  const auto cached = factor(n);
  EXPECT_EQ(without, first);
  EXPECT_EQ(first, cached);
  EXPECT_GE(factor_cache_size(), 1u);
}

TEST(Primes, MatchesTrialDivision) {
  for (long n = -5; n < 5000; ++n) {
    EXPECT_EQ(is_prime(n), oracle::is_prime(n)) << n;
    if (n >= 0) EXPECT_EQ(is_prime_u64(static_cast<std::uint64_t>(n)), oracle::is_prime(n)) << n;
  }
  EXPECT_TRUE(is_prime_u64(18446744073709551557ull));
  EXPECT_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Omega, Examples) {
  EXPECT_EQ(omega(12), 2u);
  EXPECT_EQ(omega(1), 0u);
  EXPECT_EQ(omega(-1), 0u);
  EXPECT_EQ(omega(-90), 3u);
}

TEST(Omega, Subadditive) {
  for (long n = 1; n < 80; ++n) {
    for (long m = 1; m < 80; ++m) {
      const unsigned lhs = omega(Integer(n * m));
      EXPECT_LE(lhs, omega(n) + omega(m));
      if (std::gcd(n, m) == 1) EXPECT_EQ(lhs, omega(n) + omega(m));
    }
  }
}

TEST(Squarefree, Examples) {
  EXPECT_EQ(squarefree_part(12), 3);
  EXPECT_EQ(squarefree_part(49), 1);
  EXPECT_EQ(squarefree_part(360), 10);
  EXPECT_EQ(squarefree_part(-12), 3);
}

TEST(Squarefree, InvariantUnderSquares) {
  for (long n = -200; n <= 200; ++n) {
    if (n == 0) continue;
    for (long m = 1; m <= 12; ++m) EXPECT_EQ(squarefree_part(Integer(n * m * m)), squarefree_part(n));
  }
}

TEST(RationalStats, Examples) {
  auto s = rational_stats(Rational(4, 9));
  EXPECT_EQ(s.omega, 2u);
  EXPECT_EQ(s.squarefree, 1);
  s = rational_stats(Rational(1));
  EXPECT_EQ(s.omega, 0u);
  EXPECT_EQ(s.squarefree, 1);
  s = rational_stats(Rational(-6, 5));
  EXPECT_EQ(s.omega, 3u);
  EXPECT_EQ(s.squarefree, 30);
}

TEST(RationalStats, UsesLowestTerms) {
  Rational r(12, 18);
  r.canonicalize();
  EXPECT_EQ(rational_stats(r).omega, 2u);
  EXPECT_EQ(rational_stats(r).squarefree, 6);
}

TEST(Legendre, Examples) {
  EXPECT_EQ(legendre(2, 7), 1);
  EXPECT_EQ(legendre(0, 5), 0);
  EXPECT_EQ(legendre(3, 5), -1);
  EXPECT_THROW(legendre(3, 2), DomainError);
  EXPECT_THROW(legendre(3, 9), DomainError);
}

TEST(Legendre, AgreesWithSquareTableAndIsMultiplicative) {
  for (long p : {3L, 5L, 7L, 11L, 13L, 37L, 101L}) {
    for (long a = -40; a <= 40; ++a) {
      EXPECT_EQ(legendre(a, p), oracle::legendre(a, p));
      for (long b = -10; b <= 10; ++b) EXPECT_EQ(legendre(Integer(a * b), p), legendre(a, p) * legendre(b, p));
    }
  }
}

TEST(Mobius, Examples) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(mobius(-30), -1);
}

TEST(Valuation, Basics) {
  EXPECT_EQ(valuation(48, 2), 4u);
  EXPECT_EQ(valuation(-48, 3), 1u);
  EXPECT_EQ(valuation(7, 5), 0u);
  EXPECT_THROW(valuation(0, 2), DomainError);
}

TEST(Height, OfRationals) {
  EXPECT_EQ(height(Rational(-7, 3)), 7);
  EXPECT_EQ(height(Rational(2, 9)), 9);
  EXPECT_EQ(height(Rational(0)), 1);
}

TEST(QT, Examples) {
  const std::vector<Integer> two{2}, three{3}, none{};
  EXPECT_EQ(q_t_representatives(two, true).representatives, (std::vector<Integer>{-2, -1, 1, 2}));
  EXPECT_EQ(q_t_representatives(three, false).representatives, (std::vector<Integer>{1, 3}));
  EXPECT_EQ(q_t_representatives(none, true).representatives, (std::vector<Integer>{-1, 1}));
}

TEST(QT, CardinalityAndDistinctClasses) {
  const std::vector<Integer> support{2, 3, 5, 7, 11};
  for (bool inf : {false, true}) {
    for (std::size_t k = 0; k <= support.size(); ++k) {
      std::span<const Integer> s(support.data(), k);
      const auto g = q_t_representatives(s, inf);
      EXPECT_EQ(g.representatives.size(), std::size_t{1} << (k + (inf ? 1 : 0)));
      std::set<Integer> seen;
      for (const auto& d : g.representatives) {
        EXPECT_EQ(mobius(d) != 0, true);
        if (!inf) EXPECT_GT(d, 0);
        for (const auto& pp : factor(d).factors) {
          EXPECT_NE(std::find(s.begin(), s.end(), pp.prime), s.end());
        }
        // Square-free representatives of distinct classes are distinct integers.
        EXPECT_TRUE(seen.insert(d).second);
      }
    }
  }
}
