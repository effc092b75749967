#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ecw/descent2.hpp"
#include "ecw/errors.hpp"
#include "oracles.hpp"

using namespace ecw;

namespace {

bool contains(const std::vector<Integer>& v, const Integer& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

Integer signed_kernel(const Integer& n) { return sgn(n) * squarefree_part(n); }

Integer signed_kernel(const Rational& x) { return signed_kernel(Integer(x.get_num() * x.get_den())); }

void expect_group(const std::vector<Integer>& classes) {
  ASSERT_FALSE(classes.empty());
  EXPECT_TRUE(contains(classes, 1));
  EXPECT_EQ(classes.size() & (classes.size() - 1), 0u);
  for (const auto& x : classes) {
    for (const auto& y : classes) EXPECT_TRUE(contains(classes, signed_kernel(Integer(x * y)))) << x << "*" << y;
  }
}

}  // namespace

TEST(RealSoluble, Examples) {
  EXPECT_FALSE(real_soluble({-1, 0, -4}));
  EXPECT_TRUE(real_soluble({1, -7, -3}));
  EXPECT_TRUE(real_soluble({1, 0, 5}));
  EXPECT_TRUE(real_soluble({-1, 5, -1}));
  EXPECT_FALSE(real_soluble({-1, 1, -1}));
  EXPECT_TRUE(real_soluble({-1, 2, 3}));
}

TEST(PadicSoluble, Examples) {
  EXPECT_TRUE(padic_soluble({2, 0, 2}, 2));
  EXPECT_FALSE(padic_soluble({3, -2, -13}, 5));
  for (long p : {2L, 3L, 5L, 7L, 11L}) EXPECT_TRUE(padic_soluble({1, 0, -1}, p));
  EXPECT_THROW(padic_soluble({1, 2, 1}, 3), DomainError);
  EXPECT_THROW(padic_soluble({0, 2, 1}, 3), DomainError);
  EXPECT_THROW(padic_soluble({1, 0, 3}, 4), DomainError);
}

TEST(PadicSoluble, AgreesWithBruteForce) {
  const std::vector<std::pair<long, unsigned>> levels = {{2, 6}, {3, 4}, {5, 3}, {7, 2}};
  unsigned decided = 0, total = 0;
  for (long d1 = -4; d1 <= 4; ++d1) {
    for (long d2 = -4; d2 <= 4; ++d2) {
      if (d1 == 0 || d2 == 0) continue;
      for (long F = -4; F <= 4; ++F) {
        if (F * F == 4 * d1 * d2) continue;
        for (auto [p, N] : levels) {
          ++total;
          const auto ref = oracle::padic_soluble_bruteforce(d1, F, d2, p, N);
          if (!ref) continue;
          ++decided;
          EXPECT_EQ(padic_soluble({d1, F, d2}, p), *ref) << d1 << "," << F << "," << d2 << " p=" << p;
        }
      }
    }
  }
  EXPECT_GT(decided, total * 3 / 4);
}

TEST(Fastpath, Examples) {
  EXPECT_TRUE(fastpath_insoluble(1, 10, 3, 5));
  EXPECT_FALSE(fastpath_insoluble(1, 10, -1, 5));
  // a^2 - 4b = 21
  EXPECT_TRUE(fastpath_insoluble(1, -5, 3, 5));
  EXPECT_TRUE(fastpath_insoluble(1, -5, 7, 5));
  EXPECT_FALSE(fastpath_insoluble(1, -5, 21, 5));
  EXPECT_THROW(fastpath_insoluble(2, 5, 4, 5), DomainError);
  EXPECT_THROW(fastpath_insoluble(1, 10, 3, 3), DomainError);
  EXPECT_THROW(fastpath_insoluble(5, 10, 3, 5), DomainError);
  EXPECT_THROW(fastpath_insoluble(1, 7, 3, 5), DomainError);
}

TEST(Fastpath, AgreesWithSolver) {
  unsigned checked = 0;
  for (long a = -40; a <= 40; ++a) {
    for (long b = -40; b <= 40; ++b) {
      if (b == 0) continue;
      const Integer n = Integer(a * a - 4 * b);
      if (n == 0) continue;
      const auto nf = factor(n);
      for (const auto& pb : factor(b).primes()) {
        if (pb <= 3 || pb > 37 || a % pb.get_si() == 0) continue;
        // Hall divisors: any subset of the primes with full exponent, both signs.
        const auto& fs = nf.factors;
        for (unsigned mask = 0; mask < (1u << fs.size()); ++mask) {
          Integer d = 1;
          bool squarefree = true;
          for (std::size_t i = 0; i < fs.size(); ++i) {
            if (mask & (1u << i)) {
              if (fs[i].exponent > 1) squarefree = false;
              d *= fs[i].prime;
            }
          }
          if (!squarefree) continue;
          for (int s : {1, -1}) {
            const Integer ds = s * d;
            const bool fast = fastpath_insoluble(a, b, ds, pb);
            const bool solver = padic_soluble({ds, -2 * a, n / ds}, pb);
            EXPECT_EQ(fast, !solver) << a << "," << b << " d=" << ds << " p=" << pb;
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Selmer, Examples) {
  EXPECT_EQ(sel_phi({0, -1}), (std::vector<Integer>{1, 2}));
  EXPECT_EQ(sel_phihat({0, -1}), (std::vector<Integer>{-1, 1}));
  EXPECT_TRUE(contains(sel_phi({0, 1}), 1));
  EXPECT_EQ(sel_phihat({0, 1}), (std::vector<Integer>{1}));
  EXPECT_TRUE(contains(sel_phihat({0, 4}), 1));
  EXPECT_EQ(sel_phi({3, 3}).size(), 2u);
  EXPECT_THROW(sel_phi({2, 1}), SingularCurve);
}

TEST(Selmer, RankExamples) {
  EXPECT_EQ(rank_upper({0, -1}).rank_upper, 0);
  EXPECT_EQ(rank_upper({0, 1}).rank_upper, 0);
  const auto e0 = rank_upper({3, 3});
  EXPECT_EQ(e0.rank_upper, 0);
  EXPECT_EQ(e0.dim_phi + e0.dim_phihat, 2u);
  // y^2 = x^3 - 25x has rank 1 (5 is a congruent number).
  EXPECT_GE(rank_upper({0, -25}).rank_upper, 1);
}

TEST(Selmer, GroupsAndEitherOr) {
  for (long a = -30; a <= 30; ++a) {
    for (long b = -30; b <= 30; ++b) {
      if (b == 0 || a * a == 4 * b) continue;
      const auto phi = sel_phi({a, b});
      const auto phihat = sel_phihat({a, b});
      expect_group(phi);
      expect_group(phihat);
      const bool pos_phi = std::all_of(phi.begin(), phi.end(), [](const Integer& d) { return d > 0; });
      const bool pos_hat = std::all_of(phihat.begin(), phihat.end(), [](const Integer& d) { return d > 0; });
      EXPECT_TRUE(pos_phi || pos_hat) << a << "," << b;
      EXPECT_EQ(either_or_check({a, b}), pos_phi || pos_hat);
    }
  }
}

TEST(Selmer, GlobalPointsSurvive) {
  // x(P) modulo squares lies in the Selmer set built from divisors of b;
  // on the dual the same holds for divisors of a^2 - 4b.
  for (long a = -8; a <= 8; ++a) {
    for (long b = -8; b <= 8; ++b) {
      if (b == 0 || a * a == 4 * b) continue;
      const E2Param e{a, b};
      const E2Param dual{-2 * a, a * a - 4 * b};
      const auto hat = sel_phihat(e);
      const auto phi = sel_phi(e);
      for (const auto& P : oracle::search_points(a, b, 0, 100)) {
        if (P.x == 0) continue;
        EXPECT_TRUE(contains(hat, signed_kernel(P.x))) << a << "," << b << " x=" << P.x;
      }
      for (const auto& P : oracle::search_points(dual.a, dual.b, 0, 100)) {
        if (P.x == 0) continue;
        EXPECT_TRUE(contains(phi, signed_kernel(P.x))) << a << "," << b << " dual x=" << P.x;
      }
    }
  }
}

TEST(Selmer, RankBoundScalingInvariance) {
  for (long a = -8; a <= 8; ++a) {
    for (long b = -8; b <= 8; ++b) {
      if (b == 0 || a * a == 4 * b) continue;
      const int base = rank_upper({a, b}).rank_upper;
      EXPECT_GE(base, 0);
      for (long u : {2L, 3L}) EXPECT_EQ(rank_upper({u * u * a, u * u * u * u * b}).rank_upper, base) << a << "," << b;
    }
  }
}

TEST(Selmer, RealPlaceToggle) {
  Config cfg;
  cfg.solubility_real_place = false;
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      if (b == 0 || a * a == 4 * b) continue;
      const auto with = sel_phi({a, b});
      const auto without = sel_phi({a, b}, cfg);
      for (const auto& d : with) EXPECT_TRUE(contains(without, d));
    }
  }
}

TEST(BCandidates, SplitPrime) {
  EXPECT_EQ(least_split_prime(2), 7);
  for (long a : {6L, 11L, 14L, 19L, 21L, -1L, -6L, 24L}) {
    if (is_square(Integer(a))) continue;
    EXPECT_EQ(least_split_prime(a), 5) << a;
  }
  // (a/5) = -1 when a = 2 mod 5, so 5 is never the split prime there.
  for (long a : {2L, 7L, 12L, 17L, 22L, -3L}) EXPECT_NE(least_split_prime(a), 5) << a;
  EXPECT_THROW(least_split_prime(9), DomainError);
}

TEST(BCandidates, Construction) {
  const auto c = construct_b_candidates(6, 2, 60);
  EXPECT_EQ(c.P, 5);
  EXPECT_EQ(c.q, (std::vector<Integer>{2, 3}));
  for (const auto& b : c.b) {
    const Integer n = 36 - 4 * b;
    EXPECT_EQ(gcd(Integer(6), b), 1);
    EXPECT_EQ(valuation(n, 2), 1u);
    EXPECT_EQ(valuation(n, 3), 1u);
  }
  // gcd(6, b) = 1 makes 36 - 4b divisible by 4, so no b survives q = 2.
  EXPECT_TRUE(c.b.empty());
  const auto d = construct_b_candidates(2, 1, 50);
  EXPECT_EQ(d.P, 7);
  EXPECT_EQ(d.q, (std::vector<Integer>{3}));
  for (const auto& b : d.b) EXPECT_EQ(valuation(Integer(4 - 4 * b), d.q[0]), 1u);
  EXPECT_FALSE(d.b.empty());
}
