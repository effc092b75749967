#include <gtest/gtest.h>

#include <cmath>

#include "ecw/curves.hpp"
#include "ecw/errors.hpp"
#include "oracles.hpp"

using namespace ecw;

TEST(Invariants, ShortExamples) {
  EXPECT_EQ(invariants(ShortWeierstrass{0, 1}).delta, -432);
  EXPECT_EQ(invariants(ShortWeierstrass{-1, 0}).delta, 64);
  EXPECT_THROW(invariants(ShortWeierstrass{-3, 2}), SingularCurve);
  EXPECT_THROW(invariants(ShortWeierstrass{0, 0}), SingularCurve);
}

TEST(Invariants, TateNormalExample) {
  // (b, c) = (2, 2): a1 = -1, a2 = a3 = -2
  EXPECT_EQ(invariants(LongWeierstrass{-1, -2, -2, 0, 0}).delta, -608);
}

TEST(Invariants, SyzygyOnManyModels) {
  for (long a1 = -2; a1 <= 2; ++a1) {
    for (long a2 = -2; a2 <= 2; ++a2) {
      for (long a3 = -2; a3 <= 2; ++a3) {
        for (long a4 = -3; a4 <= 3; ++a4) {
          for (long a6 = -3; a6 <= 3; ++a6) {
            const LongWeierstrass E{a1, a2, a3, a4, a6};
            const Integer ref = oracle::long_discriminant(a1, a2, a3, a4, a6);
            if (ref == 0) {
              EXPECT_THROW(invariants(E), SingularCurve);
              continue;
            }
            const auto inv = invariants(E);
            EXPECT_EQ(inv.delta, ref);
            EXPECT_EQ(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6, 1728 * inv.delta);
          }
        }
      }
    }
  }
}

TEST(ToShort, ScalesDiscriminantBySixToTheTwelfth) {
  const LongWeierstrass E{1, -1, 1, -3, 5};
  const auto S = to_short(E);
  const Integer six12 = Integer(2176782336);
  EXPECT_EQ(invariants(S).delta, six12 * invariants(E).delta);
}

TEST(Minimal, Examples) {
  EXPECT_TRUE(is_minimal({1, 1}));
  EXPECT_FALSE(is_minimal({16, 64}));
  EXPECT_FALSE(is_minimal({0, 64}));
  EXPECT_EQ(minimize({16, 64}), (ShortWeierstrass{1, 1}));
  EXPECT_EQ(minimize({1, 2}), (ShortWeierstrass{1, 2}));
  EXPECT_EQ(minimize({0, 531441}), (ShortWeierstrass{0, 1}));
}

TEST(Minimal, IdempotentAndScaling) {
  for (long A = -20; A <= 20; ++A) {
    for (long B = -20; B <= 20; ++B) {
      if (4 * A * A * A + 27 * B * B == 0) continue;
      for (long u : {1L, 2L, 3L, 6L, 10L}) {
        const Integer u4 = Integer(u * u) * u * u, u6 = u4 * u * u;
        const ShortWeierstrass scaled{A * u4, B * u6};
        const auto m = minimize(scaled);
        EXPECT_TRUE(is_minimal(m));
        EXPECT_EQ(minimize(m), m);
        EXPECT_EQ(m, minimize({A, B}));
      }
    }
  }
}

TEST(Height, Examples) {
  EXPECT_TRUE(height_leq({4, 8}, 2));
  EXPECT_FALSE(height_leq({5, 1}, 2));
  EXPECT_TRUE(height_leq({0, 27}, 3));
}

TEST(Height, MonotoneInX) {
  for (long A = -30; A <= 30; A += 7) {
    for (long B = -60; B <= 60; B += 11) {
      bool seen = false;
      for (long X = 1; X <= 10; ++X) {
        const bool h = height_leq({A, B}, X);
        if (seen) EXPECT_TRUE(h);
        seen = seen || h;
      }
    }
  }
}

TEST(Conductor, Examples) {
  auto c = conductor_support({0, -1});
  EXPECT_EQ(c.omega_N, 2u);
  EXPECT_EQ(c.support, (std::vector<Integer>{2, 3}));
  EXPECT_EQ(conductor_support({0, 1}).omega_N, 2u);
  c = conductor_support({-1, 0});
  EXPECT_EQ(c.omega_N, 1u);
  EXPECT_EQ(c.support, (std::vector<Integer>{2}));
  EXPECT_EQ(conductor_support({0, -1}, ConductorPolicy::Exclude23).omega_N, 0u);
  EXPECT_TRUE(conductor_support({0, -1}, ConductorPolicy::Exclude23).support.empty());
}

TEST(Conductor, UsesMinimalModel) {
  // (16 * 13^4, 64 * 13^6) minimises to (16, 64) and then to (1, 1): delta = -496 = -2^4 31.
  const Integer p4 = Integer(28561), p6 = p4 * 169;
  const auto c = conductor_support({16 * p4, 64 * p6});
  EXPECT_EQ(c.support, (std::vector<Integer>{2, 31}));
}

TEST(Torsion, Examples) {
  EXPECT_TRUE(torsion_order_present({1, 2}, 2));
  EXPECT_TRUE(torsion_order_present({0, 4}, 3));
  EXPECT_FALSE(torsion_order_present({0, 1}, 5));
  EXPECT_TRUE(torsion_order_present({0, 1}, 3));
  EXPECT_TRUE(torsion_order_present({0, 1}, 2));
  EXPECT_FALSE(torsion_order_present({0, 1}, 7));
  EXPECT_THROW(torsion_order_present({0, 1}, 4), DomainError);
}

TEST(Torsion, TwoTorsionShapes) {
  EXPECT_EQ(two_torsion_shape({0, -1}), TwoTorsionShape::Z2);
  EXPECT_EQ(two_torsion_shape({-1, 0}), TwoTorsionShape::Z2xZ2);
  EXPECT_EQ(two_torsion_shape({0, 2}), TwoTorsionShape::Trivial);
  EXPECT_EQ(to_string(TwoTorsionShape::Z2xZ2), "Z2xZ2");
}

TEST(Torsion, ShapeAgreesWithTwoTorsionFlag) {
  for (long A = -15; A <= 15; ++A) {
    for (long B = -15; B <= 15; ++B) {
      if (4 * A * A * A + 27 * B * B == 0) continue;
      const bool has2 = two_torsion_shape({A, B}) != TwoTorsionShape::Trivial;
      EXPECT_EQ(has2, torsion_order_present({A, B}, 2)) << A << "," << B;
    }
  }
}

TEST(Torsion, AgreesWithPointSearch) {
  // Any small point found by search with order 3 must be detected.
  for (long A = -6; A <= 6; ++A) {
    for (long B = -6; B <= 6; ++B) {
      if (4 * A * A * A + 27 * B * B == 0) continue;
      const oracle::LongCurve E{0, 0, 0, A, B};
      bool found3 = false;
      for (const auto& P : oracle::search_points(0, A, B, 40)) {
        if (oracle::torsion_order(E, P) == 3u) found3 = true;
      }
      if (found3) EXPECT_TRUE(torsion_order_present({A, B}, 3)) << A << "," << B;
    }
  }
}

TEST(Frobenius, Examples) {
  EXPECT_EQ(frobenius_trace({0, 1}, 5), 0);
  EXPECT_EQ(frobenius_trace({0, 1}, 7), -4);
  EXPECT_EQ(frobenius_trace({-1, 0}, 5), oracle::trace_by_count(-1, 0, 5));
  EXPECT_THROW(frobenius_trace({0, 1}, 3), DomainError);
  EXPECT_THROW(frobenius_trace({0, 1}, 9), DomainError);
  EXPECT_THROW(frobenius_trace({-1, 0}, 2), DomainError);
  EXPECT_THROW(frobenius_trace({0, 7}, 7), BadReduction);
}

TEST(Frobenius, PointCountAndHasse) {
  for (long A = -5; A <= 5; ++A) {
    for (long B = -5; B <= 5; ++B) {
      if (4 * A * A * A + 27 * B * B == 0) continue;
      for (long p : {5L, 7L, 11L, 13L, 29L, 53L}) {
        const auto delta = invariants(minimize({A, B})).delta;
        if (mpz_divisible_ui_p(delta.get_mpz_t(), p)) {
          EXPECT_THROW(frobenius_trace({A, B}, p), BadReduction);
          continue;
        }
        const long ap = frobenius_trace({A, B}, p);
        EXPECT_EQ(ap, oracle::trace_by_count(A, B, p));
        EXPECT_LE(std::labs(ap), static_cast<long>(std::floor(2 * std::sqrt(double(p)))));
      }
    }
  }
}
