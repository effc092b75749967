#include <gtest/gtest.h>

#include <random>

#include "ecw/errors.hpp"
#include "ecw/poly.hpp"
#include "oracles.hpp"

using namespace ecw;

namespace {

Poly linear_product(const std::vector<std::pair<long, long>>& roots) {
  // product of (den x - num)
  Poly out = Poly::constant(1);
  for (auto [num, den] : roots) out *= Poly{-num, den};
  return out;
}

}  // namespace

TEST(Poly, ArithmeticAndEvaluation) {
  const Poly f{1, 2, 3};  // 1 + 2x + 3x^2
  const Poly g{0, 1};
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f(Integer(2)), 17);
  EXPECT_EQ(f(Rational(1, 3)), Rational(2));
  EXPECT_EQ((f * g).degree(), 3);
  EXPECT_EQ((f - f).degree(), -1);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(f.derivative(), (Poly{2, 6}));
  EXPECT_EQ(pow(g, 3), Poly::monomial(1, 3));
  EXPECT_EQ(f.to_string(), "1,2,3");
}

TEST(Poly, Homogenized) {
  const Poly f{-1, -11, 1};
  // b^2 f(a/b) = a^2 - 11ab - b^2
  EXPECT_EQ(f.homogenized(3, 2), 9 - 66 - 4);
  EXPECT_EQ(f.homogenized(-5, 7), 25 + 385 - 49);
}

TEST(Poly, ContentAndPrimitive) {
  const Poly f{-6, 0, -4};
  EXPECT_EQ(f.content(), 2);
  EXPECT_EQ(f.primitive(), (Poly{3, 0, 2}));
}

TEST(Poly, Parse) {
  EXPECT_EQ(parse_poly("-1,-11,1"), (Poly{-1, -11, 1}));
  EXPECT_EQ(parse_poly(" 3 , 0 ,  -2"), (Poly{3, 0, -2}));
  EXPECT_THROW(parse_poly(""), DomainError);
  EXPECT_THROW(parse_poly("1,,2"), DomainError);
  EXPECT_THROW(parse_poly("1,x"), DomainError);
}

TEST(Poly, Gcd) {
  const Poly a = linear_product({{1, 1}, {2, 1}, {-3, 2}});
  const Poly b = linear_product({{2, 1}, {-3, 2}, {5, 1}});
  EXPECT_EQ(poly_gcd(a, b).primitive(), linear_product({{2, 1}, {-3, 2}}).primitive());
}

TEST(RationalRoots, KnownRoots) {
  const Poly f = linear_product({{1, 2}, {-3, 1}, {7, 5}}) * Poly{1, 0, 1};
  EXPECT_EQ(rational_roots(f), (std::vector<Rational>{-3, Rational(1, 2), Rational(7, 5)}));
  EXPECT_TRUE(rational_roots(Poly{2, 0, 1}).empty());
  EXPECT_EQ(rational_roots(Poly{0, 0, 1}), (std::vector<Rational>{0}));
  EXPECT_THROW(rational_roots(Poly{}), DomainError);
}

TEST(RationalRoots, RepeatedAndLargeRoots) {
  const Poly f = pow(linear_product({{123456789, 1000}}), 3) * linear_product({{-999983, 7}});
  std::vector<Rational> expect{Rational(-999983, 7), Rational(123456789, 1000)};
  EXPECT_EQ(rational_roots(f), expect);
}

TEST(RationalRoots, RandomProductsAgainstConstruction) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<long, long>> rs;
    std::vector<Rational> expect;
    const int k = 1 + trial % 4;
    for (int i = 0; i < k; ++i) {
      rs.emplace_back(num(rng), den(rng));
      Rational r(rs.back().first, rs.back().second);
      r.canonicalize();
      expect.push_back(r);
    }
    std::sort(expect.begin(), expect.end());
    expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
    const Poly f = linear_product(rs) * Poly{3, 1, 0, 1};  // x^3 + x + 3 has no rational root
    EXPECT_EQ(rational_roots(f), expect) << f.to_string();
  }
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible(Poly{-1, -11, 1}));
  EXPECT_TRUE(is_irreducible(Poly{1, 5, -8, 1}));
  EXPECT_TRUE(is_irreducible(Poly{8, 0, 864, 108, 729}));
  EXPECT_FALSE(is_irreducible(Poly{-1, 0, 1}));
  EXPECT_FALSE(is_irreducible(pow(Poly{1, 0, 1}, 2)));
  EXPECT_TRUE(is_irreducible(Poly{-2, 0, 0, 0, 1}));
  EXPECT_THROW(is_irreducible(Poly{5}), DomainError);
}

TEST(Irreducible, PatternSieveLimits) {
  // x^4 - 10x^2 + 1 is irreducible but splits into quadratics modulo every
  // prime; a product of two quadratics looks the same to the sieve.
  EXPECT_THROW(is_irreducible(Poly{1, 0, -10, 0, 1}), Undecided);
  EXPECT_THROW(is_irreducible(Poly{1, 0, 1} * Poly{2, 0, 1}), Undecided);
}

TEST(RootsModPrime, AgreesWithExhaustiveEvaluation) {
  const std::vector<std::vector<long>> fs = {{-1, -11, 1}, {1, 5, -8, 1}, {8, 0, 864, 108, 729}, {0, 1}, {6, -5, 1}};
  for (const auto& c : fs) {
    const Poly f(std::vector<Integer>(c.begin(), c.end()));
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 101L}) {
      EXPECT_EQ(roots_mod_prime(f, p).size(), oracle::roots_mod_p(c, p)) << f.to_string() << " p=" << p;
    }
  }
}

TEST(DivisionPolynomial, ThreeDivisionMatchesClosedForm) {
  // psi_3 = 3x^4 + 6Ax^2 + 12Bx - A^2
  EXPECT_EQ(division_polynomial(2, 5, 3), (Poly{-4, 60, 12, 0, 3}));
  EXPECT_THROW(division_polynomial(1, 1, 4), DomainError);
}

TEST(DivisionPolynomial, DegreesAndKnownTorsion) {
  EXPECT_EQ(division_polynomial(1, 1, 5).degree(), 12);
  EXPECT_EQ(division_polynomial(1, 1, 7).degree(), 24);
  // y^2 = x^3 + 1 has 3-torsion at x = 0.
  EXPECT_EQ(division_polynomial(0, 1, 3)(Integer(0)), 0);
  // y^2 = x^3 - 432x + 8208 (from y^2 + y = x^3 - x^2) has a point of order 5.
  const auto roots = rational_roots(division_polynomial(-432, 8208, 5));
  EXPECT_FALSE(roots.empty());
}
