#pragma once

// Slow, independent reference implementations for tests. Nothing here calls
// into ecw_core.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Rat = mpq_class;

/// Trial division of |n|, n != 0.
std::vector<std::pair<long, unsigned>> trial_factor(long n);

/// Legendre symbol from the table of squares mod p.
int legendre(long a, long p);

bool is_prime(long n);

/// p + 1 - #E(F_p) for y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 by
/// counting all affine pairs (x, y).
long trace_by_count(const std::array<long, 5>& a, long p);

/// Same for y^2 = x^3 + A x + B.
long trace_by_count(long A, long B, long p);

/// #{(a, b) : |a| < X^2, |b^3 + ab| < X^3} over a generous box.
std::uint64_t count_r2(long X);
/// #{(a, b) : |6ab + 27a^4| < X^2, |b^2 - 27a^6| < X^3} over a generous box.
std::uint64_t count_r3(long X);

/// #{r in Z/p^2 : f(r) = 0 mod p^2}, coefficients low degree first.
std::uint64_t roots_mod_p2(const std::vector<long>& f, long p);
std::uint64_t roots_mod_p(const std::vector<long>& f, long p);

/// Affine points on y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
struct Point {
  Rat x, y;
  bool infinity = false;
  friend bool operator==(const Point&, const Point&) = default;
};

struct LongCurve {
  Rat a1, a2, a3, a4, a6;
};

Point add(const LongCurve& E, const Point& P, const Point& Q);
Point multiple(const LongCurve& E, const Point& P, unsigned n);
bool on_curve(const LongCurve& E, const Point& P);

/// Order of P if it is at most 12 (Mazur), nullopt otherwise.
std::optional<unsigned> torsion_order(const LongCurve& E, const Point& P);

/// Points of y^2 = x^3 + a2 x^2 + a4 x + a6 with x = m / e^2, |m| <= H,
/// 1 <= e^2 <= H (both signs of y).
std::vector<Point> search_points(const Int& a2, const Int& a4, const Int& a6, long H);

/// Discriminant of a long Weierstrass model through b2, b4, b6, b8.
Int long_discriminant(const Int& a1, const Int& a2, const Int& a3, const Int& a4, const Int& a6);

/// Brute-force local solubility of Z^2 = d1 U^4 + F U^2 V^2 + d2 V^4 at p:
/// enumerates primitive (u, v) mod p^N. Returns true when some value is a
/// certified p-adic square, false when no residue can be a square at
/// precision N, nullopt when undecided at this precision.
std::optional<bool> padic_soluble_bruteforce(long d1, long F, long d2, long p, unsigned N);

}  // namespace oracle
