#pragma once

// Counting and averaging experiments over the families: lattice counts in
// the height regions, the volume constant, torsion family counts, log-log
// slopes, roots modulo p^2, normal order of omega over polynomial values,
// average Frobenius traces and the density of descent certificates.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecw/curves.hpp"
#include "ecw/poly.hpp"

namespace ecw {

/// #{(a, b) in Z^2 : |a| < X^2, |b^3 + ab| < X^3}.
std::uint64_t count_r2(std::uint64_t X);

/// #{(a, b) in Z^2 : |6ab + 27a^4| < X^2, |b^2 - 27a^6| < X^3}.
std::uint64_t count_r3(std::uint64_t X);

struct VolumeConstant {
  unsigned digits = 0;
  std::string alpha_plus;   // root of x^3 + x - 1
  std::string alpha_minus;  // root of x^3 - x - 1
  std::string value;        // 2 log(alpha_minus / alpha_plus) + 4/3 (alpha_plus + alpha_minus)
  double value_approx = 0;
  bool certified = false;   // both roots bracketed by a sign change at 10^-digits
};

/// Throws DomainError when digits < 10.
VolumeConstant volume_constant(unsigned digits = 30);

struct FamilyMember {
  Rational t;
  ShortWeierstrass curve;  // minimised
};

/// Distinct minimised curves of height <= X in the 5- or 7-torsion family,
/// each with the smallest-height parameter t = a/b that produces it. The
/// parameter window is |a| <= C X^m, 0 < b <= C X^n with (m, n) from
/// param_box and C = safety.
std::vector<FamilyMember> family_curves(unsigned ell, std::uint64_t X, double safety = 2.0,
                                        unsigned workers = 1);
std::uint64_t count_family(unsigned ell, std::uint64_t X, double safety = 2.0, unsigned workers = 1);

struct CountSeries {
  std::string family;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> points;  // (X, count)
};

/// Least-squares slope of log(count) against log(X). DomainError with fewer
/// than three points, a nonpositive count or a single X value.
double slope(const CountSeries& series);

/// Roots of f in Z/p (square = false) or Z/p^2 (square = true).
std::uint64_t roots_mod(const Poly& f, std::uint64_t p, bool square);

/// Whether p is outside gcd(content(f), content(f')).
bool admissible_prime(const Poly& f, std::uint64_t p);

struct NormalOrderSample {
  std::uint64_t X = 0;
  Rational mean;
  Rational variance;
  std::uint64_t sample_count = 0;
};

/// omega_S(s(b^deg f(a/b))) over reduced a/b with max(|a|, b) <= X and
/// f(a/b) != 0. Throws DomainError when f is reducible or X < 10.
NormalOrderSample normal_order_experiment(const Poly& f, std::uint64_t X, std::span<const Integer> S,
                                          unsigned workers = 1);

/// Long Weierstrass model with coefficients in Z[t].
struct PolyFamily {
  Poly a1, a2, a3, a4, a6;
};

enum class FrobeniusFamily { E5, E7, E3Poly };

PolyFamily family_of(FrobeniusFamily fam);

struct FamilyDegrees {
  int delta = 0;
  int c4 = 0;
  /// 3 deg(Delta) + deg(c4) - 2.
  int bound() const { return 3 * delta + c4 - 2; }
};

FamilyDegrees family_degrees(const PolyFamily& fam);

/// a_p of the reduction of a long model mod p: the Legendre sum on smooth
/// fibres, and 1, -1, 0 for split, nonsplit and additive singular fibres.
long fibre_trace(const std::array<std::uint64_t, 5>& a, std::uint64_t p);

/// (1/p) sum over t in F_p of the fibre traces. p > 3 prime.
Rational avg_frobenius(const PolyFamily& fam, std::uint64_t p);
Rational avg_frobenius(FrobeniusFamily fam, std::uint64_t p);

struct DensityResult {
  std::uint64_t eligible = 0;   // pairs carrying the local insolubility certificate
  std::uint64_t total = 0;      // coprime nonsingular pairs with a^2 - 4b not a square
  std::uint64_t square_discriminant = 0;  // coprime nonsingular pairs with a^2 - 4b a square
  std::vector<std::pair<Integer, Integer>> certified;  // the eligible (a, b), ascending
};

/// Whether some p > 3 dividing b and some q with nu_q(a^2 - 4b) odd satisfy
/// the closed-form insolubility criterion for the class q at p.
bool has_insolubility_certificate(const Integer& a, const Integer& b);

/// Over coprime (a, b), |a| <= X, 0 < |b| <= X^2, a^2 - 4b != 0.
DensityResult density_experiment_cor_main(std::uint64_t X, unsigned workers = 1);

}  // namespace ecw
