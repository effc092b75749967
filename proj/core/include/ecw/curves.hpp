#pragma once

// Weierstrass models, invariants, minimality in the (p^4, p^6) sense, naive
// height, prime support of the conductor, rational torsion and a_p.

#include <cstdint>
#include <string>
#include <vector>

#include "ecw/arith.hpp"

namespace ecw {

/// y^2 = x^3 + A x + B.
struct ShortWeierstrass {
  Integer A;
  Integer B;

  friend bool operator==(const ShortWeierstrass&, const ShortWeierstrass&) = default;
  friend bool operator<(const ShortWeierstrass& l, const ShortWeierstrass& r) {
    return l.A != r.A ? l.A < r.A : l.B < r.B;
  }
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct LongWeierstrass {
  Integer a1, a2, a3, a4, a6;

  friend bool operator==(const LongWeierstrass&, const LongWeierstrass&) = default;
};

struct CurveInvariants {
  Integer c4;
  Integer c6;
  Integer delta;
};

/// Throws SingularCurve when the discriminant vanishes.
CurveInvariants invariants(const ShortWeierstrass& E);
CurveInvariants invariants(const LongWeierstrass& E);

/// The integral model y^2 = x^3 - 27 c4 x - 54 c6 (not minimised).
ShortWeierstrass to_short(const LongWeierstrass& E);

bool is_minimal(const ShortWeierstrass& E);
ShortWeierstrass minimize(const ShortWeierstrass& E);

/// |A| <= X^2 and |B| <= X^3.
bool height_leq(const ShortWeierstrass& E, const Integer& X);

enum class ConductorPolicy { IncludeSmall, Exclude23 };

struct ConductorSupport {
  unsigned omega_N = 0;
  std::vector<Integer> support;
};

/// Primes dividing the discriminant of the minimised model. Exclude23 drops
/// 2 and 3 from both the list and the count.
ConductorSupport conductor_support(const ShortWeierstrass& E,
                                   ConductorPolicy policy = ConductorPolicy::IncludeSmall);

/// ell in {2, 3, 5, 7}; otherwise DomainError.
bool torsion_order_present(const ShortWeierstrass& E, unsigned ell);

enum class TwoTorsionShape { Trivial, Z2, Z2xZ2 };

TwoTorsionShape two_torsion_shape(const ShortWeierstrass& E);
std::string to_string(TwoTorsionShape shape);

/// p + 1 - #E(F_p) for a prime p > 3 of good reduction of the minimised
/// model. Throws BadReduction when p divides that discriminant and
/// DomainError when p <= 3.
long frobenius_trace(const ShortWeierstrass& E, std::uint64_t p);

}  // namespace ecw
