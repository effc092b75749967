#include "ecw/curves.hpp"

#include "ecw/errors.hpp"
#include "ecw/poly.hpp"

namespace ecw {
namespace {

Integer power(const Integer& p, unsigned e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), e);
  return out;
}

bool divides(const Integer& d, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

bool is_rational_square(const Rational& q) {
  return q >= 0 && is_square(q.get_num()) && is_square(q.get_den());
}

}  // namespace

CurveInvariants invariants(const ShortWeierstrass& E) {
  CurveInvariants inv;
  inv.c4 = -48 * E.A;
  inv.c6 = -864 * E.B;
  inv.delta = -16 * (4 * E.A * E.A * E.A + 27 * E.B * E.B);
  if (inv.delta == 0) throw SingularCurve("singular curve y^2 = x^3 + " + E.A.get_str() + "x + " + E.B.get_str());
  return inv;
}

CurveInvariants invariants(const LongWeierstrass& E) {
  const Integer b2 = E.a1 * E.a1 + 4 * E.a2;
  const Integer b4 = 2 * E.a4 + E.a1 * E.a3;
  const Integer b6 = E.a3 * E.a3 + 4 * E.a6;
  const Integer b8 =
      E.a1 * E.a1 * E.a6 + 4 * E.a2 * E.a6 - E.a1 * E.a3 * E.a4 + E.a2 * E.a3 * E.a3 - E.a4 * E.a4;
  CurveInvariants inv;
  inv.c4 = b2 * b2 - 24 * b4;
  inv.c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  inv.delta = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  if (inv.delta == 0) throw SingularCurve("singular long Weierstrass model");
  return inv;
}

ShortWeierstrass to_short(const LongWeierstrass& E) {
  const auto inv = invariants(E);
  return {-27 * inv.c4, -54 * inv.c6};
}

bool is_minimal(const ShortWeierstrass& E) {
  const Integer g = gcd(E.A, E.B);
  if (g == 0) return true;
  for (const auto& pp : factor(g).factors) {
    if (divides(power(pp.prime, 4), E.A) && divides(power(pp.prime, 6), E.B)) return false;
  }
  return true;
}

ShortWeierstrass minimize(const ShortWeierstrass& E) {
  ShortWeierstrass out = E;
  const Integer g = gcd(E.A, E.B);
  if (g == 0) return out;
  for (const auto& pp : factor(g).factors) {
    const Integer p4 = power(pp.prime, 4);
    const Integer p6 = power(pp.prime, 6);
    while (divides(p4, out.A) && divides(p6, out.B)) {
      mpz_divexact(out.A.get_mpz_t(), out.A.get_mpz_t(), p4.get_mpz_t());
      mpz_divexact(out.B.get_mpz_t(), out.B.get_mpz_t(), p6.get_mpz_t());
      if (out.A == 0 && out.B == 0) break;
    }
  }
  return out;
}

bool height_leq(const ShortWeierstrass& E, const Integer& X) {
  return abs(E.A) <= X * X && abs(E.B) <= X * X * X;
}

ConductorSupport conductor_support(const ShortWeierstrass& E, ConductorPolicy policy) {
  const ShortWeierstrass m = minimize(E);
  const auto inv = invariants(m);
  ConductorSupport out;
  for (const auto& p : factor(inv.delta).primes()) {
    if (policy == ConductorPolicy::Exclude23 && p <= 3) continue;
    out.support.push_back(p);
  }
  out.omega_N = static_cast<unsigned>(out.support.size());
  return out;
}

bool torsion_order_present(const ShortWeierstrass& E, unsigned ell) {
  invariants(E);
  if (ell == 2) return two_torsion_shape(E) != TwoTorsionShape::Trivial;
  if (ell != 3 && ell != 5 && ell != 7) throw DomainError("torsion_order_present: ell must be 2, 3, 5 or 7");
  const Poly cubic(std::vector<Integer>{E.B, E.A, 0, 1});
  for (const auto& x : rational_roots(division_polynomial(E.A, E.B, ell))) {
    if (is_rational_square(cubic(x))) return true;
  }
  return false;
}

TwoTorsionShape two_torsion_shape(const ShortWeierstrass& E) {
  invariants(E);
  const auto roots = rational_roots(Poly(std::vector<Integer>{E.B, E.A, 0, 1}));
  switch (roots.size()) {
    case 0:
      return TwoTorsionShape::Trivial;
    case 1:
      return TwoTorsionShape::Z2;
    default:
      return TwoTorsionShape::Z2xZ2;
  }
}

std::string to_string(TwoTorsionShape shape) {
  switch (shape) {
    case TwoTorsionShape::Trivial:
      return "Trivial";
    case TwoTorsionShape::Z2:
      return "Z2";
    case TwoTorsionShape::Z2xZ2:
      return "Z2xZ2";
  }
  return "?";
}

long frobenius_trace(const ShortWeierstrass& E, std::uint64_t p) {
  if (p <= 3 || p >= (1ull << 32) || !is_prime_u64(p)) {
    throw DomainError("frobenius_trace: p must be a prime in (3, 2^32)");
  }
  const ShortWeierstrass m = minimize(E);
  const auto inv = invariants(m);
  if (mpz_divisible_ui_p(inv.delta.get_mpz_t(), p)) {
    throw BadReduction("frobenius_trace: bad reduction at " + std::to_string(p));
  }
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t x = 1; x < p; ++x) chi[x * x % p] = 1;
  const std::uint64_t a = mpz_fdiv_ui(m.A.get_mpz_t(), p);
  const std::uint64_t b = mpz_fdiv_ui(m.B.get_mpz_t(), p);
  long sum = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t v = ((x * x % p * x) % p + a * x % p + b) % p;
    sum += chi[v];
  }
  return -sum;
}

}  // namespace ecw
