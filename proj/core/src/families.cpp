#include "ecw/families.hpp"

#include "ecw/errors.hpp"

namespace ecw {

void check_e2(const E2Param& p) {
  if (p.b == 0 || p.a * p.a - 4 * p.b == 0) {
    throw SingularCurve("singular E_{a,b} with a=" + p.a.get_str() + ", b=" + p.b.get_str());
  }
}

ShortWeierstrass e2_short_model(const E2Param& p) {
  check_e2(p);
  // (-27 c4, -54 c6) of the long model, divided by (2^4, 2^6).
  return minimize({81 * p.b - 27 * p.a * p.a, 54 * p.a * p.a * p.a - 243 * p.a * p.b});
}

E2Curve e2_curve(const E2Param& p) {
  check_e2(p);
  E2Curve out;
  out.curve = e2_short_model(p);
  out.dual = {-2 * p.a, p.a * p.a - 4 * p.b};
  out.dual_curve = e2_short_model(out.dual);
  return out;
}

bool e2_height_leq(const E2Param& p, const Integer& X) { return abs(p.a) <= X && abs(p.b) <= X * X; }

E2Param e2_param_of(const ShortWeierstrass& E) {
  invariants(E);
  const auto roots = rational_roots(Poly(std::vector<Integer>{E.B, E.A, 0, 1}));
  if (roots.empty()) throw PreconditionError("curve has no rational 2-torsion point");
  const Integer r = roots.front().get_num();
  return {3 * r, 3 * r * r + E.A};
}

ShortWeierstrass e2_from_torsion(const Integer& a, const Integer& b) {
  ShortWeierstrass E{a, b * b * b + a * b};
  invariants(E);
  return E;
}

ShortWeierstrass e3_from_torsion(const Integer& a, const Integer& b) {
  const Integer a3 = a * a * a;
  ShortWeierstrass E{6 * a * b + 27 * a3 * a, b * b - 27 * a3 * a3};
  invariants(E);
  return E;
}

Type1Curve type1(const Integer& a) {
  if (a == 0) throw DomainError("type1: a must be nonzero");
  return {{0, a}, {0, -27 * a}, is_cube(a), is_square(a)};
}

LongWeierstrass tate_normal(const Rational& b, const Rational& c) {
  const Integer u = lcm(Integer(b.get_den()), Integer(c.get_den()));
  const Rational a1 = (1 - c) * u;
  const Rational a2 = -b * u * u;
  const Rational a3 = -b * u * u * u;
  LongWeierstrass E{a1.get_num(), a2.get_num(), a3.get_num(), 0, 0};
  invariants(E);
  return E;
}

LongWeierstrass e5_curve(const Rational& t) { return tate_normal(t, t); }

LongWeierstrass e7_curve(const Rational& t) { return tate_normal(t * t * t - t * t, t * t - t); }

Poly delta5_poly() { return Poly{0, 0, 0, 0, 0, -1, -11, 1}; }

Poly delta7_poly() {
  const Poly t = Poly::monomial(1, 1);
  return Poly{1, 5, -8, 1} * pow(Poly{-1, 1}, 7) * pow(t, 7);
}

E3Polynomials e3_polynomials() {
  E3Polynomials out;
  out.f3 = Poly{-27, 162};
  out.g3 = Poly{54, 486, 729};
  out.delta3 = Integer(4) * pow(out.f3, 3) - Integer(27) * pow(out.g3, 2);
  return out;
}

std::string to_string(TwistClass c) {
  switch (c) {
    case TwistClass::CondI:
      return "CondI";
    case TwistClass::CondII:
      return "CondII";
    case TwistClass::LargeOmega:
      return "LargeOmega";
    case TwistClass::Unclassified:
      return "Unclassified";
  }
  return "?";
}

Twist twist_e0(const Integer& D, const Config& cfg) {
  if (D == 0) throw DomainError("twist_e0: D must be nonzero");
  const auto f = factor(D);
  unsigned leftover = 0;
  unsigned leftover_3mod4 = 0;
  for (const auto& pp : f.factors) {
    if (pp.exponent > 1) throw DomainError("twist_e0: D must be square-free");
    if (mpz_fdiv_ui(pp.prime.get_mpz_t(), 12) != 5) {
      ++leftover;
      if (mpz_fdiv_ui(pp.prime.get_mpz_t(), 4) == 3) ++leftover_3mod4;
    }
  }
  Twist out;
  out.curve = {0, -D * D * D};
  const auto omega = f.factors.size();
  if (leftover == 0) {
    out.cls = TwistClass::CondI;
  } else if (leftover == 1 && leftover_3mod4 == 1 && (cfg.cond2_single_prime || omega > 1)) {
    out.cls = TwistClass::CondII;
  } else if (omega >= 10 + 2 * cfg.nu2_manin) {
    out.cls = TwistClass::LargeOmega;
  }
  return out;
}

ParamBox param_box(unsigned ell) {
  switch (ell) {
    case 3:
      return {3, Rational(3, 2), Rational(1, 2)};
    case 5:
      return {5, Rational(1, 2), Rational(1, 2)};
    case 7:
      return {7, Rational(1, 4), Rational(1, 4)};
    default:
      throw DomainError("param_box: ell must be 3, 5 or 7");
  }
}

}  // namespace ecw
