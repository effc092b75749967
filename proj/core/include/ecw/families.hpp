#pragma once

// Parametrised families: E_{a,b} with a 2-torsion point, the 2- and 3-torsion
// parametrisations, Type-I curves y^2 = x^3 + a, Tate normal forms for 5- and
// 7-torsion, and quadratic twists of y^2 = x^3 - 1.

#include <string>

#include "ecw/config.hpp"
#include "ecw/curves.hpp"
#include "ecw/poly.hpp"

namespace ecw {

/// y^2 = x^3 + a x^2 + b x.
struct E2Param {
  Integer a;
  Integer b;

  friend bool operator==(const E2Param&, const E2Param&) = default;
  friend bool operator<(const E2Param& l, const E2Param& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  }
};

struct E2Curve {
  ShortWeierstrass curve;       // minimised short model of E_{a,b}
  E2Param dual;                 // (-2a, a^2 - 4b)
  ShortWeierstrass dual_curve;  // minimised short model of the dual
};

/// Throws SingularCurve unless b(a^2 - 4b) != 0.
void check_e2(const E2Param& p);
ShortWeierstrass e2_short_model(const E2Param& p);
E2Curve e2_curve(const E2Param& p);
bool e2_height_leq(const E2Param& p, const Integer& X);

/// Moves a rational 2-torsion point of E to x = 0. Throws PreconditionError
/// when E has no rational 2-torsion; uses the smallest root otherwise.
E2Param e2_param_of(const ShortWeierstrass& E);

/// (a, b^3 + ab).
ShortWeierstrass e2_from_torsion(const Integer& a, const Integer& b);
/// (6ab + 27a^4, b^2 - 27a^6).
ShortWeierstrass e3_from_torsion(const Integer& a, const Integer& b);

struct Type1Curve {
  ShortWeierstrass curve;      // (0, a)
  ShortWeierstrass isogenous;  // (0, -27a)
  bool in_e2 = false;          // a is a cube
  bool in_e3 = false;          // a is a square
};

Type1Curve type1(const Integer& a);

/// Y^2 + (1-c)XY - bY = X^3 - bX^2, rescaled by u = lcm of the denominators
/// so that every a_i is integral.
LongWeierstrass tate_normal(const Rational& b, const Rational& c);
LongWeierstrass e5_curve(const Rational& t);
LongWeierstrass e7_curve(const Rational& t);

/// t^5 (t^2 - 11t - 1) and (t^3 - 8t^2 + 5t + 1)(t - 1)^7 t^7.
Poly delta5_poly();
Poly delta7_poly();

struct E3Polynomials {
  Poly f3;
  Poly g3;
  Poly delta3;
};

E3Polynomials e3_polynomials();

enum class TwistClass { CondI, CondII, LargeOmega, Unclassified };
std::string to_string(TwistClass c);

struct Twist {
  ShortWeierstrass curve;  // y^2 = x^3 - D^3
  TwistClass cls = TwistClass::Unclassified;
};

/// Throws DomainError unless D is square-free and nonzero.
Twist twist_e0(const Integer& D, const Config& cfg = {});

struct ParamBox {
  unsigned ell = 0;
  Rational m;
  Rational n;
};

ParamBox param_box(unsigned ell);

}  // namespace ecw
