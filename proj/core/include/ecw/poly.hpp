#pragma once

// Dense univariate polynomials over Z, exact rational roots, irreducibility
// over Q and the odd division polynomials of short Weierstrass curves.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ecw/arith.hpp"

namespace ecw {

/// Coefficients stored from degree 0 upwards; never has a zero leading term.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Integer> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Integer& c);
  static Poly monomial(const Integer& c, unsigned degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const;

  Integer operator()(const Integer& x) const;
  Rational operator()(const Rational& x) const;
  /// b^deg * f(a/b), the integer obtained by clearing denominators.
  Integer homogenized(const Integer& a, const Integer& b) const;

  Poly derivative() const;
  /// gcd of the coefficients, positive; zero for the zero polynomial.
  Integer content() const;
  Poly primitive() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Integer& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Integer& c) { return a *= c; }
  friend Poly operator*(const Integer& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Integer(-1); }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// "c0,c1,...,cd", low degree first; the CLI `--poly` format.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

Poly pow(const Poly& f, unsigned e);

/// Parses "c0,c1,...,cd". Throws DomainError on malformed input.
Poly parse_poly(std::string_view text);

/// Primitive gcd over Q, normalised to positive leading coefficient.
Poly poly_gcd(const Poly& f, const Poly& g);

/// Distinct rational roots, ascending. Throws DomainError on the zero polynomial.
std::vector<Rational> rational_roots(const Poly& f);

/// Irreducibility over Q of a non-constant polynomial. Degree <= 3 is decided
/// by rational roots, higher degree by factor-degree patterns modulo primes.
/// Throws Undecided if the patterns never rule out a factorisation.
bool is_irreducible(const Poly& f);

/// f(x) mod m, m >= 1.
std::uint64_t eval_mod(const Poly& f, std::uint64_t x, std::uint64_t m);

/// Roots of f in Z/p, ascending, by evaluation.
std::vector<std::uint64_t> roots_mod_prime(const Poly& f, std::uint64_t p);

/// psi_n for odd n >= 1 on y^2 = x^3 + Ax + B.
Poly division_polynomial(const Integer& A, const Integer& B, unsigned n);

}  // namespace ecw
