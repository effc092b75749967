#pragma once

// Exact integer and rational number theory kernel: factorization, prime
// factor counts, square-free parts, Legendre symbols, valuations and the
// square-class groups Q(T).

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ecw {

using Integer = mpz_class;
using Rational = mpq_class;

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// sign * prod(prime^exponent), primes strictly increasing.
struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;

  Integer value() const;
  std::vector<Integer> primes() const;
  /// Exponent of `p`, zero when p does not divide.
  unsigned exponent_of(const Integer& p) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Exact factorization of a nonzero integer. Throws DomainError on zero.
///
/// Small primes (< 2^10) are removed by trial division, which settles every
/// cofactor below 2^20. Larger cofactors go through Miller-Rabin and
/// Pollard-Brent rho. Results are memoised in the shared factor cache when it
/// is enabled; the cache never changes results.
Factorization factor(const Integer& n);

/// 64-bit fast path, ascending (prime, exponent) pairs. n >= 1.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

/// Deterministic below 3.3e24 (Miller-Rabin over the first 13 prime bases).
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

/// All primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Smallest prime strictly greater than n.
Integer next_prime(const Integer& n);

unsigned omega(const Integer& n);

/// s(n): product of the primes dividing |n| to an odd power. Always positive.
Integer squarefree_part(const Integer& n);

/// sign(n) * s(n); the canonical representative of n in Q*/Q*^2.
Integer squarefree_kernel(const Integer& n);

int mobius(const Integer& n);

/// Legendre symbol (a/p). Throws DomainError unless p is an odd prime.
int legendre(const Integer& a, const Integer& p);

/// nu_p(n) for n != 0.
unsigned valuation(const Integer& n, const Integer& p);

bool is_square(const Integer& n);
bool is_cube(const Integer& n);

/// max(|numerator|, denominator) of a reduced fraction.
Integer height(const Rational& r);

struct RationalStats {
  unsigned omega = 0;          // omega(num) + omega(den)
  Integer squarefree;          // s(num * den)
  unsigned denominator_omega = 0;
};

RationalStats rational_stats(const Rational& r);

/// Representatives of Q(T): square classes of Q* supported on `support`,
/// optionally with the sign (the infinite place).
struct DivisorClassGroup {
  std::vector<Integer> support;
  bool includes_infinity = false;
  std::vector<Integer> representatives;
};

DivisorClassGroup q_t_representatives(std::span<const Integer> support,
                                      bool includes_infinity);

/// Memo switch for `factor`. Enabled by default; thread safe.
void set_factor_cache_enabled(bool enabled);
bool factor_cache_enabled();
void clear_factor_cache();
std::size_t factor_cache_size();

}  // namespace ecw
