#pragma once

// Descent via 2-isogeny on E_{a,b}: y^2 = x^3 + a x^2 + b x.

#include <vector>

#include "ecw/config.hpp"
#include "ecw/families.hpp"

namespace ecw {

/// Z^2 = d1 U^4 + F U^2 V^2 + d2 V^4.
struct HomogeneousSpace {
  Integer d1;
  Integer F;
  Integer d2;
};

bool real_soluble(const HomogeneousSpace& C);

/// Whether C has a Q_p-point with (U, V) != (0, 0). Throws Undecided if the
/// ball search needs depth beyond nu_p(4 d1 d2 (F^2 - 4 d1 d2)) + depth_cap_extra,
/// and DomainError on degenerate spaces.
bool padic_soluble(const HomogeneousSpace& C, const Integer& p, unsigned depth_cap_extra = 5);

/// Closed-form insolubility of (d, -2a, (a^2 - 4b)/d) at p for p > 3, p | b,
/// p !| a and d a square-free Hall divisor of a^2 - 4b. DomainError otherwise.
bool fastpath_insoluble(const Integer& a, const Integer& b, const Integer& d, const Integer& p);

/// Surviving classes of Q(T1), T1 = primes(a^2 - 4b) and the sign, ascending.
std::vector<Integer> sel_phi(const E2Param& p, const Config& cfg = {});
/// Surviving classes of Q(T2), T2 = primes(b) and the sign, ascending.
std::vector<Integer> sel_phihat(const E2Param& p, const Config& cfg = {});

struct SelmerEstimate {
  std::vector<Integer> phi_classes;
  std::vector<Integer> phihat_classes;
  unsigned dim_phi = 0;
  unsigned dim_phihat = 0;
  int rank_upper = 0;
  bool clamped = false;
};

SelmerEstimate rank_upper(const E2Param& p, const Config& cfg = {});

/// One of the two Selmer sets avoids negative classes.
bool either_or_check(const E2Param& p, const Config& cfg = {});

struct BCandidates {
  Integer P;                  // least prime p > 3 with (a/p) = 1
  std::vector<Integer> q;     // the M least primes q with (q/P) = -1
  std::vector<Integer> b;     // ascending
};

/// Throws DomainError when a is a perfect square.
Integer least_split_prime(const Integer& a);
BCandidates construct_b_candidates(const Integer& a, unsigned M, const Integer& bound);

}  // namespace ecw
