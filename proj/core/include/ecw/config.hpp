#pragma once

#include <cstdint>

#include "ecw/curves.hpp"

namespace ecw {

struct Config {
  ConductorPolicy policy = ConductorPolicy::IncludeSmall;
  /// nu_2 of the Manin constant of y^2 = x^3 - 1.
  unsigned nu2_manin = 0;
  /// Test the real place alongside p | 2b(a^2 - 4b) in 2-descent.
  bool solubility_real_place = true;
  unsigned depth_cap_extra = 5;
  unsigned workers = 1;
  std::int64_t seed = 0;
  /// Accept a lone prime = 3 mod 4 (no primes = 5 mod 12) as the second twist condition.
  bool cond2_single_prime = true;
};

}  // namespace ecw
