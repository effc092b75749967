#include "ecw/descent2.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <stdexcept>

#include "ecw/errors.hpp"

namespace ecw {
namespace {

constexpr long kInfinite = LONG_MAX / 4;

long nu(const Integer& n, const Integer& p) {
  if (n == 0) return kInfinite;
  return static_cast<long>(valuation(n, p));
}

bool padic_square(const Integer& v, const Integer& p) {
  Integer unit;
  const auto e = mpz_remove(unit.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  if (e % 2 != 0) return false;
  if (p == 2) return mpz_fdiv_ui(unit.get_mpz_t(), 8) == 1;
  return mpz_legendre(unit.get_mpz_t(), p.get_mpz_t()) == 1;
}

using Quartic = std::array<Integer, 5>;

// Taylor coefficients of g at x0.
Quartic taylor(const Quartic& g, const Integer& x0) {
  static constexpr std::array<std::array<int, 5>, 5> binom = {{
      {1, 1, 1, 1, 1},
      {0, 1, 2, 3, 4},
      {0, 0, 1, 3, 6},
      {0, 0, 0, 1, 4},
      {0, 0, 0, 0, 1},
  }};
  Quartic c;
  for (int i = 0; i < 5; ++i) {
    Integer acc = 0;
    Integer xp = 1;
    for (int j = i; j < 5; ++j) {
      acc += binom[i][j] * g[j] * xp;
      xp *= x0;
    }
    c[i] = acc;
  }
  return c;
}

struct Ball {
  Integer x0;
  long k;
};

// Whether g takes a square value (or zero) somewhere on `start`.
bool ball_search(const Quartic& g, const Integer& p, Ball start, long cap) {
  const long e = p == 2 ? 3 : 1;
  const unsigned long pu = p.get_ui();
  std::vector<Ball> stack{std::move(start)};
  while (!stack.empty()) {
    Ball ball = std::move(stack.back());
    stack.pop_back();
    const Quartic c = taylor(g, ball.x0);
    if (c[0] == 0 || padic_square(c[0], p)) return true;
    const long v0 = nu(c[0], p);
    long spread = kInfinite;
    for (int i = 1; i < 5; ++i) spread = std::min(spread, nu(c[i], p) + i * ball.k);
    if (spread >= v0 + e) continue;
    const long v1 = nu(c[1], p);
    if (v1 < kInfinite && v0 > 2 * v1 && v0 - v1 >= ball.k) return true;
    if (ball.k + 1 > cap) throw Undecided("padic_soluble: depth cap reached at p=" + p.get_str());
    Integer step;
    mpz_pow_ui(step.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(ball.k));
    for (unsigned long j = 0; j < pu; ++j) stack.push_back({ball.x0 + step * j, ball.k + 1});
  }
  return false;
}

bool locally_soluble(const HomogeneousSpace& C, const std::vector<Integer>& primes, const Config& cfg) {
  if (cfg.solubility_real_place && !real_soluble(C)) return false;
  for (const auto& p : primes) {
    if (!padic_soluble(C, p, cfg.depth_cap_extra)) return false;
  }
  return true;
}

std::vector<Integer> bad_primes(const E2Param& e) {
  std::vector<Integer> out = factor(Integer(2 * e.b * (e.a * e.a - 4 * e.b))).primes();
  return out;
}

void check_group(const std::vector<Integer>& classes) {
  if (classes.empty() || !std::has_single_bit(classes.size())) {
    throw std::logic_error("Selmer set size is not a power of two");
  }
}

}  // namespace

bool real_soluble(const HomogeneousSpace& C) {
  if (C.d1 < 0 && C.d2 < 0) {
    return C.F > 0 && C.F * C.F >= 4 * C.d1 * C.d2;
  }
  return true;
}

bool padic_soluble(const HomogeneousSpace& C, const Integer& p, unsigned depth_cap_extra) {
  const Integer disc = C.F * C.F - 4 * C.d1 * C.d2;
  if (C.d1 == 0 || C.d2 == 0 || disc == 0) throw DomainError("padic_soluble: degenerate space");
  if (!is_prime(p)) throw DomainError("padic_soluble: p must be prime");
  const long cap = nu(Integer(4 * C.d1 * C.d2 * disc), p) + static_cast<long>(depth_cap_extra);
  // U a unit: x = V/U in Z_p. U divisible by p: x = U/V in pZ_p.
  const Quartic g1 = {C.d1, 0, C.F, 0, C.d2};
  const Quartic g2 = {C.d2, 0, C.F, 0, C.d1};
  return ball_search(g1, p, {0, 0}, cap) || ball_search(g2, p, {0, 1}, cap);
}

bool fastpath_insoluble(const Integer& a, const Integer& b, const Integer& d, const Integer& p) {
  const Integer n = a * a - 4 * b;
  if (p <= 3 || !is_prime(p)) throw DomainError("fastpath_insoluble: p must be a prime > 3");
  if (b == 0 || !mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t())) throw DomainError("fastpath_insoluble: p must divide b");
  if (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) throw DomainError("fastpath_insoluble: p must not divide a");
  if (n == 0 || d == 0 || !mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
    throw DomainError("fastpath_insoluble: d must divide a^2 - 4b");
  }
  if (mobius(d) == 0 || gcd(d, Integer(n / d)) != 1) {
    throw DomainError("fastpath_insoluble: d must be a square-free Hall divisor");
  }
  if (legendre(d, p) != -1) return false;
  return valuation(b, p) % 2 == 1 || legendre(a, p) == 1;
}

std::vector<Integer> sel_phi(const E2Param& e, const Config& cfg) {
  check_e2(e);
  const Integer n = e.a * e.a - 4 * e.b;
  const auto support = factor(n).primes();
  const auto primes = bad_primes(e);
  std::vector<Integer> out;
  for (const auto& d : q_t_representatives(support, true).representatives) {
    if (locally_soluble({d, -2 * e.a, n / d}, primes, cfg)) out.push_back(d);
  }
  check_group(out);
  return out;
}

std::vector<Integer> sel_phihat(const E2Param& e, const Config& cfg) {
  check_e2(e);
  const auto support = factor(e.b).primes();
  const auto primes = bad_primes(e);
  std::vector<Integer> out;
  for (const auto& d : q_t_representatives(support, true).representatives) {
    if (locally_soluble({d, e.a, e.b / d}, primes, cfg)) out.push_back(d);
  }
  check_group(out);
  return out;
}

SelmerEstimate rank_upper(const E2Param& e, const Config& cfg) {
  SelmerEstimate est;
  est.phi_classes = sel_phi(e, cfg);
  est.phihat_classes = sel_phihat(e, cfg);
  est.dim_phi = static_cast<unsigned>(std::countr_zero(est.phi_classes.size()));
  est.dim_phihat = static_cast<unsigned>(std::countr_zero(est.phihat_classes.size()));
  const int raw = static_cast<int>(est.dim_phi + est.dim_phihat) - 2;
  est.clamped = raw < 0;
  est.rank_upper = std::max(raw, 0);
  return est;
}

bool either_or_check(const E2Param& e, const Config& cfg) {
  auto all_positive = [](const std::vector<Integer>& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& d) { return d > 0; });
  };
  return all_positive(sel_phi(e, cfg)) || all_positive(sel_phihat(e, cfg));
}

Integer least_split_prime(const Integer& a) {
  if (is_square(a)) throw DomainError("least_split_prime: a must not be a perfect square");
  for (Integer p = 5;; p = next_prime(p)) {
    if (legendre(a, p) == 1) return p;
  }
}

BCandidates construct_b_candidates(const Integer& a, unsigned M, const Integer& bound) {
  BCandidates out;
  out.P = least_split_prime(a);
  for (Integer q = 2; out.q.size() < M; q = next_prime(q)) {
    if (q != out.P && legendre(q, out.P) == -1) out.q.push_back(q);
  }
  for (Integer b = -bound; b <= bound; ++b) {
    if (b == 0 || gcd(a, b) != 1) continue;
    const Integer n = a * a - 4 * b;
    if (n == 0) continue;
    const bool ok = std::all_of(out.q.begin(), out.q.end(), [&](const Integer& q) { return nu(n, q) == 1; });
    if (ok) out.b.push_back(b);
  }
  return out;
}

}  // namespace ecw
