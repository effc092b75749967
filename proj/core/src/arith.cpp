#include "ecw/arith.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "ecw/errors.hpp"

namespace ecw {
namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

constexpr u64 kTrialBound = 1u << 10;
constexpr std::size_t kCacheCapacity = 1u << 20;

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = primes_up_to(kTrialBound);
  return primes;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_u64(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::array<unsigned long, 13> kWitnesses = {2,  3,  5,  7,  11, 13, 17,
                                                      19, 23, 29, 31, 37, 41};

u64 pollard_brent_u64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 v) { return static_cast<u64>((u128(mulmod(v, v, n)) + c) % n); };
    u64 y = 2, x = 2, ys = 2, g = 1, q = 1;
    const u64 m = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_u64_into(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  const u64 d = pollard_brent_u64(n);
  factor_u64_into(d, out);
  factor_u64_into(n / d, out);
}

Integer pollard_brent_big(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    auto step = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    Integer y = 2, x = 2, ys = 2, g = 1, q = 1, diff;
    const unsigned long m = 128;
    for (unsigned long r = 1; g == 1; r <<= 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

bool fits_u64(const Integer& n) { return mpz_fits_ulong_p(n.get_mpz_t()) != 0; }

void factor_big_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (fits_u64(n)) {
    std::map<u64, unsigned> small;
    factor_u64_into(n.get_ui(), small);
    for (const auto& [p, e] : small) out[Integer(p)] += e;
    return;
  }
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const Integer d = pollard_brent_big(n);
  factor_big_into(d, out);
  factor_big_into(Integer(n / d), out);
}

struct FactorCache {
  std::shared_mutex mutex;
  std::map<Integer, Factorization> entries;
  std::atomic<bool> enabled{true};
};

FactorCache& cache() {
  static FactorCache instance;
  return instance;
}

Factorization factor_positive(const Integer& n) {
  Integer rest = n;
  std::map<Integer, unsigned> found;
  for (u64 p : small_primes()) {
    if (rest == 1) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      found[Integer(p)] = e;
    }
  }
  if (rest > 1) {
    if (rest < Integer(kTrialBound) * kTrialBound) {
      ++found[rest];
    } else {
      factor_big_into(rest, found);
    }
  }
  Factorization f;
  f.factors.reserve(found.size());
  for (auto& [p, e] : found) f.factors.push_back({p, e});
  return f;
}

}  // namespace

Integer Factorization::value() const {
  Integer v = sign;
  for (const auto& pp : factors) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    v *= power;
  }
  return v;
}

std::vector<Integer> Factorization::primes() const {
  std::vector<Integer> out;
  out.reserve(factors.size());
  for (const auto& pp : factors) out.push_back(pp.prime);
  return out;
}

unsigned Factorization::exponent_of(const Integer& p) const {
  for (const auto& pp : factors) {
    if (pp.prime == p) return pp.exponent;
  }
  return 0;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin_u64(n, a)) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(n.get_ui());
  for (unsigned long p : kWitnesses) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  const Integer n1 = n - 1;
  Integer d = n1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  for (unsigned long a : kWitnesses) {
    const Integer base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n1) continue;
    bool composite = true;
    for (mp_bitcnt_t i = 1; i < s; ++i) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == n1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  static const Integer deterministic_bound("3317044064679887385961981");
  if (n < deterministic_bound) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

Integer next_prime(const Integer& n) {
  Integer candidate = n < 2 ? Integer(2) : Integer(n + 1);
  while (!is_prime(candidate)) ++candidate;
  return candidate;
}

std::vector<std::pair<u64, unsigned>> factor_u64(u64 n) {
  std::map<u64, unsigned> found;
  for (u64 p : small_primes()) {
    if (n == 1) break;
    while (n % p == 0) {
      n /= p;
      ++found[p];
    }
  }
  if (n > 1) factor_u64_into(n, found);
  return {found.begin(), found.end()};
}

Factorization factor(const Integer& n) {
  if (n == 0) throw DomainError("factor: zero has no factorization");
  const int sign = sgn(n) < 0 ? -1 : 1;
  const Integer magnitude = abs(n);
  // Small inputs are cheap enough that locking would dominate.
  const bool use_cache = cache().enabled.load(std::memory_order_relaxed) &&
                         !mpz_fits_uint_p(magnitude.get_mpz_t());
  if (use_cache) {
    std::shared_lock lock(cache().mutex);
    if (auto it = cache().entries.find(magnitude); it != cache().entries.end()) {
      Factorization f = it->second;
      f.sign = sign;
      return f;
    }
  }
  Factorization f = factor_positive(magnitude);
  if (use_cache) {
    std::unique_lock lock(cache().mutex);
    if (cache().entries.size() < kCacheCapacity) cache().entries.emplace(magnitude, f);
  }
  f.sign = sign;
  return f;
}

unsigned omega(const Integer& n) {
  return static_cast<unsigned>(factor(n).factors.size());
}

Integer squarefree_part(const Integer& n) {
  Integer s = 1;
  for (const auto& pp : factor(n).factors) {
    if (pp.exponent % 2 == 1) s *= pp.prime;
  }
  return s;
}

Integer squarefree_kernel(const Integer& n) {
  return sgn(n) < 0 ? Integer(-squarefree_part(n)) : squarefree_part(n);
}

int mobius(const Integer& n) {
  const auto f = factor(n);
  for (const auto& pp : f.factors) {
    if (pp.exponent > 1) return 0;
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

int legendre(const Integer& a, const Integer& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p)) {
    throw DomainError("legendre: modulus must be an odd prime");
  }
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw DomainError("valuation: zero has infinite valuation");
  if (p < 2) throw DomainError("valuation: p must be prime");
  Integer rest = n;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool is_cube(const Integer& n) {
  Integer root;
  return mpz_root(root.get_mpz_t(), n.get_mpz_t(), 3) != 0;
}

Integer height(const Rational& r) {
  Integer num = abs(r.get_num());
  return num > r.get_den() ? num : Integer(r.get_den());
}

RationalStats rational_stats(const Rational& r) {
  if (r == 0) throw DomainError("rational_stats: zero");
  RationalStats stats;
  const unsigned num_omega = omega(r.get_num());
  stats.denominator_omega = omega(r.get_den());
  stats.omega = num_omega + stats.denominator_omega;
  stats.squarefree = squarefree_part(Integer(r.get_num() * r.get_den()));
  return stats;
}

DivisorClassGroup q_t_representatives(std::span<const Integer> support, bool includes_infinity) {
  DivisorClassGroup group;
  group.support.assign(support.begin(), support.end());
  std::sort(group.support.begin(), group.support.end());
  group.support.erase(std::unique(group.support.begin(), group.support.end()), group.support.end());
  group.includes_infinity = includes_infinity;

  std::vector<Integer> reps{1};
  for (const auto& p : group.support) {
    const std::size_t n = reps.size();
    for (std::size_t i = 0; i < n; ++i) reps.push_back(reps[i] * p);
  }
  if (includes_infinity) {
    const std::size_t n = reps.size();
    for (std::size_t i = 0; i < n; ++i) reps.push_back(-reps[i]);
  }
  std::sort(reps.begin(), reps.end());
  group.representatives = std::move(reps);
  return group;
}

void set_factor_cache_enabled(bool enabled) { cache().enabled.store(enabled); }

bool factor_cache_enabled() { return cache().enabled.load(); }

void clear_factor_cache() {
  std::unique_lock lock(cache().mutex);
  cache().entries.clear();
}

std::size_t factor_cache_size() {
  std::shared_lock lock(cache().mutex);
  return cache().entries.size();
}

}  // namespace ecw
