#include "ecw/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <thread>

#include <boost/multiprecision/mpfr.hpp>

#include "ecw/errors.hpp"
#include "ecw/families.hpp"

namespace ecw {
namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

// Runs body(worker) on `workers` threads; worker w handles its own stride.
template <class Body>
void run_workers(unsigned workers, Body body) {
  workers = std::max(1u, workers);
  if (workers == 1) {
    body(0u);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back([&body, w] { body(w); });
}

i64 isqrt(i64 n) {
  if (n <= 0) return 0;
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 submod(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }

int legendre_u64(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  u64 result = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

}  // namespace

u64 count_r2(u64 X) {
  if (X == 0) return 0;
  const i64 x2 = static_cast<i64>(X * X);
  const i128 x3 = i128(x2) * static_cast<i64>(X);
  u64 count = 0;
  for (i64 a = -x2 + 1; a < x2; ++a) {
    // |b| > X + sqrt|a| forces |b^3 + ab| >= |b| X^2 > X^3.
    const i64 bmax = static_cast<i64>(X) + isqrt(a < 0 ? -a : a) + 1;
    for (i64 b = -bmax; b <= bmax; ++b) {
      if (abs128(i128(b) * b * b + i128(a) * b) < x3) ++count;
    }
  }
  return count;
}

u64 count_r3(u64 X) {
  if (X == 0) return 0;
  const i64 x2 = static_cast<i64>(X * X);
  const i128 x3 = i128(x2) * static_cast<i64>(X);
  u64 count = 2 * static_cast<u64>(isqrt(static_cast<i64>(x3 - 1))) + 1;  // a = 0
  for (i64 a = 1; a <= static_cast<i64>(X); ++a) {
    const i128 a4 = i128(a) * a * a * a;
    const i128 a6 = a4 * a * a;
    for (i64 sa : {a, -a}) {
      // -X^2 < 6 sa b + 27 a^4 < X^2, solved for b.
      const i128 lo_num = -i128(x2) - 27 * a4;
      const i128 hi_num = i128(x2) - 27 * a4;
      const i64 six = 6 * sa;
      i64 lo, hi;
      if (six > 0) {
        lo = floor_div(static_cast<i64>(lo_num), six) + 1;
        hi = ceil_div(static_cast<i64>(hi_num), six) - 1;
      } else {
        lo = floor_div(static_cast<i64>(hi_num), six) + 1;
        hi = ceil_div(static_cast<i64>(lo_num), six) - 1;
      }
      for (i64 b = lo; b <= hi; ++b) {
        const i128 l1 = abs128(i128(6) * sa * b + 27 * a4);
        if (l1 >= x2) continue;
        if (abs128(i128(b) * b - 27 * a6) < x3) ++count;
      }
    }
  }
  return count;
}

VolumeConstant volume_constant(unsigned digits) {
  using boost::multiprecision::mpfr_float;
  if (digits < 10) throw DomainError("volume_constant: precision must be at least 10 digits");
  mpfr_float::default_precision(digits + 20);
  auto newton = [](int sign, mpfr_float x) {
    // x^3 + sign x - 1
    for (int i = 0; i < 200; ++i) {
      const mpfr_float fx = x * x * x + sign * x - 1;
      const mpfr_float step = fx / (3 * x * x + sign);
      x -= step;
      if (step == 0) break;
    }
    return x;
  };
  auto brackets = [digits](int sign, const mpfr_float& x) {
    const mpfr_float eps = boost::multiprecision::pow(mpfr_float(10), -static_cast<int>(digits));
    auto f = [sign](const mpfr_float& v) { return v * v * v + sign * v - 1; };
    return f(x - eps) < 0 && f(x + eps) > 0;
  };
  const mpfr_float ap = newton(1, mpfr_float("0.7"));
  const mpfr_float am = newton(-1, mpfr_float("1.3"));
  const mpfr_float value = 2 * log(am / ap) + mpfr_float(4) / 3 * (ap + am);
  VolumeConstant out;
  out.digits = digits;
  out.alpha_plus = ap.str(digits);
  out.alpha_minus = am.str(digits);
  out.value = value.str(digits);
  out.value_approx = value.convert_to<double>();
  out.certified = brackets(1, ap) && brackets(-1, am);
  return out;
}

std::vector<FamilyMember> family_curves(unsigned ell, u64 X, double safety, unsigned workers) {
  if (ell != 5 && ell != 7) throw DomainError("family_curves: ell must be 5 or 7");
  const ParamBox box = param_box(ell);
  const auto window = [&](const Rational& e) {
    return static_cast<i64>(std::floor(safety * std::pow(static_cast<double>(X), e.get_d())));
  };
  const i64 amax = window(box.m);
  const i64 bmax = std::max<i64>(1, window(box.n));
  const Integer bound = X;

  std::vector<std::map<ShortWeierstrass, Rational>> found(std::max(1u, workers));
  run_workers(workers, [&](unsigned w) {
    auto& mine = found[w];
    for (i64 b = 1 + w; b <= bmax; b += std::max(1u, workers)) {
      for (i64 a = -amax; a <= amax; ++a) {
        if (std::gcd(a, b) != 1) continue;
        const Rational t(a, b);
        ShortWeierstrass E;
        try {
          E = minimize(to_short(ell == 5 ? e5_curve(t) : e7_curve(t)));
        } catch (const SingularCurve&) {
          continue;
        }
        if (!height_leq(E, bound)) continue;
        auto [it, inserted] = mine.emplace(E, t);
        if (!inserted && (height(t) < height(it->second) || (height(t) == height(it->second) && t < it->second))) {
          it->second = t;
        }
      }
    }
  });
  std::map<ShortWeierstrass, Rational> merged;
  for (auto& part : found) {
    for (auto& [E, t] : part) {
      auto [it, inserted] = merged.emplace(E, t);
      if (!inserted && (height(t) < height(it->second) || (height(t) == height(it->second) && t < it->second))) {
        it->second = t;
      }
    }
  }
  std::vector<FamilyMember> out;
  out.reserve(merged.size());
  for (auto& [E, t] : merged) out.push_back({t, E});
  return out;
}

u64 count_family(unsigned ell, u64 X, double safety, unsigned workers) {
  return family_curves(ell, X, safety, workers).size();
}

double slope(const CountSeries& series) {
  const auto& pts = series.points;
  if (pts.size() < 3) throw DomainError("slope: need at least three points");
  double sx = 0, sy = 0;
  for (const auto& [x, c] : pts) {
    if (x == 0 || c == 0) throw DomainError("slope: X and counts must be positive");
    sx += std::log(static_cast<double>(x));
    sy += std::log(static_cast<double>(c));
  }
  const double n = static_cast<double>(pts.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, c] : pts) {
    const double dx = std::log(static_cast<double>(x)) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(static_cast<double>(c)) - my);
  }
  if (sxx == 0) throw DomainError("slope: X values must not all coincide");
  return sxy / sxx;
}

u64 roots_mod(const Poly& f, u64 p, bool square) {
  if (f.is_zero()) throw DomainError("roots_mod: zero polynomial");
  if (p >= (1ull << 32) || !is_prime_u64(p)) throw DomainError("roots_mod: p must be a prime below 2^32");
  const auto roots = roots_mod_prime(f, p);
  if (!square) return roots.size();
  const Poly df = f.derivative();
  const u64 p2 = p * p;
  u64 count = 0;
  for (u64 r : roots) {
    if (eval_mod(df, r, p) != 0) {
      ++count;  // unique lift by Hensel
    } else if (eval_mod(f, r, p2) == 0) {
      count += p;  // f(r + kp) = f(r) mod p^2 for every k
    }
  }
  return count;
}

bool admissible_prime(const Poly& f, u64 p) {
  const Integer g = gcd(f.content(), f.derivative().content());
  return !mpz_divisible_ui_p(g.get_mpz_t(), p);
}

NormalOrderSample normal_order_experiment(const Poly& f, u64 X, std::span<const Integer> S, unsigned workers) {
  if (X < 10) throw DomainError("normal_order_experiment: X must be at least 10");
  if (!is_irreducible(f)) throw DomainError("normal_order_experiment: f must be irreducible");
  const std::vector<Integer> excluded(S.begin(), S.end());
  struct Tally {
    Integer s1 = 0, s2 = 0;
    u64 n = 0;
  };
  std::vector<Tally> tallies(std::max(1u, workers));
  const i64 xi = static_cast<i64>(X);
  run_workers(workers, [&](unsigned w) {
    Tally& t = tallies[w];
    for (i64 b = 1 + w; b <= xi; b += std::max(1u, workers)) {
      for (i64 a = -xi; a <= xi; ++a) {
        if (std::gcd(a, b) != 1) continue;
        const Integer v = f.homogenized(Integer(static_cast<long>(a)), Integer(static_cast<long>(b)));
        if (v == 0) continue;
        unsigned k = 0;
        for (const auto& pp : factor(v).factors) {
          if (pp.exponent % 2 == 1 && std::find(excluded.begin(), excluded.end(), pp.prime) == excluded.end()) ++k;
        }
        t.s1 += k;
        t.s2 += k * k;
        ++t.n;
      }
    }
  });
  Tally total;
  for (const auto& t : tallies) {
    total.s1 += t.s1;
    total.s2 += t.s2;
    total.n += t.n;
  }
  NormalOrderSample out;
  out.X = X;
  out.sample_count = total.n;
  if (total.n == 0) throw DomainError("normal_order_experiment: no samples");
  const Integer n = static_cast<unsigned long>(total.n);
  out.mean = Rational(total.s1, n);
  out.mean.canonicalize();
  Rational second(total.s2, n);
  second.canonicalize();
  out.variance = second - out.mean * out.mean;
  return out;
}

PolyFamily family_of(FrobeniusFamily fam) {
  switch (fam) {
    case FrobeniusFamily::E5:
      return {Poly{1, -1}, Poly{0, -1}, Poly{0, -1}, Poly{}, Poly{}};
    case FrobeniusFamily::E7: {
      const Poly b{0, 0, 1, -1};  // -(t^3 - t^2)
      return {Poly{1, 1, -1}, b, b, Poly{}, Poly{}};
    }
    case FrobeniusFamily::E3Poly: {
      const auto e3 = e3_polynomials();
      return {Poly{}, Poly{}, Poly{}, -e3.f3, e3.g3};
    }
  }
  throw DomainError("family_of: unknown family");
}

FamilyDegrees family_degrees(const PolyFamily& f) {
  const Poly b2 = f.a1 * f.a1 + Integer(4) * f.a2;
  const Poly b4 = Integer(2) * f.a4 + f.a1 * f.a3;
  const Poly b6 = f.a3 * f.a3 + Integer(4) * f.a6;
  const Poly b8 = f.a1 * f.a1 * f.a6 + Integer(4) * f.a2 * f.a6 - f.a1 * f.a3 * f.a4 + f.a2 * f.a3 * f.a3 - f.a4 * f.a4;
  const Poly c4 = b2 * b2 - Integer(24) * b4;
  const Poly delta = -(b2 * b2 * b8) - Integer(8) * pow(b4, 3) - Integer(27) * b6 * b6 + Integer(9) * b2 * b4 * b6;
  return {delta.degree(), c4.degree()};
}

long fibre_trace(const std::array<u64, 5>& a, u64 p) {
  const u64 a1 = a[0] % p, a2 = a[1] % p, a3 = a[2] % p, a4 = a[3] % p, a6 = a[4] % p;
  const u64 b2 = (mul(a1, a1, p) + mul(4, a2, p)) % p;
  const u64 b4 = (mul(2, a4, p) + mul(a1, a3, p)) % p;
  const u64 b6 = (mul(a3, a3, p) + mul(4, a6, p)) % p;
  u64 b8 = (mul(mul(a1, a1, p), a6, p) + mul(mul(4, a2, p), a6, p)) % p;
  b8 = submod(b8, mul(mul(a1, a3, p), a4, p), p);
  b8 = (b8 + mul(a2, mul(a3, a3, p), p)) % p;
  b8 = submod(b8, mul(a4, a4, p), p);
  const u64 c4 = submod(mul(b2, b2, p), mul(24, b4, p), p);
  u64 c6 = submod(mul(mul(36, b2, p), b4, p), mul(mul(b2, b2, p), b2, p), p);
  c6 = submod(c6, mul(216, b6, p), p);
  u64 delta = submod(0, mul(mul(b2, b2, p), b8, p), p);
  delta = submod(delta, mul(8, mul(mul(b4, b4, p), b4, p), p), p);
  delta = submod(delta, mul(27, mul(b6, b6, p), p), p);
  delta = (delta + mul(mul(9, b2, p), mul(b4, b6, p), p)) % p;
  if (delta == 0) {
    if (c4 == 0) return 0;
    return legendre_u64(submod(0, c6, p), p);
  }
  long sum = 0;
  for (u64 x = 0; x < p; ++x) {
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    u64 v = mul(4, x, p);
    v = (v + b2) % p;
    v = mul(v, x, p);
    v = (v + mul(2, b4, p)) % p;
    v = mul(v, x, p);
    v = (v + b6) % p;
    sum += legendre_u64(v, p);
  }
  return -sum;
}

Rational avg_frobenius(const PolyFamily& fam, u64 p) {
  if (p <= 3 || p >= (1ull << 32) || !is_prime_u64(p)) throw DomainError("avg_frobenius: p must be a prime > 3");
  long total = 0;
  for (u64 t = 0; t < p; ++t) {
    const std::array<u64, 5> a = {eval_mod(fam.a1, t, p), eval_mod(fam.a2, t, p), eval_mod(fam.a3, t, p),
                                  eval_mod(fam.a4, t, p), eval_mod(fam.a6, t, p)};
    total += fibre_trace(a, p);
  }
  Rational out(total, static_cast<unsigned long>(p));
  out.canonicalize();
  return out;
}

Rational avg_frobenius(FrobeniusFamily fam, u64 p) { return avg_frobenius(family_of(fam), p); }

bool has_insolubility_certificate(const Integer& a, const Integer& b) {
  const Integer n = a * a - 4 * b;
  if (b == 0 || n == 0) return false;
  std::vector<Integer> odd_q;
  for (const auto& pp : factor(n).factors) {
    if (pp.exponent % 2 == 1) odd_q.push_back(pp.prime);
  }
  if (odd_q.empty()) return false;
  for (const auto& pp : factor(b).factors) {
    const Integer& p = pp.prime;
    if (p <= 3 || mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) continue;
    if (pp.exponent % 2 == 0 && legendre(a, p) != 1) continue;
    for (const auto& q : odd_q) {
      if (legendre(q, p) == -1) return true;
    }
  }
  return false;
}

DensityResult density_experiment_cor_main(u64 X, unsigned workers) {
  if (X < 2) throw DomainError("density_experiment_cor_main: X must be at least 2");
  const i64 xi = static_cast<i64>(X);
  const i64 x2 = xi * xi;
  std::vector<DensityResult> parts(std::max(1u, workers));
  run_workers(workers, [&](unsigned w) {
    DensityResult& r = parts[w];
    for (i64 a = -xi + static_cast<i64>(w); a <= xi; a += std::max(1u, workers)) {
      for (i64 b = -x2; b <= x2; ++b) {
        if (b == 0 || std::gcd(a, b) != 1) continue;
        const i64 n = a * a - 4 * b;
        if (n == 0) continue;
        if (n > 0 && isqrt(n) * isqrt(n) == n) {
          ++r.square_discriminant;
          continue;
        }
        ++r.total;
        if (has_insolubility_certificate(Integer(static_cast<long>(a)), Integer(static_cast<long>(b)))) {
          ++r.eligible;
          r.certified.emplace_back(static_cast<long>(a), static_cast<long>(b));
        }
      }
    }
  });
  DensityResult out;
  for (auto& part : parts) {
    out.eligible += part.eligible;
    out.total += part.total;
    out.square_discriminant += part.square_discriminant;
    out.certified.insert(out.certified.end(), part.certified.begin(), part.certified.end());
  }
  std::sort(out.certified.begin(), out.certified.end());
  return out;
}

}  // namespace ecw
