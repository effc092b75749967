#include "ecw/descent3.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "ecw/errors.hpp"

namespace ecw {
namespace {

using i64 = std::int64_t;
__extension__ using i128 = __int128;

constexpr i64 kMaxDiscriminant = i64{1} << 40;

// Returns g = gcd(a, b) >= 0 with x a + y b = g.
i64 xgcd(i64 a, i64 b, i64& x, i64& y) {
  i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const i64 q = a / b;
    i64 t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 mod_pos(i128 a, i64 m) {
  i128 r = a % m;
  if (r < 0) r += m;
  return static_cast<i64>(r);
}

// b into (-a, a], c adjusted.
QuadraticForm normalize(QuadraticForm f) {
  const i64 r = floor_div(f.a - f.b, 2 * f.a);
  const i128 c = i128(f.a) * r * r + i128(f.b) * r + f.c;
  f.b += 2 * f.a * r;
  f.c = static_cast<i64>(c);
  return f;
}

void check_discriminant(i64 D) {
  const i64 m = ((D % 4) + 4) % 4;
  if (D >= 0 || (m != 0 && m != 1)) throw DomainError("discriminant must be negative and 0 or 1 mod 4");
  if (-D > kMaxDiscriminant) throw DomainError("discriminant out of range");
}

struct R3Cache {
  std::shared_mutex mutex;
  std::map<i64, unsigned> values;
};

R3Cache& r3_cache() {
  static R3Cache cache;
  return cache;
}

}  // namespace

SPrimeSet s_set(const Integer& a) {
  if (a == 0) throw DomainError("s_set: a must be nonzero");
  SPrimeSet out{a, {2, 3}};
  for (const auto& pp : factor(a).factors) {
    if (pp.prime <= 3) continue;
    if ((pp.exponent == 2 || pp.exponent == 4) && mpz_fdiv_ui(pp.prime.get_mpz_t(), 3) == 1) {
      out.primes.push_back(pp.prime);
    }
  }
  return out;
}

QuadraticForm reduce(QuadraticForm f) {
  f = normalize(f);
  while (f.a > f.c) {
    std::swap(f.a, f.c);
    f.b = -f.b;
    f = normalize(f);
  }
  if (f.a == f.c && f.b < 0) f.b = -f.b;
  return f;
}

QuadraticForm identity_form(i64 D) {
  const i64 b = ((D % 2) + 2) % 2;
  return {1, b, (b * b - D) / 4};
}

QuadraticForm compose(const QuadraticForm& f, const QuadraticForm& g) {
  QuadraticForm f1 = f, f2 = g;
  if (f1.a > f2.a) std::swap(f1, f2);
  const i64 D = f1.discriminant();
  const i64 s = (f1.b + f2.b) / 2;
  const i64 n = f2.b - s;
  i64 y1 = 0, d = 0;
  if (f2.a % f1.a == 0) {
    y1 = 0;
    d = f1.a;
  } else {
    i64 u = 0, v = 0;
    d = xgcd(f2.a, f1.a, u, v);
    y1 = u;
  }
  i64 x2 = 0, y2 = 0, d1 = 0;
  if (s % d == 0) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    d1 = xgcd(s, d, x2, y2);
    y2 = -y2;
  }
  const i64 v1 = f1.a / d1;
  const i64 v2 = f2.a / d1;
  const i64 r = mod_pos(i128(y1) * y2 * n - i128(x2) * f2.c, v1);
  QuadraticForm h;
  h.a = v1 * v2;
  h.b = f2.b + 2 * v2 * r;
  const i128 num = i128(h.b) * h.b - D;
  if (num % (4 * i128(h.a)) != 0) throw std::logic_error("compose: non-integral form");
  h.c = static_cast<i64>(num / (4 * i128(h.a)));
  return reduce(h);
}

std::vector<QuadraticForm> reduced_forms(i64 D) {
  check_discriminant(D);
  std::vector<QuadraticForm> out;
  const i64 amax = static_cast<i64>(std::sqrt(static_cast<double>(-D) / 3.0)) + 1;
  for (i64 a = 1; a <= amax; ++a) {
    for (i64 b = -a + 1; b <= a; ++b) {
      const i64 num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const i64 c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

std::size_t class_number(i64 D) { return reduced_forms(D).size(); }

unsigned r3_imaginary(i64 D) {
  check_discriminant(D);
  {
    std::shared_lock lock(r3_cache().mutex);
    if (auto it = r3_cache().values.find(D); it != r3_cache().values.end()) return it->second;
  }
  const QuadraticForm e = identity_form(D);
  std::size_t count = 0;
  for (const auto& f : reduced_forms(D)) {
    if (compose(compose(f, f), f) == e) ++count;
  }
  unsigned r = 0;
  while (count % 3 == 0) {
    count /= 3;
    ++r;
  }
  if (count != 1) throw std::logic_error("r3_imaginary: 3-torsion count is not a power of 3");
  std::unique_lock lock(r3_cache().mutex);
  r3_cache().values.emplace(D, r);
  return r;
}

Integer fundamental_discriminant(const Integer& kernel) {
  return mpz_fdiv_ui(kernel.get_mpz_t(), 4) == 1 ? kernel : Integer(4 * kernel);
}

std::string to_string(ClassMethod m) {
  switch (m) {
    case ClassMethod::ExactImaginary:
      return "exact-imaginary";
    case ClassMethod::ScholzBound:
      return "scholz-bound";
    case ClassMethod::RationalTrivial:
      return "rational-trivial";
  }
  return "?";
}

ClassGroup3 class_bound(const Integer& kernel) {
  if (kernel == 0) throw DomainError("class_bound: zero kernel");
  ClassGroup3 out;
  out.field_kernel = kernel;
  if (kernel == 1) {
    out.rational = true;
    return out;
  }
  auto exact = [](const Integer& k) {
    const Integer D = fundamental_discriminant(k);
    if (!D.fits_slong_p()) throw DomainError("class_bound: discriminant out of range");
    return r3_imaginary(D.get_si());
  };
  if (kernel < 0) {
    out.method = ClassMethod::ExactImaginary;
    out.r3 = exact(kernel);
  } else {
    out.method = ClassMethod::ScholzBound;
    out.r3 = exact(squarefree_kernel(Integer(-3 * kernel)));
  }
  return out;
}

unsigned unit_3dim(const Integer& kernel) { return (kernel > 1 || kernel == -3) ? 1 : 0; }

Type1Bound rank_upper_type1(const Integer& a) {
  if (a == 0) throw DomainError("rank_upper_type1: a must be nonzero");
  Type1Bound out;
  const Integer ka = squarefree_kernel(Integer(-3 * a));
  const Integer k27 = squarefree_kernel(a);
  out.k_a = class_bound(ka);
  out.k_27a = class_bound(k27);
  out.unit_a = unit_3dim(ka);
  out.unit_27a = unit_3dim(k27);
  out.s_a = s_set(a);
  out.s_27a = s_set(Integer(-27 * a));
  out.bound = out.class_unit_part() + static_cast<int>(out.s_a.primes.size() + out.s_27a.primes.size());
  return out;
}

}  // namespace ecw
