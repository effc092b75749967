#include "ecw/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ecw/errors.hpp"

namespace ecw {
namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

// Arithmetic in F_p[x]; vectors low degree first, trimmed.
namespace fp {

using Vec = std::vector<u64>;

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 inverse(u64 a, u64 p) {
  u64 result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result;
}

Vec reduce(const Poly& f, u64 p) {
  Vec out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  trim(out);
  return out;
}

Vec rem(Vec a, const Vec& b, u64 p) {
  const u64 inv = inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 q = mul(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - mul(q, b[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Vec quot(Vec a, const Vec& b, u64 p) {
  if (a.size() < b.size()) return {};
  Vec q(a.size() - b.size() + 1, 0);
  const u64 inv = inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 c = mul(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - mul(c, b[i], p)) % p;
    }
    trim(a);
  }
  trim(q);
  return q;
}

Vec gcd(Vec a, Vec b, u64 p) {
  while (!b.empty()) {
    Vec r = rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Vec mulmod(const Vec& a, const Vec& b, const Vec& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  Vec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + mul(a[i], b[j], p)) % p;
    }
  }
  trim(out);
  return rem(std::move(out), m, p);
}

Vec powmod(Vec base, u64 e, const Vec& m, u64 p) {
  Vec result{1};
  base = rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Vec derivative(const Vec& a, u64 p) {
  Vec out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mul(a[i], i % p, p));
  trim(out);
  return out;
}

// Degrees of the irreducible factors of a square-free f with unit leading term.
std::vector<unsigned> factor_degrees(Vec f, u64 p) {
  std::vector<unsigned> degrees;
  Vec h{0, 1};
  for (unsigned i = 1; 2 * i <= f.size() - 1; ++i) {
    h = powmod(h, p, f, p);
    Vec diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    Vec g = gcd(f, diff, p);
    if (g.size() > 1) {
      for (std::size_t k = 0; k < (g.size() - 1) / i; ++k) degrees.push_back(i);
      f = quot(f, g, p);
      h = rem(std::move(h), f, p);
    }
  }
  if (f.size() > 1) degrees.push_back(static_cast<unsigned>(f.size() - 1));
  return degrees;
}

}  // namespace fp

// Primitive pseudo-remainder of a by b.
Poly pseudo_remainder(Poly a, const Poly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const Poly shift = Poly::monomial(a.leading(), static_cast<unsigned>(a.degree() - b.degree()));
    a = a * b.leading() - shift * b;
    a = a.primitive();
  }
  return a;
}

// f / g over Q, scaled back to a primitive integer polynomial.
Poly divide_over_q(const Poly& f, const Poly& g) {
  std::vector<Rational> rest(f.coeffs().begin(), f.coeffs().end());
  const int dg = g.degree();
  std::vector<Rational> q(static_cast<std::size_t>(f.degree() - dg + 1));
  for (int k = f.degree() - dg; k >= 0; --k) {
    const Rational c = rest[static_cast<std::size_t>(k + dg)] / Rational(g.leading());
    q[static_cast<std::size_t>(k)] = c;
    for (int i = 0; i <= dg; ++i) rest[static_cast<std::size_t>(k + i)] -= c * g.coeffs()[i];
  }
  Integer den = 1;
  for (const auto& c : q) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> out;
  for (const auto& c : q) out.push_back(Integer(c * den));
  return Poly(std::move(out)).primitive();
}

Poly squarefree_factor(const Poly& f) {
  const Poly g = poly_gcd(f, f.derivative());
  if (g.degree() <= 0) return f.primitive();
  return divide_over_q(f, g);
}

Integer hensel_lift(const Poly& h, const Poly& dh, u64 root, u64 p, const Integer& bound) {
  Integer y = root;
  Integer modulus = p;
  while (modulus <= bound) {
    modulus *= modulus;
    Integer inv;
    Integer derivative = dh(y);
    mpz_mod(derivative.get_mpz_t(), derivative.get_mpz_t(), modulus.get_mpz_t());
    if (mpz_invert(inv.get_mpz_t(), derivative.get_mpz_t(), modulus.get_mpz_t()) == 0) {
      throw std::logic_error("hensel_lift: derivative not invertible");
    }
    y = y - h(y) * inv;
    mpz_mod(y.get_mpz_t(), y.get_mpz_t(), modulus.get_mpz_t());
  }
  if (2 * y > modulus) y -= modulus;
  return y;
}

}  // namespace

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Poly Poly::constant(const Integer& c) { return Poly(std::vector<Integer>{c}); }

Poly Poly::monomial(const Integer& c, unsigned degree) {
  std::vector<Integer> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& Poly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Integer Poly::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Integer Poly::homogenized(const Integer& a, const Integer& b) const {
  Integer acc = 0;
  Integer bpow = 1;
  // sum c_i a^i b^(d-i), accumulated Horner-style from the top.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a + *it * bpow;
    bpow *= b;
  }
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Integer> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return Poly(std::move(out));
}

Integer Poly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c / g);
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out;
}

Poly pow(const Poly& f, unsigned e) {
  Poly result = Poly::constant(1);
  for (unsigned i = 0; i < e; ++i) result *= f;
  return result;
}

Poly parse_poly(std::string_view text) {
  std::vector<Integer> coeffs;
  std::stringstream stream{std::string(text)};
  std::string token;
  while (std::getline(stream, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw DomainError("parse_poly: empty coefficient");
    token = token.substr(first, last - first + 1);
    Integer c;
    if (c.set_str(token, 10) != 0) throw DomainError("parse_poly: bad coefficient '" + token + "'");
    coeffs.push_back(c);
  }
  if (coeffs.empty()) throw DomainError("parse_poly: no coefficients");
  return Poly(std::move(coeffs));
}

Poly poly_gcd(const Poly& f, const Poly& g) {
  Poly a = f.primitive();
  Poly b = g.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive();
  }
  return a.primitive();
}

std::vector<Rational> rational_roots(const Poly& f) {
  if (f.is_zero()) throw DomainError("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (f.coeffs()[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  Poly g(std::vector<Integer>(f.coeffs().begin() + static_cast<long>(low), f.coeffs().end()));
  if (g.degree() <= 0) return roots;
  g = squarefree_factor(g);

  // Integer roots of h(y) = L^(d-1) g(y/L) are L times the rational roots of g.
  const unsigned d = static_cast<unsigned>(g.degree());
  const Integer lead = g.leading();
  std::vector<Integer> hc(d + 1);
  Integer scale = 1;
  for (unsigned i = d; i-- > 0;) {
    hc[i] = g.coeffs()[i] * scale;
    scale *= lead;
  }
  hc[d] = 1;
  const Poly h(std::move(hc));
  const Poly dh = h.derivative();

  Integer cauchy = 0;
  for (const auto& c : h.coeffs()) cauchy = std::max(cauchy, Integer(abs(c)));
  const Integer bound = 2 * std::min(Integer(abs(h.coeffs()[0])), Integer(cauchy + 1)) + 1;

  for (u64 p = 2;; p = next_prime(Integer(p)).get_ui()) {
    if (p > (1u << 20)) throw std::logic_error("rational_roots: no separable prime found");
    std::vector<u64> residues;
    bool separable = true;
    for (u64 r = 0; r < p && separable; ++r) {
      if (eval_mod(h, r, p) != 0) continue;
      if (eval_mod(dh, r, p) == 0) separable = false;
      residues.push_back(r);
    }
    if (!separable) continue;
    for (u64 r : residues) {
      const Integer y = hensel_lift(h, dh, r, p, bound);
      if (h(y) == 0) roots.emplace_back(y, lead);
    }
    break;
  }
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw DomainError("is_irreducible: constant polynomial");
  if (f.degree() == 1) return true;
  if (!rational_roots(f).empty()) return false;
  if (f.degree() <= 3) return true;
  const Poly g = f.primitive();
  if (poly_gcd(g, g.derivative()).degree() > 0) return false;

  const unsigned d = static_cast<unsigned>(g.degree());
  std::vector<bool> allowed(d + 1, true);
  unsigned tried = 0;
  for (u64 p = 3; tried < 64; p = next_prime(Integer(p)).get_ui()) {
    if (mpz_divisible_ui_p(g.leading().get_mpz_t(), p)) continue;
    auto gp = fp::reduce(g, p);
    const u64 inv = fp::inverse(gp.back(), p);
    for (auto& c : gp) c = fp::mul(c, inv, p);
    if (fp::gcd(gp, fp::derivative(gp, p), p).size() != 1) continue;
    ++tried;
    std::vector<bool> sums(d + 1, false);
    sums[0] = true;
    for (unsigned deg : fp::factor_degrees(gp, p)) {
      for (unsigned s = d; s >= deg; --s) {
        if (sums[s - deg]) sums[s] = true;
      }
    }
    bool any = false;
    for (unsigned k = 1; k < d; ++k) {
      allowed[k] = allowed[k] && sums[k];
      any = any || allowed[k];
    }
    if (!any) return true;
  }
  throw Undecided("is_irreducible: factor-degree patterns inconclusive");
}

u64 eval_mod(const Poly& f, u64 x, u64 m) {
  u64 acc = 0;
  x %= m;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = static_cast<u64>((u128(acc) * x + mpz_fdiv_ui(it->get_mpz_t(), m)) % m);
  }
  return acc;
}

std::vector<u64> roots_mod_prime(const Poly& f, u64 p) {
  const auto fp_coeffs = fp::reduce(f, p);
  std::vector<u64> roots;
  for (u64 r = 0; r < p; ++r) {
    u64 acc = 0;
    for (auto it = fp_coeffs.rbegin(); it != fp_coeffs.rend(); ++it) acc = (fp::mul(acc, r, p) + *it) % p;
    if (acc == 0) roots.push_back(r);
  }
  return roots;
}

Poly division_polynomial(const Integer& A, const Integer& B, unsigned n) {
  if (n % 2 == 0 || n == 0) throw DomainError("division_polynomial: n must be odd");
  // f_k = psi_k for odd k and psi_k / (2y) for even k; F = (2y)^2.
  const Poly F = Poly(std::vector<Integer>{4 * B, 4 * A, 0, 4});
  const Poly F2 = F * F;
  std::vector<Poly> f(std::max(n + 1, 5u));
  f[0] = Poly();
  f[1] = Poly::constant(1);
  f[2] = Poly::constant(1);
  f[3] = Poly(std::vector<Integer>{-A * A, 12 * B, 6 * A, 0, 3});
  f[4] = Poly(std::vector<Integer>{-2 * (8 * B * B + A * A * A), -8 * A * B, -10 * A * A, 40 * B, 10 * A, 0, 2});
  for (unsigned k = 5; k <= n; ++k) {
    const unsigned m = k / 2;
    if (k % 2 == 1) {
      if (m % 2 == 0) {
        f[k] = F2 * f[m + 2] * pow(f[m], 3) - f[m - 1] * pow(f[m + 1], 3);
      } else {
        f[k] = f[m + 2] * pow(f[m], 3) - F2 * f[m - 1] * pow(f[m + 1], 3);
      }
    } else {
      f[k] = f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]);
    }
  }
  return f[n];
}

}  // namespace ecw
