#include "ng/gf.hpp"

#include <stdexcept>

namespace ng {
namespace {

int mod(int a, int p) {
  int r = a % p;
  return r < 0 ? r + p : r;
}

// Dense polynomials over GF(p), low-degree-first, possibly with trailing
// zeros.
using Poly = std::vector<int>;

int poly_degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = mod(out[i + j] + a[i] * b[j], p);
  }
  return out;
}

int inv_mod(int a, int p) {
  a = mod(a, p);
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::invalid_argument("inv_mod: not invertible");
}

// a mod m, in place on a copy.
Poly poly_rem(Poly a, const Poly& m, int p) {
  int dm = poly_degree(m);
  int lead_inv = inv_mod(m[dm], p);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
    int factor = mod(a[da] * lead_inv, p);
    for (int i = 0; i <= dm; ++i)
      a[da - dm + i] = mod(a[da - dm + i] - factor * m[i], p);
  }
  return a;
}

bool poly_is_zero(const Poly& a) { return poly_degree(a) < 0; }

// Enumerate monic polynomials of the given degree in lexicographic order of
// the lower coefficients (low-degree-first comparison); calls fn for each
// until it returns true.
template <typename Fn>
bool for_each_monic(int degree, int p, Fn&& fn) {
  Poly poly(degree + 1, 0);
  poly[degree] = 1;
  std::vector<int> digits(degree, 0);
  long total = 1;
  for (int i = 0; i < degree; ++i) total *= p;
  for (long k = 0; k < total; ++k) {
    for (int i = 0; i < degree; ++i) poly[i] = digits[i];
    if (fn(poly)) return true;
    for (int i = degree - 1; i >= 0; --i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return false;
}

bool is_irreducible(const Poly& candidate, int p) {
  int d = poly_degree(candidate);
  if (d < 1) return false;
  // Trial division by every monic polynomial of degree 1..d/2.
  for (int dd = 1; dd <= d / 2; ++dd) {
    bool divides = for_each_monic(dd, p, [&](const Poly& divisor) {
      return poly_is_zero(poly_rem(candidate, divisor, p));
    });
    if (divides) return false;
  }
  return true;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteField::FiniteField(int p, int f) : p_(p), f_(f) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (f < 1) throw std::invalid_argument("field extension degree must be >= 1");
  q_ = 1;
  for (int i = 0; i < f; ++i) q_ *= p;

  if (f == 1) {
    modulus_ = {0, 1};  // x
    return;
  }
  // The lexicographic enumeration visits candidates in canonical order, so
  // the first irreducible found is the modulus.
  bool found = for_each_monic(f, p, [&](const Poly& candidate) {
    if (is_irreducible(candidate, p)) {
      modulus_ = candidate;
      return true;
    }
    return false;
  });
  if (!found) throw std::logic_error("no irreducible polynomial found");
}

FieldElement FiniteField::one() const {
  FieldElement e(f_, 0);
  e[0] = 1;
  return e;
}

bool FiniteField::is_zero(const FieldElement& a) const {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

FieldElement FiniteField::add(const FieldElement& a,
                              const FieldElement& b) const {
  FieldElement out(f_);
  for (int i = 0; i < f_; ++i) out[i] = mod(a[i] + b[i], p_);
  return out;
}

FieldElement FiniteField::neg(const FieldElement& a) const {
  FieldElement out(f_);
  for (int i = 0; i < f_; ++i) out[i] = mod(-a[i], p_);
  return out;
}

FieldElement FiniteField::sub(const FieldElement& a,
                              const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement FiniteField::mul(const FieldElement& a,
                              const FieldElement& b) const {
  Poly prod = poly_mul(a, b, p_);
  if (f_ > 1) prod = poly_rem(std::move(prod), modulus_, p_);
  prod.resize(f_, 0);
  return prod;
}

FieldElement FiniteField::inv(const FieldElement& a) const {
  if (is_zero(a)) throw std::invalid_argument("field inverse of zero");
  if (f_ == 1) {
    FieldElement out(1);
    out[0] = inv_mod(a[0], p_);
    return out;
  }
  // Extended Euclid on (a, modulus): track s with s*a + t*m = r.
  Poly r0 = modulus_, r1 = a;
  r1.resize(f_ + 1, 0);
  Poly s0(f_ + 1, 0), s1(f_ + 1, 0);
  s1[0] = 1;
  while (true) {
    int d1 = poly_degree(r1);
    if (d1 < 0) throw std::logic_error("gcd(a, modulus) != 1");
    if (d1 == 0) break;
    // r0 = q*r1 + rem; fold the quotient into (r0,s0).
    int lead_inv = inv_mod(r1[d1], p_);
    for (int d0 = poly_degree(r0); d0 >= d1; d0 = poly_degree(r0)) {
      int factor = mod(r0[d0] * lead_inv, p_);
      int shift = d0 - d1;
      for (int i = 0; i <= d1; ++i)
        r0[shift + i] = mod(r0[shift + i] - factor * r1[i], p_);
      for (int i = 0; i + shift <= f_; ++i)
        s0[shift + i] = mod(s0[shift + i] - factor * s1[i], p_);
    }
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
  int scale = inv_mod(r1[0], p_);
  FieldElement out(f_);
  for (int i = 0; i < f_; ++i) out[i] = mod(s1[i] * scale, p_);
  return out;
}

FieldElement FiniteField::from_index(long k) const {
  FieldElement out(f_);
  for (int i = 0; i < f_; ++i) {
    out[i] = static_cast<int>(k % p_);
    k /= p_;
  }
  return out;
}

long FiniteField::to_index(const FieldElement& a) const {
  long k = 0;
  for (int i = f_ - 1; i >= 0; --i) k = k * p_ + a[i];
  return k;
}

std::vector<FieldElement> FiniteField::enumerate() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (long k = 0; k < q_; ++k) out.push_back(from_index(k));
  return out;
}

long FiniteField::multiplicative_order(const FieldElement& a) const {
  if (is_zero(a)) throw std::invalid_argument("order of zero");
  FieldElement x = a;
  long ord = 1;
  while (x != one()) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

FieldElement FiniteField::primitive_element() const {
  for (long k = 1; k < q_; ++k) {
    FieldElement a = from_index(k);
    if (multiplicative_order(a) == q_ - 1) return a;
  }
  throw std::logic_error("no primitive element");  // unreachable
}

}  // namespace ng
