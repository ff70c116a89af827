// Copyright 2026 The arrangeops Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arrangeops/field.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numeric>
#include <sstream>

namespace arrangeops {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q*b + r with deg r < deg b; b must be nonzero and trimmed.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  const int db = poly_degree(b);
  if (poly_degree(a) < db) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational lead_inv = 1 / b.back();
  for (int k = poly_degree(a); k >= db; --k) {
    if (sgn(a[k]) == 0) continue;
    Rational c = a[k] * lead_inv;
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) {
      if (sgn(b[i]) != 0) a[k - db + i] -= c * b[i];
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

// Reduces r (length <= 2d - 1) modulo a monic degree-d polynomial in place.
void reduce_monic(Poly& r, const Poly& modulus, int d) {
  for (int k = static_cast<int>(r.size()) - 1; k >= d; --k) {
    if (sgn(r[k]) == 0) continue;
    const Rational c = r[k];
    for (int i = 0; i < d; ++i) {
      if (sgn(modulus[i]) != 0) r[k - d + i] -= c * modulus[i];
    }
    r[k] = 0;
  }
  r.resize(d);
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// --- multiplication and inversion on flat coordinates ----------------------

std::vector<Rational> flat_mul(const FieldDescriptor& f, const std::vector<Rational>& a,
                               const std::vector<Rational>& b);
std::vector<Rational> flat_inverse(const FieldDescriptor& f, const std::vector<Rational>& a);

std::vector<Rational> flat_add(std::vector<Rational> a, const std::vector<Rational>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<Rational> flat_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

std::vector<Rational> flat_mul(const FieldDescriptor& f, const std::vector<Rational>& a,
                               const std::vector<Rational>& b) {
  if (f.kind == FieldKind::kSqrtExtension) {
    const FieldDescriptor& base = *f.base;
    const int m = base.degree;
    std::vector<Rational> a0(a.begin(), a.begin() + m), a1(a.begin() + m, a.end());
    std::vector<Rational> b0(b.begin(), b.begin() + m), b1(b.begin() + m, b.end());
    std::vector<Rational> c0 = flat_mul(base, a0, b0);
    if (!all_zero(a1) && !all_zero(b1)) {
      c0 = flat_add(std::move(c0), flat_mul(base, f.delta, flat_mul(base, a1, b1)));
    }
    std::vector<Rational> c1 = flat_add(flat_mul(base, a0, b1), flat_mul(base, a1, b0));
    c0.insert(c0.end(), c1.begin(), c1.end());
    return c0;
  }
  const int d = f.degree;
  if (d == 1) return {a[0] * b[0]};
  Poly r(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (sgn(b[j]) == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  reduce_monic(r, f.modulus, d);
  return r;
}

std::vector<Rational> euclid_inverse(const FieldDescriptor& f, const std::vector<Rational>& a) {
  Poly r0 = f.modulus;
  Poly r1 = a;
  trim(r1);
  Poly s0{}, s1{Rational(1)};
  while (poly_degree(r1) > 0) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw FieldError("element is not invertible");
  const Rational c = 1 / r1[0];
  for (auto& x : s1) x *= c;
  if (static_cast<int>(s1.size()) > f.degree) s1 = poly_divmod(s1, f.modulus).second;
  s1.resize(f.degree);
  return s1;
}

// Scaled copy of a vector normalised by its first nonzero entry.
std::pair<std::vector<Rational>, Rational> normalize_leading(const std::vector<Rational>& a) {
  auto it = std::find_if(a.begin(), a.end(), [](const Rational& x) { return sgn(x) != 0; });
  const Rational lead = *it;
  std::vector<Rational> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] / lead;
  return {out, lead};
}

std::vector<Rational> flat_inverse(const FieldDescriptor& f, const std::vector<Rational>& a) {
  if (all_zero(a)) throw FieldError("division by zero");
  switch (f.kind) {
    case FieldKind::kRational:
      return {1 / a[0]};
    case FieldKind::kQuadratic: {
      const Rational norm = a[0] * a[0] - f.parameter * a[1] * a[1];
      return {a[0] / norm, -a[1] / norm};
    }
    case FieldKind::kCyclotomic: {
      if (f.degree == 1) return {1 / a[0]};
      // a = s * zeta^k  =>  1/a = zeta^(n-k) / s.
      auto [key, lead] = normalize_leading(a);
      auto hit = f.root_index.find(key);
      if (hit != f.root_index.end()) {
        const auto& [k, unit_lead] = hit->second;
        const Rational s = lead / unit_lead;
        const long n = f.parameter;
        std::vector<Rational> out = f.root_powers[(n - k) % n];
        for (auto& x : out) x /= s;
        return out;
      }
      return euclid_inverse(f, a);
    }
    case FieldKind::kSqrtExtension: {
      const FieldDescriptor& base = *f.base;
      const int m = base.degree;
      std::vector<Rational> a0(a.begin(), a.begin() + m), a1(a.begin() + m, a.end());
      std::vector<Rational> norm = flat_mul(base, a0, a0);
      if (!all_zero(a1)) norm = flat_sub(norm, flat_mul(base, f.delta, flat_mul(base, a1, a1)));
      const std::vector<Rational> inv = flat_inverse(base, norm);
      std::vector<Rational> c0 = flat_mul(base, a0, inv);
      std::vector<Rational> c1 = flat_mul(base, a1, inv);
      for (auto& x : c1) x = -x;
      c0.insert(c0.end(), c1.begin(), c1.end());
      return c0;
    }
  }
  throw FieldError("unknown field kind");
}

// --- integer helpers -------------------------------------------------------

long gcd_long(long a, long b) { return std::gcd(a, b); }

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// m = s^2 * d with d squarefree (up to trial division by primes below 10^6).
std::pair<Integer, Integer> squarefree_decompose(Integer m) {
  Integer s = 1, d = (m < 0) ? -1 : 1;
  m = abs(m);
  for (unsigned long p = 2; p < 1000000 && Integer(p) * p <= m; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      m /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2 == 1) d *= p;
  }
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t()) != 0) {
      s *= sqrt(m);
    } else {
      d *= m;
    }
  }
  return {s, d};
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  Rational r(sqrt(Integer(q.get_num())), sqrt(Integer(q.get_den())));
  r.canonicalize();
  return r;
}

// --- field construction ----------------------------------------------------

std::shared_ptr<FieldDescriptor> make_simple(FieldKind kind, long parameter, Poly modulus) {
  auto f = std::make_shared<FieldDescriptor>();
  f->kind = kind;
  f->parameter = parameter;
  f->degree = poly_degree(modulus);
  f->modulus = std::move(modulus);
  return f;
}

void fill_root_tables(FieldDescriptor& f) {
  const long n = f.parameter;
  const int d = f.degree;
  std::vector<Rational> x(d);
  x[0] = 1;
  for (long k = 0; k < n; ++k) {
    f.root_powers.push_back(x);
    auto [key, lead] = normalize_leading(x);
    f.root_index.emplace(std::move(key), std::make_pair(static_cast<int>(k), lead));
    // multiply by zeta
    Poly shifted(d + 1);
    for (int i = 0; i < d; ++i) shifted[i + 1] = x[i];
    reduce_monic(shifted, f.modulus, d);
    x = std::move(shifted);
  }
}

Field make_sqrt_extension(const Field& base, const std::vector<Rational>& delta) {
  auto f = std::make_shared<FieldDescriptor>();
  f->kind = FieldKind::kSqrtExtension;
  f->degree = 2 * base->degree;
  f->base = base;
  f->delta = delta;
  return f;
}

void check_same(const FieldElement& a, const FieldElement& b) {
  if (!same_field(a.field(), b.field())) {
    throw FieldError("field mismatch: " + describe(a.field()) + " vs " + describe(b.field()));
  }
}

// --- multiprecision complex helper for approx_complex ---------------------

class Mp {
 public:
  explicit Mp(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Mp(const Mp& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mp& operator=(const Mp& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Mp() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

struct MpComplex {
  Mp re, im;
  explicit MpComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
};

MpComplex mp_from_rational(const Rational& q, mpfr_prec_t prec) {
  MpComplex out(prec);
  mpfr_set_q(out.re.get(), q.get_mpq_t(), MPFR_RNDN);
  return out;
}

void mp_add_mul(MpComplex& acc, const MpComplex& a, const MpComplex& b) {
  const mpfr_prec_t prec = acc.re.prec();
  Mp t1(prec), t2(prec);
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_add(acc.re.get(), acc.re.get(), t1.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_add(acc.im.get(), acc.im.get(), t1.get(), MPFR_RNDN);
}

MpComplex mp_principal_sqrt(const MpComplex& z) {
  const mpfr_prec_t prec = z.re.prec();
  MpComplex out(prec);
  Mp modulus(prec), t(prec);
  mpfr_hypot(modulus.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  // re = sqrt((|z| + x) / 2), im = sign(y) sqrt((|z| - x) / 2)
  mpfr_add(t.get(), modulus.get(), z.re.get(), MPFR_RNDN);
  mpfr_div_ui(t.get(), t.get(), 2, MPFR_RNDN);
  mpfr_sqrt(out.re.get(), t.get(), MPFR_RNDN);
  mpfr_sub(t.get(), modulus.get(), z.re.get(), MPFR_RNDN);
  mpfr_div_ui(t.get(), t.get(), 2, MPFR_RNDN);
  mpfr_sqrt(out.im.get(), t.get(), MPFR_RNDN);
  if (mpfr_sgn(z.im.get()) < 0) mpfr_neg(out.im.get(), out.im.get(), MPFR_RNDN);
  return out;
}

MpComplex mp_eval(const Field& f, const std::vector<Rational>& c, mpfr_prec_t prec) {
  switch (f->kind) {
    case FieldKind::kRational:
      return mp_from_rational(c[0], prec);
    case FieldKind::kQuadratic: {
      MpComplex out = mp_from_rational(c[0], prec);
      Mp root(prec), term(prec);
      mpfr_set_si(root.get(), std::labs(f->parameter), MPFR_RNDN);
      mpfr_sqrt(root.get(), root.get(), MPFR_RNDN);
      mpfr_mul_q(term.get(), root.get(), c[1].get_mpq_t(), MPFR_RNDN);
      if (f->parameter > 0) {
        mpfr_add(out.re.get(), out.re.get(), term.get(), MPFR_RNDN);
      } else {
        mpfr_set(out.im.get(), term.get(), MPFR_RNDN);
      }
      return out;
    }
    case FieldKind::kCyclotomic: {
      MpComplex out(prec);
      Mp angle(prec), cs(prec), sn(prec);
      for (int k = 0; k < f->degree; ++k) {
        if (sgn(c[k]) == 0) continue;
        // angle = 2 pi k / n
        mpfr_const_pi(angle.get(), MPFR_RNDN);
        mpfr_mul_si(angle.get(), angle.get(), 2L * k, MPFR_RNDN);
        mpfr_div_si(angle.get(), angle.get(), f->parameter, MPFR_RNDN);
        mpfr_sin_cos(sn.get(), cs.get(), angle.get(), MPFR_RNDN);
        mpfr_mul_q(cs.get(), cs.get(), c[k].get_mpq_t(), MPFR_RNDN);
        mpfr_mul_q(sn.get(), sn.get(), c[k].get_mpq_t(), MPFR_RNDN);
        mpfr_add(out.re.get(), out.re.get(), cs.get(), MPFR_RNDN);
        mpfr_add(out.im.get(), out.im.get(), sn.get(), MPFR_RNDN);
      }
      return out;
    }
    case FieldKind::kSqrtExtension: {
      const int m = f->base->degree;
      std::vector<Rational> c0(c.begin(), c.begin() + m), c1(c.begin() + m, c.end());
      MpComplex out = mp_eval(f->base, c0, prec);
      const MpComplex rho = mp_principal_sqrt(mp_eval(f->base, f->delta, prec));
      mp_add_mul(out, mp_eval(f->base, c1, prec), rho);
      return out;
    }
  }
  throw FieldError("unknown field kind");
}

// --- square roots ----------------------------------------------------------

// Exact root of x^2 = a for a = a0 + a1 * r with r^2 = delta, all coordinates
// in a base field; returns (x0, x1) or nullopt.
std::optional<std::pair<FieldElement, FieldElement>> sqrt_pair(const FieldElement& a0,
                                                               const FieldElement& a1,
                                                               const FieldElement& delta) {
  const FieldElement zero = FieldElement::zero(a0.field());
  if (a1.is_zero()) {
    if (auto x = sqrt_in_field(a0)) return std::make_pair(*x, zero);
    if (auto y = sqrt_in_field(a0 / delta)) return std::make_pair(zero, *y);
    return std::nullopt;
  }
  // (x^2 - delta y^2)^2 = a0^2 - delta a1^2 and 2 x y = a1.
  const auto n = sqrt_in_field(a0 * a0 - delta * a1 * a1);
  if (!n) return std::nullopt;
  const FieldElement half(a0.field(), Rational(1, 2));
  for (const FieldElement& candidate : {(a0 + *n) * half, (a0 - *n) * half}) {
    if (candidate.is_zero()) continue;
    if (auto x = sqrt_in_field(candidate)) {
      const FieldElement y = a1 / (*x + *x);
      if (*x * *x + delta * y * y == a0) return std::make_pair(*x, y);
    }
  }
  return std::nullopt;
}

std::optional<FieldElement> sqrt_cyclotomic_numeric(const FieldElement& a) {
  const FieldDescriptor& f = *a.field();
  const long n = f.parameter;
  const int d = f.degree;
  if (d > 24) return std::nullopt;
  using C = std::complex<long double>;
  const long double two_pi = 2.0L * std::acos(-1.0L);
  std::vector<long> units;
  for (long j = 1; j < n; ++j) {
    if (gcd_long(j, n) == 1) units.push_back(j);
  }
  // Embedding values of a and their principal square roots.
  std::vector<C> roots(d);
  for (int r = 0; r < d; ++r) {
    C z = 0;
    for (int i = 0; i < d; ++i) {
      const long double c = a.coeffs()[i].get_d();
      z += c * std::polar(1.0L, two_pi * static_cast<long double>((units[r] * i) % n) / n);
    }
    roots[r] = std::sqrt(z);
  }
  // Vandermonde system V c = roots, V[r][i] = zeta^(units[r] * i).
  std::vector<std::vector<C>> lu(d, std::vector<C>(d));
  for (int r = 0; r < d; ++r) {
    for (int i = 0; i < d; ++i) {
      lu[r][i] = std::polar(1.0L, two_pi * static_cast<long double>((units[r] * i) % n) / n);
    }
  }
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (int col = 0; col < d; ++col) {
    int piv = col;
    for (int r = col + 1; r < d; ++r) {
      if (std::abs(lu[r][col]) > std::abs(lu[piv][col])) piv = r;
    }
    std::swap(lu[col], lu[piv]);
    std::swap(perm[col], perm[piv]);
    for (int r = col + 1; r < d; ++r) {
      lu[r][col] /= lu[col][col];
      for (int c = col + 1; c < d; ++c) lu[r][c] -= lu[r][col] * lu[col][c];
    }
  }
  // Conjugate embeddings j, n - j share one sign choice.
  std::vector<int> pair_of(d, -1);
  std::vector<int> free_slots;
  for (int r = 0; r < d; ++r) {
    if (pair_of[r] != -1) continue;
    const long partner = n - units[r];
    for (int s = r + 1; s < d; ++s) {
      if (units[s] == partner) {
        pair_of[s] = r;
        break;
      }
    }
    pair_of[r] = r;
    free_slots.push_back(r);
  }
  // Conjugate embeddings carry conjugate roots; taking both principal roots
  // breaks on the negative real axis.
  for (int r = 0; r < d; ++r) {
    if (pair_of[r] != r) roots[r] = std::conj(roots[pair_of[r]]);
  }
  const size_t combos = size_t{1} << (free_slots.size() - 1);
  for (size_t mask = 0; mask < combos; ++mask) {
    std::vector<C> rhs(d);
    for (int r = 0; r < d; ++r) {
      const int owner = pair_of[perm[r]];
      const size_t slot =
          std::find(free_slots.begin(), free_slots.end(), owner) - free_slots.begin();
      const bool flip = slot > 0 && ((mask >> (slot - 1)) & 1U);
      rhs[r] = flip ? -roots[perm[r]] : roots[perm[r]];
    }
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < r; ++c) rhs[r] -= lu[r][c] * rhs[c];
    }
    for (int r = d - 1; r >= 0; --r) {
      for (int c = r + 1; c < d; ++c) rhs[r] -= lu[r][c] * rhs[c];
      rhs[r] /= lu[r][r];
    }
    std::vector<Rational> coeffs(d);
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      if (std::abs(rhs[i].imag()) > 1e-6L) ok = false;
      // Continued-fraction rounding with denominators up to 10^6.
      long double x = rhs[i].real();
      Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
      long double rest = x;
      for (int step = 0; step < 40; ++step) {
        const long double fl = std::floor(rest);
        const Integer q(static_cast<long>(fl));
        Integer h2 = q * h1 + h0, k2 = q * k1 + k0;
        if (k2 > 1000000) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        const long double frac = rest - fl;
        if (std::fabs(static_cast<long double>(h1.get_d()) / k1.get_d() - x) < 1e-12L) break;
        if (frac < 1e-15L) break;
        rest = 1.0L / frac;
      }
      coeffs[i] = Rational(h1, k1);
      coeffs[i].canonicalize();
    }
    if (!ok) continue;
    FieldElement candidate(a.field(), coeffs);
    if (candidate * candidate == a) return candidate;
  }
  return std::nullopt;
}

Integer root_order_bound(const FieldDescriptor& f) {
  switch (f.kind) {
    case FieldKind::kRational:
      return 2;
    case FieldKind::kQuadratic:
      return f.parameter == -1 ? 4 : (f.parameter == -3 ? 6 : 2);
    case FieldKind::kCyclotomic:
      return std::lcm(2L, f.parameter);
    case FieldKind::kSqrtExtension: {
      Integer l = 1;
      const long max_k = 2L * f.degree * f.degree;
      for (long k = 1; k <= max_k; ++k) {
        if (euler_phi(k) <= f.degree) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), k);
      }
      return l;
    }
  }
  return 2;
}

}  // namespace

// --- fields ----------------------------------------------------------------

Field rational_field() {
  static const Field q = make_simple(FieldKind::kRational, 0, Poly{Rational(0), Rational(1)});
  return q;
}

Field quadratic_field(long d) {
  if (d == 0 || d == 1) throw FieldError("quadratic field needs d != 0, 1");
  const auto [s, core] = squarefree_decompose(Integer(d));
  if (s != 1) throw FieldError("quadratic field needs a squarefree d, got " + std::to_string(d));
  return make_simple(FieldKind::kQuadratic, d, Poly{Rational(-d), Rational(0), Rational(1)});
}

long euler_phi(long n) {
  long result = n;
  for (long p : prime_factors(n)) result -= result / p;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(long n) {
  if (n < 1) throw FieldError("cyclotomic polynomial needs n >= 1");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  Poly num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    Poly div;
    for (const Integer& c : cyclotomic_polynomial(d)) div.emplace_back(c);
    num = poly_divmod(num, div).first;
  }
  std::vector<Integer> out;
  for (const Rational& c : num) out.push_back(c.get_num());
  return out;
}

Field make_cyclotomic_field(long n) {
  if (n < 1) throw FieldError("cyclotomic field needs n >= 1");
  static std::mutex mu;
  static std::map<long, Field> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Poly modulus;
  for (const Integer& c : cyclotomic_polynomial(n)) modulus.emplace_back(c);
  auto f = make_simple(FieldKind::kCyclotomic, n, std::move(modulus));
  fill_root_tables(*f);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, f).first->second;
}

bool same_field(const Field& a, const Field& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->parameter != b->parameter || a->degree != b->degree) return false;
  if (a->kind == FieldKind::kSqrtExtension) {
    return same_field(a->base, b->base) && a->delta == b->delta;
  }
  return true;
}

std::string describe(const Field& f) {
  switch (f->kind) {
    case FieldKind::kRational:
      return "Q";
    case FieldKind::kQuadratic:
      return "Q(sqrt(" + std::to_string(f->parameter) + "))";
    case FieldKind::kCyclotomic:
      return "Q(zeta" + std::to_string(f->parameter) + ")";
    case FieldKind::kSqrtExtension:
      return describe(f->base) + "(sqrt(" + FieldElement(f->base, f->delta).to_string() + "))";
  }
  return "?";
}

// --- elements --------------------------------------------------------------

FieldElement::FieldElement(Field field, const Rational& value) : field_(std::move(field)) {
  coeffs_.assign(field_->degree, Rational(0));
  coeffs_[0] = value;
}

FieldElement::FieldElement(Field field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_->degree) {
    throw FieldError("coefficient vector length " + std::to_string(coeffs_.size()) +
                     " does not match field degree " + std::to_string(field_->degree));
  }
}

FieldElement FieldElement::generator(const Field& field) {
  switch (field->kind) {
    case FieldKind::kRational:
      return one(field);
    case FieldKind::kCyclotomic:
      if (field->degree == 1) return FieldElement(field, -field->modulus[0]);
      [[fallthrough]];
    case FieldKind::kQuadratic: {
      std::vector<Rational> c(field->degree);
      c[1] = 1;
      return FieldElement(field, std::move(c));
    }
    case FieldKind::kSqrtExtension: {
      std::vector<Rational> c(field->degree);
      c[field->base->degree] = 1;
      return FieldElement(field, std::move(c));
    }
  }
  throw FieldError("unknown field kind");
}

bool FieldElement::is_zero() const { return all_zero(coeffs_); }

bool FieldElement::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw FieldError("element " + to_string() + " is not rational");
  return coeffs_[0];
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same(*this, rhs);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same(*this, rhs);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same(*this, rhs);
  if (rhs.is_rational()) {
    const Rational s = rhs.coeffs_[0];
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  if (is_rational()) {
    const Rational s = coeffs_[0];
    coeffs_ = rhs.coeffs_;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  coeffs_ = flat_mul(*field_, coeffs_, rhs.coeffs_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same(*this, rhs);
  return *this *= rhs.inverse();
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw FieldError("division by zero");
  if (is_rational()) return FieldElement(field_, Rational(1 / coeffs_[0]));
  return FieldElement(field_, flat_inverse(*field_, coeffs_));
}

FieldElement FieldElement::pow(const Integer& exponent) const {
  if (sgn(exponent) < 0) return inverse().pow(Integer(-exponent));
  FieldElement result = one(field_);
  FieldElement base = *this;
  Integer e = exponent;
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t()) != 0) result *= base;
    e >>= 1;
    if (sgn(e) > 0) base *= base;
  }
  return result;
}

FieldElement FieldElement::scaled(const Rational& s) const {
  FieldElement out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string FieldElement::to_string() const {
  auto term_symbol = [&](int i) -> std::string {
    switch (field_->kind) {
      case FieldKind::kQuadratic:
        return field_->parameter < 0 ? "sqrt(" + std::to_string(field_->parameter) + ")"
                                     : "sqrt" + std::to_string(field_->parameter);
      case FieldKind::kCyclotomic: {
        const std::string z = "zeta" + std::to_string(field_->parameter);
        return i == 1 ? z : z + "^" + std::to_string(i);
      }
      default:
        return "";
    }
  };
  if (field_->kind == FieldKind::kSqrtExtension) {
    const int m = field_->base->degree;
    FieldElement c0(field_->base, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + m));
    FieldElement c1(field_->base, std::vector<Rational>(coeffs_.begin() + m, coeffs_.end()));
    if (c1.is_zero()) return c0.to_string();
    const std::string tail = "(" + c1.to_string() + ")*rho";
    return c0.is_zero() ? tail : "(" + c0.to_string() + ") + " + tail;
  }
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << term_symbol(i);
    } else {
      os << mag.get_str() << "*" << term_symbol(i);
    }
    first = false;
  }
  return first ? "0" : os.str();
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd:
      return a + b;
    case ArithOp::kSub:
      return a - b;
    case ArithOp::kMul:
      return a * b;
    case ArithOp::kDiv:
      return a / b;
  }
  throw FieldError("unknown operation");
}

// --- Galois action and conjugation ----------------------------------------

FieldElement galois_action(const FieldElement& a, long j) {
  const FieldDescriptor& f = *a.field();
  if (f.kind != FieldKind::kCyclotomic) throw FieldError("Galois action needs a cyclotomic field");
  const long n = f.parameter;
  j = ((j % n) + n) % n;
  if (gcd_long(j, n) != 1 && n > 1) throw FieldError("sigma_j needs gcd(j, n) = 1");
  std::vector<Rational> out(f.degree);
  for (int i = 0; i < f.degree; ++i) {
    if (sgn(a.coeffs()[i]) == 0) continue;
    const auto& zp = f.root_powers[(static_cast<long>(i) * j) % n];
    for (int k = 0; k < f.degree; ++k) {
      if (sgn(zp[k]) != 0) out[k] += a.coeffs()[i] * zp[k];
    }
  }
  return FieldElement(a.field(), std::move(out));
}

std::vector<FieldElement> galois_conjugates(const FieldElement& a) {
  const FieldDescriptor& f = *a.field();
  if (f.kind != FieldKind::kCyclotomic) throw FieldError("Galois conjugates need a cyclotomic field");
  std::vector<FieldElement> out;
  const long n = f.parameter;
  for (long j = 1; j <= std::max(1L, n - 1); ++j) {
    if (gcd_long(j, n) == 1) out.push_back(galois_action(a, j));
  }
  return out;
}

FieldElement complex_conjugate(const FieldElement& a) {
  const FieldDescriptor& f = *a.field();
  switch (f.kind) {
    case FieldKind::kRational:
      return a;
    case FieldKind::kQuadratic:
      if (f.parameter > 0) return a;
      return FieldElement(a.field(), std::vector<Rational>{a.coeffs()[0], -a.coeffs()[1]});
    case FieldKind::kCyclotomic:
      return f.parameter <= 2 ? a : galois_action(a, f.parameter - 1);
    case FieldKind::kSqrtExtension:
      throw UnsupportedField("complex conjugation is not supported on square-root towers");
  }
  throw FieldError("unknown field kind");
}

bool is_on_unit_circle(const FieldElement& a) {
  if (a.field()->kind == FieldKind::kSqrtExtension) {
    throw UnsupportedField("unit-circle test is not supported on square-root towers");
  }
  return (a * complex_conjugate(a)).is_one();
}

std::optional<long> root_of_unity_order(const FieldElement& a) {
  if (a.is_zero()) return std::nullopt;
  if (a.is_rational()) {
    if (a.is_one()) return 1;
    if (a.coeffs()[0] == -1) return 2;
    return std::nullopt;
  }
  const Integer bound = root_order_bound(*a.field());
  if (!a.pow(bound).is_one()) return std::nullopt;
  long order = bound.get_si();
  for (long p : prime_factors(order)) {
    while (order % p == 0 && a.pow(order / p).is_one()) order /= p;
  }
  return order;
}

// --- square roots and adjunction ------------------------------------------

std::optional<FieldElement> sqrt_in_field(const FieldElement& a) {
  const Field& field = a.field();
  if (a.is_zero()) return a;
  if (a.is_rational()) {
    if (auto r = rational_sqrt(a.coeffs()[0])) return FieldElement(field, *r);
  }
  switch (field->kind) {
    case FieldKind::kRational:
      return std::nullopt;
    case FieldKind::kQuadratic: {
      const Field q = rational_field();
      auto root = sqrt_pair(FieldElement(q, a.coeffs()[0]), FieldElement(q, a.coeffs()[1]),
                            FieldElement(q, Rational(field->parameter)));
      if (!root) return std::nullopt;
      return FieldElement(field, std::vector<Rational>{root->first.coeffs()[0], root->second.coeffs()[0]});
    }
    case FieldKind::kCyclotomic: {
      const FieldDescriptor& f = *field;
      if (f.degree == 1) return std::nullopt;
      // a = s * zeta^k: a square iff s = +-r^2 and the matching unit is a square.
      auto [key, lead] = normalize_leading(a.coeffs());
      if (auto hit = f.root_index.find(key); hit != f.root_index.end()) {
        const Rational s = lead / hit->second.second;
        const long n = f.parameter;
        const long k = hit->second.first;
        for (int sign : {1, -1}) {
          auto r = rational_sqrt(s * sign);
          if (!r) continue;
          // sign * zeta^k must be a square of a root of unity in the field.
          long exponent = k;
          long order = n;
          if (sign < 0) {
            if (n % 2 == 0) {
              exponent = (k + n / 2) % n;
            } else {
              // -zeta_n^k = zeta_{2n}^{2k + n}; squares of mu_{2n} are mu_n.
              continue;
            }
          }
          std::optional<long> half;
          if (order % 2 == 1) {
            half = (exponent * ((order + 1) / 2)) % order;
          } else if (exponent % 2 == 0) {
            half = exponent / 2;
          }
          if (!half) continue;
          FieldElement root(field, f.root_powers[*half]);
          root = root.scaled(*r);
          if (root * root == a) return root;
        }
      }
      return sqrt_cyclotomic_numeric(a);
    }
    case FieldKind::kSqrtExtension: {
      const int m = field->base->degree;
      FieldElement a0(field->base, std::vector<Rational>(a.coeffs().begin(), a.coeffs().begin() + m));
      FieldElement a1(field->base, std::vector<Rational>(a.coeffs().begin() + m, a.coeffs().end()));
      auto root = sqrt_pair(a0, a1, FieldElement(field->base, field->delta));
      if (!root) return std::nullopt;
      std::vector<Rational> c = root->first.coeffs();
      c.insert(c.end(), root->second.coeffs().begin(), root->second.coeffs().end());
      return FieldElement(field, std::move(c));
    }
  }
  return std::nullopt;
}

FieldElement SqrtAdjunction::embed(const FieldElement& x) const {
  if (!same_field(x.field(), base)) throw FieldError("embed: element is not in the base field");
  if (same_field(base, field)) return x;
  if (field->kind == FieldKind::kQuadratic) return FieldElement(field, x.rational_value());
  std::vector<Rational> c = x.coeffs();
  c.resize(field->degree);
  return FieldElement(field, std::move(c));
}

SqrtAdjunction adjoin_sqrt(const Field& field, const FieldElement& delta) {
  if (!same_field(field, delta.field())) throw FieldError("adjoin_sqrt: delta is in another field");
  if (delta.is_zero()) throw FieldError("adjoin_sqrt: delta must be nonzero");
  if (auto root = sqrt_in_field(delta)) return SqrtAdjunction{field, field, *root};
  if (field->kind == FieldKind::kRational) {
    // delta = num/den = (num*den) / den^2 = s^2 * core / den^2.
    const Rational q = delta.rational_value();
    const auto [s, core] = squarefree_decompose(Integer(q.get_num() * q.get_den()));
    Field ext = quadratic_field(core.get_si());
    Rational scale(s, q.get_den());
    scale.canonicalize();
    return SqrtAdjunction{field, ext, FieldElement(ext, std::vector<Rational>{Rational(0), scale})};
  }
  Field ext = make_sqrt_extension(field, delta.coeffs());
  return SqrtAdjunction{field, ext, FieldElement::generator(ext)};
}

Field sqrt_extension_field(const Field& base, const FieldElement& delta) {
  if (!same_field(base, delta.field())) throw FieldError("sqrt_extension_field: delta is in another field");
  if (delta.is_zero() || sqrt_in_field(delta)) {
    throw FieldError("sqrt_extension_field: delta must be a non-square");
  }
  return make_sqrt_extension(base, delta.coeffs());
}

int sign_at_real_embedding(const FieldElement& a) {
  const FieldDescriptor& f = *a.field();
  if (f.kind == FieldKind::kRational || a.is_rational()) {
    if (f.kind == FieldKind::kRational || f.kind == FieldKind::kQuadratic) return sgn(a.coeffs()[0]);
  }
  if (f.kind != FieldKind::kQuadratic || f.parameter < 0) {
    throw UnsupportedField("real sign needs Q or a real quadratic field, got " + describe(a.field()));
  }
  const Rational& p = a.coeffs()[0];
  const Rational& q = a.coeffs()[1];
  if (sgn(q) == 0) return sgn(p);
  // sqrt(d) in [s / 2^bits, (s + 1) / 2^bits] with s = isqrt(d * 4^bits).
  for (unsigned long bits = 64;; bits *= 2) {
    Integer scaled = Integer(f.parameter) << (2 * bits);
    Integer s = sqrt(scaled);
    Rational lo(s), hi(s + 1);
    lo /= Rational(Integer(1) << bits);
    hi /= Rational(Integer(1) << bits);
    Rational v1 = p + q * lo, v2 = p + q * hi;
    if (v1 > v2) std::swap(v1, v2);
    if (sgn(v1) > 0) return 1;
    if (sgn(v2) < 0) return -1;
  }
}

ComplexApprox approx_complex(const FieldElement& a, int bits) {
  const mpfr_prec_t prec = std::max(bits, 1) + 64;
  const MpComplex z = mp_eval(a.field(), a.coeffs(), prec);
  return {mpfr_get_d(z.re.get(), MPFR_RNDN), mpfr_get_d(z.im.get(), MPFR_RNDN)};
}

bool is_real_embeddable(const Field& field) {
  switch (field->kind) {
    case FieldKind::kRational:
      return true;
    case FieldKind::kQuadratic:
      return field->parameter > 0;
    case FieldKind::kCyclotomic:
      return field->parameter <= 2;
    case FieldKind::kSqrtExtension: {
      if (!is_real_embeddable(field->base)) return false;
      const FieldElement delta(field->base, field->delta);
      try {
        return sign_at_real_embedding(delta) > 0;
      } catch (const UnsupportedField&) {
        return false;
      }
    }
  }
  return false;
}

// --- Extended --------------------------------------------------------------

const FieldElement& Extended::value() const {
  if (!value_) throw FieldError("value() called on infinity");
  return *value_;
}

bool operator==(const Extended& a, const Extended& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return a.value() == b.value();
}

std::string Extended::to_string() const { return value_ ? value_->to_string() : "inf"; }

}  // namespace arrangeops
