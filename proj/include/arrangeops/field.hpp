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

// Exact arithmetic over Q and the number fields the arrangements live in:
// quadratic fields Q(sqrt d), cyclotomic fields Q(zeta_n), and towers of
// square-root extensions on top of those.
//
// Every element is stored in the power basis of its field's generator as a
// flat vector of rationals. For a square-root extension K(rho), rho^2 = delta,
// the flat layout is [c0 | c1] where c0, c1 are the flat coordinates of the
// two base-field coefficients of 1 and rho.

#ifndef ARRANGEOPS_FIELD_HPP
#define ARRANGEOPS_FIELD_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arrangeops {

using Rational = mpq_class;
using Integer = mpz_class;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by operations that are deliberately not defined on a field kind,
// e.g. the unit-circle test on square-root towers.
class UnsupportedField : public FieldError {
 public:
  using FieldError::FieldError;
};

enum class FieldKind { kRational, kQuadratic, kCyclotomic, kSqrtExtension };

struct FieldDescriptor;
using Field = std::shared_ptr<const FieldDescriptor>;

struct FieldDescriptor {
  FieldKind kind = FieldKind::kRational;
  // d for quadratic(d), n for cyclotomic(n); unused otherwise.
  long parameter = 0;
  // Absolute degree over Q.
  int degree = 1;
  // Monic defining polynomial of the generator over Q, lowest degree first.
  // Empty for square-root extensions.
  std::vector<Rational> modulus;
  // Square-root extensions: the base field and delta in base coordinates.
  Field base;
  std::vector<Rational> delta;

  // Cyclotomic only: power-basis coordinates of zeta^k for k in [0, n), and
  // a lookup from a scaled coordinate vector to (k, scale) so that scalar
  // multiples of roots of unity can be inverted without a gcd.
  std::vector<std::vector<Rational>> root_powers;
  std::map<std::vector<Rational>, std::pair<int, Rational>> root_index;

  int base_degree() const { return base ? base->degree : 1; }
};

Field rational_field();
// d must be squarefree and different from 0 and 1.
Field quadratic_field(long d);
// The n-th cyclotomic field; the generator is a primitive n-th root of unity.
Field make_cyclotomic_field(long n);

bool same_field(const Field& a, const Field& b);
std::string describe(const Field& field);

// Phi_n with integer coefficients, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(long n);
long euler_phi(long n);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field field, const Rational& value);
  FieldElement(Field field, long value) : FieldElement(std::move(field), Rational(value)) {}
  // Flat power-basis coordinates; the length must equal the field degree.
  FieldElement(Field field, std::vector<Rational> coeffs);

  static FieldElement zero(const Field& field) { return FieldElement(field, 0L); }
  static FieldElement one(const Field& field) { return FieldElement(field, 1L); }
  // sqrt(d), zeta_n, or rho for the three non-trivial kinds; 1 for Q.
  static FieldElement generator(const Field& field);

  const Field& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when the element lies in the prime field Q.
  bool is_rational() const;
  Rational rational_value() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  FieldElement operator-() const;

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const;
  FieldElement pow(const Integer& exponent) const;
  FieldElement pow(long exponent) const { return pow(Integer(exponent)); }

  // Multiplication by a rational scalar; much cheaper than a field product.
  FieldElement scaled(const Rational& s) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  // Total order on the flat coefficient vectors; elements of one field only.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  Field field_;
  std::vector<Rational> coeffs_;
};

// Binary operation selected at runtime, as the CLI expression evaluator needs.
enum class ArithOp { kAdd, kSub, kMul, kDiv };
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

// [sigma_j(a) : gcd(j, n) = 1] in increasing j, where sigma_j sends
// zeta to zeta^j. Requires a cyclotomic field.
std::vector<FieldElement> galois_conjugates(const FieldElement& a);
FieldElement galois_action(const FieldElement& a, long j);

// Complex conjugation under the designated embedding. Identity on Q and on
// real quadratic fields.
FieldElement complex_conjugate(const FieldElement& a);
bool is_on_unit_circle(const FieldElement& a);

// Smallest k >= 1 with a^k = 1, or nullopt when a is not a root of unity.
std::optional<long> root_of_unity_order(const FieldElement& a);

// Exact square root inside the element's own field when one is certified.
std::optional<FieldElement> sqrt_in_field(const FieldElement& a);

struct SqrtAdjunction {
  Field base;
  Field field;
  // root * root == delta, in `field`.
  FieldElement root;
  FieldElement embed(const FieldElement& x) const;
};

// Adjoins a square root of delta, staying in the same field when delta is
// already a certified square there.
SqrtAdjunction adjoin_sqrt(const Field& field, const FieldElement& delta);
// The tower base(rho), rho^2 = delta, for a delta that is not a square in base.
Field sqrt_extension_field(const Field& base, const FieldElement& delta);

// Exact sign under the real embedding sqrt(d) > 0. Rational and real
// quadratic fields only.
int sign_at_real_embedding(const FieldElement& a);

struct ComplexApprox {
  double re = 0.0;
  double im = 0.0;
};
// Floating image under zeta_n -> exp(2 pi i / n), sqrt(d) -> principal root.
// Evaluated at bits + 64 bits of working precision before rounding.
ComplexApprox approx_complex(const FieldElement& a, int bits = 64);
bool is_real_embeddable(const Field& field);

// A point of P^1 over a field: a finite element or infinity.
class Extended {
 public:
  explicit Extended(FieldElement value) : field_(value.field()), value_(std::move(value)) {}
  static Extended infinity(Field field) { return Extended(std::move(field)); }

  bool is_infinite() const { return !value_.has_value(); }
  const FieldElement& value() const;
  const Field& field() const { return field_; }

  friend bool operator==(const Extended& a, const Extended& b);
  std::string to_string() const;

 private:
  explicit Extended(Field field) : field_(std::move(field)) {}
  Field field_;
  std::optional<FieldElement> value_;
};

}  // namespace arrangeops

#endif  // ARRANGEOPS_FIELD_HPP
