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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "arrangeops/field.hpp"
#include "test_util.hpp"

namespace arrangeops {
namespace {

using IntPoly = std::vector<Integer>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Exact division by a monic polynomial.
IntPoly poly_div(IntPoly a, const IntPoly& b) {
  IntPoly q(a.size() - b.size() + 1, Integer(0));
  for (size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1];
    for (size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  for (const auto& c : a) EXPECT_EQ(c, 0);
  return q;
}

int mobius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  return n > 1 ? -mu : mu;
}

// Phi_n = prod_{d | n} (x^d - 1)^mu(n/d).
IntPoly mobius_cyclotomic(long n) {
  IntPoly num{Integer(1)}, den{Integer(1)};
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    IntPoly f(d + 1, Integer(0));
    f[0] = -1;
    f[d] = 1;
    const int mu = mobius(n / d);
    if (mu == 1) num = poly_mul(num, f);
    if (mu == -1) den = poly_mul(den, f);
  }
  return poly_div(num, den);
}

TEST(Cyclotomic, PolynomialMatchesMobiusProduct) {
  for (long n = 1; n <= 60; ++n) {
    EXPECT_EQ(cyclotomic_polynomial(n), mobius_cyclotomic(n)) << "n = " << n;
  }
}

TEST(Cyclotomic, EulerPhiMatchesCount) {
  for (long n = 1; n <= 100; ++n) {
    long count = 0;
    for (long k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    EXPECT_EQ(euler_phi(n), count);
  }
}

// Independent complex evaluation of the power basis.
std::complex<long double> embed_numeric(const FieldElement& x) {
  const Field& f = x.field();
  std::complex<long double> g(1, 0);
  if (f->kind == FieldKind::kCyclotomic) {
    g = std::polar(1.0L, 2 * std::numbers::pi_v<long double> / f->parameter);
  } else if (f->kind == FieldKind::kQuadratic) {
    g = std::sqrt(std::complex<long double>(static_cast<long double>(f->parameter), 0));
  }
  std::complex<long double> acc(0, 0), p(1, 0);
  for (const auto& c : x.coeffs()) {
    acc += p * static_cast<long double>(c.get_d());
    p *= g;
  }
  return acc;
}

class FieldAxioms : public ::testing::TestWithParam<int> {};

std::vector<Field> sample_fields() {
  return {rational_field(), quadratic_field(5), quadratic_field(-3), quadratic_field(-1),
          make_cyclotomic_field(5), make_cyclotomic_field(7), make_cyclotomic_field(12),
          make_cyclotomic_field(9)};
}

TEST_P(FieldAxioms, RingAndFieldLaws) {
  const Field f = sample_fields()[GetParam()];
  std::mt19937 rng(1234 + GetParam());
  for (int trial = 0; trial < 25; ++trial) {
    const FieldElement a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, FieldElement::zero(f));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), FieldElement::one(f));
      EXPECT_EQ((b / a) * a, b);
      EXPECT_EQ(a.pow(-3) * a.pow(3), FieldElement::one(f));
    }
  }
}

TEST_P(FieldAxioms, MultiplicationAgreesWithComplexEmbedding) {
  const Field f = sample_fields()[GetParam()];
  std::mt19937 rng(99 + GetParam());
  for (int trial = 0; trial < 20; ++trial) {
    const FieldElement a = random_element(f, rng), b = random_element(f, rng);
    const auto expected = embed_numeric(a) * embed_numeric(b);
    const auto got = embed_numeric(a * b);
    EXPECT_NEAR(static_cast<double>(std::abs(got - expected)), 0.0, 1e-9 * (1 + std::abs(expected)));
    const ComplexApprox z = approx_complex(a * b);
    EXPECT_NEAR(z.re, static_cast<double>(expected.real()), 1e-9 * (1 + std::abs(expected)));
    EXPECT_NEAR(z.im, static_cast<double>(expected.imag()), 1e-9 * (1 + std::abs(expected)));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms, ::testing::Range(0, 8));

TEST(Field, TowerArithmetic) {
  const Field k = quadratic_field(5);
  const SqrtAdjunction ext = adjoin_sqrt(k, FieldElement(k, 3L) + FieldElement::generator(k));
  EXPECT_EQ(ext.field->kind, FieldKind::kSqrtExtension);
  EXPECT_EQ(ext.root * ext.root, ext.embed(FieldElement(k, 3L) + FieldElement::generator(k)));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const FieldElement a = random_element(ext.field, rng), b = random_element(ext.field, rng);
    EXPECT_EQ(a * (a + b), a * a + a * b);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), FieldElement::one(ext.field));
  }
}

TEST(Field, ElementsOfDifferentFieldsDoNotMix) {
  const FieldElement a(quadratic_field(5), 1L), b(make_cyclotomic_field(5), 1L);
  EXPECT_THROW(a + b, FieldError);
  EXPECT_THROW(FieldElement(rational_field(), 0L).inverse(), FieldError);
}

TEST(Field, GaloisActionIsARingMorphism) {
  const Field f = make_cyclotomic_field(7);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const FieldElement a = random_element(f, rng), b = random_element(f, rng);
    for (long j : {1L, 2L, 3L, 6L}) {
      EXPECT_EQ(galois_action(a * b, j), galois_action(a, j) * galois_action(b, j));
      EXPECT_EQ(galois_action(a + b, j), galois_action(a, j) + galois_action(b, j));
    }
    EXPECT_EQ(galois_action(a, 6), complex_conjugate(a));
  }
  EXPECT_EQ(galois_conjugates(FieldElement::generator(f)).size(), 6u);
}

TEST(Field, RootOfUnityOrders) {
  const Field f = make_cyclotomic_field(12);
  const FieldElement z = FieldElement::generator(f);
  for (long k = 0; k < 12; ++k) {
    EXPECT_EQ(root_of_unity_order(z.pow(k)), 12 / std::gcd(k, 12L)) << k;
    EXPECT_TRUE(is_on_unit_circle(z.pow(k)));
  }
  EXPECT_FALSE(root_of_unity_order(FieldElement(f, 2L)).has_value());
  EXPECT_FALSE(root_of_unity_order(z + FieldElement::one(f) + FieldElement::one(f)).has_value());
  // -zeta_5 has order 10 inside Q(zeta_5).
  EXPECT_EQ(root_of_unity_order(-FieldElement::generator(make_cyclotomic_field(5))), 10);
}

TEST(Field, SquareRootsOfSquares) {
  for (const Field& f : sample_fields()) {
    std::mt19937 rng(5 + f->degree);
    for (int trial = 0; trial < 8; ++trial) {
      const FieldElement a = random_element(f, rng);
      const auto r = sqrt_in_field(a * a);
      ASSERT_TRUE(r.has_value()) << describe(f) << " " << a.to_string();
      EXPECT_EQ(*r * *r, a * a);
    }
  }
  EXPECT_FALSE(sqrt_in_field(FieldElement(rational_field(), 2L)).has_value());
  EXPECT_FALSE(sqrt_in_field(FieldElement(quadratic_field(5), 2L)).has_value());
  // sqrt 5 lives in Q(zeta_5); sqrt(-3) in Q(zeta_3).
  EXPECT_TRUE(sqrt_in_field(FieldElement(make_cyclotomic_field(5), 5L)).has_value());
  EXPECT_TRUE(sqrt_in_field(FieldElement(make_cyclotomic_field(3), -3L)).has_value());
}

TEST(Field, AdjoinSqrtOverRationals) {
  const SqrtAdjunction e = adjoin_sqrt(rational_field(), FieldElement(rational_field(), Rational(-8, 3)));
  EXPECT_EQ(e.field->kind, FieldKind::kQuadratic);
  EXPECT_EQ(e.field->parameter, -6);
  EXPECT_EQ(e.root * e.root, FieldElement(e.field, Rational(-8, 3)));
  const SqrtAdjunction same = adjoin_sqrt(rational_field(), FieldElement(rational_field(), Rational(9, 4)));
  EXPECT_EQ(same.field->kind, FieldKind::kRational);
  EXPECT_EQ(same.root * same.root, FieldElement(rational_field(), Rational(9, 4)));
}

TEST(Field, RealSignMatchesNumericValue) {
  const Field f = quadratic_field(5);
  const FieldElement s = FieldElement::generator(f);
  EXPECT_EQ(sign_at_real_embedding(s - FieldElement(f, 2L)), 1);
  EXPECT_EQ(sign_at_real_embedding(FieldElement(f, 2L) - s), -1);
  EXPECT_EQ(sign_at_real_embedding(FieldElement::zero(f)), 0);
  // Continued-fraction convergents of sqrt 5 sit very close to it.
  const FieldElement close = s - FieldElement(f, Rational(51841, 23184));
  EXPECT_EQ(sign_at_real_embedding(close), std::sqrt(5.0L) > 51841.0L / 23184 ? 1 : -1);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const FieldElement a = random_element(f, rng);
    const double v = approx_complex(a).re;
    if (std::fabs(v) > 1e-9) EXPECT_EQ(sign_at_real_embedding(a), v > 0 ? 1 : -1);
  }
}

TEST(Field, RealEmbeddability) {
  EXPECT_TRUE(is_real_embeddable(rational_field()));
  EXPECT_TRUE(is_real_embeddable(quadratic_field(5)));
  EXPECT_FALSE(is_real_embeddable(quadratic_field(-1)));
  EXPECT_FALSE(is_real_embeddable(make_cyclotomic_field(3)));
}

TEST(Field, ExtendedLine) {
  const Field q = rational_field();
  EXPECT_TRUE(Extended::infinity(q) == Extended::infinity(q));
  EXPECT_FALSE(Extended(FieldElement(q, 1L)) == Extended::infinity(q));
  EXPECT_THROW(Extended::infinity(q).value(), FieldError);
  EXPECT_EQ(Extended::infinity(q).to_string(), "inf");
}

TEST(Field, ToStringUsesGeneratorSymbols) {
  const Field f = make_cyclotomic_field(7);
  const FieldElement z = FieldElement::generator(f);
  EXPECT_EQ((z * z + FieldElement(f, Rational(1, 2))).to_string(), "1/2 + zeta7^2");
  EXPECT_EQ(FieldElement::generator(quadratic_field(5)).to_string(), "sqrt5");
}

}  // namespace
}  // namespace arrangeops
