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

#include "arrangeops/catalog.hpp"
#include "arrangeops/dynamics.hpp"
#include "test_util.hpp"

namespace arrangeops {
namespace {

const Field kQ = rational_field();

FieldElement q(long p, long d = 1) { return FieldElement(kQ, Rational(p, d)); }

TEST(Dynamics, NuSequence) {
  const std::vector<long> expected = {0, 1, 1, 3, 5, 11, 21, 43, 85, 171};
  for (size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(nu(k), expected[k]) << k;
  // nu_{k+1} = 2 nu_k + (-1)^k.
  for (long k = 0; k < 40; ++k) EXPECT_EQ(nu(k + 1), 2 * nu(k) + (k % 2 ? -1 : 1));
}

TEST(Dynamics, ClosedFormMatchesParameterRecursion) {
  const FieldElement t = q(3, 2);
  AbcParams p{FieldElement::one(kQ), FieldElement::one(kQ), t};
  for (long k = 0; k <= 8; ++k) {
    const AbcParams c = abc_closed_form(t, k);
    EXPECT_EQ(p.a, c.a) << k;
    EXPECT_EQ(p.b, c.b) << k;
    EXPECT_EQ(p.c, c.c) << k;
    p = lambda_abc(p);
  }
}

TEST(Dynamics, OperatorMatchesParameterRecursion) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 4; ++trial) {
    const AbcParams p{FieldElement(kQ, random_nonzero_rational(rng)), FieldElement(kQ, random_nonzero_rational(rng)),
                      FieldElement(kQ, random_nonzero_rational(rng))};
    const Arrangement img = lambda_op(c_abc(p), 2, 3);
    if (!is_unassuming(c_abc(p))) continue;
    EXPECT_TRUE(set_equal(img, c_abc(lambda_abc(p))));
  }
}

TEST(Dynamics, SemiConjugacy) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Extended z(FieldElement(kQ, random_nonzero_rational(rng)));
    EXPECT_EQ(f_lambda(upsilon(z)), upsilon(chi(z)));
  }
  const Field f = make_cyclotomic_field(7);
  const Extended z(FieldElement::generator(f) + FieldElement(f, 2L));
  EXPECT_EQ(f_lambda(upsilon(z)), upsilon(chi(z)));
  EXPECT_TRUE(chi(Extended(q(0))).is_infinite());
  EXPECT_EQ(chi(Extended::infinity(kQ)), Extended(q(0)));
}

TEST(Dynamics, SpecialParameterValues) {
  const Field i4 = make_cyclotomic_field(4);
  EXPECT_EQ(upsilon(Extended(FieldElement::generator(i4))), Extended(FieldElement(i4, -1L)));
  const Field k = quadratic_field(5);
  const Extended t(FieldElement(k, 2L) + FieldElement::generator(k));
  EXPECT_EQ(upsilon(t), Extended(FieldElement(k, 9L)));
  EXPECT_EQ(f_lambda(Extended(q(9))), Extended(q(161)));
  EXPECT_EQ(f_lambda(Extended(q(161))), Extended(q(51841)));
}

TEST(Dynamics, OrderOfMinusTwo) {
  for (long n = 3; n < 60; n += 2) {
    long k = 1, x = ((-2 % n) + n) % n;
    while (x != 1) {
      x = x * (n - 2) % n;
      ++k;
    }
    EXPECT_EQ(predicted_period_chi(n), k) << n;
  }
  EXPECT_THROW(predicted_period_chi(4), std::invalid_argument);
}

TEST(Dynamics, ChiCycleOnRootsOfUnity) {
  const Field f = make_cyclotomic_field(7);
  const ParameterCycle c = find_cycle(Extended(-FieldElement::generator(f)), chi, 50);
  EXPECT_EQ(c.preperiod, 0);
  EXPECT_EQ(c.period, 6);
  const ParameterCycle d = find_cycle(Extended(FieldElement::generator(f)), chi, 50);
  EXPECT_EQ(d.preperiod, 1);
  EXPECT_EQ(d.period, 6);
}

TEST(Dynamics, IterateDetectsPeriodAndTermination) {
  const Field f3 = make_cyclotomic_field(3);
  const OrbitReport r = iterate(c0_of(FieldElement::generator(f3)), 20);
  ASSERT_TRUE(r.period.has_value());
  EXPECT_EQ(*r.period, 3);
  EXPECT_EQ(*r.preperiod, 0);
  const Field f4 = make_cyclotomic_field(4);
  const OrbitReport s = iterate(c0_of(FieldElement::generator(f4)), 20);
  EXPECT_TRUE(s.terminated);
  EXPECT_EQ(s.terms.size(), 3u);
  EXPECT_EQ(profile(s.terms[1]), profile(complete_quadrilateral()));
  EXPECT_THROW(iterate(c0_of(q(2)), 0), std::invalid_argument);
}

TEST(Dynamics, UnionProfileFormula) {
  const OrbitReport r = iterate(c_abc(q(1), q(1), q(2)), 3);
  for (long k = 1; k <= 3; ++k) {
    Arrangement u = r.terms[0];
    for (long j = 1; j <= k; ++j) u = union_of(u, r.terms[j]);
    EXPECT_EQ(profile(u), union_profile_formula(k)) << k;
  }
}

TEST(Dynamics, Preimages) {
  const Arrangement target = c_abc(q(1), q(4), q(1));
  const auto ants = preimages(target);
  ASSERT_EQ(ants.size(), 2u);
  for (const auto& a : ants) EXPECT_TRUE(set_equal(lambda_op(a.arrangement, 2, 3), embed(target, a.extension)));
  const Antecedent r = real_preimage(target);
  EXPECT_TRUE(set_equal(r.arrangement, c_abc(q(2), q(2), q(2))));
  EXPECT_THROW(preimages(c0_of(q(2))), GeometryError);
}

TEST(Dynamics, ReadAbc) {
  const auto p = read_abc(c_abc(q(-3), q(5), q(7, 2)));
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(set_equal(c_abc(*p), c_abc(q(-3), q(5), q(7, 2))));
  EXPECT_FALSE(read_abc(complete_quadrilateral()).has_value());
}

TEST(Dynamics, CrossRatioRelation) {
  const CrossRatioSets s = cross_ratio_sets(q(2), 1);
  const std::vector<FieldElement> expected = {q(9, 25), q(25, 9)};
  EXPECT_EQ(s.a, expected);
  EXPECT_EQ(s.b, expected);
  EXPECT_EQ(s.c, expected);
  for (long k = 1; k <= 4; ++k) EXPECT_TRUE(cross_ratio_check(q(2), k)) << k;
  for (long k = 1; k <= 3; ++k) EXPECT_TRUE(cross_ratio_check(q(-5, 3), k)) << k;
}

TEST(Dynamics, ParameterClasses) {
  EXPECT_EQ(classify_parameter(q(0)), ParameterClass::kDegenerate);
  EXPECT_EQ(classify_parameter(q(1)), ParameterClass::kDegenerate);
  EXPECT_EQ(classify_parameter(q(2)), ParameterClass::kOffCircle);
  EXPECT_EQ(classify_parameter(FieldElement::generator(make_cyclotomic_field(5))), ParameterClass::kCircle);
  const Field k = quadratic_field(5);
  EXPECT_EQ(classify_parameter(FieldElement::generator(k) - FieldElement(k, 2L)), ParameterClass::kDegenerate);
  EXPECT_EQ(classify_parameter(Extended::infinity(kQ)), ParameterClass::kDegenerate);
}

TEST(Dynamics, OffCircleOrbitsDoNotRepeat) {
  // |t| != 1: the exponents nu_k grow, so no term repeats.
  const OrbitReport r = iterate(c0_of(q(3)), 6);
  EXPECT_FALSE(r.period.has_value());
  EXPECT_FALSE(r.terminated);
  for (bool u : r.unassuming) EXPECT_TRUE(u);
}

TEST(Dynamics, TwoPowerAssembly) {
  const Arrangement a = two_power_assembly(1);
  EXPECT_EQ(profile(a), make_profile({{3, 16}, {4, 3}}));
  const RecognitionResult r = recognize_ceva(two_power_assembly(2));
  EXPECT_EQ(r.relation, Relation::kEqual);
  EXPECT_EQ(r.n, 8);
  // Primitive roots alone give only part of Ceva(8).
  const RecognitionResult p = recognize_ceva(root_orbit_union(8, true));
  EXPECT_EQ(p.relation, Relation::kSubset);
  EXPECT_EQ(p.n, 8);
}

TEST(Dynamics, GaloisOrbitUnion) {
  const RecognitionResult r = recognize_ceva(galois_orbit_union(FieldElement::generator(make_cyclotomic_field(5))));
  EXPECT_EQ(r.relation, Relation::kEqual);
  EXPECT_EQ(r.n, 10);
  EXPECT_THROW(galois_orbit_union(q(2)), FieldError);
}

}  // namespace
}  // namespace arrangeops
