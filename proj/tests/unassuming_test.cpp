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

#include <set>

#include "arrangeops/catalog.hpp"
#include "arrangeops/dynamics.hpp"
#include "test_util.hpp"

namespace arrangeops {
namespace {

const Field kQ = rational_field();

FieldElement q(long p, long d = 1) { return FieldElement(kQ, Rational(p, d)); }

// t avoiding 0, +-1 and the roots of (t^2 - 4t - 1)(t^2 + 4t - 1), none of
// which are rational.
FieldElement random_parameter(std::mt19937& rng) {
  while (true) {
    const Rational t = random_nonzero_rational(rng);
    if (t != 1 && t != -1) return FieldElement(kQ, t);
  }
}

TEST(Unassuming, SeedAndDual) {
  const Arrangement c = c0_of(q(2));
  EXPECT_EQ(c.size(), 6u);
  EXPECT_EQ(profile(c), make_profile({{2, 15}}));
  const Arrangement d = dual_15(c);
  EXPECT_EQ(profile(d), make_profile({{2, 27}, {3, 6}, {5, 6}}));
  EXPECT_TRUE(is_unassuming(c));
  // The six 5-points of the dual are the dual points of the six lines.
  EXPECT_TRUE(set_equal(points_with_multiplicity(d, 5, Mode::kExactly), dual_arrangement(c)));
}

TEST(Unassuming, DegenerateParameters) {
  EXPECT_EQ(c0_of(q(0)).size(), 5u);
  EXPECT_EQ(c0_of(Extended::infinity(kQ)).size(), 5u);
  EXPECT_FALSE(is_unassuming(c0_of(q(1))));
  EXPECT_FALSE(is_unassuming(c0_of(q(-1))));
  const Field k = quadratic_field(5);
  EXPECT_FALSE(is_unassuming(c0_of(FieldElement(k, 2L) + FieldElement::generator(k))));
}

TEST(Unassuming, RejectsNonExamples) {
  EXPECT_FALSE(is_unassuming(complete_quadrilateral()));
  EXPECT_FALSE(is_unassuming(ceva(2)));
  EXPECT_FALSE(is_unassuming(c0_of(q(0))));
}

TEST(Unassuming, DualPointsOnAConicAreRejected) {
  // Six tangents to x^2 + y^2 = z^2: their dual points lie on the dual conic.
  Arrangement a(kQ);
  for (const Rational s : {Rational(0), Rational(1, 2), Rational(2), Rational(-1, 3), Rational(3), Rational(-4)}) {
    a.add(make_line(kQ, 1 - s * s, 2 * s, -(1 + s * s)));
  }
  ASSERT_EQ(a.size(), 6u);
  EXPECT_FALSE(is_unassuming(a));
}

TEST(Unassuming, ClosedFormDoublePoints) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const FieldElement t = random_parameter(rng);
    EXPECT_TRUE(set_equal(double_points_closed_form(t), points_with_multiplicity(c0_of(t), 2, Mode::kExactly)))
        << t.to_string();
  }
}

TEST(Unassuming, CabcSignSymmetry) {
  const FieldElement a = q(3), b = q(5, 2), c = q(-7);
  EXPECT_TRUE(set_equal(c_abc(a, b, c), c_abc(-a, b, c)));
  EXPECT_TRUE(set_equal(c_abc(a, b, c), c_abc(a, -b, -c)));
}

TEST(Unassuming, NonBasisSpecs) {
  for (const NonBasisSpec& s : {nb1(), nb2()}) {
    EXPECT_NO_THROW(s.validate());
    EXPECT_EQ(s.quintuples.size(), 6u);
  }
  NonBasisSpec bad = nb1();
  bad.triples.push_back({1, 1, 2});
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

// Every dependent triple of normals is listed and every listed triple is
// dependent, checked by determinants over all C(15, 3) triples.
void expect_labeling_realizes(const Arrangement& d, const NonBasisSpec& spec, const std::vector<int>& labels) {
  std::set<std::array<int, 3>> listed;
  for (auto t : spec.all_nonbases()) listed.insert(t);
  for (int x = 1; x <= 15; ++x) {
    for (int y = x + 1; y <= 15; ++y) {
      for (int z = y + 1; z <= 15; ++z) {
        const bool dep = det3(d[labels[x - 1]].coords(), d[labels[y - 1]].coords(), d[labels[z - 1]].coords()).is_zero();
        EXPECT_EQ(dep, listed.count({x, y, z}) > 0) << x << " " << y << " " << z;
      }
    }
  }
}

TEST(Unassuming, FamilyDualRealizesFirstMatroid) {
  const Arrangement d = dual_15(c0_of(q(2)));
  const auto labels = find_labeling(d, nb1());
  ASSERT_TRUE(labels.has_value());
  EXPECT_TRUE(check_nonbases(d, nb1(), *labels));
  expect_labeling_realizes(d, nb1(), *labels);
  EXPECT_FALSE(find_labeling(d, nb2()).has_value());
}

TEST(Unassuming, HesseDualRealizesSecondMatroid) {
  const Arrangement d = dual_15(hesse_seed());
  const auto labels = find_labeling(d, nb2());
  ASSERT_TRUE(labels.has_value());
  expect_labeling_realizes(d, nb2(), *labels);
  EXPECT_FALSE(find_labeling(d, nb1()).has_value());
}

TEST(Unassuming, ModuliValue) {
  const ModuliPoint m = moduli_invariant(c0_of(q(2)));
  EXPECT_EQ(m.klass, ModuliClass::kFamily);
  ASSERT_TRUE(m.value.has_value());
  EXPECT_EQ(m.value->value(), q(17, 8));
  EXPECT_EQ(moduli_invariant(hesse_seed()).klass, ModuliClass::kRigid);
}

TEST(Unassuming, ModuliIsProjectiveAndLabelInvariant) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 4; ++trial) {
    const FieldElement t = random_parameter(rng);
    const Arrangement c = c0_of(t);
    const ProjMap g = random_projectivity(kQ, rng);
    std::vector<int> perm = {0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    const ModuliPoint m = moduli_invariant(subarrangement(transform(g, c), perm));
    ASSERT_TRUE(m.value.has_value());
    EXPECT_EQ(*m.value, upsilon(Extended(t)));
  }
}

TEST(Unassuming, BasePointsAreFixedAlongTheOrbit) {
  Arrangement c = c0_of(q(3));
  const auto first = base_points(c);
  const std::set<ProjPoint> expected(first.begin(), first.end());
  for (int k = 0; k < 3; ++k) {
    c = lambda_op(c, 2, 3);
    const auto b = base_points(c);
    EXPECT_EQ(std::set<ProjPoint>(b.begin(), b.end()), expected) << k;
  }
}

}  // namespace
}  // namespace arrangeops
