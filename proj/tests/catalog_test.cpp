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

TEST(Catalog, CevaProfiles) {
  for (long n = 2; n <= 8; ++n) {
    const Arrangement c = ceva(n);
    EXPECT_EQ(c.size(), static_cast<size_t>(3 * n));
    const SingularityProfile p = profile(c);
    // For n = 3 the three pencil centers are triple points too.
    EXPECT_EQ(p.at(3), n == 3 ? 12 : n * n) << n;
    EXPECT_TRUE(pair_count_identity(c, p));
    if (n >= 4) EXPECT_EQ(p, make_profile({{3, n * n}, {static_cast<int>(n), 3}})) << n;
  }
  EXPECT_EQ(profile(ceva(1)), make_profile({{3, 1}}));
  EXPECT_EQ(profile(ceva(3)), make_profile({{3, 12}}));
  EXPECT_EQ(profile(ceva(2)), make_profile({{2, 3}, {3, 4}}));
  EXPECT_THROW(ceva(0), std::invalid_argument);
}

TEST(Catalog, RecognizesCeva) {
  for (long n = 1; n <= 12; ++n) {
    const RecognitionResult r = recognize_ceva(ceva(n));
    EXPECT_EQ(r.relation, Relation::kEqual) << n;
    EXPECT_EQ(r.n, n);
  }
  const RecognitionResult quad = recognize_ceva(complete_quadrilateral());
  EXPECT_EQ(quad.relation, Relation::kEqual);
  EXPECT_EQ(quad.n, 2);
  EXPECT_EQ(recognize_ceva(c0_of(FieldElement(kQ, 2L))).relation, Relation::kNone);
}

TEST(Catalog, RecognitionIsProjectivelyInvariant) {
  std::mt19937 rng(12);
  const Field f = make_cyclotomic_field(5);
  for (int trial = 0; trial < 3; ++trial) {
    const ProjMap g = random_projectivity(f, rng);
    const RecognitionResult r = recognize_ceva(transform(g, ceva(5)));
    EXPECT_EQ(r.relation, Relation::kEqual);
    EXPECT_EQ(r.n, 5);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(set_equal(transform(*r.witness, transform(g, ceva(5))), ceva(5)));
  }
  // Dropping lines keeps it inside.
  const RecognitionResult s = recognize_ceva(subarrangement(ceva(6), {0, 2, 5, 7, 8, 13, 17}));
  EXPECT_EQ(s.relation, Relation::kSubset);
  EXPECT_EQ(contained_in_ceva(ceva(3), 6).relation, Relation::kSubset);
}

TEST(Catalog, HesseConfiguration) {
  const Arrangement seed = hesse_seed();
  EXPECT_TRUE(is_unassuming(seed));
  const OrbitReport r = iterate(seed, 10);
  ASSERT_TRUE(r.period.has_value());
  EXPECT_EQ(*r.period, 2);
  const Arrangement h = hesse_union();
  EXPECT_EQ(profile(h), make_profile({{2, 12}, {4, 9}}));
  // Its dual is projectively Ceva(3).
  EXPECT_EQ(recognize_ceva(dual_points(points_with_multiplicity(h, 4, Mode::kExactly))).relation,
            Relation::kEqual);
}

TEST(Catalog, DualArrangementsAreSwapped) {
  const Arrangement seed = hesse_seed();
  const Arrangement d0 = dual_15(seed);
  const Arrangement d1 = dual_15(lambda_op(seed, 2, 3));
  EXPECT_TRUE(set_equal(lambda_op(d0, 3, 2), d1));
  EXPECT_TRUE(set_equal(lambda_op(d1, 3, 2), d0));
  // Along the family only the first direction holds in general.
  const Arrangement c = c0_of(FieldElement(kQ, 2L));
  EXPECT_TRUE(set_equal(lambda_op(dual_15(c), 3, 2), dual_15(lambda_op(c, 2, 3))));
}

TEST(Catalog, G26Union) {
  const Arrangement g = g26_union(hesse_seed());
  EXPECT_EQ(g.size(), 21u);
  EXPECT_EQ(profile(g), make_profile({{2, 36}, {4, 9}, {5, 12}}));
}

TEST(Catalog, A15) {
  const Arrangement a = a15_120();
  EXPECT_EQ(a.size(), 15u);
  EXPECT_EQ(profile(a), make_profile({{2, 15}, {3, 10}, {5, 6}}));
}

TEST(Catalog, LimitObjects) {
  const LimitObjects lo = limit_objects();
  EXPECT_EQ(lo.p9.size(), 9u);
  EXPECT_EQ(profile(lo.dual_p9), make_profile({{2, 6}, {3, 4}, {4, 3}}));
  EXPECT_EQ(lo.joins_p9.size(), 13u);
  // Triple-or-more points of the dual, joined through pairs, give it back.
  const Arrangement back = lines_through(points_with_multiplicity(lo.dual_p9, 3, Mode::kAtLeast), 2, Mode::kAtLeast);
  EXPECT_TRUE(set_equal(back, lo.dual_p9));
}

TEST(Catalog, SingleOrbitSitsInCeva) {
  const FieldElement z = FieldElement::generator(make_cyclotomic_field(5));
  const OrbitReport r = iterate(c0_of(z), 20);
  ASSERT_TRUE(r.period.has_value());
  EXPECT_EQ(*r.period, 4);
  const RecognitionResult c = contained_in_ceva(r.union_arrangement, 10);
  EXPECT_NE(c.relation, Relation::kNone);
}

}  // namespace
}  // namespace arrangeops
