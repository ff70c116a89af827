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
#include "arrangeops/figure.hpp"
#include "arrangeops/io.hpp"
#include "test_util.hpp"

namespace arrangeops {
namespace {

const Field kQ = rational_field();

std::vector<Field> sample_fields() {
  const Field q5 = quadratic_field(5);
  return {kQ, q5, quadratic_field(-3), make_cyclotomic_field(7), make_cyclotomic_field(12),
          sqrt_extension_field(q5, FieldElement(q5, 3L)),
          sqrt_extension_field(make_cyclotomic_field(5), FieldElement(make_cyclotomic_field(5), 2L))};
}

TEST(Io, FieldAndElementRoundTrip) {
  std::mt19937 rng(6);
  for (const Field& f : sample_fields()) {
    const Field g = field_from_json(Json::parse(to_json(f).dump()));
    EXPECT_TRUE(same_field(f, g)) << describe(f);
    for (int k = 0; k < 5; ++k) {
      const FieldElement x = random_element(f, rng);
      EXPECT_EQ(element_from_json(Json::parse(to_json(x).dump())), x);
    }
  }
}

TEST(Io, ArrangementRoundTrip) {
  const std::vector<Arrangement> all = {ceva(4), complete_quadrilateral(), hesse_union(), a15_120(),
                                        c0_of(FieldElement(kQ, Rational(-7, 3))), limit_objects().joins_p9};
  for (const Arrangement& a : all) {
    const Arrangement b = arrangement_from_json(Json::parse(to_json(a).dump()));
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
  }
  const PointSet p = limit_objects().p9;
  EXPECT_TRUE(set_equal(point_set_from_json(to_json(p)), p));
}

TEST(Io, NonBasisRoundTrip) {
  for (const NonBasisSpec& s : {nb1(), nb2()}) {
    const NonBasisSpec t = non_basis_spec_from_json(to_json(s));
    EXPECT_EQ(t.triples, s.triples);
    EXPECT_EQ(t.quintuples, s.quintuples);
  }
}

TEST(Io, BareCoefficientLines) {
  const Json j = Json::parse(R"({"field": {"kind": "rational"}, "lines": [[["1"], ["0"], ["-1/2"]], [["0"], ["1"], ["1"]]]})");
  const Arrangement a = arrangement_from_json(j);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], make_line(kQ, 2, 0, -1));
  EXPECT_THROW(arrangement_from_json(Json::parse(R"({"lines": []})")), ParseError);
}

TEST(Io, ParseField) {
  EXPECT_TRUE(same_field(parse_field("Q"), kQ));
  EXPECT_TRUE(same_field(parse_field("zeta7"), make_cyclotomic_field(7)));
  EXPECT_TRUE(same_field(parse_field("cyclotomic:9"), make_cyclotomic_field(9)));
  EXPECT_TRUE(same_field(parse_field("sqrt5"), quadratic_field(5)));
  EXPECT_TRUE(same_field(parse_field("sqrt(-3)"), quadratic_field(-3)));
  EXPECT_THROW(parse_field("banana"), ParseError);
}

TEST(Io, ParseExpressions) {
  EXPECT_EQ(parse_expression("5/2"), FieldElement(kQ, Rational(5, 2)));
  EXPECT_EQ(parse_expression("(1 + 2) * 3 - 4 / 8"), FieldElement(kQ, Rational(17, 2)));
  EXPECT_EQ(parse_expression("2^-2"), FieldElement(kQ, Rational(1, 4)));
  const FieldElement z = parse_expression("zeta5");
  EXPECT_EQ(root_of_unity_order(z), 5);
  const FieldElement i = parse_expression("i");
  EXPECT_EQ(i * i, FieldElement(i.field(), -1L));
  const FieldElement s = parse_expression("2 + sqrt5");
  EXPECT_TRUE(same_field(s.field(), quadratic_field(5)));
  EXPECT_EQ((s - FieldElement(s.field(), 2L)) * (s - FieldElement(s.field(), 2L)), FieldElement(s.field(), 5L));
  EXPECT_EQ(sign_at_real_embedding(s - FieldElement(s.field(), 4L)), 1);
  // A common field for mixed atoms.
  const auto xs = parse_expressions({"zeta3", "i"});
  EXPECT_TRUE(same_field(xs[0].field(), xs[1].field()));
  EXPECT_EQ(root_of_unity_order(xs[0] * xs[1]), 12);
  EXPECT_EQ(parse_expression("sqrt(-3)", make_cyclotomic_field(3)) * parse_expression("sqrt(-3)", make_cyclotomic_field(3)),
            FieldElement(make_cyclotomic_field(3), -3L));
  for (const char* bad : {"", "1 +", "(2", "1/0", "zeta", "sqrt(zeta5)", "x"}) {
    EXPECT_THROW(parse_expression(bad), std::invalid_argument) << bad;
  }
}

TEST(Io, ParseSpecs) {
  EXPECT_TRUE(set_equal(parse_arrangement_spec("ceva:5"), ceva(5)));
  EXPECT_TRUE(set_equal(parse_arrangement_spec("c0:t=2"), c0_of(FieldElement(kQ, 2L))));
  EXPECT_EQ(parse_arrangement_spec("c0:t=inf").size(), 5u);
  EXPECT_TRUE(set_equal(parse_arrangement_spec("cabc:1,4,1"),
                        c_abc(FieldElement(kQ, 1L), FieldElement(kQ, 4L), FieldElement(kQ, 1L))));
  EXPECT_TRUE(set_equal(parse_arrangement_spec("lambda:c0:t=3"), lambda_op(c0_of(FieldElement(kQ, 3L)), 2, 3)));
  EXPECT_EQ(parse_arrangement_spec("dual15:c0:t=2").size(), 15u);
  EXPECT_EQ(profile(parse_arrangement_spec("orbit:hesse")), make_profile({{2, 12}, {4, 9}}));
  EXPECT_TRUE(same_field(parse_arrangement_spec("c0:t=3", quadratic_field(5)).field(), quadratic_field(5)));
  EXPECT_THROW(parse_arrangement_spec("ceva:x"), ParseError);
  EXPECT_THROW(parse_arrangement_spec("nope"), ParseError);
  EXPECT_THROW(parse_arrangement_spec("missing.json"), std::exception);
}

TEST(Io, OrbitReportJson) {
  const Json j = to_json(iterate(hesse_seed(), 5));
  EXPECT_EQ(j.at("period"), 2);
  EXPECT_EQ(j.at("terms").size(), 2u);
  EXPECT_EQ(to_json(moduli_invariant(hesse_seed())).at("class"), "rigid");
}

TEST(Io, FigureCounts) {
  FigureOptions svg;
  const Figure f = render(c0_of(FieldElement(kQ, 2L)), svg);
  EXPECT_EQ(f.lines, 6);
  EXPECT_EQ(f.points, 15);
  EXPECT_NE(f.text.find("<svg"), std::string::npos);
  FigureOptions tikz;
  tikz.format = FigureFormat::kTikz;
  tikz.marks = {3, 5};
  const Figure t = render(dual_15(c0_of(FieldElement(kQ, 2L))), tikz);
  EXPECT_EQ(t.lines, 15);
  EXPECT_EQ(t.points, 12);
  EXPECT_NE(t.text.find("\\draw"), std::string::npos);
  // Real quadratic fields render; cyclotomic ones do not.
  EXPECT_EQ(render(a15_120(), svg).lines, 15);
  EXPECT_THROW(render(hesse_union(), svg), ExportError);
}

}  // namespace
}  // namespace arrangeops
