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

// Unassuming arrangements: six lines with 15 double points whose 15-line
// dual arrangement has t2=27, t3=6, t5=6 and whose dual points are not on a
// conic. Constructors for the one-parameter family and the Hesse seed,
// the 15-line dual, matroid non-basis checks and the moduli invariant.

#ifndef ARRANGEOPS_UNASSUMING_HPP
#define ARRANGEOPS_UNASSUMING_HPP

#include <array>
#include <optional>
#include <vector>

#include "arrangeops/arrangement.hpp"

namespace arrangeops {

// Lines with normals the columns of
//   1 0 0 1 t+1 1-t
//   0 1 0 1 1-t t+1
//   0 0 1 1  2   2
// At t = 0 and t = infinity two columns coincide and 5 lines remain.
Arrangement c0_of(const Extended& t);
Arrangement c0_of(const FieldElement& t);

// Normals (0,a,1), (0,-a,1), (b,0,1), (-b,0,1), (c,1,0), (-c,1,0).
Arrangement c_abc(const FieldElement& a, const FieldElement& b, const FieldElement& c);

// The seed over Q(zeta3) whose orbit union is the Hesse configuration.
Arrangement hesse_seed();

bool is_unassuming(const Arrangement& a);

// L_2 of the dual points of six lines; throws GeometryError unless exactly
// 15 lines come out.
Arrangement dual_15(const Arrangement& a);

// The 15 double points of c0_of(t), written in closed form.
PointSet double_points_closed_form(const FieldElement& t);

// The three 4-points of a u Lambda(a).
std::array<ProjPoint, 3> base_points(const Arrangement& a);

// Non-basis data over 1-based line labels {1..15}.
struct NonBasisSpec {
  std::vector<std::array<int, 3>> triples;
  std::vector<std::array<int, 5>> quintuples;

  // All listed triples plus every 3-subset of every quintuple, each sorted.
  std::vector<std::array<int, 3>> all_nonbases() const;
  void validate() const;
};

// Six triple points and six 5-points of the dual of the one-parameter family.
NonBasisSpec nb1();
// Same quintuples with the triple points of the second (rigid) component.
NonBasisSpec nb2();

// labels[i] is the index of the line carrying label i + 1. An empty labels
// vector means the arrangement order itself.
bool check_nonbases(const Arrangement& a, const NonBasisSpec& spec,
                    const std::vector<int>& labels = {});
std::optional<std::vector<int>> find_labeling(const Arrangement& a, const NonBasisSpec& spec);

enum class ModuliClass { kFamily, kRigid, kDegenerate };
const char* to_string(ModuliClass k);

struct ModuliPoint {
  // Set for the family class only.
  std::optional<Extended> value;
  ModuliClass klass = ModuliClass::kDegenerate;
};

// A normalization of six lines onto the pattern of c0_of(t): `map` sends
// lines frame[0..3] to x=0, y=0, z=0, x+y+z=0 and lines frame[4], frame[5]
// to the last two columns for parameter t.
struct FrameMatch {
  std::array<int, 6> order;
  ProjMap map;
  FieldElement t;
};
std::vector<FrameMatch> frame_matches(const Arrangement& a);

ModuliPoint moduli_invariant(const Arrangement& a);

}  // namespace arrangeops

#endif  // ARRANGEOPS_UNASSUMING_HPP
