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

// Named arrangements and a recognizer for Ceva arrangements
// (x^n - y^n)(x^n - z^n)(y^n - z^n) = 0 up to projectivity.

#ifndef ARRANGEOPS_CATALOG_HPP
#define ARRANGEOPS_CATALOG_HPP

#include <optional>
#include <string>
#include <tuple>

#include "arrangeops/arrangement.hpp"

namespace arrangeops {

// The 3n lines x = w y, x = w z, y = w z over Q(zeta_n), w^n = 1. Lines are
// listed pencil by pencil, w = zeta^0, zeta^1, ... within each pencil.
Arrangement ceva(long n);
// The six lines through (1:0:0), (0:1:0), (0:0:1), (1:1:1), over Q.
Arrangement complete_quadrilateral();
// hesse_seed() together with its Lambda-image.
Arrangement hesse_union();
// dual_15(a) u dual_15(Lambda(a)).
Arrangement g26_union(const Arrangement& a);
// dual_15(c0_of(2 + sqrt5)) over Q(sqrt5).
Arrangement a15_120();

struct LimitObjects {
  PointSet p9;
  Arrangement dual_p9;
  Arrangement joins_p9;
};
// The 15 double points of c0_of(t) at t = 0, their dual lines and L_2.
LimitObjects limit_objects();

enum class Relation { kEqual, kSubset, kNone };
const char* to_string(Relation r);

struct RecognitionResult {
  // "ceva(n)", or "quadrilateral" for n = 2.
  std::optional<std::string> name;
  long n = 0;
  Relation relation = Relation::kNone;
  // Sends the input to lines of the standard ceva(n) listed above.
  std::optional<ProjMap> witness;
};

// Finds three points partitioning the lines into pencils, moves them to the
// coordinate vertices, rescales and checks that every pencil is made of
// roots of unity. Reports the smallest Ceva(n) containing the input.
RecognitionResult recognize_ceva(const Arrangement& a);
// Same test against a prescribed n.
RecognitionResult contained_in_ceva(const Arrangement& a, long n);

}  // namespace arrangeops

#endif  // ARRANGEOPS_CATALOG_HPP
