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

// JSON encodings, the expression and arrangement-spec parsers used on the
// command line, and the run manifest.
//
// Element:      {"field": {"kind": "cyclotomic", "n": 7}, "coeffs": ["1/2", "0", ...]}
// Arrangement:  {"field": ..., "lines": [[e, e, e], ...]}
// Point set:    {"field": ..., "points": [[e, e, e], ...]}
// Inside an arrangement or point set, an entry e may be a full element
// encoding or a bare coefficient array; serialization writes full encodings.

#ifndef ARRANGEOPS_IO_HPP
#define ARRANGEOPS_IO_HPP

#include <json.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrangeops/dynamics.hpp"

namespace arrangeops {

using Json = nlohmann::json;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Field& field);
Field field_from_json(const Json& j);

Json to_json(const FieldElement& x);
FieldElement element_from_json(const Json& j);

Json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);
Json to_json(const PointSet& p);
PointSet point_set_from_json(const Json& j);

// {"triples": [[1, 5, 10], ...], "quintuples": [[1, 2, 8, 9, 12], ...]}.
Json to_json(const NonBasisSpec& spec);
NonBasisSpec non_basis_spec_from_json(const Json& j);

Json to_json(const OrbitReport& report);
Json to_json(const ModuliPoint& m);

// "Q", "zeta7", "cyclotomic:7", "sqrt5", "sqrt(-3)", "quadratic:-3".
Field parse_field(const std::string& text);

// Field expressions: integers, p/q, zetaN, i (zeta4), j (zeta3), sqrtN,
// sqrt(expr) of a rational expr, + - * / ^ and parentheses. Without a field,
// the smallest cyclotomic or quadratic field holding every atom is used.
// sqrt picks the root with positive real part, or positive imaginary part
// for negative radicands.
FieldElement parse_expression(const std::string& text, const std::optional<Field>& field = {});
// Several expressions evaluated in one common field.
std::vector<FieldElement> parse_expressions(const std::vector<std::string>& texts,
                                            const std::optional<Field>& field = {});

// Named arrangements:
//   ceva:N  quadrilateral  hesse  hesse-union  g26  a15  p9-dual  p9-joins
//   c0:t=EXPR  cabc:A,B,C  galois:EXPR  assembly:N
//   lambda:SPEC  dual15:SPEC  orbit:SPEC  FILE.json
// The field argument applies to the expressions inside c0/cabc/galois.
Arrangement parse_arrangement_spec(const std::string& spec, const std::optional<Field>& field = {});

Json read_json_file(const std::string& path);
// Writes text to path, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

struct RunManifest {
  std::string command;
  Json inputs = Json::object();
  std::vector<std::string> outputs;
  std::map<std::string, double> timings;

  // Adds tool and library versions.
  Json to_json() const;
};

}  // namespace arrangeops

#endif  // ARRANGEOPS_IO_HPP
