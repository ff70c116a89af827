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

// SVG and TikZ drawings of real arrangements. Coordinates are computed
// exactly in an affine chart and rounded once at the declared precision.

#ifndef ARRANGEOPS_FIGURE_HPP
#define ARRANGEOPS_FIGURE_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "arrangeops/arrangement.hpp"

namespace arrangeops {

class ExportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FigureFormat { kSvg, kTikz };

struct FigureOptions {
  FigureFormat format = FigureFormat::kSvg;
  // Half-width of the square window around the origin; fitted to the
  // singular points when unset.
  std::optional<double> window;
  int precision_bits = 64;
  // Multiplicities of the points to mark; empty marks every singular point.
  std::set<int> marks;
};

struct Figure {
  std::string text;
  int lines = 0;
  int points = 0;
};

// Throws ExportError when the field has no real embedding.
Figure render(const Arrangement& a, const FigureOptions& options);

}  // namespace arrangeops

#endif  // ARRANGEOPS_FIGURE_HPP
