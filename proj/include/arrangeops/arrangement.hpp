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

// Line arrangements and the incidence operators between point sets and line
// sets: singular points, P_{k} (points on exactly/at least k lines), L_{k}
// (lines through exactly/at least k points), their composites and duality.

#ifndef ARRANGEOPS_ARRANGEMENT_HPP
#define ARRANGEOPS_ARRANGEMENT_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "arrangeops/projective.hpp"

namespace arrangeops {

// Ordered list of distinct canonical elements. Duplicates are dropped on
// construction, keeping the first occurrence, so order carries a labeling.
template <class T>
class Configuration {
 public:
  explicit Configuration(Field field, std::vector<T> items = {}) : field_(std::move(field)) {
    for (auto& item : items) add(std::move(item));
  }

  // Returns false when the element was already present.
  bool add(T item) {
    if (!same_field(item.field(), field_)) throw FieldError("configuration field mismatch");
    if (contains(item)) return false;
    items_.push_back(std::move(item));
    return true;
  }
  bool contains(const T& item) const {
    for (const auto& x : items_) {
      if (x == item) return true;
    }
    return false;
  }

  const Field& field() const { return field_; }
  const std::vector<T>& items() const { return items_; }
  size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const T& operator[](size_t i) const { return items_[i]; }

  std::vector<T> sorted() const {
    std::vector<T> s = items_;
    std::sort(s.begin(), s.end());
    return s;
  }

 private:
  Field field_;
  std::vector<T> items_;
};

using Arrangement = Configuration<ProjLine>;
using PointSet = Configuration<ProjPoint>;

// Counts t_k of points lying on exactly k lines, k >= 2.
struct SingularityProfile {
  std::map<int, long> counts;

  long at(int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
  long total_points() const;
  // sum_k t_k * C(k, 2); equals C(N, 2) for N lines of the projective plane.
  long pair_count() const;
  // "t2=27 t3=6 t5=6"; "empty" for no points.
  std::string to_string() const;
  // Parses the to_string format.
  static SingularityProfile parse(const std::string& text);

  friend bool operator==(const SingularityProfile&, const SingularityProfile&) = default;
};

SingularityProfile make_profile(std::initializer_list<std::pair<const int, long>> counts);

struct SingularPoint {
  ProjPoint point;
  // Indices of the arrangement lines through the point, ascending.
  std::vector<int> lines;
  int multiplicity() const { return static_cast<int>(lines.size()); }
};

// All points on at least two lines, sorted by canonical coordinates.
std::vector<SingularPoint> singular_points(const Arrangement& a);
SingularityProfile profile(const Arrangement& a);
// True when sum_k t_k C(k,2) = C(|a|, 2).
bool pair_count_identity(const Arrangement& a, const SingularityProfile& p);

enum class Mode { kExactly, kAtLeast };

// P_{{k}} (exactly) or P_k (at least).
PointSet points_with_multiplicity(const Arrangement& a, int k, Mode mode);
// L_{{k}} (exactly) or L_k (at least). Candidate lines are joins of pairs
// and incidences are counted against the input points only.
Arrangement lines_through(const PointSet& pts, int k, Mode mode);

// L_{{n}} o P_{{m}}.
Arrangement lambda_op(const Arrangement& a, int m, int n);
// P_{{n}} o L_{{m}}.
PointSet psi_op(const PointSet& pts, int m, int n);

PointSet dual_arrangement(const Arrangement& a);
Arrangement dual_points(const PointSet& pts);

Arrangement union_of(const Arrangement& a, const Arrangement& b);
bool set_equal(const Arrangement& a, const Arrangement& b);
bool set_equal(const PointSet& a, const PointSet& b);
// Every line of a is a line of b.
bool is_subset(const Arrangement& a, const Arrangement& b);

Arrangement transform(const ProjMap& g, const Arrangement& a);
PointSet transform(const ProjMap& g, const PointSet& pts);

// Sub-arrangement made of the listed line indices, in that order.
Arrangement subarrangement(const Arrangement& a, const std::vector<int>& indices);

using ArrangementPredicate = std::function<bool(const Arrangement&)>;

struct SubsetSearchOptions {
  // Skip subsets containing three concurrent lines. The predicate is still
  // evaluated on every surviving subset.
  bool nodal_only = false;
  // Worker threads; results are merged in lexicographic order regardless.
  int threads = 1;
};

// Lexicographically ordered index sets of size r whose sub-arrangement
// satisfies the predicate.
std::vector<std::vector<int>> subsets_with_property(const Arrangement& a, int r,
                                                    const ArrangementPredicate& predicate,
                                                    const SubsetSearchOptions& options = {});

std::string to_string(const Arrangement& a);

}  // namespace arrangeops

#endif  // ARRANGEOPS_ARRANGEMENT_HPP
