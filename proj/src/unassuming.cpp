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

#include "arrangeops/unassuming.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace arrangeops {

namespace {

ProjLine line_of(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  return ProjLine(a, b, c);
}

FieldElement upsilon_value(const FieldElement& t) {
  const FieldElement t2 = t * t;
  return (t2 + t2.inverse()).scaled(Rational(1, 2));
}

const SingularityProfile& nodal_six() {
  static const SingularityProfile p = make_profile({{2, 15}});
  return p;
}

const SingularityProfile& dual_profile() {
  static const SingularityProfile p = make_profile({{2, 27}, {3, 6}, {5, 6}});
  return p;
}

}  // namespace

Arrangement c0_of(const Extended& t) {
  const Field& f = t.field();
  const FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
  const FieldElement two(f, 2L);
  std::vector<ProjLine> lines = {line_of(one, zero, zero), line_of(zero, one, zero),
                                 line_of(zero, zero, one), line_of(one, one, one)};
  if (t.is_infinite()) {
    // Columns 5 and 6 both tend to (1 : -1 : 0).
    lines.push_back(line_of(one, -one, zero));
    lines.push_back(line_of(-one, one, zero));
  } else {
    const FieldElement& v = t.value();
    lines.push_back(line_of(v + one, one - v, two));
    lines.push_back(line_of(one - v, v + one, two));
  }
  return Arrangement(f, std::move(lines));
}

Arrangement c0_of(const FieldElement& t) { return c0_of(Extended(t)); }

Arrangement c_abc(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw GeometryError("c_abc needs nonzero a, b, c");
  const Field& f = a.field();
  const FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
  return Arrangement(f, {line_of(zero, a, one), line_of(zero, -a, one), line_of(b, zero, one),
                         line_of(-b, zero, one), line_of(c, one, zero), line_of(-c, one, zero)});
}

Arrangement hesse_seed() {
  const Field f = make_cyclotomic_field(3);
  const FieldElement j = FieldElement::generator(f);
  const FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
  const FieldElement two(f, 2L);
  const Rational third(1, 3);
  return Arrangement(f, {line_of(one, zero, zero), line_of(zero, one, zero), line_of(zero, zero, one),
                         line_of(one, one, one), line_of(-j, j + one, one),
                         line_of((one - j).scaled(third), (j + two).scaled(third), one)});
}

bool is_unassuming(const Arrangement& a) {
  if (a.size() != 6) return false;
  if (profile(a) != nodal_six()) return false;
  const PointSet dual = dual_arrangement(a);
  if (profile(lines_through(dual, 2, Mode::kAtLeast)) != dual_profile()) return false;
  std::array<ProjPoint, 6> pts = {dual[0], dual[1], dual[2], dual[3], dual[4], dual[5]};
  return !on_common_conic(pts);
}

Arrangement dual_15(const Arrangement& a) {
  if (a.size() != 6) throw GeometryError("dual_15 needs six lines");
  Arrangement out = lines_through(dual_arrangement(a), 2, Mode::kAtLeast);
  if (out.size() != 15) {
    throw GeometryError("degenerate input: dual arrangement has " + std::to_string(out.size()) +
                        " lines, expected 15");
  }
  return out;
}

PointSet double_points_closed_form(const FieldElement& t) {
  const Field& f = t.field();
  auto c = [&](long v) { return FieldElement(f, v); };
  const FieldElement tm = t - c(1), tp = t + c(1), t2 = t.scaled(2);
  const std::vector<Triple> cols = {
      {c(1), c(0), c(0)},   {c(0), c(1), c(0)},   {c(0), c(0), c(1)},  {c(-1), c(-1), c(1)},
      {c(-1), c(0), c(1)},  {c(-1), c(1), c(0)},  {c(0), c(-1), c(1)}, {c(0), c(-2), tp},
      {c(-2), c(0), tp},    {c(2), c(0), tm},     {tm, tp, c(0)},      {c(0), c(2), tm},
      {tp, tm, -t2},        {tm, tp, -t2},        {tp, tm, c(0)},
  };
  PointSet out(f);
  for (const auto& col : cols) out.add(ProjPoint(col));
  return out;
}

std::array<ProjPoint, 3> base_points(const Arrangement& a) {
  const Arrangement u = union_of(a, lambda_op(a, 2, 3));
  const PointSet four = points_with_multiplicity(u, 4, Mode::kExactly);
  if (four.size() != 3) {
    throw GeometryError("expected three base points, found " + std::to_string(four.size()));
  }
  return {four[0], four[1], four[2]};
}

// --- matroid non-bases --------------------------------------------------------

std::vector<std::array<int, 3>> NonBasisSpec::all_nonbases() const {
  std::set<std::array<int, 3>> out;
  auto add = [&](int x, int y, int z) {
    std::array<int, 3> t = {x, y, z};
    std::sort(t.begin(), t.end());
    out.insert(t);
  };
  for (const auto& t : triples) add(t[0], t[1], t[2]);
  for (const auto& q : quintuples) {
    for (int x = 0; x < 5; ++x) {
      for (int y = x + 1; y < 5; ++y) {
        for (int z = y + 1; z < 5; ++z) add(q[x], q[y], q[z]);
      }
    }
  }
  return {out.begin(), out.end()};
}

void NonBasisSpec::validate() const {
  auto check_set = [](const auto& s) {
    std::set<int> seen;
    for (int v : s) {
      if (v < 1 || v > 15) throw std::invalid_argument("non-basis label out of range 1..15");
      if (!seen.insert(v).second) throw std::invalid_argument("repeated label in a non-basis set");
    }
  };
  for (const auto& t : triples) check_set(t);
  for (const auto& q : quintuples) check_set(q);
  std::set<std::array<int, 3>> ts;
  for (auto t : triples) {
    std::sort(t.begin(), t.end());
    if (!ts.insert(t).second) throw std::invalid_argument("duplicate triple in non-basis spec");
  }
  std::set<std::array<int, 5>> qs;
  for (auto q : quintuples) {
    std::sort(q.begin(), q.end());
    if (!qs.insert(q).second) throw std::invalid_argument("duplicate quintuple in non-basis spec");
  }
}

namespace {

const std::vector<std::array<int, 5>> kQuintuples = {
    {1, 2, 8, 9, 12}, {1, 6, 7, 13, 15}, {2, 3, 5, 6, 14},
    {3, 4, 7, 10, 12}, {4, 5, 9, 11, 15}, {8, 10, 11, 13, 14}};

// concurrent[(x * 15 + y) * 15 + z] for line indices x, y, z.
std::vector<char> concurrency_table(const Arrangement& a) {
  const size_t n = a.size();
  std::vector<char> table(n * n * n, 0);
  for (const auto& sp : singular_points(a)) {
    const auto& idx = sp.lines;
    for (size_t x = 0; x < idx.size(); ++x) {
      for (size_t y = 0; y < idx.size(); ++y) {
        for (size_t z = 0; z < idx.size(); ++z) {
          if (x != y && y != z && x != z) table[(idx[x] * n + idx[y]) * n + idx[z]] = 1;
        }
      }
    }
  }
  return table;
}

}  // namespace

NonBasisSpec nb1() {
  return {{{1, 5, 10}, {2, 4, 13}, {3, 9, 13}, {5, 7, 8}, {6, 11, 12}, {12, 14, 15}}, kQuintuples};
}

NonBasisSpec nb2() {
  return {{{1, 3, 11}, {1, 4, 14}, {3, 8, 15}, {4, 6, 8}, {6, 11, 12}, {12, 14, 15}}, kQuintuples};
}

bool check_nonbases(const Arrangement& a, const NonBasisSpec& spec, const std::vector<int>& labels) {
  if (a.size() != 15) return false;
  std::vector<int> lab = labels;
  if (lab.empty()) {
    for (int i = 0; i < 15; ++i) lab.push_back(i);
  }
  if (lab.size() != 15) throw std::invalid_argument("labeling must have 15 entries");
  const auto nonbases = spec.all_nonbases();
  const std::set<std::array<int, 3>> listed(nonbases.begin(), nonbases.end());
  for (int x = 1; x <= 15; ++x) {
    for (int y = x + 1; y <= 15; ++y) {
      for (int z = y + 1; z <= 15; ++z) {
        const bool dependent = concurrent(a[lab[x - 1]], a[lab[y - 1]], a[lab[z - 1]]);
        if (dependent != (listed.count({x, y, z}) > 0)) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<int>> find_labeling(const Arrangement& a, const NonBasisSpec& spec) {
  if (a.size() != 15) return std::nullopt;
  const auto table = concurrency_table(a);
  std::array<std::array<std::array<char, 16>, 16>, 16> listed{};
  for (const auto& t : spec.all_nonbases()) {
    const int p[3] = {t[0], t[1], t[2]};
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        for (int z = 0; z < 3; ++z) {
          if (x != y && y != z && x != z) listed[p[x]][p[y]][p[z]] = 1;
        }
      }
    }
  }
  // Place labels quintuple by quintuple so the five-point constraints bite
  // as early as possible.
  std::vector<int> order;
  for (const auto& q : spec.quintuples) {
    for (int v : q) {
      if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
    }
  }
  for (int v = 1; v <= 15; ++v) {
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  }
  std::vector<int> line_of_label(16, -1);
  std::vector<bool> used(15, false);
  std::function<bool(size_t)> place = [&](size_t depth) {
    if (depth == order.size()) return true;
    const int label = order[depth];
    for (int line = 0; line < 15; ++line) {
      if (used[line]) continue;
      bool ok = true;
      for (size_t x = 0; x < depth && ok; ++x) {
        for (size_t y = x + 1; y < depth && ok; ++y) {
          const int lx = order[x], ly = order[y];
          const bool dependent = table[(line_of_label[lx] * 15 + line_of_label[ly]) * 15 + line] != 0;
          if (dependent != (listed[lx][ly][label] != 0)) ok = false;
        }
      }
      if (!ok) continue;
      used[line] = true;
      line_of_label[label] = line;
      if (place(depth + 1)) return true;
      used[line] = false;
      line_of_label[label] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return std::vector<int>(line_of_label.begin() + 1, line_of_label.end());
}

// --- moduli ---------------------------------------------------------------------

const char* to_string(ModuliClass k) {
  switch (k) {
    case ModuliClass::kFamily:
      return "family";
    case ModuliClass::kRigid:
      return "rigid";
    case ModuliClass::kDegenerate:
      return "degenerate";
  }
  return "?";
}

std::vector<FrameMatch> frame_matches(const Arrangement& a) {
  std::vector<FrameMatch> out;
  if (a.size() != 6) return out;
  const Field& f = a.field();
  const FieldElement one = FieldElement::one(f), two(f, 2L);
  const std::array<ProjPoint, 4> standard = {
      make_point(f, 1, 0, 0), make_point(f, 0, 1, 0), make_point(f, 0, 0, 1), make_point(f, 1, 1, 1)};
  std::array<int, 6> order = {0, 1, 2, 3, 4, 5};
  // Normals are handled as points of the dual plane; a map h on normals
  // corresponds to the point map h^{-T}.
  do {
    std::array<ProjPoint, 4> src = {dualize(a[order[0]]), dualize(a[order[1]]), dualize(a[order[2]]),
                                    dualize(a[order[3]])};
    std::optional<ProjMap> h;
    try {
      h = map_from_frame(src, standard);
    } catch (const GeometryError&) {
      continue;
    }
    const Triple n5 = h->apply(dualize(a[order[4]])).coords();
    const Triple n6 = h->apply(dualize(a[order[5]])).coords();
    if (n5[2].is_zero()) continue;
    const FieldElement s = two / n5[2];
    const FieldElement x = n5[0] * s, y = n5[1] * s;
    if (x + y != two) continue;
    const FieldElement t = x - one;
    if (ProjPoint(one - t, t + one, two) != ProjPoint(n6)) continue;
    Matrix hinv = h->inverse().matrix();
    Matrix g(3, std::vector<FieldElement>(3));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) g[i][j] = hinv[j][i];
    }
    out.push_back({order, ProjMap(std::move(g)), t});
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

ModuliPoint moduli_invariant(const Arrangement& a) {
  ModuliPoint result;
  if (!is_unassuming(a)) return result;
  const auto matches = frame_matches(a);
  if (matches.empty()) {
    result.klass = ModuliClass::kRigid;
    return result;
  }
  const FieldElement value = upsilon_value(matches.front().t);
  for (const auto& m : matches) {
    if (upsilon_value(m.t) != value) {
      throw std::logic_error("moduli invariant differs between frame normalizations");
    }
  }
  result.klass = ModuliClass::kFamily;
  result.value = Extended(value);
  return result;
}

}  // namespace arrangeops
