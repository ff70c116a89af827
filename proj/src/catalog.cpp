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

#include "arrangeops/catalog.hpp"

#include <numeric>

#include "arrangeops/unassuming.hpp"

namespace arrangeops {

namespace {

// A primitive n-th root of unity of the field, when it has one.
std::optional<FieldElement> primitive_root(const Field& f, long n) {
  if (n == 1) return FieldElement::one(f);
  if (n == 2) return -FieldElement::one(f);
  if (f->kind != FieldKind::kCyclotomic) return std::nullopt;
  const long m = f->parameter;
  const long l = std::lcm(2L, m);
  if (l % n != 0) return std::nullopt;
  FieldElement z = FieldElement::generator(f);
  if (m % 2 == 1) z = -z;  // order 2m
  return z.pow(l / n);
}

std::vector<ProjLine> ceva_lines(const Field& f, long n) {
  const auto w = primitive_root(f, n);
  if (!w) throw FieldError("field " + describe(f) + " has no primitive " + std::to_string(n) + "-th root of unity");
  const FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
  std::vector<ProjLine> lines;
  std::vector<FieldElement> powers;
  FieldElement x = one;
  for (long k = 0; k < n; ++k) {
    powers.push_back(x);
    x *= *w;
  }
  for (const auto& p : powers) lines.emplace_back(one, -p, zero);
  for (const auto& p : powers) lines.emplace_back(one, zero, -p);
  for (const auto& p : powers) lines.emplace_back(zero, one, -p);
  return lines;
}

Matrix transpose3(const Matrix& m) {
  Matrix out(3, std::vector<FieldElement>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = m[j][i];
  }
  return out;
}

// Point map whose action on line normals is h.
ProjMap point_map_for_normal_map(const Matrix& h) {
  return ProjMap(transpose3(ProjMap(h).inverse().matrix()));
}

Matrix mul3(const Matrix& a, const Matrix& b) {
  const Field& f = a[0][0].field();
  Matrix out(3, std::vector<FieldElement>(3, FieldElement::zero(f)));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

// Ceva(1): three concurrent lines, moved onto x = y, x = z, y = z.
RecognitionResult recognize_three_concurrent(const Arrangement& a) {
  RecognitionResult r;
  const Field& f = a.field();
  const Triple n1 = a[0].coords(), n2 = a[1].coords(), n3 = a[2].coords();
  // n3 = alpha n1 + beta n2, solved on a coordinate pair with nonzero minor.
  int u = 0, v = 1;
  for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    if (!(n1[i] * n2[j] - n1[j] * n2[i]).is_zero()) {
      u = i;
      v = j;
      break;
    }
  }
  const FieldElement det = n1[u] * n2[v] - n1[v] * n2[u];
  const FieldElement alpha = (n3[u] * n2[v] - n3[v] * n2[u]) / det;
  const FieldElement beta = (n1[u] * n3[v] - n1[v] * n3[u]) / det;
  const FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
  Triple extra;
  for (int k = 0; k < 3; ++k) {
    Triple e = {zero, zero, zero};
    e[k] = one;
    if (!det3(n1, n2, e).is_zero()) {
      extra = e;
      break;
    }
  }
  Matrix s(3, std::vector<FieldElement>(3));
  for (int i = 0; i < 3; ++i) {
    s[i][0] = n1[i] * alpha;
    s[i][1] = n2[i] * beta;
    s[i][2] = extra[i];
  }
  // Targets -(1,-1,0), (1,0,-1), (0,0,1).
  Matrix t = {{-one, one, zero}, {one, zero, zero}, {zero, -one, one}};
  const Matrix h = mul3(t, ProjMap(s).inverse().matrix());
  r.witness = point_map_for_normal_map(h);
  r.n = 1;
  r.name = "ceva(1)";
  r.relation = Relation::kEqual;
  return r;
}

struct Split {
  std::array<int, 3> vertex;  // indices into the singular point list
};

std::vector<Split> vertex_candidates(const std::vector<SingularPoint>& sps, size_t n_lines) {
  std::vector<int> order(sps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return sps[x].multiplicity() > sps[y].multiplicity(); });
  auto partitions = [&](int x, int y, int z) {
    if (static_cast<size_t>(sps[x].multiplicity() + sps[y].multiplicity() + sps[z].multiplicity()) !=
        n_lines) {
      return false;
    }
    std::vector<int> all = sps[x].lines;
    all.insert(all.end(), sps[y].lines.begin(), sps[y].lines.end());
    all.insert(all.end(), sps[z].lines.begin(), sps[z].lines.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
  };
  std::vector<Split> out;
  if (order.size() >= 3 && partitions(order[0], order[1], order[2])) {
    out.push_back({{order[0], order[1], order[2]}});
    return out;
  }
  for (size_t x = 0; x < order.size(); ++x) {
    for (size_t y = x + 1; y < order.size(); ++y) {
      for (size_t z = y + 1; z < order.size(); ++z) {
        if (partitions(order[x], order[y], order[z])) out.push_back({{order[x], order[y], order[z]}});
      }
    }
  }
  return out;
}

// Tries one choice of vertices; fills r on success.
bool analyze_split(const Arrangement& a, const std::array<ProjPoint, 3>& v, long forced_n,
                   RecognitionResult& r) {
  if (collinear(v[0], v[1], v[2])) return false;
  const Field& f = a.field();
  std::array<std::vector<FieldElement>, 3> ratio;  // s, r, q per pencil
  for (const auto& l : a.items()) {
    const Triple lp = {dot(v[0].coords(), l.coords()), dot(v[1].coords(), l.coords()),
                       dot(v[2].coords(), l.coords())};
    int through = -1, count = 0;
    for (int i = 0; i < 3; ++i) {
      if (lp[i].is_zero()) {
        through = i;
        ++count;
      }
    }
    if (count != 1) return false;
    // (0, 1, -s), (1, 0, -r), (1, -q, 0) after moving the vertices to e_i.
    if (through == 0) ratio[0].push_back(-lp[2] / lp[1]);
    if (through == 1) ratio[1].push_back(-lp[2] / lp[0]);
    if (through == 2) ratio[2].push_back(-lp[1] / lp[0]);
  }
  if (ratio[0].empty() || ratio[1].empty() || ratio[2].empty()) return false;
  const FieldElement s0 = ratio[0][0], r0 = ratio[1][0];
  long n = 1;
  std::array<FieldElement, 3> scale = {s0.inverse(), r0.inverse(), s0 / r0};
  for (int p = 0; p < 3; ++p) {
    for (const auto& x : ratio[p]) {
      const auto order = root_of_unity_order(x * scale[p]);
      if (!order) return false;
      n = std::lcm(n, *order);
    }
  }
  if (forced_n > 0) {
    if (forced_n % n != 0) return false;
    n = forced_n;
  }
  // Witness: D * adj(P), P = [v0 v1 v2], D = diag(1/r0, 1/s0, 1).
  Matrix p(3, std::vector<FieldElement>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) p[i][j] = v[j][i];
  }
  Matrix m = ProjMap(p).inverse().matrix();
  const std::array<FieldElement, 3> d = {r0.inverse(), s0.inverse(), FieldElement::one(f)};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] *= d[i];
  }
  ProjMap witness(std::move(m));
  // Certify against the explicit line list when the field carries the roots.
  const bool equal = a.size() == static_cast<size_t>(3 * n) && ratio[0].size() == static_cast<size_t>(n) &&
                     ratio[1].size() == static_cast<size_t>(n) && ratio[2].size() == static_cast<size_t>(n);
  if (primitive_root(f, n)) {
    const Arrangement target(f, ceva_lines(f, n));
    const Arrangement moved = transform(witness, a);
    if (!is_subset(moved, target)) return false;
    if (equal != set_equal(moved, target)) return false;
  }
  r.n = n;
  r.name = n == 2 ? "quadrilateral" : "ceva(" + std::to_string(n) + ")";
  r.relation = equal ? Relation::kEqual : Relation::kSubset;
  r.witness = std::move(witness);
  return true;
}

RecognitionResult recognize(const Arrangement& a, long forced_n) {
  RecognitionResult none;
  if (a.size() < 3) return none;
  const auto sps = singular_points(a);
  if (a.size() == 3 && sps.size() == 1) {
    // Three concurrent lines go onto x = y, x = z, y = z, which every
    // Ceva(n) contains.
    RecognitionResult r = recognize_three_concurrent(a);
    if (forced_n > 1) {
      r.n = forced_n;
      r.name = forced_n == 2 ? "quadrilateral" : "ceva(" + std::to_string(forced_n) + ")";
      r.relation = Relation::kSubset;
    }
    return r;
  }
  for (const auto& split : vertex_candidates(sps, a.size())) {
    const std::array<ProjPoint, 3> v = {sps[split.vertex[0]].point, sps[split.vertex[1]].point,
                                        sps[split.vertex[2]].point};
    RecognitionResult r;
    if (analyze_split(a, v, forced_n, r)) return r;
  }
  return none;
}

}  // namespace

Arrangement ceva(long n) {
  if (n < 1) throw std::invalid_argument("ceva needs n >= 1");
  const Field f = make_cyclotomic_field(n);
  return Arrangement(f, ceva_lines(f, n));
}

Arrangement complete_quadrilateral() {
  const Field q = rational_field();
  return Arrangement(q, {make_line(q, 0, 0, 1), make_line(q, 0, 1, 0), make_line(q, 1, 0, 0),
                         make_line(q, 0, 1, -1), make_line(q, 1, 0, -1), make_line(q, 1, -1, 0)});
}

Arrangement hesse_union() {
  const Arrangement seed = hesse_seed();
  return union_of(seed, lambda_op(seed, 2, 3));
}

Arrangement g26_union(const Arrangement& a) {
  return union_of(dual_15(a), dual_15(lambda_op(a, 2, 3)));
}

Arrangement a15_120() {
  const Field f = quadratic_field(5);
  const FieldElement t = FieldElement(f, 2L) + FieldElement::generator(f);
  return dual_15(c0_of(t));
}

LimitObjects limit_objects() {
  PointSet p9 = double_points_closed_form(FieldElement::zero(rational_field()));
  Arrangement dual = dual_points(p9);
  Arrangement joins = lines_through(p9, 2, Mode::kAtLeast);
  return {std::move(p9), std::move(dual), std::move(joins)};
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::kEqual:
      return "equal";
    case Relation::kSubset:
      return "subset";
    case Relation::kNone:
      return "none";
  }
  return "?";
}

RecognitionResult recognize_ceva(const Arrangement& a) { return recognize(a, 0); }

RecognitionResult contained_in_ceva(const Arrangement& a, long n) {
  if (n < 1) throw std::invalid_argument("contained_in_ceva needs n >= 1");
  return recognize(a, n);
}

}  // namespace arrangeops
