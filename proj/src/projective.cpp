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

#include "arrangeops/projective.hpp"

#include <algorithm>

namespace arrangeops {

Triple normalize(const Triple& v) {
  for (int i = 0; i < 3; ++i) {
    if (v[i].is_zero()) continue;
    if (v[i].is_one()) return v;
    const FieldElement inv = v[i].inverse();
    Triple out = v;
    for (int j = i; j < 3; ++j) out[j] = (j == i) ? FieldElement::one(v[i].field()) : v[j] * inv;
    return out;
  }
  throw GeometryError("zero coordinate triple");
}

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

FieldElement dot(const Triple& a, const Triple& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

FieldElement det3(const Triple& a, const Triple& b, const Triple& c) { return dot(a, cross(b, c)); }

ProjPoint make_point(const Field& field, const Rational& x, const Rational& y, const Rational& z) {
  return ProjPoint(FieldElement(field, x), FieldElement(field, y), FieldElement(field, z));
}

ProjLine make_line(const Field& field, const Rational& a, const Rational& b, const Rational& c) {
  return ProjLine(FieldElement(field, a), FieldElement(field, b), FieldElement(field, c));
}

bool incident(const ProjPoint& p, const ProjLine& l) { return dot(p.coords(), l.coords()).is_zero(); }

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw GeometryError("join of a point with itself");
  return ProjLine(cross(p.coords(), q.coords()));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw GeometryError("meet of a line with itself");
  return ProjPoint(cross(l.coords(), m.coords()));
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return det3(a.coords(), b.coords(), c.coords()).is_zero();
}

bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c) {
  return det3(a.coords(), b.coords(), c.coords()).is_zero();
}

ProjLine dualize(const ProjPoint& p) { return ProjLine(p.coords()); }
ProjPoint dualize(const ProjLine& l) { return ProjPoint(l.coords()); }

// --- projectivities ---------------------------------------------------------

namespace {

Matrix adjugate_transpose(const Matrix& m) {
  // Row i of the cofactor matrix is the cross product of the other two
  // columns' transposes; equivalently cof = (col1 x col2, col2 x col0, col0 x col1).
  auto column = [&](int j) { return Triple{m[0][j], m[1][j], m[2][j]}; };
  const Triple c0 = column(0), c1 = column(1), c2 = column(2);
  const std::array<Triple, 3> rows = {cross(c1, c2), cross(c2, c0), cross(c0, c1)};
  Matrix out(3, std::vector<FieldElement>(3));
  // cof(M) has column j equal to rows[j]; cof(M) = adj(M)^T.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = rows[j][i];
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const size_t n = a.size(), k = b.size(), m = b[0].size();
  Matrix out(n, std::vector<FieldElement>(m, FieldElement::zero(a[0][0].field())));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) {
      for (size_t l = 0; l < k; ++l) {
        if (!a[i][l].is_zero() && !b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
      }
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a[0].size(), std::vector<FieldElement>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

Triple mat_vec(const Matrix& m, const Triple& v) {
  Triple out;
  for (int i = 0; i < 3; ++i) out[i] = dot(Triple{m[i][0], m[i][1], m[i][2]}, v);
  return out;
}

FieldElement det_matrix3(const Matrix& m) {
  return det3(Triple{m[0][0], m[0][1], m[0][2]}, Triple{m[1][0], m[1][1], m[1][2]},
              Triple{m[2][0], m[2][1], m[2][2]});
}

// Matrix sending e_i to frame[i] and (1, 1, 1) to frame[3].
Matrix frame_matrix(const std::array<ProjPoint, 4>& frame) {
  Matrix p(3, std::vector<FieldElement>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) p[i][j] = frame[j][i];
  }
  if (det_matrix3(p).is_zero()) throw GeometryError("frame points are collinear");
  // lambda = adj(P) p4, proportional to P^{-1} p4.
  const Matrix adj = transpose(adjugate_transpose(p));
  const Triple lambda = mat_vec(adj, frame[3].coords());
  for (int j = 0; j < 3; ++j) {
    if (lambda[j].is_zero()) throw GeometryError("frame has three collinear points");
    for (int i = 0; i < 3; ++i) p[i][j] *= lambda[j];
  }
  return p;
}

}  // namespace

ProjMap::ProjMap(Matrix m) : m_(std::move(m)) {
  if (m_.size() != 3 || m_[0].size() != 3 || m_[1].size() != 3 || m_[2].size() != 3) {
    throw GeometryError("projective map needs a 3x3 matrix");
  }
  if (det_matrix3(m_).is_zero()) throw GeometryError("singular projective map");
  adj_t_ = adjugate_transpose(m_);
}

ProjMap ProjMap::identity(const Field& field) {
  Matrix m(3, std::vector<FieldElement>(3, FieldElement::zero(field)));
  for (int i = 0; i < 3; ++i) m[i][i] = FieldElement::one(field);
  return ProjMap(std::move(m));
}

ProjPoint ProjMap::apply(const ProjPoint& p) const { return ProjPoint(mat_vec(m_, p.coords())); }

ProjLine ProjMap::apply(const ProjLine& l) const { return ProjLine(mat_vec(adj_t_, l.coords())); }

ProjMap ProjMap::inverse() const { return ProjMap(transpose(adj_t_)); }

ProjMap ProjMap::compose(const ProjMap& other) const { return ProjMap(mat_mul(m_, other.m_)); }

bool ProjMap::same_as(const ProjMap& other) const {
  // Compare the flattened matrices as projective vectors.
  std::vector<FieldElement> a, b;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      a.push_back(m_[i][j]);
      b.push_back(other.m_[i][j]);
    }
  }
  auto pivot = std::find_if(a.begin(), a.end(), [](const FieldElement& x) { return !x.is_zero(); });
  const size_t k = pivot - a.begin();
  if (b[k].is_zero()) return false;
  const FieldElement s = b[k] / a[k];
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] * s != b[i]) return false;
  }
  return true;
}

ProjMap map_from_frame(const std::array<ProjPoint, 4>& src, const std::array<ProjPoint, 4>& dst) {
  const Matrix a = frame_matrix(src);
  const Matrix b = frame_matrix(dst);
  return ProjMap(mat_mul(b, transpose(adjugate_transpose(a))));
}

// --- cross ratio -------------------------------------------------------------

FieldElement cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                         const ProjPoint& p4) {
  const std::array<const ProjPoint*, 4> pts = {&p1, &p2, &p3, &p4};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (*pts[i] == *pts[j]) throw GeometryError("cross ratio needs four distinct points");
    }
  }
  const ProjLine line = join(p1, p2);
  if (!incident(p3, line) || !incident(p4, line)) {
    throw GeometryError("cross ratio needs collinear points");
  }
  // Project along a coordinate the line's normal does not vanish on.
  int drop = 0;
  while (line[drop].is_zero()) ++drop;
  const int u = drop == 0 ? 1 : 0;
  const int v = drop == 2 ? 1 : 2;
  auto bracket = [&](const ProjPoint& a, const ProjPoint& b) { return a[u] * b[v] - a[v] * b[u]; };
  return (bracket(p4, p1) * bracket(p3, p2)) / (bracket(p4, p2) * bracket(p3, p1));
}

std::vector<FieldElement> cross_ratio_pairs(const std::array<ProjPoint, 2>& a,
                                            const std::array<ProjPoint, 2>& b) {
  const FieldElement lambda = cross_ratio(a[0], a[1], b[0], b[1]);
  std::vector<FieldElement> out = {lambda, lambda.inverse()};
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- conics -------------------------------------------------------------------

std::array<FieldElement, 6> veronese(const ProjPoint& p) {
  const FieldElement &x = p[0], &y = p[1], &z = p[2];
  return {x * x, y * y, z * z, x * y, x * z, y * z};
}

bool Conic::contains(const ProjPoint& p) const {
  const auto m = veronese(p);
  FieldElement s = FieldElement::zero(p.field());
  for (int i = 0; i < 6; ++i) s += coeffs[i] * m[i];
  return s.is_zero();
}

Conic conic_through(const std::array<ProjPoint, 5>& pts) {
  Matrix rows;
  for (const auto& p : pts) {
    const auto v = veronese(p);
    rows.emplace_back(v.begin(), v.end());
  }
  const auto kernel = nullspace(rows);
  if (kernel.size() != 1) throw GeometryError("degenerate: five points do not fix a unique conic");
  Conic c;
  const auto& k = kernel[0];
  const auto lead = std::find_if(k.begin(), k.end(), [](const FieldElement& x) { return !x.is_zero(); });
  const FieldElement inv = lead->inverse();
  for (int i = 0; i < 6; ++i) c.coeffs[i] = k[i] * inv;
  return c;
}

bool on_common_conic(const std::array<ProjPoint, 6>& pts) {
  Matrix rows;
  for (const auto& p : pts) {
    const auto v = veronese(p);
    rows.emplace_back(v.begin(), v.end());
  }
  return determinant(rows).is_zero();
}

// --- dense linear algebra -------------------------------------------------------

namespace {

// Row-reduces m in place to reduced echelon form; returns pivot columns and
// the determinant sign/scale accumulated along the way.
std::vector<int> row_reduce(Matrix& m, FieldElement* det) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  std::vector<int> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      if (det) *det = -*det;
    }
    const FieldElement inv = m[r][c].inverse();
    if (det) *det *= m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const FieldElement f = m[i][c];
      for (size_t j = c; j < cols; ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
      }
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

FieldElement determinant(Matrix m) {
  if (m.empty() || m.size() != m[0].size()) throw GeometryError("determinant needs a square matrix");
  FieldElement det = FieldElement::one(m[0][0].field());
  const auto pivots = row_reduce(m, &det);
  if (pivots.size() < m.size()) return FieldElement::zero(det.field());
  return det;
}

int rank(Matrix m) { return static_cast<int>(row_reduce(m, nullptr).size()); }

std::vector<std::vector<FieldElement>> nullspace(Matrix m) {
  if (m.empty()) return {};
  const size_t cols = m[0].size();
  const Field field = m[0][0].field();
  const auto pivots = row_reduce(m, nullptr);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(cols, FieldElement::zero(field));
    v[free] = FieldElement::one(field);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace arrangeops
