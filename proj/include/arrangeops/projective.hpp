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

// Points, lines, projectivities and conics of the projective plane over a
// FieldElement field. Points and lines are stored in canonical form (first
// nonzero coordinate equal to 1), so equality of canonical coordinates is
// equality of projective objects and the coordinates give a sort key.

#ifndef ARRANGEOPS_PROJECTIVE_HPP
#define ARRANGEOPS_PROJECTIVE_HPP

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "arrangeops/field.hpp"

namespace arrangeops {

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Triple = std::array<FieldElement, 3>;
using Matrix = std::vector<std::vector<FieldElement>>;

// Scales v so that its first nonzero entry is 1. Throws on the zero vector.
Triple normalize(const Triple& v);
Triple cross(const Triple& a, const Triple& b);
FieldElement dot(const Triple& a, const Triple& b);
FieldElement det3(const Triple& a, const Triple& b, const Triple& c);

namespace internal {
struct PointTag {};
struct LineTag {};
}  // namespace internal

template <class Tag>
class Proj {
 public:
  explicit Proj(const Triple& coords) : coords_(normalize(coords)) {}
  Proj(FieldElement x, FieldElement y, FieldElement z)
      : Proj(Triple{std::move(x), std::move(y), std::move(z)}) {}

  const Triple& coords() const { return coords_; }
  const FieldElement& operator[](int i) const { return coords_[i]; }
  const Field& field() const { return coords_[0].field(); }

  friend bool operator==(const Proj& a, const Proj& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const Proj& a, const Proj& b) {
    for (int i = 0; i < 3; ++i) {
      if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    return "(" + coords_[0].to_string() + " : " + coords_[1].to_string() + " : " +
           coords_[2].to_string() + ")";
  }

 private:
  Triple coords_;
};

using ProjPoint = Proj<internal::PointTag>;
using ProjLine = Proj<internal::LineTag>;

// Builds a point or line from rationals; convenient in tests and constructors.
ProjPoint make_point(const Field& field, const Rational& x, const Rational& y, const Rational& z);
ProjLine make_line(const Field& field, const Rational& a, const Rational& b, const Rational& c);

bool incident(const ProjPoint& p, const ProjLine& l);
ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c);

ProjLine dualize(const ProjPoint& p);
ProjPoint dualize(const ProjLine& l);

// An invertible 3x3 matrix acting on column vectors of point coordinates.
// Lines transform by the adjugate transpose, which keeps incidence.
class ProjMap {
 public:
  explicit ProjMap(Matrix m);
  static ProjMap identity(const Field& field);

  const Matrix& matrix() const { return m_; }
  ProjPoint apply(const ProjPoint& p) const;
  ProjLine apply(const ProjLine& l) const;
  ProjMap inverse() const;
  // (this * other)(p) = this(other(p)).
  ProjMap compose(const ProjMap& other) const;
  // True when the two maps agree up to a nonzero scalar.
  bool same_as(const ProjMap& other) const;

 private:
  Matrix m_;
  Matrix adj_t_;
};

// The projectivity sending src[i] to dst[i]; both quadruples must be in
// general position.
ProjMap map_from_frame(const std::array<ProjPoint, 4>& src, const std::array<ProjPoint, 4>& dst);

// cr(p1, p2; p3, p4) with cr(0, inf; 1, x) = x on a parametrized line.
FieldElement cross_ratio(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
                         const ProjPoint& p4);
// {cr(a1, a2; b1, b2), its inverse}, sorted and deduplicated.
std::vector<FieldElement> cross_ratio_pairs(const std::array<ProjPoint, 2>& a,
                                            const std::array<ProjPoint, 2>& b);

// Conic sum c_i m_i with monomials (x^2, y^2, z^2, xy, xz, yz), normalized
// like a point.
struct Conic {
  std::array<FieldElement, 6> coeffs;
  bool contains(const ProjPoint& p) const;
  friend bool operator==(const Conic& a, const Conic& b) { return a.coeffs == b.coeffs; }
};

std::array<FieldElement, 6> veronese(const ProjPoint& p);
Conic conic_through(const std::array<ProjPoint, 5>& pts);
bool on_common_conic(const std::array<ProjPoint, 6>& pts);

// Small dense linear algebra over one field.
FieldElement determinant(Matrix m);
int rank(Matrix m);
// Basis of the right kernel {v : m v = 0}.
std::vector<std::vector<FieldElement>> nullspace(Matrix m);

}  // namespace arrangeops

#endif  // ARRANGEOPS_PROJECTIVE_HPP
