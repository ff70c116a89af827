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

#include "arrangeops/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arrangeops {

Integer nu(long k) {
  if (k < 0) throw std::invalid_argument("nu needs k >= 0");
  Integer p = Integer(1) << k;
  p -= (k % 2 == 0) ? 1 : -1;
  return p / 3;
}

AbcParams abc_closed_form(const FieldElement& t, long k) {
  if (t.is_zero()) throw FieldError("abc_closed_form needs t != 0");
  Integer e = nu(k);
  if (k % 2 == 1) e = -e;
  const FieldElement a = t.pow(e);
  return {a, a.inverse(), t * a};
}

AbcParams lambda_abc(const AbcParams& p) { return {p.b / p.c, p.a * p.c, p.b / p.a}; }

Arrangement c_abc(const AbcParams& p) { return c_abc(p.a, p.b, p.c); }

Extended chi(const Extended& z) {
  if (z.is_infinite()) return Extended(FieldElement::zero(z.field()));
  if (z.value().is_zero()) return Extended::infinity(z.field());
  return Extended(-(z.value() * z.value()).inverse());
}

Extended upsilon(const Extended& z) {
  if (z.is_infinite() || z.value().is_zero()) return Extended::infinity(z.field());
  const FieldElement z2 = z.value() * z.value();
  return Extended((z2 + z2.inverse()).scaled(Rational(1, 2)));
}

Extended f_lambda(const Extended& z) {
  if (z.is_infinite()) return z;
  const FieldElement& v = z.value();
  return Extended((v * v).scaled(2) - FieldElement::one(v.field()));
}

OrbitReport iterate(const Arrangement& seed, int max_steps) {
  if (max_steps < 1) throw std::invalid_argument("iterate needs max_steps >= 1");
  OrbitReport report{seed, {seed}, {is_unassuming(seed)}, {}, {}, false, seed, {}};
  for (int step = 1; step <= max_steps; ++step) {
    Arrangement next = lambda_op(report.terms.back(), 2, 3);
    if (next.empty()) {
      report.terms.push_back(next);
      report.unassuming.push_back(false);
      report.terminated = true;
      break;
    }
    int repeat = -1;
    for (size_t j = 0; j < report.terms.size(); ++j) {
      if (set_equal(report.terms[j], next)) {
        repeat = static_cast<int>(j);
        break;
      }
    }
    if (repeat >= 0) {
      report.preperiod = repeat;
      report.period = static_cast<int>(report.terms.size()) - repeat;
      break;
    }
    report.unassuming.push_back(is_unassuming(next));
    report.union_arrangement = union_of(report.union_arrangement, next);
    report.terms.push_back(std::move(next));
  }
  report.union_profile = profile(report.union_arrangement);
  return report;
}

long predicted_period_chi(long n) {
  if (n <= 1 || n % 2 == 0) throw std::invalid_argument("predicted_period_chi needs an odd n > 1");
  const long base = ((-2 % n) + n) % n;
  long x = base;
  for (long k = 1; k <= n; ++k) {
    if (x == 1) return k;
    x = (x * base) % n;
  }
  throw std::logic_error("-2 is not a unit modulo n");
}

ParameterCycle find_cycle(const Extended& z, Extended (*map)(const Extended&), int max_steps) {
  std::vector<Extended> seen = {z};
  for (int step = 0; step < max_steps; ++step) {
    Extended next = map(seen.back());
    for (size_t j = 0; j < seen.size(); ++j) {
      if (seen[j] == next) {
        return {static_cast<int>(j), static_cast<int>(seen.size() - j)};
      }
    }
    seen.push_back(std::move(next));
  }
  throw std::runtime_error("no cycle within " + std::to_string(max_steps) + " steps");
}

std::optional<AbcParams> read_abc(const Arrangement& a) {
  if (a.size() != 6) return std::nullopt;
  std::vector<FieldElement> us, vs, ws;
  for (const auto& l : a.items()) {
    // Canonical forms: (0 : 1 : 1/u), (1 : 0 : 1/v), (1 : 1/w : 0).
    if (l[0].is_zero() && !l[2].is_zero()) {
      us.push_back(l[2].inverse());
    } else if (l[1].is_zero() && !l[0].is_zero() && !l[2].is_zero()) {
      vs.push_back(l[2].inverse());
    } else if (l[2].is_zero() && !l[0].is_zero() && !l[1].is_zero()) {
      ws.push_back(l[1].inverse());
    } else {
      return std::nullopt;
    }
  }
  if (us.size() != 2 || vs.size() != 2 || ws.size() != 2) return std::nullopt;
  if (us[0] != -us[1] || vs[0] != -vs[1] || ws[0] != -ws[1]) return std::nullopt;
  auto pick = [](std::vector<FieldElement>& v) { return std::max(v[0], v[1]); };
  return AbcParams{pick(us), pick(vs), pick(ws)};
}

Arrangement embed(const Arrangement& a, const SqrtAdjunction& ext) {
  Arrangement out(ext.field);
  for (const auto& l : a.items()) {
    out.add(ProjLine(ext.embed(l[0]), ext.embed(l[1]), ext.embed(l[2])));
  }
  return out;
}

std::vector<Antecedent> preimages(const Arrangement& a) {
  const auto uvw = read_abc(a);
  if (!uvw) throw GeometryError("preimages: arrangement is not of the form C(u, v, w)");
  const FieldElement q = uvw->a * uvw->b / uvw->c;
  std::vector<Antecedent> out;
  for (const FieldElement& delta : {q, -q}) {
    SqrtAdjunction ext = adjoin_sqrt(a.field(), delta);
    const FieldElement& r = ext.root;
    const FieldElement u = ext.embed(uvw->a), w = ext.embed(uvw->c);
    AbcParams p{r, w * r, (w / u) * r};
    Arrangement arr = c_abc(p);
    out.push_back({std::move(ext), std::move(p), std::move(arr)});
  }
  return out;
}

Antecedent real_preimage(const Arrangement& a) {
  const auto uvw = read_abc(a);
  if (!uvw) throw GeometryError("real_preimage: arrangement is not of the form C(u, v, w)");
  const int s = sign_at_real_embedding(uvw->a * uvw->b / uvw->c);
  auto all = preimages(a);
  return std::move(all[s > 0 ? 0 : 1]);
}

SingularityProfile union_profile_formula(long k) {
  if (k < 1) throw std::invalid_argument("union_profile_formula needs k >= 1");
  SingularityProfile p;
  p.counts[2] = 12 * (k * k - k + 1);
  p.counts[3] = 12 * k;
  p.counts[static_cast<int>(2 * k + 2)] += 3;
  return p;
}

Arrangement galois_orbit_union(const FieldElement& t, int max_steps) {
  const auto order = root_of_unity_order(t);
  if (!order) throw FieldError("galois_orbit_union needs a root of unity");
  const Field& f = t.field();
  if (f->kind != FieldKind::kCyclotomic) throw FieldError("galois_orbit_union needs a cyclotomic field");
  const FieldElement one = FieldElement::one(f);
  const OrbitReport orbit = iterate(c_abc(one, one, t), max_steps);
  if (!orbit.period) throw std::runtime_error("orbit is not periodic within the step budget");
  // Lambda commutes with the Galois action, so conjugate orbits are the
  // conjugates of one orbit.
  Arrangement out(f);
  const long n = f->parameter;
  for (long j = 1; j <= std::max(1L, n - 1); ++j) {
    if (std::gcd(j, n) != 1) continue;
    for (const auto& l : orbit.union_arrangement.items()) {
      out.add(ProjLine(galois_action(l[0], j), galois_action(l[1], j), galois_action(l[2], j)));
    }
  }
  return out;
}

Arrangement root_orbit_union(long m, bool primitive_only, int max_steps) {
  if (m < 3) throw std::invalid_argument("root_orbit_union needs m >= 3");
  const Field f = make_cyclotomic_field(m);
  const FieldElement zeta = FieldElement::generator(f);
  Arrangement out(f);
  for (long j = 1; j < m; ++j) {
    if (2 * j == m) continue;
    if (primitive_only && std::gcd(j, m) != 1) continue;
    const OrbitReport orbit = iterate(c0_of(zeta.pow(Integer(j))), max_steps);
    out = union_of(out, orbit.union_arrangement);
  }
  return out;
}

Arrangement two_power_assembly(long n) {
  if (n < 1 || n > 20) throw std::invalid_argument("two_power_assembly needs 1 <= n <= 20");
  return root_orbit_union(1L << (n + 1), false);
}

CrossRatioSets cross_ratio_sets(const FieldElement& t, long k) {
  const Field& f = t.field();
  const FieldElement zero = FieldElement::zero(f), one = FieldElement::one(f);
  const AbcParams p = abc_closed_form(t, k), q = abc_closed_form(t, k + 1);
  auto on_l1 = [&](const FieldElement& a) { return ProjPoint(zero, a, one); };
  auto on_l2 = [&](const FieldElement& b) { return ProjPoint(b, zero, one); };
  auto on_l3 = [&](const FieldElement& c) { return ProjPoint(c, one, zero); };
  CrossRatioSets out;
  out.a = cross_ratio_pairs({on_l1(p.a), on_l1(-p.a)}, {on_l1(q.a), on_l1(-q.a)});
  out.b = cross_ratio_pairs({on_l2(p.b), on_l2(-p.b)}, {on_l2(q.b), on_l2(-q.b)});
  out.c = cross_ratio_pairs({on_l3(p.c), on_l3(-p.c)}, {on_l3(q.c), on_l3(-q.c)});
  const FieldElement tp = t.pow(Integer(1) << k);
  const FieldElement r = (tp - one) / (tp + one);
  out.expected = {r * r, (r * r).inverse()};
  std::sort(out.expected.begin(), out.expected.end());
  out.expected.erase(std::unique(out.expected.begin(), out.expected.end()), out.expected.end());
  return out;
}

bool cross_ratio_check(const FieldElement& t, long k) {
  try {
    const CrossRatioSets s = cross_ratio_sets(t, k);
    return s.a == s.expected && s.b == s.expected && s.c == s.expected;
  } catch (const GeometryError&) {
    return false;
  } catch (const FieldError&) {
    return false;
  }
}

const char* to_string(ParameterClass c) {
  switch (c) {
    case ParameterClass::kDegenerate:
      return "degenerate";
    case ParameterClass::kCircle:
      return "circle";
    case ParameterClass::kOffCircle:
      return "off_circle";
  }
  return "?";
}

ParameterClass classify_parameter(const FieldElement& t) {
  const Field& f = t.field();
  const FieldElement one = FieldElement::one(f), four(f, 4L);
  const FieldElement t2 = t * t;
  if (t.is_zero() || t == one || t == -one) return ParameterClass::kDegenerate;
  if (((t2 - four * t - one) * (t2 + four * t - one)).is_zero()) return ParameterClass::kDegenerate;
  return is_on_unit_circle(t) ? ParameterClass::kCircle : ParameterClass::kOffCircle;
}

ParameterClass classify_parameter(const Extended& t) {
  if (t.is_infinite()) return ParameterClass::kDegenerate;
  return classify_parameter(t.value());
}

}  // namespace arrangeops
