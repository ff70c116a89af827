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

#include "arrangeops/table1.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "arrangeops/catalog.hpp"
#include "arrangeops/dynamics.hpp"

namespace arrangeops {

namespace {

PeriodicRow row(long n, int lp, int cp, int fp, SingularityProfile p, long ceva_n) {
  return {n, lp, cp, fp, std::move(p), ceva_n};
}

// Orbit unions of zeta_3 and zeta_9 are ceva(6) and ceva(18) themselves.
SingularityProfile ceva_profile(long m) { return make_profile({{3, m * m}, {static_cast<int>(m), 3}}); }

}  // namespace

const std::vector<PeriodicRow>& periodic_rows() {
  static const std::vector<PeriodicRow> rows = {
      row(3, 3, 1, 1, ceva_profile(6), 6),
      row(5, 4, 4, 2, make_profile({{2, 48}, {3, 48}, {8, 3}}), 10),
      row(11, 5, 5, 5, make_profile({{2, 120}, {3, 60}, {10, 3}}), 22),
      row(7, 6, 6, 3, make_profile({{2, 72}, {3, 120}, {12, 3}}), 14),
      row(21, 6, 6, 6, make_profile({{2, 216}, {3, 72}, {12, 3}}), 42),
      row(43, 7, 7, 7, make_profile({{2, 336}, {3, 84}, {14, 3}}), 86),
      row(17, 8, 8, 4, make_profile({{2, 480}, {3, 96}, {16, 3}}), 34),
      row(9, 9, 3, 3, ceva_profile(18), 18),
      row(19, 9, 9, 9, make_profile({{2, 432}, {3, 180}, {18, 3}}), 38),
      row(31, 10, 10, 5, make_profile({{2, 840}, {3, 120}, {20, 3}}), 62),
      row(15, 12, 4, 4, make_profile({{2, 432}, {3, 432}, {24, 3}}), 30),
      row(13, 12, 12, 6, make_profile({{2, 144}, {3, 528}, {24, 3}}), 26),
      row(33, 15, 5, 5, make_profile({{2, 1080}, {3, 540}, {30, 3}}), 66),
      row(23, 22, 22, 11, make_profile({{2, 264}, {3, 1848}, {44, 3}}), 46),
      row(29, 28, 28, 14, make_profile({{2, 336}, {3, 3024}, {56, 3}}), 58),
  };
  return rows;
}

std::vector<long> default_periodic_rows() { return {3, 5, 7, 9, 11}; }

const PeriodicRow& periodic_row(long n) {
  for (const auto& r : periodic_rows()) {
    if (r.n == n) return r;
  }
  throw std::invalid_argument("no published row for zeta" + std::to_string(n));
}

PeriodicResult run_periodic_row(long n) {
  const PeriodicRow& expected = periodic_row(n);
  const auto start = std::chrono::steady_clock::now();
  PeriodicResult out;
  out.computed.n = n;
  const Field f = make_cyclotomic_field(n);
  const FieldElement zeta = FieldElement::generator(f);

  const OrbitReport orbit = iterate(c0_of(zeta), 4 * static_cast<int>(n) + 8);
  if (orbit.period && orbit.preperiod == 0) out.computed.lambda_period = *orbit.period;
  out.computed.union_profile = orbit.union_profile;
  const ParameterCycle chi_cycle = find_cycle(Extended(zeta), chi, 4 * static_cast<int>(n));
  const ParameterCycle f_cycle = find_cycle(upsilon(Extended(zeta)), f_lambda, 4 * static_cast<int>(n));
  out.computed.chi_period = chi_cycle.period;
  out.chi_preperiod = chi_cycle.preperiod;
  out.computed.f_period = f_cycle.period;
  out.f_preperiod = f_cycle.preperiod;
  out.chi_order = predicted_period_chi(n);

  const RecognitionResult rec = recognize_ceva(galois_orbit_union(zeta));
  out.computed.galois_ceva = rec.n;
  out.galois_relation = to_string(rec.relation);
  if (rec.relation != Relation::kEqual || rec.n != expected.galois_ceva) {
    const RecognitionResult all = recognize_ceva(root_orbit_union(n, false));
    out.all_roots_relation = (all.name ? *all.name : "none") + " " + to_string(all.relation);
  }

  auto check = [&](bool ok, const std::string& what) {
    if (!ok) out.mismatches.push_back(what);
  };
  check(out.computed.lambda_period == expected.lambda_period, "Lambda period");
  check(out.computed.chi_period == expected.chi_period, "chi period");
  check(out.chi_order == expected.chi_period, "order of -2");
  check(out.computed.f_period == expected.f_period, "F period");
  check(out.computed.union_profile == expected.union_profile, "union profile");
  check(rec.relation == Relation::kEqual && rec.n == expected.galois_ceva, "Galois union");
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string format_result(const PeriodicResult& r) {
  std::ostringstream os;
  const PeriodicRow& c = r.computed;
  auto pre = [](int p) { return p ? "(+" + std::to_string(p) + ")" : std::string(); };
  os << "zeta" << c.n << " Lambda^" << c.lambda_period << " chi^" << c.chi_period << pre(r.chi_preperiod)
     << " F^" << c.f_period << pre(r.f_preperiod) << " " << c.union_profile.to_string() << " ceva("
     << c.galois_ceva << ") " << r.galois_relation << " " << (r.pass() ? "PASS" : "FAIL");
  for (const auto& m : r.mismatches) os << " [" << m << "]";
  if (!r.all_roots_relation.empty()) os << " [all roots: " << r.all_roots_relation << "]";
  os << std::fixed << std::setprecision(2) << " (" << r.seconds << " s)";
  return os.str();
}

}  // namespace arrangeops
