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

// Periodic orbits of c0_of(zeta_n): periods of Lambda, chi and f_lambda,
// the profile of the orbit union and the Ceva arrangement formed by the
// union over the Galois conjugates, compared with published values.

#ifndef ARRANGEOPS_TABLE1_HPP
#define ARRANGEOPS_TABLE1_HPP

#include <string>
#include <vector>

#include "arrangeops/arrangement.hpp"

namespace arrangeops {

struct PeriodicRow {
  long n = 0;
  int lambda_period = 0;
  int chi_period = 0;
  int f_period = 0;
  SingularityProfile union_profile;
  // The Galois-orbit union equals ceva(galois_ceva).
  long galois_ceva = 0;
};

// All published rows, in publication order.
const std::vector<PeriodicRow>& periodic_rows();
// Rows run when none are requested.
std::vector<long> default_periodic_rows();
// Throws std::invalid_argument for an unknown n.
const PeriodicRow& periodic_row(long n);

struct PeriodicResult {
  PeriodicRow computed;
  // Order of -2 modulo n; must agree with computed.chi_period.
  long chi_order = 0;
  // zeta_n itself is not chi-periodic: chi(zeta) = -zeta^-2 has order 2n.
  int chi_preperiod = 0;
  int f_preperiod = 0;
  std::string galois_relation;
  // Reported when the Galois union is not equal to the expected Ceva
  // arrangement: the union over all n-th roots of unity other than 1.
  std::string all_roots_relation;
  std::vector<std::string> mismatches;
  double seconds = 0;
  bool pass() const { return mismatches.empty(); }
};

PeriodicResult run_periodic_row(long n);
// One line: "zeta7 Lambda^6 chi^6 F^3 t2=72 t3=120 t12=3 ceva(14) equal PASS",
// with preperiods shown as "chi^6(+1)".
std::string format_result(const PeriodicResult& r);

}  // namespace arrangeops

#endif  // ARRANGEOPS_TABLE1_HPP
