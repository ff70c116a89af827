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

// Iteration of Lambda = lambda_op(., 2, 3) on six-line arrangements, the
// closed form of the orbit of C(1, 1, t), and the maps it induces on the
// parameter line: chi(z) = -1/z^2, upsilon(z) = (z^2 + z^-2)/2 and
// f_lambda(z) = 2z^2 - 1, with f_lambda o upsilon = upsilon o chi.

#ifndef ARRANGEOPS_DYNAMICS_HPP
#define ARRANGEOPS_DYNAMICS_HPP

#include <optional>
#include <vector>

#include "arrangeops/unassuming.hpp"

namespace arrangeops {

// (2^k - (-1)^k) / 3: 0, 1, 1, 3, 5, 11, 21, 43, ...
Integer nu(long k);

struct AbcParams {
  FieldElement a, b, c;
};

// Parameters of the k-th iterate of C(1, 1, t): a = t^(nu_k (-1)^k),
// b = 1/a, c = t a.
AbcParams abc_closed_form(const FieldElement& t, long k);
// Lambda(C(a, b, c)) = C(b/c, ac, b/a).
AbcParams lambda_abc(const AbcParams& p);
Arrangement c_abc(const AbcParams& p);

Extended chi(const Extended& z);
Extended upsilon(const Extended& z);
Extended f_lambda(const Extended& z);

struct OrbitReport {
  Arrangement seed;
  // terms[0] is the seed.
  std::vector<Arrangement> terms;
  std::vector<bool> unassuming;
  // terms[preperiod + period] set-equals terms[preperiod].
  std::optional<int> period;
  std::optional<int> preperiod;
  // Reached the empty arrangement.
  bool terminated = false;
  Arrangement union_arrangement;
  SingularityProfile union_profile;
};

// Applies Lambda up to max_steps times, stopping at the empty arrangement
// or at the first term equal (as a set) to an earlier one.
OrbitReport iterate(const Arrangement& seed, int max_steps);

// Multiplicative order of -2 modulo an odd n > 1.
long predicted_period_chi(long n);

struct ParameterCycle {
  int preperiod = 0;
  int period = 0;
};
// Exact iteration of a map on P^1 until a value repeats.
ParameterCycle find_cycle(const Extended& z, Extended (*map)(const Extended&), int max_steps);

// Reads (u, v, w) off an arrangement of the form C(u, v, w), up to the signs.
std::optional<AbcParams> read_abc(const Arrangement& a);

struct Antecedent {
  SqrtAdjunction extension;
  AbcParams params;
  Arrangement arrangement;
};

// The two antecedents C(r, w r, (w/u) r), r^2 = +-uv/w, of C(u, v, w).
std::vector<Antecedent> preimages(const Arrangement& a);
// The antecedent with a real r; the input must live in a real field.
Antecedent real_preimage(const Arrangement& a);
Arrangement embed(const Arrangement& a, const SqrtAdjunction& ext);

// {2: 12(k^2 - k + 1), 3: 12k, 2k+2: 3}.
SingularityProfile union_profile_formula(long k);

// Union over the Galois conjugates t' of t of the Lambda-orbits of C(1,1,t').
Arrangement galois_orbit_union(const FieldElement& t, int max_steps = 200);

// Union of the Lambda-orbits of c0_of(beta) over beta in Q(zeta_m) with
// beta^m = 1, beta != +-1; with primitive_only, over primitive m-th roots.
Arrangement root_orbit_union(long m, bool primitive_only, int max_steps = 64);
// root_orbit_union(2^(n+1), false): all levels chi^k(beta) = 1, k <= n.
Arrangement two_power_assembly(long n);

// Cross(A_k; A_{k+1}) and its analogues for the B and C families, where
// A_k = {a_k, -a_k} on x = 0 parametrized by a -> (0 : a : 1), etc.
struct CrossRatioSets {
  std::vector<FieldElement> a, b, c;
  std::vector<FieldElement> expected;
};
CrossRatioSets cross_ratio_sets(const FieldElement& t, long k);
bool cross_ratio_check(const FieldElement& t, long k);

enum class ParameterClass { kDegenerate, kCircle, kOffCircle };
const char* to_string(ParameterClass c);
ParameterClass classify_parameter(const FieldElement& t);
ParameterClass classify_parameter(const Extended& t);

}  // namespace arrangeops

#endif  // ARRANGEOPS_DYNAMICS_HPP
