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

// Seeded random inputs shared by the test binaries.

#ifndef ARRANGEOPS_TESTS_TEST_UTIL_HPP
#define ARRANGEOPS_TESTS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "arrangeops/projective.hpp"

namespace arrangeops {

inline Rational random_rational(std::mt19937& rng, int num_range = 9, int den_range = 5) {
  std::uniform_int_distribution<int> num(-num_range, num_range), den(1, den_range);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(std::mt19937& rng) {
  Rational q;
  do {
    q = random_rational(rng);
  } while (q == 0);
  return q;
}

inline FieldElement random_element(const Field& f, std::mt19937& rng) {
  std::vector<Rational> c(f->degree);
  for (auto& x : c) x = random_rational(rng);
  return FieldElement(f, std::move(c));
}

inline ProjMap random_projectivity(const Field& f, std::mt19937& rng) {
  while (true) {
    Matrix m(3, std::vector<FieldElement>(3));
    for (auto& row : m) {
      for (auto& x : row) x = FieldElement(f, random_rational(rng, 5, 3));
    }
    if (!determinant(m).is_zero()) return ProjMap(m);
  }
}

}  // namespace arrangeops

#endif  // ARRANGEOPS_TESTS_TEST_UTIL_HPP
