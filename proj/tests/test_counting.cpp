/* Copyright 2026 The chaincodes Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "chaincodes/counting.hpp"
#include "chaincodes/enumerate.hpp"
#include "chaincodes/error.hpp"
#include "doctest.h"

using namespace chaincodes;

TEST_CASE("gaussian coefficients") {
  CHECK(gaussian(5, 0, 3) == 1);
  CHECK(gaussian(2, 1, 2) == 3);
  CHECK(gaussian(4, 2, 2) == 35);
  CHECK(gaussian(4, 4, 7) == 1);
  CHECK_THROWS_AS(gaussian(2, 3, 2), PreconditionError);
  Field f = Field::make(2, 1);
  for (std::size_t k = 0; k <= 4; ++k) CHECK(gaussian(4, k, 2) == enumerate_field_subspaces(f, 4, k).size());
}

TEST_CASE("linear counts") {
  CHECK(count_linear(2, 3, 1).value == 4);
  CHECK(count_linear(2, 3, 2).value == 37);
  CHECK(count_linear(3, 3, 2).value == 76);
  CHECK(count_linear(4, 3, 2).value == 139);
  CHECK_THROWS_AS(count_linear(2, 2, 2), MissingProvider);
  CHECK_THROWS_AS(count_linear(6, 3, 2), PreconditionError);
}

TEST_CASE("validated linear counts for e = 2") {
  LinearCountValidation v = validate_linear_count(2, 2, 2);
  CHECK(v.passed);
  CHECK(v.oracle_counts == std::vector<BigInt>{3, 15});
  CHECK(count_linear(2, 2, 2, &v).value == 15);
  CHECK_THROWS_AS(count_linear(2, 2, 3, &v), MissingProvider);
  CHECK_THROWS_AS(count_linear(3, 2, 1, &v), MissingProvider);
}

TEST_CASE("field self-dual counts") {
  CHECK(sigma_e(2, 2).value == 1);
  CHECK(sigma_e(5, 2).value == 2);
  CHECK(sigma_e(3, 2).value == 0);
  CHECK(sigma_h(4, 2).value == 3);
  CHECK(sigma_h(9, 2).value == 4);
  CHECK(sigma_e(2, 3).value == 0);
  CHECK_THROWS_AS(sigma_h(2, 2), PreconditionError);
}

TEST_CASE("self-dual counts over R_3(q)") {
  CHECK(count_esd(2, 2).value == 3);
  CHECK(count_esd(3, 4).value == 176);
  CHECK(count_esd(2, 3).value == 0);
  CHECK(count_hsd(4, 2).value == 15);
  CHECK(count_hsd(9, 2).value == 40);
  for (std::uint64_t n = 1; n <= 7; n += 2)
    for (std::uint64_t q : {2, 3, 4, 9}) {
      CHECK(count_esd(q, n).value == 0);
      if (q == 4 || q == 9) CHECK(count_hsd(q, n).value == 0);
      else CHECK_THROWS_AS(count_hsd(q, n), PreconditionError);
    }
  CHECK_FALSE(count_hsd(4, 2).formula.empty());
}

TEST_CASE("certified provider") {
  CertifiedProvider p;
  CHECK(p.nilpotency() == 3);
  CHECK(p.linear(2, 2) == 37);
  CHECK(p.euclidean_self_dual(2, 2) == 3);
  CHECK(p.hermitian_self_dual(4, 2) == 15);
}
