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

#include <algorithm>
#include <set>

#include "chaincodes/counting.hpp"
#include "chaincodes/enumerate.hpp"
#include "chaincodes/error.hpp"
#include "doctest.h"

using namespace chaincodes;

namespace {

ChainRing ring(std::uint32_t p, std::uint32_t m, std::uint32_t e) { return ChainRing(Field::make(p, m), e); }

bool same_set(const Census& a, const Census& b) {
  if (a.size() != b.size()) return false;
  for (auto& c : a.codes) {
    bool found = false;
    for (auto& d : b.codes) found = found || code_equal(c, d);
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("submodule census sizes") {
  CHECK(enumerate_submodules(ring(2, 1, 3), 1).size() == 4);
  CHECK(enumerate_submodules(ring(2, 1, 3), 2).size() == 37);
  CHECK(enumerate_submodules(ring(3, 1, 3), 2).size() == 76);
  CHECK(enumerate_submodules(ring(2, 2, 3), 2).size() == 139);
  CHECK(enumerate_submodules(ring(2, 1, 2), 2).size() == 15);
  CHECK_THROWS_AS(enumerate_submodules(ring(2, 1, 3), 2, 10), BoundExceeded);
}

TEST_CASE("census members are distinct and sorted") {
  Census c = enumerate_submodules(ring(2, 1, 3), 2);
  CHECK(std::is_sorted(c.fingerprints.begin(), c.fingerprints.end()));
  std::set<std::vector<std::uint64_t>> seen(c.fingerprints.begin(), c.fingerprints.end());
  CHECK(seen.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(fingerprint(c.codes[i]) == c.fingerprints[i]);
}

TEST_CASE("self-dual censuses") {
  CHECK(enumerate_self_dual(ring(2, 1, 3), 2, InnerProduct::euclidean).size() == 3);
  CHECK(enumerate_self_dual(ring(3, 1, 3), 2, InnerProduct::euclidean).size() == 0);
  CHECK(enumerate_self_dual(ring(2, 2, 3), 2, InnerProduct::hermitian).size() == 15);
  CHECK(enumerate_self_dual(ring(2, 1, 3), 1, InnerProduct::euclidean).size() == 0);
  CHECK(enumerate_self_dual(ring(2, 2, 3), 1, InnerProduct::hermitian).size() == 0);
  CHECK(enumerate_self_dual(ring(2, 1, 2), 1, InnerProduct::euclidean).size() == 1);
}

TEST_CASE("field subspaces and field self-dual codes") {
  Field f2 = Field::make(2, 1), f3 = Field::make(3, 1), f4 = Field::make(2, 2), f5 = Field::make(5, 1),
        f9 = Field::make(3, 2);
  CHECK(enumerate_field_subspaces(f2, 4, 2).size() == 35);
  CHECK(enumerate_field_subspaces(f3, 3, 0).size() == 1);
  CHECK(enumerate_field_self_dual(f2, 2, InnerProduct::euclidean).size() == 1);
  CHECK(enumerate_field_self_dual(f5, 2, InnerProduct::euclidean).size() == 2);
  CHECK(enumerate_field_self_dual(f3, 2, InnerProduct::euclidean).size() == 0);
  CHECK(enumerate_field_self_dual(f4, 2, InnerProduct::hermitian).size() == 3);
  CHECK(enumerate_field_self_dual(f9, 2, InnerProduct::hermitian).size() == 4);
}

TEST_CASE("extension with k = 0") {
  ChainRing r = ring(2, 2, 3);
  Field f = r.field();
  FieldCode c1 = FieldCode::from_generators(f, 2, {{f.one(), f.one()}});
  HermitianExtension ext(c1, FieldCode::zero(f, 2));
  CHECK(ext.k() == 0);
  CHECK(ext.l() == 1);
  CHECK(ext.total() == 1);
  auto c = ext.next();
  REQUIRE(c.has_value());
  auto u = r.u_power(1), u2 = r.u_power(2), z = r.zero();
  CHECK(code_equal(*c, LinearCode::from_generators(r, 2, {{u, u}, {z, u2}})));
  CHECK_FALSE(ext.next().has_value());
}

TEST_CASE("extension with k = 1") {
  Field f = Field::make(2, 2);
  FieldCode c1 = FieldCode::from_generators(f, 2, {{f.one(), f.one()}});
  HermitianExtension ext(c1, c1);
  CHECK(ext.total() == 4);
  std::vector<LinearCode> out;
  while (auto c = ext.next()) out.push_back(*c);
  REQUIRE(out.size() == 4);
  FieldCode tor2 = dual(c1, InnerProduct::hermitian);
  for (std::size_t i = 0; i < out.size(); ++i) {
    CHECK(is_self_dual(out[i], InnerProduct::hermitian));
    CHECK(torsion(out[i], 0) == c1);
    CHECK(torsion(out[i], 1) == c1);
    CHECK(torsion(out[i], 2) == tor2);
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(code_equal(out[i], out[j]));
  }
}

TEST_CASE("extension rejects bad inputs") {
  Field f = Field::make(2, 2);
  FieldCode c1 = FieldCode::from_generators(f, 2, {{f.one(), f.zero()}});
  CHECK_THROWS_AS(HermitianExtension(c1, FieldCode::zero(f, 2)), PreconditionError);
  Field f2 = Field::make(2, 1);
  FieldCode e1 = FieldCode::from_generators(f2, 2, {{f2.one(), f2.one()}});
  CHECK_THROWS_AS(HermitianExtension(e1, e1), PreconditionError);
}

TEST_CASE("constructive census equals the oracle") {
  Census oracle = enumerate_self_dual(ring(2, 2, 3), 2, InnerProduct::hermitian);
  Census built = enumerate_hsd_constructive(4, 2);
  CHECK(built.size() == 15);
  CHECK(built.fingerprints == oracle.fingerprints);
  CHECK(same_set(built, oracle));
  CHECK(enumerate_hsd_constructive(9, 2).size() == 40);
}

TEST_CASE("standard-form enumeration") {
  CHECK(enumerate_self_dual_standard_forms(ring(2, 1, 3), 2, InnerProduct::euclidean).size() == 3);
  Census h = enumerate_self_dual_standard_forms(ring(2, 2, 3), 2, InnerProduct::hermitian);
  CHECK(h.fingerprints == enumerate_self_dual(ring(2, 2, 3), 2, InnerProduct::hermitian).fingerprints);
  CHECK(enumerate_self_dual_standard_forms(ring(3, 2, 3), 2, InnerProduct::hermitian).size() == 40);
  CHECK(enumerate_self_dual_standard_forms(ring(2, 1, 3), 3, InnerProduct::euclidean).size() == 0);
}

TEST_CASE("oracle count provider") {
  OracleCountProvider p(2);
  CHECK(p.nilpotency() == 2);
  CHECK(p.linear(2, 2) == 15);
  CHECK(p.euclidean_self_dual(2, 2) == enumerate_self_dual(ring(2, 1, 2), 2, InnerProduct::euclidean).size());
  OracleCountProvider p3(3);
  CHECK(p3.linear(2, 2) == 37);
  CHECK(p3.hermitian_self_dual(4, 2) == 15);
}
