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

#include "chaincodes/enumerate.hpp"
#include "chaincodes/error.hpp"
#include "chaincodes/linear_code.hpp"
#include "doctest.h"

using namespace chaincodes;

namespace {

ChainRing ring(std::uint32_t p, std::uint32_t m, std::uint32_t e) { return ChainRing(Field::make(p, m), e); }

// Every word orthogonal to all generators, by scanning R^n.
std::vector<std::uint64_t> scan_dual(const LinearCode& c, InnerProduct inner) {
  const ChainRing& r = c.ring();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.length(); ++i) total *= r.order();
  std::vector<std::uint64_t> out;
  for (std::uint64_t w = 0; w < total; ++w) {
    RingVector v = unpack_vector(r, c.length(), w);
    bool ok = true;
    for (auto& g : c.generators()) ok = ok && inner_product(v, g, inner).is_zero();
    if (ok) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("codes from generators") {
  ChainRing r = ring(2, 1, 3);
  auto one = r.one();
  LinearCode c = LinearCode::from_generators(r, 2, {{one, one}});
  CHECK(code_type(c) == CodeType{1, 0, 0});
  CHECK(cardinality(c) == 8);
  CHECK(codewords(c).size() == 8);

  LinearCode z = LinearCode::from_generators(r, 2, {});
  CHECK(code_type(z) == CodeType{0, 0, 0});
  CHECK(cardinality(z) == 1);
  CHECK(z.standard_form().matrix.empty());

  CHECK_THROWS_AS(LinearCode::from_generators(r, 2, {{one}}), MismatchError);
}

TEST_CASE("type {0,1,1} code over R_3(4)") {
  ChainRing r = ring(2, 2, 3);
  auto u = r.u_power(1), u2 = r.u_power(2), z = r.zero();
  LinearCode c = LinearCode::from_generators(r, 2, {{u, u}, {z, u2}});
  CHECK(code_type(c) == CodeType{0, 1, 1});
  CHECK(cardinality(c) == 64);
  CHECK(codewords(c).size() == 64);
  CHECK(torsion(c, 0).dimension() == 0);
  CHECK(torsion(c, 1).dimension() == 1);
  CHECK(torsion(c, 2).dimension() == 2);
  CHECK(is_self_dual(c, InnerProduct::hermitian));
  CHECK(scan_dual(c, InnerProduct::hermitian) == fingerprint(c));
}

TEST_CASE("membership") {
  ChainRing r = ring(2, 1, 3);
  auto one = r.one(), u = r.u_power(1), z = r.zero();
  LinearCode c = LinearCode::from_generators(r, 2, {{one, one}});
  CHECK(contains(c, {u, u}));
  CHECK_FALSE(contains(c, {one, z}));
  CHECK(contains(c, {z, z}));
  CHECK(contains(LinearCode::zero(r, 2), {z, z}));
  CHECK_THROWS_AS(contains(c, {z}), MismatchError);
}

TEST_CASE("torsion codes") {
  ChainRing r = ring(2, 1, 3);
  Field f = r.field();
  auto one = r.one(), u = r.u_power(1);
  FieldCode ones = FieldCode::from_generators(f, 2, {{f.one(), f.one()}});

  LinearCode c = LinearCode::from_generators(r, 2, {{u, u}});
  CHECK(torsion(c, 0) == FieldCode::zero(f, 2));
  CHECK(torsion(c, 1) == ones);
  CHECK(torsion(c, 2) == ones);

  LinearCode d = LinearCode::from_generators(r, 2, {{one, one}});
  for (std::uint32_t i = 0; i < 3; ++i) CHECK(torsion(d, i) == ones);

  CHECK_THROWS_AS(torsion(LinearCode::zero(ring(2, 1, 2), 2), 0), PreconditionError);
}

TEST_CASE("duals") {
  ChainRing r = ring(2, 1, 3);
  auto one = r.one(), u = r.u_power(1), z = r.zero();
  CHECK(code_equal(dual(LinearCode::zero(r, 3), InnerProduct::euclidean), LinearCode::full(r, 3)));
  CHECK(code_equal(dual(LinearCode::full(r, 3), InnerProduct::euclidean), LinearCode::zero(r, 3)));

  LinearCode c = LinearCode::from_generators(r, 4, {{one, z, z, z}, {z, u, z, z}});
  CHECK(code_type(c) == CodeType{1, 1, 0});
  CHECK(code_type(dual(c, InnerProduct::euclidean)) == CodeType{2, 0, 1});

  LinearCode s = LinearCode::from_generators(r, 2, {{one, one}});
  CHECK(code_equal(dual(s, InnerProduct::euclidean), s));
  CHECK(scan_dual(s, InnerProduct::euclidean) == fingerprint(s));
  CHECK(is_self_dual(s, InnerProduct::euclidean));

  CHECK_THROWS_AS(dual(s, InnerProduct::hermitian), PreconditionError);
}

TEST_CASE("odd length is never Hermitian self-dual") {
  ChainRing r = ring(2, 2, 3);
  for (auto& c : enumerate_submodules(r, 1).codes) CHECK_FALSE(is_self_dual(c, InnerProduct::hermitian));
}

TEST_CASE("code equality") {
  ChainRing r = ring(2, 1, 3);
  auto one = r.one(), u = r.u_power(1);
  LinearCode a = LinearCode::from_generators(r, 2, {{one, one}});
  LinearCode b = LinearCode::from_generators(r, 2, {{u, u}});
  LinearCode c = LinearCode::from_generators(r, 2, {{one, one}, {u, u}});
  CHECK_FALSE(code_equal(a, b));
  CHECK(code_equal(a, c));
  CHECK(code_equal(a, LinearCode::from_generators(r, 2, a.standard_form().unpermuted())));
  CHECK_THROWS_AS(code_equal(a, LinearCode::zero(r, 3)), MismatchError);
}

TEST_CASE("computed duals agree with scanning on the census") {
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    ChainRing r = ring(p, m, 3);
    for (auto& c : enumerate_submodules(r, 2).codes) {
      for (InnerProduct inner : {InnerProduct::euclidean, InnerProduct::hermitian}) {
        if (inner == InnerProduct::hermitian && !r.has_conjugation()) continue;
        LinearCode d = dual(c, inner);
        CHECK(fingerprint(d) == scan_dual(c, inner));
        CHECK(is_self_dual(c, inner) == code_equal(c, d));
      }
    }
  }
}

TEST_CASE("standard form is idempotent and generates the code") {
  for (auto& c : enumerate_submodules(ring(2, 2, 3), 2).codes) {
    const StandardForm& f = c.standard_form();
    LinearCode again = LinearCode::from_generators(c.ring(), 2, f.unpermuted());
    CHECK(code_equal(again, c));
    CHECK(code_type(again) == code_type(c));
    CHECK(std::is_sorted(f.row_valuations.begin(), f.row_valuations.end()));
    CodeType t = code_type(c);
    CHECK(torsion(c, 0).dimension() == t.k);
    CHECK(torsion(c, 1).dimension() == t.k + t.l);
    CHECK(torsion(c, 2).dimension() == t.k + t.l + t.m);
    CHECK(torsion(c, 0).is_subcode_of(torsion(c, 1)));
    CHECK(torsion(c, 1).is_subcode_of(torsion(c, 2)));
  }
}

TEST_CASE("general e") {
  ChainRing r = ring(2, 1, 4);
  auto u = r.u_power(1), one = r.one();
  LinearCode c = LinearCode::from_generators(r, 2, {{one, u}, {u * u, u * u}});
  CHECK(cardinality(c) == codewords(c).size());
  CHECK_THROWS_AS(code_type(c), PreconditionError);
  CHECK(c.standard_form().profile(4).size() == 4);
}

TEST_CASE("field code duals") {
  Field f = Field::make(2, 2);
  FieldCode c = FieldCode::from_generators(f, 2, {{f.one(), f.one()}});
  CHECK(is_self_dual(c, InnerProduct::hermitian));
  CHECK(is_self_dual(c, InnerProduct::euclidean));
  CHECK(dual(FieldCode::zero(f, 3), InnerProduct::euclidean) == FieldCode::full(f, 3));
  FieldCode w = FieldCode::from_generators(f, 2, {{f.one(), f.zero()}});
  CHECK_FALSE(is_self_dual(w, InnerProduct::hermitian));
}
