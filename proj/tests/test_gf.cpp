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

#include <set>

#include "chaincodes/error.hpp"
#include "chaincodes/gf.hpp"
#include "doctest.h"

using namespace chaincodes;

TEST_CASE("canonical moduli") {
  CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::make(2, 3).modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(Field::make(5, 1).order() == 5);
  CHECK(Field::make(3, 4).order() == 81);
  CHECK(Field::make(2, 2) == Field::make(2, 2));
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_AS(Field::make(4, 1), PreconditionError);
  CHECK_THROWS_AS(Field::make(2, 0), PreconditionError);
  CHECK_THROWS_AS(Field::make(2, 30), BoundExceeded);
  CHECK_THROWS_AS(prime_power(12), PreconditionError);
  CHECK(prime_power(81) == std::pair<std::uint32_t, std::uint32_t>{3, 4});
  CHECK(exact_sqrt(49) == 7);
  CHECK(exact_sqrt(8) == 0);
}

TEST_CASE("field axioms for small q") {
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {2u, 3u}, {3u, 2u}}) {
    Field f = Field::make(p, m);
    auto el = f.elements();
    for (auto& a : el) {
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      CHECK(a - a == f.zero());
      for (auto& b : el) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (auto& c : el) CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

TEST_CASE("frobenius additivity and inverses up to 81") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81}) {
    auto [p, m] = prime_power(q);
    Field f = Field::make(p, m);
    auto el = f.elements();
    for (auto& a : el) {
      if (!a.is_zero()) CHECK((a.inverse() * a).is_one());
      for (auto& b : el) CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
    }
  }
  CHECK_THROWS_AS(Field::make(2, 2).zero().inverse(), PreconditionError);
}

TEST_CASE("conjugation in GF(4) and GF(9)") {
  Field f4 = Field::make(2, 2);
  FieldElement w = f4.x();
  CHECK(f4.conjugate(w) == w + f4.one());
  CHECK(f4.conjugate(f4.one()) == f4.one());
  CHECK(f4.trace_to_subfield(w) == f4.one());
  CHECK(f4.trace_to_subfield(f4.zero()) == f4.zero());

  Field f9 = Field::make(3, 2);
  FieldElement i = f9.x();
  CHECK(i * i == -f9.one());
  CHECK(f9.conjugate(i) == -i);
  CHECK(f9.trace_to_subfield(i) == f9.zero());

  CHECK_THROWS_AS(Field::make(2, 3).conjugate(Field::make(2, 3).one()), PreconditionError);
}

TEST_CASE("conjugation is an involution and traces partition the field") {
  for (std::uint64_t q : {4, 9, 16, 25, 49, 64, 81}) {
    auto [p, m] = prime_power(q);
    Field f = Field::make(p, m);
    std::set<std::uint32_t> seen;
    std::size_t subfield = 0;
    for (auto& a : f.elements()) {
      CHECK(f.conjugate(f.conjugate(a)) == a);
      CHECK(f.in_subfield(f.trace_to_subfield(a)));
      if (!f.in_subfield(a)) continue;
      ++subfield;
      auto pre = f.trace_preimage(a);
      CHECK(pre.size() == f.sqrt_order());
      for (auto& x : pre) {
        CHECK(f.trace_to_subfield(x) == a);
        CHECK(seen.insert(x.index()).second);
      }
    }
    CHECK(subfield == f.sqrt_order());
    CHECK(seen.size() == q);
  }
}

TEST_CASE("trace preimages in GF(4)") {
  Field f = Field::make(2, 2);
  FieldElement w = f.x();
  CHECK(f.trace_preimage(f.zero()) == std::vector<FieldElement>{f.zero(), f.one()});
  CHECK(f.trace_preimage(f.one()) == std::vector<FieldElement>{w, w + f.one()});
  CHECK_THROWS_AS(f.trace_preimage(w), PreconditionError);
  CHECK(Field::make(3, 2).trace_preimage(Field::make(3, 2).zero()).size() == 3);
}

TEST_CASE("mixed fields are rejected") {
  Field a = Field::make(2, 2), b = Field::make(3, 2);
  CHECK_THROWS_AS(a.one() + b.one(), MismatchError);
  CHECK_THROWS_AS(a.one() * b.one(), MismatchError);
}
