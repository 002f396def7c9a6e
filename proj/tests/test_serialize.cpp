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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chaincodes/enumerate.hpp"
#include "chaincodes/error.hpp"
#include "chaincodes/serialize.hpp"
#include "doctest.h"

using namespace chaincodes;

TEST_CASE("ring code round trip") {
  for (auto& c : enumerate_submodules(ChainRing(Field::make(2, 2), 3), 2).codes) {
    std::string text = write_code(c);
    LinearCode back = read_code(text);
    CHECK(code_equal(back, c));
    CHECK(write_code(back) == text);
    std::string sf = write_standard_form(c);
    CHECK(write_standard_form(read_code(sf)) == sf);
  }
}

TEST_CASE("general e round trip") {
  ChainRing r(Field::make(3, 1), 4);
  LinearCode c = LinearCode::from_generators(r, 2, {{r.one(), r.u_power(3)}});
  std::string text = write_standard_form(c);
  CHECK(text.find("profile") != std::string::npos);
  CHECK(code_equal(read_code(text), c));
}

TEST_CASE("field code round trip") {
  Field f = Field::make(3, 2);
  FieldCode c = FieldCode::from_generators(f, 3, {{f.one(), f.x(), f.zero()}});
  std::string text = write_field_code(c);
  CHECK(read_field_code(text) == c);
  CHECK(write_field_code(read_field_code(text)) == text);
}

TEST_CASE("malformed files") {
  CHECK_THROWS_AS(read_code("not json"), ParseError);
  CHECK_THROWS_AS(read_code("{\"kind\": \"field_code\"}"), ParseError);
  CHECK_THROWS_AS(read_code("{\"kind\": \"ring_code\", \"p\": 2}"), ParseError);
  CHECK_THROWS_AS(read_code(R"({"kind":"ring_code","p":2,"m":1,"e":3,"n":2,"modulus":[0,1],)"
                            R"("generators":[[[[1]]]]})"),
                  ParseError);
  CHECK_THROWS_AS(read_field_code("[]"), ParseError);
}

TEST_CASE("census directory") {
  auto dir = std::filesystem::temp_directory_path() / "chaincodes_census_test";
  std::filesystem::remove_all(dir);
  Census c = enumerate_self_dual(ChainRing(Field::make(2, 1), 3), 2, InnerProduct::euclidean);
  std::string manifest = write_census(c, dir);
  CHECK(manifest.find("\"count\": \"3\"") != std::string::npos);
  std::size_t files = 0;
  for (auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().filename() == "manifest.json") continue;
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(is_self_dual(read_code(ss.str()), InnerProduct::euclidean));
    ++files;
  }
  CHECK(files == 3);
  std::filesystem::remove_all(dir);
}
