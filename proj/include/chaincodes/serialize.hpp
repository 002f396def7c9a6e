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

#pragma once

#include <filesystem>
#include <string>

#include "chaincodes/enumerate.hpp"
#include "chaincodes/field_code.hpp"
#include "chaincodes/linear_code.hpp"

namespace chaincodes {

// Code files are JSON objects:
//   {"kind": "ring_code", "p", "m", "e", "n", "modulus": [c_0, ..., 1],
//    "generators": rows of n entries, each entry e lists of m coefficients}
// Field code files use "kind": "field_code" and a "basis" of m-coefficient entries.
// Writing a parsed file reproduces it byte for byte.

std::string write_code(const LinearCode& code);
// Adds a "standard_form" object (perm, valuations, type for e = 3) and uses
// the standard-form rows, restored to code coordinates, as generators.
std::string write_standard_form(const LinearCode& code);
LinearCode read_code(const std::string& text);

std::string write_field_code(const FieldCode& code);
FieldCode read_field_code(const std::string& text);

// One code file per census member plus manifest.json; returns the manifest text.
std::string write_census(const Census& census, const std::filesystem::path& dir);

}  // namespace chaincodes
