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

#include <stdexcept>
#include <string>

namespace chaincodes {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition does not hold (non-square q, p dividing |A|,
// inverting a non-unit, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Operands belong to different fields/rings or have incompatible shapes.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// A configured size bound would be exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// No certified or validated count is available for the requested parameters.
class MissingProvider : public Error {
 public:
  using Error::Error;
};

// Malformed file or parameter text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace chaincodes
