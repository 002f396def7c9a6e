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

#include <string>
#include <vector>

namespace chaincodes {

struct CheckResult {
  std::string name;
  std::string expected;  // closed form
  std::string got;       // independent enumeration
  bool pass = false;
  double seconds = 0;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  // Deterministic: no timings.
  std::string to_text() const;
  std::string to_json() const;
  // One "name seconds" line per check.
  std::string timings() const;
};

struct VerifyOptions {
  // Name of a check whose closed-form side is perturbed; exercises the failure path.
  std::string tamper;
};

// Suites "tiny" and "full" (full includes tiny). Throws ParseError for other names.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& options = {});

std::vector<std::string> verify_check_names(const std::string& suite);

}  // namespace chaincodes
