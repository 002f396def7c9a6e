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

#include <cstdint>
#include <string>
#include <vector>

#include "chaincodes/bigint.hpp"

namespace chaincodes {

// An exact count together with the formula that produced it.
struct CountResult {
  BigInt value;
  std::string formula;
  std::string params;
  bool conjectural = false;
};

// Number of k-dimensional subspaces of F_q^n.
BigInt gaussian(std::uint64_t n, std::uint64_t k, std::uint64_t q);

// The chain-sum count of submodules of R_e(q)^n:
//   1 + sum_{t=1..e} sum_{n >= h_1 >= ... >= h_t > h_{t+1} = 0}
//         prod_j [n - h_{j+1}, h_j - h_{j+1}]_q q^{h_{j+1} (n - h_j)}.
// Proven for e = 3 only; count_linear guards the other values of e.
BigInt linear_count_formula(std::uint64_t q, std::uint32_t e, std::uint64_t n);

// Oracle evidence that linear_count_formula(q, e, n) is right for n = 1..n_max.
struct LinearCountValidation {
  std::uint64_t q = 0;
  std::uint32_t e = 0;
  std::vector<BigInt> oracle_counts;  // index n - 1
  bool passed = false;

  bool covers(std::uint64_t q_, std::uint32_t e_, std::uint64_t n) const {
    return passed && q_ == q && e_ == e && n >= 1 && n <= oracle_counts.size();
  }
};

// N_e(q, n). e = 3 is certified; e in {1, 2, 4} needs a passing validation record.
CountResult count_linear(std::uint64_t q, std::uint32_t e, std::uint64_t n,
                         const LinearCountValidation* validation = nullptr);

CountResult sigma_e(std::uint64_t q, std::uint64_t n);
CountResult sigma_h(std::uint64_t q, std::uint64_t n);
CountResult count_esd(std::uint64_t q, std::uint64_t n);
CountResult count_hsd(std::uint64_t q, std::uint64_t n);

// Counts of linear / Euclidean self-dual / Hermitian self-dual codes of length n
// over R_e(q) for one fixed e, as consumed by the quasi-abelian counts.
class CodeCountProvider {
 public:
  virtual ~CodeCountProvider() = default;
  virtual std::uint32_t nilpotency() const = 0;
  virtual std::string label() const = 0;
  virtual BigInt linear(std::uint64_t q, std::uint64_t n) const = 0;
  virtual BigInt euclidean_self_dual(std::uint64_t q, std::uint64_t n) const = 0;
  virtual BigInt hermitian_self_dual(std::uint64_t q, std::uint64_t n) const = 0;
};

// Closed forms for e = 3.
class CertifiedProvider final : public CodeCountProvider {
 public:
  std::uint32_t nilpotency() const override { return 3; }
  std::string label() const override { return "certified e=3 closed forms"; }
  BigInt linear(std::uint64_t q, std::uint64_t n) const override;
  BigInt euclidean_self_dual(std::uint64_t q, std::uint64_t n) const override;
  BigInt hermitian_self_dual(std::uint64_t q, std::uint64_t n) const override;
};

}  // namespace chaincodes
