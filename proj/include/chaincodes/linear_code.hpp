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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "chaincodes/bigint.hpp"
#include "chaincodes/chain_ring.hpp"
#include "chaincodes/field_code.hpp"

namespace chaincodes {

using RingVector = std::vector<ChainRingElement>;
using RingMatrix = std::vector<RingVector>;

// Type {k, l, m} of a code over R_3(q): rows with unit, u and u^2 pivots.
struct CodeType {
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t m = 0;
  friend bool operator==(const CodeType&, const CodeType&) = default;
};

// Generator matrix in block echelon form, up to a column permutation.
//
// Column j of `matrix` is column perm[j] of the code. Row i has the pivot
// u^{row_valuations[i]} in column i, zeros below every pivot, and entries above
// a pivot u^v reduced modulo u^v. Valuations are non-decreasing, so for e = 3
// the rows form the unit, u and u^2 blocks of the classical standard form.
struct StandardForm {
  std::vector<std::size_t> perm;
  std::vector<std::uint32_t> row_valuations;
  RingMatrix matrix;

  // profile()[v] = number of rows with pivot u^v, for v < e.
  std::vector<std::size_t> profile(std::uint32_t e) const;
  // Requires e == 3.
  CodeType type() const;
  // The rows with columns restored to the code's coordinate order.
  RingMatrix unpermuted() const;
};

// An R-submodule of R^n, given by generator rows. The standard form is computed
// on first use and cached; copies share the cache.
class LinearCode {
 public:
  LinearCode() = default;

  static LinearCode from_generators(const ChainRing& ring, std::size_t n, RingMatrix rows);
  static LinearCode zero(const ChainRing& ring, std::size_t n);
  static LinearCode full(const ChainRing& ring, std::size_t n);

  const ChainRing& ring() const { return ring_; }
  std::size_t length() const { return n_; }
  const RingMatrix& generators() const { return gens_; }
  const StandardForm& standard_form() const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<StandardForm> value;
  };

  ChainRing ring_;
  std::size_t n_ = 0;
  RingMatrix gens_;
  std::shared_ptr<Cache> cache_;
};

// Row reduction over R with minimum-valuation pivoting; see StandardForm.
StandardForm compute_standard_form(const ChainRing& ring, std::size_t n, RingMatrix rows);

inline const StandardForm& standard_form(const LinearCode& code) { return code.standard_form(); }
CodeType code_type(const LinearCode& code);

// q^{sum over rows of (e - valuation)}; q^{3k+2l+m} when e = 3.
BigInt cardinality(const LinearCode& code);

ChainRingElement inner_product(const RingVector& a, const RingVector& b, InnerProduct inner);

bool contains(const LinearCode& code, const RingVector& word);
bool is_subcode(const LinearCode& a, const LinearCode& b);
bool code_equal(const LinearCode& a, const LinearCode& b);

// Tor_i(C) = { v mod u : u^i v in C }, i in {0, 1, 2}. Requires e == 3.
FieldCode torsion(const LinearCode& code, std::uint32_t i);
inline FieldCode residue(const LinearCode& code) { return torsion(code, 0); }

LinearCode dual(const LinearCode& code, InnerProduct inner);

// For e = 3: k = h, l = m, and the block congruences
//   A'A'^* = 0 (mod u^3), A'B'^* = 0 (mod u^2), B'B'^* = 0 (mod u), A'C^* = 0 (mod u)
// where * is transpose (Euclidean) or conjugate transpose (Hermitian).
bool self_dual_block_conditions(const StandardForm& form, std::size_t n, InnerProduct inner);

// Block conditions for e = 3, dual(C) == C otherwise.
bool is_self_dual(const LinearCode& code, InnerProduct inner);

// Packed index sum_i index(w_i) |R|^i.
std::uint64_t pack_vector(const RingVector& word);
RingVector unpack_vector(const ChainRing& ring, std::size_t n, std::uint64_t index);

// Every codeword, in a deterministic order. Throws BoundExceeded past `bound`.
std::vector<RingVector> codewords(const LinearCode& code, std::uint64_t bound = std::uint64_t{1} << 24);

// Sorted packed codewords; equal for codes with equal codeword sets.
std::vector<std::uint64_t> fingerprint(const LinearCode& code, std::uint64_t bound = std::uint64_t{1} << 24);

}  // namespace chaincodes
