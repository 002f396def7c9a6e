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
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "chaincodes/counting.hpp"
#include "chaincodes/field_code.hpp"
#include "chaincodes/linear_code.hpp"

namespace chaincodes {

inline constexpr std::uint64_t kDefaultOracleBound = std::uint64_t{1} << 24;

enum class CensusFilter { all, euclidean_sd, hermitian_sd };
const char* to_string(CensusFilter filter);

// Deduplicated codes ordered by fingerprint (sorted packed codeword list,
// compared lexicographically).
struct Census {
  ChainRing ring;
  std::size_t n = 0;
  CensusFilter filter = CensusFilter::all;
  std::vector<LinearCode> codes;
  std::vector<std::vector<std::uint64_t>> fingerprints;

  std::size_t size() const { return codes.size(); }
};

// Every R-submodule of R^n, found as sums of at most n cyclic submodules.
// Requires |R|^n <= bound.
Census enumerate_submodules(const ChainRing& ring, std::size_t n, std::uint64_t bound = kDefaultOracleBound);

// Members C of the full census with C equal to its dual, the dual computed by
// scanning all of R^n.
Census enumerate_self_dual(const ChainRing& ring, std::size_t n, InnerProduct inner,
                           std::uint64_t bound = kDefaultOracleBound);

// Every k-dimensional subspace of F_q^n, as spans of k-tuples of vectors.
std::vector<FieldCode> enumerate_field_subspaces(const Field& field, std::size_t n, std::size_t k,
                                                 std::uint64_t bound = kDefaultOracleBound);
// Self-dual codes of length n over F_q by the same brute force.
std::vector<FieldCode> enumerate_field_self_dual(const Field& field, std::size_t n, InnerProduct inner,
                                                 std::uint64_t bound = kDefaultOracleBound);

// Lazily yields the q^{kn/2} Hermitian self-dual codes C over R_3(q) with
// Tor_1(C) = c1 and Res(C) = c0, where k = dim c0.
//
// Columns are grouped into blocks of sizes k, l, l, k (l = n/2 - k) so that c0,
// c1 and the Hermitian dual of c0 have generator matrices
//   [I A2 A30 A40], [0 I B3 B40], [0 0 I C4]
// with A40 invertible. The free data are A31 (k x l), and the upper triangle
// plus trace-preimage diagonal of A40 A41^* and A40 A42^*; B41 and C4 follow.
class HermitianExtension {
 public:
  HermitianExtension(const FieldCode& c1, const FieldCode& c0);

  std::size_t k() const { return k_; }
  std::size_t l() const { return l_; }
  // Column order used for the blocks: permuted column j is code column columns()[j].
  const std::vector<std::size_t>& columns() const { return columns_; }
  // q^{kn/2}
  BigInt total() const;

  std::optional<LinearCode> next();

 private:
  LinearCode build() const;

  ChainRing ring_;
  Field field_;
  std::size_t n_ = 0, k_ = 0, l_ = 0;
  std::vector<std::size_t> columns_;
  FieldMatrix a2_, a30_, a40_, a40_inv_, b3_, b40_;
  // digits_ layout: A31 entries, then X upper triangle, X diagonal, Y upper, Y diagonal.
  std::vector<std::uint64_t> digits_, radix_;
  bool done_ = false;
};

inline HermitianExtension hermitian_sd_extend(const FieldCode& c1, const FieldCode& c0) {
  return HermitianExtension(c1, c0);
}

// All Hermitian self-dual codes over R_3(q) of length n built from every
// Hermitian self-dual C1 over F_q and every subspace C0 of C1.
Census enumerate_hsd_constructive(std::uint64_t q, std::size_t n, std::uint64_t bound = kDefaultOracleBound);

// Distinct self-dual codes over R_3(q) found by running over every block
// column assignment and every standard-form matrix of type {k, l, l},
// n = 2(k + l), keeping those that satisfy the block congruences.
Census enumerate_self_dual_standard_forms(const ChainRing& ring, std::size_t n, InnerProduct inner,
                                          std::uint64_t bound = kDefaultOracleBound);

// Counts for small fixed e backed by the census oracles; results are cached.
class OracleCountProvider final : public CodeCountProvider {
 public:
  explicit OracleCountProvider(std::uint32_t e, std::uint64_t bound = kDefaultOracleBound) : e_(e), bound_(bound) {}

  std::uint32_t nilpotency() const override { return e_; }
  std::string label() const override { return "oracle census, e=" + std::to_string(e_); }
  BigInt linear(std::uint64_t q, std::uint64_t n) const override;
  BigInt euclidean_self_dual(std::uint64_t q, std::uint64_t n) const override;
  BigInt hermitian_self_dual(std::uint64_t q, std::uint64_t n) const override;

 private:
  BigInt lookup(int kind, std::uint64_t q, std::uint64_t n) const;

  std::uint32_t e_;
  std::uint64_t bound_;
  mutable std::mutex mu_;
  mutable std::map<std::tuple<int, std::uint64_t, std::uint64_t>, BigInt> cache_;
};

// Runs the submodule census for n = 1..n_max and compares each size with
// linear_count_formula(q, e, n).
LinearCountValidation validate_linear_count(std::uint64_t q, std::uint32_t e, std::uint64_t n_max,
                                            std::uint64_t bound = kDefaultOracleBound);

// R_e(q) for a prime power q.
ChainRing make_ring(std::uint64_t q, std::uint32_t e);

}  // namespace chaincodes
