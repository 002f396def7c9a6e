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

#include "chaincodes/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <utility>

#include "chaincodes/counting.hpp"
#include "chaincodes/enumerate.hpp"
#include "chaincodes/error.hpp"
#include "chaincodes/quasi_abelian.hpp"
#include "json.hpp"

namespace chaincodes {

namespace {

struct Check {
  std::string name;
  // Returns (closed form, enumeration).
  std::function<std::pair<BigInt, BigInt>()> run;
};

BigInt sz(const Census& c) { return BigInt(c.size()); }

// Counts from census oracles with self-dual counts taken from the standard-form
// enumerator; used to recompute the quasi-abelian products factor by factor.
class StandardFormProvider final : public CodeCountProvider {
 public:
  std::uint32_t nilpotency() const override { return 3; }
  std::string label() const override { return "standard-form enumeration"; }
  BigInt linear(std::uint64_t q, std::uint64_t n) const override {
    return sz(enumerate_submodules(make_ring(q, 3), n));
  }
  BigInt euclidean_self_dual(std::uint64_t q, std::uint64_t n) const override {
    return sz(enumerate_self_dual_standard_forms(make_ring(q, 3), n, InnerProduct::euclidean));
  }
  BigInt hermitian_self_dual(std::uint64_t q, std::uint64_t n) const override {
    return sz(enumerate_self_dual_standard_forms(make_ring(q, 3), n, InnerProduct::hermitian));
  }
};

std::uint64_t direct_scan(std::uint64_t j, std::uint64_t q, bool odd_only) {
  // j | q^t + 1 for some t in 1..2j (the residues of q^t repeat within j steps).
  std::uint64_t x = 1;
  for (std::uint64_t t = 1; t <= 2 * j; ++t) {
    x = x * (q % j) % j;
    if ((!odd_only || t % 2 == 1) && (x + 1) % j == 0) return 0;
  }
  return 1;
}

std::pair<BigInt, BigInt> chi_lambda_table() {
  // Number of (j, q) pairs where chi, lambda and the implication all agree.
  std::uint64_t total = 0, agree = 0;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const std::uint64_t p = prime_power(q).first;
    for (std::uint64_t j = 1; j <= 20; ++j) {
      if (j % p == 0) continue;
      ++total;
      const int c = chi(j, q), l = lambda_fn(j, q);
      if (std::uint64_t(c) == direct_scan(j, q, false) && std::uint64_t(l) == direct_scan(j, q, true) &&
          !(l == 0 && c != 0))
        ++agree;
    }
  }
  return {BigInt(total), BigInt(agree)};
}

std::pair<BigInt, BigInt> zps_homomorphism() {
  // Pairs (x, y) in F_3[Z_3] on which zps_iso is additive and multiplicative,
  // plus the number of distinct images; expected 729 + 27.
  const Field f = Field::make(3, 1);
  const AbelianGroup z({3});
  std::vector<GroupAlgebraElement> all;
  for (std::uint64_t v = 0; v < 27; ++v) {
    GroupAlgebraElement x(f, z);
    for (std::uint64_t i = 0, t = v; i < 3; ++i, t /= 3) x.set({i}, f.element(t % 3));
    all.push_back(x);
  }
  std::uint64_t good = 0;
  std::set<std::uint64_t> images;
  for (const auto& x : all) {
    images.insert(zps_iso(x).index());
    for (const auto& y : all)
      if (zps_iso(x + y) == zps_iso(x) + zps_iso(y) && zps_iso(x * y) == zps_iso(x) * zps_iso(y)) ++good;
  }
  return {BigInt(729 + 27), BigInt(good + images.size())};
}

std::vector<Check> tiny_checks() {
  std::vector<Check> c;
  for (std::uint64_t n : {1, 2, 3})
    c.push_back({"N3(2," + std::to_string(n) + ") submodule census", [n] {
                   return std::pair{count_linear(2, 3, n).value, sz(enumerate_submodules(make_ring(2, 3), n))};
                 }});
  c.push_back({"N2(2,1) submodule census", [] {
                 return std::pair{linear_count_formula(2, 2, 1), sz(enumerate_submodules(make_ring(2, 2), 1))};
               }});
  const std::pair<std::uint64_t, std::uint64_t> esd[] = {{2, 1}, {2, 2}, {3, 2}, {4, 2}};
  for (auto [q, n] : esd)
    c.push_back({"NE3(" + std::to_string(q) + "," + std::to_string(n) + ") self-dual census", [q, n] {
                   return std::pair{count_esd(q, n).value,
                                    sz(enumerate_self_dual(make_ring(q, 3), n, InnerProduct::euclidean))};
                 }});
  for (std::uint64_t n : {1, 2})
    c.push_back({"NH3(4," + std::to_string(n) + ") self-dual census", [n] {
                   return std::pair{count_hsd(4, n).value,
                                    sz(enumerate_self_dual(make_ring(4, 3), n, InnerProduct::hermitian))};
                 }});
  for (std::uint64_t q : {2, 3, 4, 5, 9})
    for (std::uint64_t n : {1, 2}) {
      c.push_back({"sigmaE(" + std::to_string(q) + "," + std::to_string(n) + ") field census", [q, n] {
                     const auto [p, m] = prime_power(q);
                     return std::pair{
                         sigma_e(q, n).value,
                         BigInt(enumerate_field_self_dual(Field::make(p, m), n, InnerProduct::euclidean).size())};
                   }});
      if (exact_sqrt(q) != 0)
        c.push_back({"sigmaH(" + std::to_string(q) + "," + std::to_string(n) + ") field census", [q, n] {
                       const auto [p, m] = prime_power(q);
                       return std::pair{
                           sigma_h(q, n).value,
                           BigInt(enumerate_field_self_dual(Field::make(p, m), n, InnerProduct::hermitian).size())};
                     }});
    }
  for (std::size_t k : {0, 1})
    c.push_back({"extension count q=4 C1=<(1,1)> k=" + std::to_string(k), [k] {
                   const Field f = Field::make(2, 2);
                   const FieldCode c1 = FieldCode::from_generators(f, 2, {{f.one(), f.one()}});
                   const FieldCode c0 = k == 0 ? FieldCode::zero(f, 2) : c1;
                   HermitianExtension ext(c1, c0);
                   std::set<std::vector<std::uint64_t>> seen;
                   while (auto code = ext.next())
                     if (is_self_dual(*code, InnerProduct::hermitian)) seen.insert(fingerprint(*code));
                   return std::pair{boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(k)),
                                    BigInt(seen.size())};
                 }});
  c.push_back({"chi/lambda direct scan j<=20", chi_lambda_table});
  c.push_back({"zps_iso homomorphism F3[Z3]", zps_homomorphism});
  return c;
}

std::vector<Check> full_checks() {
  std::vector<Check> c = tiny_checks();
  c.push_back({"NE3(2,4) standard forms", [] {
                 return std::pair{count_esd(2, 4).value,
                                  sz(enumerate_self_dual_standard_forms(make_ring(2, 3), 4, InnerProduct::euclidean))};
               }});
  c.push_back({"NH3(4,2) constructive = oracle", [] {
                 const Census a = enumerate_hsd_constructive(4, 2);
                 const Census b = enumerate_self_dual(make_ring(4, 3), 2, InnerProduct::hermitian);
                 return std::pair{count_hsd(4, 2).value, BigInt(a.fingerprints == b.fingerprints ? a.size() : 0)};
               }});
  c.push_back({"NH3(9,2) constructive", [] { return std::pair{count_hsd(9, 2).value, sz(enumerate_hsd_constructive(9, 2))}; }});
  c.push_back({"NE3(3,4) standard forms", [] {
                 return std::pair{count_esd(3, 4).value,
                                  sz(enumerate_self_dual_standard_forms(make_ring(3, 3), 4, InnerProduct::euclidean))};
               }});
  c.push_back({"NH3(9,2) standard forms", [] {
                 return std::pair{count_hsd(9, 2).value,
                                  sz(enumerate_self_dual_standard_forms(make_ring(9, 3), 2, InnerProduct::hermitian))};
               }});
  c.push_back({"QA N(3,1,1,Z2,1) ideal census", [] {
                 const AbelianGroup a({2});
                 return std::pair{count_qa(3, 1, 1, a, 1).value,
                                  BigInt(group_algebra_ideal_count(Field::make(3, 1), a.product(AbelianGroup({3}))))};
               }});
  c.push_back({"QA NE(3,1,1,Z2,4) factor oracle", [] {
                 const StandardFormProvider sf;
                 return std::pair{count_qa_esd(3, 1, 1, AbelianGroup({2}), 4).value,
                                  count_qa_esd(3, 1, 1, AbelianGroup({2}), 4, &sf).value};
               }});
  c.push_back({"QA NH(3,2,1,Z2,2) factor oracle", [] {
                 const StandardFormProvider sf;
                 return std::pair{count_qa_hsd(3, 2, 1, AbelianGroup({2}), 2).value,
                                  count_qa_hsd(3, 2, 1, AbelianGroup({2}), 2, &sf).value};
               }});
  return c;
}

std::vector<Check> suite_checks(const std::string& suite) {
  if (suite == "tiny") return tiny_checks();
  if (suite == "full") return full_checks();
  throw ParseError("unknown verification suite '" + suite + "' (expected tiny or full)");
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerifyReport::to_text() const {
  std::string s = "suite " + suite + "\n";
  std::size_t passed = 0;
  for (const auto& c : checks) {
    s += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name + "  expected=" + c.expected + "  got=" + c.got + "\n";
    passed += c.pass;
  }
  s += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed\n";
  return s;
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
  j["all_pass"] = all_pass();
  return j.dump(2) + "\n";
}

std::string VerifyReport::timings() const {
  std::string s;
  char buf[64];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof buf, "%.3fs", c.seconds);
    s += c.name + "  " + buf + "\n";
  }
  return s;
}

std::vector<std::string> verify_check_names(const std::string& suite) {
  std::vector<std::string> out;
  for (const auto& c : suite_checks(suite)) out.push_back(c.name);
  return out;
}

VerifyReport run_verify(const std::string& suite, const VerifyOptions& options) {
  VerifyReport report;
  report.suite = suite;
  for (const auto& check : suite_checks(suite)) {
    CheckResult r;
    r.name = check.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      auto [expected, got] = check.run();
      if (options.tamper == check.name) expected += 1;
      r.expected = to_decimal(expected);
      r.got = to_decimal(got);
      r.pass = expected == got;
    } catch (const Error& e) {
      r.expected = "?";
      r.got = std::string("error: ") + e.what();
      r.pass = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace chaincodes
