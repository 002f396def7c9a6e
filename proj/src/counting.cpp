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

#include "chaincodes/counting.hpp"

#include <functional>

#include "chaincodes/error.hpp"
#include "chaincodes/gf.hpp"

namespace chaincodes {

namespace {

using boost::multiprecision::pow;

BigInt big_pow(std::uint64_t base, std::uint64_t exp) { return pow(BigInt(base), static_cast<unsigned>(exp)); }

std::string qn_params(std::uint64_t q, std::uint64_t n) {
  return "q=" + std::to_string(q) + " n=" + std::to_string(n);
}

void require_prime_power(std::uint64_t q) { prime_power(q); }

void require_length(std::uint64_t n) {
  if (n < 1) throw PreconditionError("code length must be positive");
}

std::uint64_t require_square(std::uint64_t q) {
  const std::uint64_t r = exact_sqrt(q);
  if (r == 0) throw PreconditionError("q = " + std::to_string(q) + " is not a square");
  return r;
}

// prod_{i=1}^{n/2-1} (q^i + 1)
BigInt sigma_product(std::uint64_t q, std::uint64_t n) {
  BigInt r = 1;
  for (std::uint64_t i = 1; i + 1 <= n / 2; ++i) r *= big_pow(q, i) + 1;
  return r;
}

BigInt self_dual_sum(std::uint64_t q, std::uint64_t n, bool q_even) {
  const std::uint64_t half = n / 2;
  BigInt s = 0;
  for (std::uint64_t k = 0; k <= half; ++k) {
    const std::uint64_t exp = q_even ? k * half : k * (half - 1);
    s += gaussian(half, k, q) * big_pow(q, exp);
  }
  return s;
}

}  // namespace

BigInt gaussian(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) throw PreconditionError("gaussian coefficient needs k <= n");
  if (q < 2) throw PreconditionError("gaussian coefficient needs q >= 2");
  BigInt num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= big_pow(q, n) - big_pow(q, i);
    den *= big_pow(q, k) - big_pow(q, i);
  }
  return num / den;
}

BigInt linear_count_formula(std::uint64_t q, std::uint32_t e, std::uint64_t n) {
  BigInt total = 1;
  // h holds h_1 >= ... >= h_t; the product runs over j with h_{t+1} = 0.
  std::vector<std::uint64_t> h;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t upper) {
    for (std::uint64_t next = 1; next <= upper; ++next) {
      h.push_back(next);
      BigInt term = 1;
      for (std::size_t j = 0; j < h.size(); ++j) {
        const std::uint64_t hj = h[j];
        const std::uint64_t hj1 = j + 1 < h.size() ? h[j + 1] : 0;
        term *= gaussian(n - hj1, hj - hj1, q) * big_pow(q, hj1 * (n - hj));
      }
      total += term;
      if (h.size() < e) extend(next);
      h.pop_back();
    }
  };
  extend(n);
  return total;
}

CountResult count_linear(std::uint64_t q, std::uint32_t e, std::uint64_t n, const LinearCountValidation* validation) {
  require_prime_power(q);
  require_length(n);
  CountResult r;
  r.params = qn_params(q, n) + " e=" + std::to_string(e);
  if (e == 3) {
    r.value = linear_count_formula(q, 3, n);
    r.formula = "N_3 chain-sum formula";
    return r;
  }
  if (e != 1 && e != 2 && e != 4) {
    throw PreconditionError("count_linear supports e = 3 (certified) or e in {1, 2, 4} (oracle-validated)");
  }
  if (validation == nullptr || !validation->covers(q, e, n)) {
    throw MissingProvider("N_" + std::to_string(e) + "(" + std::to_string(q) + ", " + std::to_string(n) +
                          ") is conjectural and has no passing oracle validation record");
  }
  r.value = linear_count_formula(q, e, n);
  if (r.value != validation->oracle_counts[n - 1]) {
    throw MissingProvider("validation record disagrees with the generalized formula");
  }
  r.formula = "N_e chain-sum formula, oracle-validated";
  r.conjectural = true;
  return r;
}

CountResult sigma_e(std::uint64_t q, std::uint64_t n) {
  require_prime_power(q);
  require_length(n);
  CountResult r;
  r.params = qn_params(q, n);
  r.formula = "sigma_E";
  if (q % 2 == 0 && n % 2 == 0) {
    r.value = sigma_product(q, n);
  } else if ((q % 4 == 1 && n % 2 == 0) || (q % 4 == 3 && n % 4 == 0)) {
    r.value = 2 * sigma_product(q, n);
  } else {
    r.value = 0;
  }
  return r;
}

CountResult sigma_h(std::uint64_t q, std::uint64_t n) {
  require_prime_power(q);
  require_length(n);
  const std::uint64_t root = require_square(q);
  CountResult r;
  r.params = qn_params(q, n);
  r.formula = "sigma_H";
  r.value = 0;
  if (n % 2 == 0) {
    r.value = 1;
    // q^{i + 1/2} = sqrt(q)^{2i + 1}
    for (std::uint64_t i = 0; i < n / 2; ++i) r.value *= big_pow(root, 2 * i + 1) + 1;
  }
  return r;
}

CountResult count_esd(std::uint64_t q, std::uint64_t n) {
  CountResult r = sigma_e(q, n);
  r.formula = "NE_3";
  if (n % 2 == 1) {
    r.value = 0;
    return r;
  }
  r.value *= self_dual_sum(q, n, q % 2 == 0);
  return r;
}

CountResult count_hsd(std::uint64_t q, std::uint64_t n) {
  CountResult r = sigma_h(q, n);
  r.formula = "NH_3";
  if (n % 2 == 1) {
    r.value = 0;
    return r;
  }
  r.value *= self_dual_sum(q, n, true);
  return r;
}

BigInt CertifiedProvider::linear(std::uint64_t q, std::uint64_t n) const { return count_linear(q, 3, n).value; }
BigInt CertifiedProvider::euclidean_self_dual(std::uint64_t q, std::uint64_t n) const {
  return count_esd(q, n).value;
}
BigInt CertifiedProvider::hermitian_self_dual(std::uint64_t q, std::uint64_t n) const {
  return count_hsd(q, n).value;
}

}  // namespace chaincodes
