// Copyright 2026 The filament-prng Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FILAMENT_PRNG_MODULAR_HPP_
#define FILAMENT_PRNG_MODULAR_HPP_

#include <cstdint>

#include "filament_prng/error.hpp"

namespace fprng {

// Largest modulus accepted anywhere in the library. Products of two reduced
// residues then stay below 2^62.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

// An element of Z_n.
struct Residue {
  std::int64_t value = 0;
  std::int64_t modulus = 1;

  friend bool operator==(const Residue&, const Residue&) = default;
};

// q = 2^r * q_odd with q_odd odd.
struct FactoredModulus {
  int r = 0;
  std::int64_t q_odd = 1;
  std::int64_t q = 1;

  friend bool operator==(const FactoredModulus&, const FactoredModulus&) = default;
};

// The inverse that drives every geometric quantity at time p/q, together with
// the ring it lives in: Z_q for q odd or q = 0 mod 4, Z_{q/2} for q = 2 mod 4.
struct PhiResult {
  std::int64_t phi = 0;
  std::int64_t effective_modulus = 1;

  friend bool operator==(const PhiResult&, const PhiResult&) = default;
};

// Throws kRange unless 1 <= n <= kMaxModulus.
void check_modulus(std::int64_t n);

// Least nonnegative residue of a modulo n (n >= 1).
std::int64_t mod_floor(std::int64_t a, std::int64_t n);

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n);
std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t n);

// Extended Euclid. The inverse modulo 1 is 0.
Residue mod_inverse(std::int64_t a, std::int64_t n);

// a^(n-2) mod n for prime n; maps 0 to 0, which is the convention inversive
// generators use for the non-invertible element.
Residue fermat_inverse(std::int64_t a, std::int64_t n);

// Jacobi symbol (a|n) for odd n >= 1; 0 when gcd(a, n) > 1, 1 for n = 1.
int jacobi(std::int64_t a, std::int64_t n);

std::int64_t euler_totient(std::int64_t q);

FactoredModulus factor_pow2(std::int64_t q);

// Combines x = r1 mod n1 and x = r2 mod n2 into x mod n1*n2.
Residue crt_combine(const Residue& r1, const Residue& r2);

//   q odd       -> (4p)^-1 mod q
//   q = 2 mod 4 -> p^-1 mod q/2
//   q = 0 mod 4 -> p^-1 mod q
PhiResult phi_p(std::int64_t p, std::int64_t q);

// Deterministic Miller-Rabin, exact for every n < 2^64.
bool is_prime(std::int64_t n);

}  // namespace fprng

#endif  // FILAMENT_PRNG_MODULAR_HPP_
