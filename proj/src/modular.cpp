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

#include "filament_prng/modular.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace fprng {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kNotCoprime: return "NotCoprime";
    case ErrorCode::kEvenModulus: return "EvenModulus";
    case ErrorCode::kRange: return "RangeError";
    case ErrorCode::kWrongParityClass: return "WrongParityClass";
    case ErrorCode::kDegeneratePolygon: return "DegeneratePolygon";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kCompositeModulus: return "CompositeModulus";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kBadPrimes: return "BadPrimes";
    case ErrorCode::kBadLags: return "BadLags";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kBadDimension: return "BadDimension";
    case ErrorCode::kBadT: return "BadT";
    case ErrorCode::kEmptyInput: return "EmptyInput";
  }
  return "Unknown";
}

void check_modulus(std::int64_t n) {
  if (n < 1 || n > kMaxModulus) {
    throw Error(ErrorCode::kRange,
                "modulus " + std::to_string(n) + " outside [1, 2^31]");
  }
}

std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  const auto prod = static_cast<__int128>(mod_floor(a, n)) * mod_floor(b, n);
  return static_cast<std::int64_t>(prod % n);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t result = 1;
  base = mod_floor(base, n);
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1U;
  }
  return result;
}

Residue mod_inverse(std::int64_t a, std::int64_t n) {
  check_modulus(n);
  if (n == 1) return {0, 1};
  std::int64_t old_r = mod_floor(a, n);
  std::int64_t r = n;
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t quotient = old_r / r;
    std::int64_t tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::kNotInvertible,
                std::to_string(a) + " has no inverse modulo " + std::to_string(n));
  }
  return {mod_floor(old_s, n), n};
}

Residue fermat_inverse(std::int64_t a, std::int64_t n) {
  check_modulus(n);
  if (n == 1) return {0, 1};
  const std::int64_t reduced = mod_floor(a, n);
  if (reduced == 0) return {0, n};
  return {pow_mod(reduced, static_cast<std::uint64_t>(n - 2), n), n};
}

int jacobi(std::int64_t a, std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorCode::kRange, "Jacobi symbol needs n >= 1");
  }
  if (n % 2 == 0) {
    throw Error(ErrorCode::kEvenModulus,
                "Jacobi symbol undefined for even n = " + std::to_string(n));
  }
  a = mod_floor(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::int64_t euler_totient(std::int64_t q) {
  check_modulus(q);
  std::int64_t result = q;
  std::int64_t rest = q;
  for (std::int64_t f = 2; f * f <= rest; ++f) {
    if (rest % f != 0) continue;
    while (rest % f == 0) rest /= f;
    result -= result / f;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

FactoredModulus factor_pow2(std::int64_t q) {
  check_modulus(q);
  FactoredModulus f{0, q, q};
  while (f.q_odd % 2 == 0) {
    f.q_odd /= 2;
    ++f.r;
  }
  return f;
}

Residue crt_combine(const Residue& r1, const Residue& r2) {
  check_modulus(r1.modulus);
  check_modulus(r2.modulus);
  if (std::gcd(r1.modulus, r2.modulus) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                "moduli " + std::to_string(r1.modulus) + " and " +
                    std::to_string(r2.modulus) + " share a factor");
  }
  const std::int64_t n = r1.modulus * r2.modulus;
  check_modulus(n);
  // x = v1 + n1 * t with t = (v2 - v1) * n1^-1 mod n2.
  const std::int64_t v1 = mod_floor(r1.value, r1.modulus);
  const std::int64_t inv = mod_inverse(r1.modulus, r2.modulus).value;
  const std::int64_t t = mul_mod(r2.value - v1, inv, r2.modulus);
  return {v1 + r1.modulus * t, n};
}

PhiResult phi_p(std::int64_t p, std::int64_t q) {
  check_modulus(q);
  if (std::gcd(mod_floor(p, q), q) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                "p = " + std::to_string(p) + " not coprime to q = " + std::to_string(q));
  }
  if (q % 2 == 1) return {mod_inverse(mul_mod(4, p, q), q).value, q};
  if (q % 4 == 2) return {mod_inverse(p, q / 2).value, q / 2};
  return {mod_inverse(p, q).value, q};
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::int64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::int64_t base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = pow_mod(base, static_cast<std::uint64_t>(d), n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace fprng
