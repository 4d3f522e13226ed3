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

#ifndef FILAMENT_PRNG_GAUSS_HPP_
#define FILAMENT_PRNG_GAUSS_HPP_

#include <complex>
#include <cstdint>
#include <vector>

namespace fprng {

// |G(-p, m, q)| for gcd(p, q) = 1 takes one of three values.
enum class MagnitudeClass {
  kOddSqrtQ,     // q odd: sqrt(q)
  kEvenSqrt2Q,   // q even, q/2 = m mod 2: sqrt(2q)
  kEvenZero,     // q even, q/2 != m mod 2: 0
};

MagnitudeClass magnitude_class(std::int64_t m, std::int64_t q);

// A value of the generalized quadratic Gauss sum
//   G(a, b, c) = sum_{l=0}^{c-1} exp(2 pi i (a l^2 + b l) / c).
struct GaussValue {
  double re = 0.0;
  double im = 0.0;
  MagnitudeClass magnitude_class = MagnitudeClass::kOddSqrtQ;

  std::complex<double> value() const { return {re, im}; }
};

// theta_m = arg G(-p, m, q) in [0, 2pi).
struct ThetaPhase {
  double theta = 0.0;
  std::int64_t m = 0;
};

// exp(2 pi i k / n), with k reduced modulo n before the trig call.
std::complex<double> unit_root(std::int64_t k, std::int64_t n);

// Literal O(c) summation with compensated accumulation. The phase of each
// term is reduced exactly in integers. The magnitude class is assigned as if
// the call were G(-p, b, c) with gcd(p, c) = 1.
GaussValue gauss_direct(std::int64_t a, std::int64_t b, std::int64_t c);

double gauss_magnitude(std::int64_t p, std::int64_t m, std::int64_t q);

// Closed forms of G(-p, m, q), one per parity class of q.
GaussValue gauss_closed_odd(std::int64_t p, std::int64_t m, std::int64_t q);
GaussValue gauss_closed_2mod4(std::int64_t p, std::int64_t m_odd, std::int64_t q);
GaussValue gauss_closed_0mod4(std::int64_t p, std::int64_t m_even, std::int64_t q);

// Indices m in [0, q) where G(-p, m, q) != 0: all m for q odd, odd m for
// q = 2 mod 4, even m for q = 0 mod 4.
std::vector<std::int64_t> active_gauss_indices(std::int64_t q);

std::vector<ThetaPhase> theta_sequence(std::int64_t p, std::int64_t q);

}  // namespace fprng

#endif  // FILAMENT_PRNG_GAUSS_HPP_
