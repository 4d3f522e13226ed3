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

#ifndef FILAMENT_PRNG_PRNG_HPP_
#define FILAMENT_PRNG_PRNG_HPP_

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "filament_prng/filament.hpp"

namespace fprng {

enum class StreamKind { kVfeCircle, kEicg, kEicgPow2, kLcg, kCompound };

std::string_view stream_kind_name(StreamKind kind);

// Parameters for every stream family. Fields that a kind does not use are
// ignored by it.
struct StreamSpec {
  StreamKind kind = StreamKind::kEicg;
  std::int64_t modulus = 1;
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t seed = 0;              // LCG only
  std::vector<std::int64_t> primes;   // compound only
  int M = 3;                          // circle geometry for VFE and compound

  // Kind-specific checks; throws BadParameters, CompositeModulus, BadPrimes,
  // RangeError or DegeneratePolygon.
  void validate() const;

  // Length of one full period of the stream.
  std::int64_t period() const;
};

// u = x / modulus. n is the generating index: the step number for LCG and
// EICG streams, the index p for VFE and compound streams.
struct UnitSample {
  std::int64_t n = 0;
  std::int64_t x = 0;
  double u = 0.0;
};

StreamSpec randu_preset();

// x_{n+1} = a x_n + b mod q from x_0 = seed. Starting at `start` jumps ahead
// in O(log start).
std::vector<UnitSample> lcg_stream(const StreamSpec& spec, std::int64_t count,
                                   std::int64_t start = 0);

// x_n = inverse(a n + b) mod q, q prime, with 0 -> 0.
std::vector<UnitSample> eicg_stream(const StreamSpec& spec, std::int64_t count,
                                    std::int64_t start = 0);

// x_n = (a n + b)^-1 mod 2^w, w >= 5, a = 2 mod 4, b odd.
std::vector<UnitSample> eicg_pow2_stream(const StreamSpec& spec, std::int64_t count,
                                         std::int64_t start = 0);

// z_q(p) for every p in [1, q) coprime to q, ascending. Uses m = 0, or m = 1
// when q = 2 mod 4. For q = 1 the stream is empty.
std::vector<CirclePoint> vfe_stream(int M, std::int64_t q);

// The phases u_p of vfe_stream as unit samples, starting at the start-th
// admissible p.
std::vector<UnitSample> vfe_phase_stream(const StreamSpec& spec, std::int64_t count,
                                         std::int64_t start = 0);

// u_p = sum_j phi_j(p) / q_j mod 1 with phi_j(p) = (4p)^-1 mod q_j, over p
// coprime to every q_j in ascending order. x holds the numerator over the
// product of the primes.
std::vector<UnitSample> compound_stream(int M, const std::vector<std::int64_t>& primes,
                                        std::int64_t count, std::int64_t start = 0);

// |prod_j (c_j^2 + i z_{q_j}(p)) / s_j^2 - exp(2 pi i u_p)| for one p.
double compound_identity_error(int M, const std::vector<std::int64_t>& primes,
                               std::int64_t p);

// Dispatches on spec.kind; for VFE streams this yields the phases u_p.
std::vector<UnitSample> generate(const StreamSpec& spec, std::int64_t count,
                                 std::int64_t start = 0);

// Splits [start, start + count) into chunks generated on worker threads and
// concatenates them. Bit-identical to generate().
std::vector<UnitSample> generate_parallel(const StreamSpec& spec, std::int64_t count,
                                          std::int64_t start = 0);

// True when the values b_i * inverse(a_i) mod q are pairwise distinct, the
// parameter condition for a family of parallel EICG streams.
bool eicg_family_distinct(const std::vector<std::pair<std::int64_t, std::int64_t>>& ab,
                          std::int64_t q);

}  // namespace fprng

#endif  // FILAMENT_PRNG_PRNG_HPP_
