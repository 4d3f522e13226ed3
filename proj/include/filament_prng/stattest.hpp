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

#ifndef FILAMENT_PRNG_STATTEST_HPP_
#define FILAMENT_PRNG_STATTEST_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "filament_prng/prng.hpp"

namespace fprng {

// Overlapping k-tuples (u_{n+n_1}, ..., u_{n+n_k}) with cyclic indexing over
// the period, stored row-major.
struct TupleCloud {
  std::vector<double> coords;
  int k = 1;
  std::vector<std::int64_t> lags;
  std::int64_t N = 0;

  std::span<const double> point(std::int64_t i) const {
    return {coords.data() + i * k, static_cast<std::size_t>(k)};
  }
};

struct DiscrepancyReport {
  double star = 0.0;
  double extreme_lower = 0.0;
  double extreme_upper = 0.0;
  int k = 1;
  std::int64_t N = 0;
  std::vector<std::int64_t> lags;
  std::optional<double> theorem2_upper;
  std::optional<double> theorem_lower_scale;
  // p^{-1/2} (log log p)^{1/2}, the typical size for independent uniform
  // points. Reported, never asserted against.
  std::optional<double> random_reference;
};

struct BoundReport {
  std::int64_t p = 0;
  int k = 2;
  double upper = 0.0;
  double t = 1.0;
  double lower_threshold = 0.0;
  double A_p_t = 0.0;
};

// Largest inputs the exact star-discrepancy sweep accepts.
inline constexpr int kMaxExactDimension = 3;
inline constexpr std::int64_t kMaxExactPoints = 4096;

TupleCloud make_tuples(std::span<const double> samples, int k,
                       const std::vector<std::int64_t>& lags);
TupleCloud make_tuples(std::span<const UnitSample> samples, int k,
                       const std::vector<std::int64_t>& lags);

// Builds a cloud from explicit points (each of size k) without lags.
TupleCloud make_cloud(const std::vector<std::vector<double>>& points);

// Exact sup over anchored boxes of |#inside / N - volume|.
double star_discrepancy(const TupleCloud& cloud);

DiscrepancyReport serial_test(std::span<const double> samples, int k,
                              const std::vector<std::int64_t>& lags);

double theorem2_upper(std::int64_t p, int k);

struct Theorem3Values {
  double threshold = 0.0;
  double A = 0.0;
};
Theorem3Values theorem3_lower(std::int64_t p, double t);

BoundReport bound_report(std::int64_t p, int k, double t);

// Fraction of multipliers a (every a in [1, p) when samples <= 0 or
// samples >= p - 1, else an evenly spaced subset) whose full-period EICG
// with b = 0 has star discrepancy at or above the lower threshold. Star
// discrepancy bounds the extreme one from below, so each hit is a witness.
struct Theorem3Fraction {
  std::int64_t tested = 0;
  std::int64_t above = 0;
  double fraction = 0.0;
  Theorem3Values values;
};
Theorem3Fraction theorem3_fraction(std::int64_t p, int k, double t,
                                   std::int64_t samples);

// Distinct integers (x_{n+2} - 6 x_{n+1} + 9 x_n) / 2^31 over the first
// sample_count RANDU values from x_0 = 1.
std::int64_t randu_plane_count(std::int64_t sample_count);

// Checks 9 x_n - 6 x_{n+1} + x_{n+2} = 0 mod 2^31 over sample_count values.
bool randu_recurrence_holds(std::int64_t sample_count);

struct ChiSquare {
  double statistic = 0.0;
  int bins = 0;
};
ChiSquare chi_square_uniformity(std::span<const double> samples, int bins);

// Upper quantile of the chi-square distribution for 1 <= dof <= 100 at
// level 0.95, 0.99 or 0.999.
double chi_square_quantile(int dof, double level);

}  // namespace fprng

#endif  // FILAMENT_PRNG_STATTEST_HPP_
