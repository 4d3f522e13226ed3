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

#ifndef FILAMENT_PRNG_TOOLS_VERIFY_HPP_
#define FILAMENT_PRNG_TOOLS_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace fprng::tools {

struct SuiteResult {
  std::string name;
  std::int64_t cases = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// Magnitude law and closed forms against direct summation for 1 <= q <= qmax.
// Errors are scaled by 1/sqrt(q).
SuiteResult verify_gauss(std::int64_t qmax, double tolerance = 1e-9);

// Triple and scalar products from frame transport against z_qm_closed.
SuiteResult verify_theorem1(int m_lo, int m_hi, std::int64_t qmax,
                            double tolerance = 1e-8);

// Frobenius distance of the period product from the identity.
SuiteResult verify_closure(int m_lo, int m_hi, std::int64_t qmax,
                           double tolerance = 1e-7);

// Product identity for the compound stream over admissible 1 <= p <= pmax.
SuiteResult verify_compound(int M, const std::vector<std::vector<std::int64_t>>& prime_sets,
                            std::int64_t pmax, double tolerance = 1e-9);

}  // namespace fprng::tools

#endif  // FILAMENT_PRNG_TOOLS_VERIFY_HPP_
