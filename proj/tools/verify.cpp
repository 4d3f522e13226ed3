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

#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "filament_prng/filament.hpp"
#include "filament_prng/gauss.hpp"
#include "filament_prng/parallel.hpp"
#include "filament_prng/prng.hpp"

namespace fprng::tools {
namespace {

struct Tally {
  std::int64_t cases = 0;
  double max_error = 0.0;

  void add(double error) {
    ++cases;
    // NaN must register as a failure.
    if (!(error <= max_error)) max_error = std::isnan(error) ? INFINITY : error;
  }
};

// Runs body(q, tally) for q in [1, qmax] across workers, merging in q order.
template <typename Body>
Tally sweep_moduli(std::int64_t qmax, Body body) {
  std::vector<Tally> per_q(static_cast<std::size_t>(std::max<std::int64_t>(qmax, 0)));
  parallel_chunks(qmax, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) body(i + 1, per_q[static_cast<std::size_t>(i)]);
  });
  Tally total;
  for (const Tally& t : per_q) {
    total.cases += t.cases;
    total.max_error = std::max(total.max_error, t.max_error);
  }
  return total;
}

std::vector<std::int64_t> units(std::int64_t q) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 0; p < q; ++p) {
    if (std::gcd(p, q) == 1) out.push_back(p);
  }
  return out;
}

SuiteResult finish(std::string name, const Tally& t, double tolerance) {
  return {std::move(name), t.cases, t.max_error, tolerance,
          t.cases > 0 && t.max_error < tolerance};
}

}  // namespace

SuiteResult verify_gauss(std::int64_t qmax, double tolerance) {
  const Tally t = sweep_moduli(qmax, [](std::int64_t q, Tally& tally) {
    const double scale = std::sqrt(static_cast<double>(q));
    for (std::int64_t p : units(q)) {
      for (std::int64_t m = 0; m < q; ++m) {
        const GaussValue direct = gauss_direct(-p, m, q);
        const double magnitude = std::hypot(direct.re, direct.im);
        tally.add(std::abs(magnitude - gauss_magnitude(p, m, q)) / scale);
        GaussValue closed;
        if (q % 2 == 1) {
          closed = gauss_closed_odd(p, m, q);
        } else if (q % 4 == 2 && q > 2 && m % 2 == 1) {
          closed = gauss_closed_2mod4(p, m, q);
        } else if (q % 4 == 0 && m % 2 == 0) {
          closed = gauss_closed_0mod4(p, m, q);
        } else {
          continue;
        }
        tally.add(std::max(std::abs(closed.re - direct.re), std::abs(closed.im - direct.im)) /
                  scale);
      }
    }
  });
  return finish("gauss", t, tolerance);
}

SuiteResult verify_theorem1(int m_lo, int m_hi, std::int64_t qmax, double tolerance) {
  Tally total;
  for (int M = m_lo; M <= m_hi; ++M) {
    const Tally t = sweep_moduli(qmax, [M](std::int64_t q, Tally& tally) {
      for (std::int64_t p : units(q)) {
        const FrameTransport transport(PolygonConfig{M, {p, q}});
        for (std::int64_t m = 0; m < transport.corner_count(); ++m) {
          const CirclePoint z = z_qm_closed(M, q, p, m);
          tally.add(std::max(std::abs(transport.triple_product(m) - z.re),
                             std::abs(transport.scalar_product(m) - z.im)));
        }
      }
    });
    total.cases += t.cases;
    total.max_error = std::max(total.max_error, t.max_error);
  }
  return finish("theorem1", total, tolerance);
}

SuiteResult verify_closure(int m_lo, int m_hi, std::int64_t qmax, double tolerance) {
  Tally total;
  for (int M = m_lo; M <= m_hi; ++M) {
    const Tally t = sweep_moduli(qmax, [M](std::int64_t q, Tally& tally) {
      for (std::int64_t p : units(q)) tally.add(closure_residual(PolygonConfig{M, {p, q}}));
    });
    total.cases += t.cases;
    total.max_error = std::max(total.max_error, t.max_error);
  }
  return finish("closure", total, tolerance);
}

SuiteResult verify_compound(int M, const std::vector<std::vector<std::int64_t>>& prime_sets,
                            std::int64_t pmax, double tolerance) {
  Tally total;
  for (const auto& primes : prime_sets) {
    for (std::int64_t p = 1; p <= pmax; ++p) {
      const bool admissible = std::all_of(primes.begin(), primes.end(),
                                          [p](std::int64_t q) { return p % q != 0; });
      if (admissible) total.add(compound_identity_error(M, primes, p));
    }
  }
  return finish("compound", total, tolerance);
}

}  // namespace fprng::tools
