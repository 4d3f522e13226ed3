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

#include "filament_prng/gauss.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "filament_prng/modular.hpp"

namespace fprng {
namespace {

constexpr std::int64_t kRootTableLimit = std::int64_t{1} << 20;

void require_coprime(std::int64_t p, std::int64_t q) {
  check_modulus(q);
  if (std::gcd(mod_floor(p, q), q) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
  }
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

GaussValue make_value(std::complex<double> z, MagnitudeClass cls) {
  return {z.real(), z.imag(), cls};
}

// -i when the odd modulus is 3 mod 4, otherwise 1.
std::complex<double> quarter_factor(std::int64_t odd_modulus) {
  return odd_modulus % 4 == 3 ? std::complex<double>(0.0, -1.0)
                              : std::complex<double>(1.0, 0.0);
}

}  // namespace

MagnitudeClass magnitude_class(std::int64_t m, std::int64_t q) {
  if (q % 2 != 0) return MagnitudeClass::kOddSqrtQ;
  return mod_floor(q / 2, 2) == mod_floor(m, 2) ? MagnitudeClass::kEvenSqrt2Q
                                                : MagnitudeClass::kEvenZero;
}

std::complex<double> unit_root(std::int64_t k, std::int64_t n) {
  const std::int64_t r = mod_floor(k, n);
  if (r == 0) return {1.0, 0.0};
  // Fold into (-n/2, n/2] so the angle passed to sin/cos stays below pi.
  const std::int64_t folded = 2 * r > n ? r - n : r;
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(folded) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

GaussValue gauss_direct(std::int64_t a, std::int64_t b, std::int64_t c) {
  check_modulus(c);
  const std::int64_t ar = mod_floor(a, c);
  const std::int64_t br = mod_floor(b, c);
  // Sweeps call this for many (a, b) with the same c, so the roots are
  // tabulated once per modulus and thread. Operands stay below 2^31, so
  // products fit in 64 bits.
  thread_local std::int64_t table_modulus = 0;
  thread_local std::vector<std::complex<double>> table;
  const bool tabulate = c <= kRootTableLimit;
  if (tabulate && table_modulus != c) {
    table.resize(static_cast<std::size_t>(c));
    for (std::int64_t k = 0; k < c; ++k) table[static_cast<std::size_t>(k)] = unit_root(k, c);
    table_modulus = c;
  }
  CompensatedSum re;
  CompensatedSum im;
  for (std::int64_t l = 0; l < c; ++l) {
    const std::int64_t exponent = (ar * ((l * l) % c) + br * l) % c;
    const std::complex<double> term =
        tabulate ? table[static_cast<std::size_t>(exponent)] : unit_root(exponent, c);
    re.add(term.real());
    im.add(term.imag());
  }
  return {re.value(), im.value(), magnitude_class(b, c)};
}

double gauss_magnitude(std::int64_t p, std::int64_t m, std::int64_t q) {
  require_coprime(p, q);
  switch (magnitude_class(m, q)) {
    case MagnitudeClass::kOddSqrtQ: return std::sqrt(static_cast<double>(q));
    case MagnitudeClass::kEvenSqrt2Q: return std::sqrt(2.0 * static_cast<double>(q));
    case MagnitudeClass::kEvenZero: return 0.0;
  }
  return 0.0;
}

GaussValue gauss_closed_odd(std::int64_t p, std::int64_t m, std::int64_t q) {
  check_modulus(q);
  if (q % 2 == 0) {
    throw Error(ErrorCode::kEvenModulus, "odd closed form needs odd q");
  }
  require_coprime(p, q);
  const std::int64_t phi = phi_p(p, q).phi;
  const std::int64_t exponent = mul_mod(phi, mul_mod(m, m, q), q);
  const std::complex<double> z = std::sqrt(static_cast<double>(q)) *
                                 static_cast<double>(jacobi(p, q)) *
                                 quarter_factor(q) * unit_root(exponent, q);
  return make_value(z, MagnitudeClass::kOddSqrtQ);
}

GaussValue gauss_closed_2mod4(std::int64_t p, std::int64_t m_odd, std::int64_t q) {
  check_modulus(q);
  if (q % 4 != 2 || q <= 2 || mod_floor(m_odd, 2) != 1) {
    throw Error(ErrorCode::kWrongParityClass,
                "needs q = 2 mod 4, q > 2 and odd m");
  }
  require_coprime(p, q);
  // G(-p, m, q) = 2 G(-2p, m, q/2) with q/2 odd.
  const std::int64_t half = q / 2;
  const std::int64_t phi1 = mod_inverse(mul_mod(8, p, half), half).value;
  const std::int64_t exponent = mul_mod(phi1, mul_mod(m_odd, m_odd, half), half);
  const std::complex<double> z = std::sqrt(2.0 * static_cast<double>(q)) *
                                 static_cast<double>(jacobi(2 * mod_floor(p, half), half)) *
                                 quarter_factor(half) * unit_root(exponent, half);
  return make_value(z, MagnitudeClass::kEvenSqrt2Q);
}

GaussValue gauss_closed_0mod4(std::int64_t p, std::int64_t m_even, std::int64_t q) {
  check_modulus(q);
  if (q % 4 != 0 || mod_floor(m_even, 2) != 0) {
    throw Error(ErrorCode::kWrongParityClass, "needs q = 0 mod 4 and even m");
  }
  require_coprime(p, q);
  const FactoredModulus f = factor_pow2(q);
  const std::int64_t two_r = std::int64_t{1} << f.r;
  const std::int64_t pr = mod_floor(p, q);

  // Odd part: G(-2^r p, m, q').
  std::complex<double> odd_part{1.0, 0.0};
  if (f.q_odd > 1) {
    const std::int64_t phi1 =
        mod_inverse(mul_mod(mul_mod(two_r, 4, f.q_odd), pr, f.q_odd), f.q_odd).value;
    const std::int64_t exponent =
        mul_mod(phi1, mul_mod(m_even, m_even, f.q_odd), f.q_odd);
    odd_part = std::sqrt(static_cast<double>(f.q_odd)) *
               static_cast<double>(jacobi(mul_mod(two_r, pr, f.q_odd), f.q_odd)) *
               quarter_factor(f.q_odd) * unit_root(exponent, f.q_odd);
  }

  // Two-power part: G(-q' p, m, 2^r)
  //   = exp(pi i phi2 m^2 / 2^{r+1}) (2^r | q'p) (1 - i^{q'p}) sqrt(2^r).
  const std::int64_t qp = f.q_odd * pr;  // odd, below 2^62
  const std::int64_t phi2 = mod_inverse(mod_floor(qp, two_r), two_r).value;
  const std::int64_t big = two_r * 4;  // 2^{r+2}: pi i x / 2^{r+1} = 2 pi i x / 2^{r+2}
  const std::int64_t exponent = mul_mod(phi2, mul_mod(m_even, m_even, big), big);
  const std::complex<double> i_power =
      (qp % 4 == 1) ? std::complex<double>(0.0, 1.0) : std::complex<double>(0.0, -1.0);
  const std::complex<double> two_part = unit_root(exponent, big) *
                                        static_cast<double>(jacobi(two_r, qp)) *
                                        (1.0 - i_power) *
                                        std::sqrt(static_cast<double>(two_r));
  return make_value(odd_part * two_part, MagnitudeClass::kEvenSqrt2Q);
}

std::vector<std::int64_t> active_gauss_indices(std::int64_t q) {
  check_modulus(q);
  std::vector<std::int64_t> out;
  for (std::int64_t m = 0; m < q; ++m) {
    if (magnitude_class(m, q) != MagnitudeClass::kEvenZero) out.push_back(m);
  }
  return out;
}

std::vector<ThetaPhase> theta_sequence(std::int64_t p, std::int64_t q) {
  require_coprime(p, q);
  std::vector<ThetaPhase> out;
  for (std::int64_t m : active_gauss_indices(q)) {
    const GaussValue g = gauss_direct(-p, m, q);
    double theta = std::atan2(g.im, g.re);
    if (theta < 0.0) theta += 2.0 * std::numbers::pi;
    if (theta >= 2.0 * std::numbers::pi) theta = 0.0;
    out.push_back({theta, m});
  }
  return out;
}

}  // namespace fprng
