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

#include "filament_prng/error.hpp"
#include "filament_prng/modular.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace fprng {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_close(const GaussValue& g, std::complex<double> expected, double tol) {
  EXPECT_NEAR(g.re, expected.real(), tol);
  EXPECT_NEAR(g.im, expected.imag(), tol);
}

TEST(GaussDirectTest, Examples) {
  expect_close(gauss_direct(0, 0, 3), {3.0, 0.0}, 1e-14);
  expect_close(gauss_direct(-1, 0, 3), {0.0, -std::sqrt(3.0)}, 1e-14);
  expect_close(gauss_direct(-1, 1, 2), {2.0, 0.0}, 1e-14);
  EXPECT_EQ(gauss_direct(-1, 1, 2).magnitude_class, MagnitudeClass::kEvenSqrt2Q);
  EXPECT_EQ(gauss_direct(-1, 0, 3).magnitude_class, MagnitudeClass::kOddSqrtQ);
  EXPECT_EQ(gauss_direct(-1, 1, 4).magnitude_class, MagnitudeClass::kEvenZero);
}

TEST(GaussDirectTest, MatchesLongDoubleNaiveSum) {
  for (std::int64_t c : {1, 2, 7, 64, 97, 1000, 4099}) {
    for (std::int64_t a : {-3, -1, 1, 5}) {
      for (std::int64_t b : {0, 1, 2, 11}) {
        const auto expected = oracle::gauss_sum_naive(a, b, c);
        const GaussValue g = gauss_direct(a, b, c);
        const double tol = 1e-10 * std::max(1.0, std::sqrt(static_cast<double>(c)));
        EXPECT_NEAR(g.re, static_cast<double>(expected.real()), tol) << a << b << c;
        EXPECT_NEAR(g.im, static_cast<double>(expected.imag()), tol) << a << b << c;
      }
    }
  }
}

TEST(GaussMagnitudeTest, Examples) {
  EXPECT_DOUBLE_EQ(gauss_magnitude(1, 0, 3), std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(gauss_magnitude(1, 1, 4), 0.0);
  EXPECT_DOUBLE_EQ(gauss_magnitude(1, 0, 4), std::sqrt(8.0));
  EXPECT_THROW(gauss_magnitude(2, 0, 4), Error);
}

TEST(GaussMagnitudeTest, LawHoldsForDirectSums) {
  for (std::int64_t q = 1; q <= 120; ++q) {
    const double tol = 1e-9 * std::max(1.0, std::sqrt(static_cast<double>(q)));
    for (std::int64_t p = 1; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t m = 0; m < q; ++m) {
        ASSERT_NEAR(std::abs(gauss_direct(-p, m, q).value()), gauss_magnitude(p, m, q), tol)
            << p << " " << m << " " << q;
      }
    }
  }
}

TEST(GaussClosedTest, OddExamples) {
  expect_close(gauss_closed_odd(1, 0, 3), {0.0, -std::sqrt(3.0)}, 1e-12);
  expect_close(gauss_closed_odd(1, 1, 5),
               std::sqrt(5.0) * std::polar(1.0, 8.0 * kPi / 5.0), 1e-12);
  expect_close(gauss_closed_odd(1, 1, 5), gauss_direct(-1, 1, 5).value(), 1e-12);
  expect_close(gauss_closed_odd(1, 0, 1), {1.0, 0.0}, 1e-15);
}

TEST(GaussClosedTest, TwoModFourExamples) {
  expect_close(gauss_closed_2mod4(1, 1, 6), gauss_direct(-1, 1, 6).value(), 1e-12);
  expect_close(gauss_closed_2mod4(1, 3, 10), gauss_direct(-1, 3, 10).value(), 1e-12);
  EXPECT_NEAR(std::abs(gauss_closed_2mod4(7, 5, 30).value()), std::sqrt(60.0), 1e-12);
}

TEST(GaussClosedTest, ZeroModFourExamples) {
  expect_close(gauss_closed_0mod4(1, 0, 4), gauss_direct(-1, 0, 4).value(), 1e-12);
  expect_close(gauss_closed_0mod4(1, 2, 12), gauss_direct(-1, 2, 12).value(), 1e-12);
  expect_close(gauss_closed_0mod4(3, 0, 8), gauss_direct(-3, 0, 8).value(), 1e-12);
}

TEST(GaussClosedTest, ParityClassErrors) {
  const auto code_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kEmptyInput;
  };
  EXPECT_EQ(code_of([] { gauss_closed_odd(1, 0, 4); }), ErrorCode::kEvenModulus);
  EXPECT_EQ(code_of([] { gauss_closed_odd(3, 0, 9); }), ErrorCode::kNotCoprime);
  EXPECT_EQ(code_of([] { gauss_closed_2mod4(1, 1, 2); }), ErrorCode::kWrongParityClass);
  EXPECT_EQ(code_of([] { gauss_closed_2mod4(1, 2, 6); }), ErrorCode::kWrongParityClass);
  EXPECT_EQ(code_of([] { gauss_closed_2mod4(1, 1, 8); }), ErrorCode::kWrongParityClass);
  EXPECT_EQ(code_of([] { gauss_closed_0mod4(1, 1, 8); }), ErrorCode::kWrongParityClass);
  EXPECT_EQ(code_of([] { gauss_closed_0mod4(1, 0, 6); }), ErrorCode::kWrongParityClass);
  EXPECT_EQ(code_of([] { gauss_closed_0mod4(2, 0, 8); }), ErrorCode::kNotCoprime);
}

TEST(GaussClosedTest, AllClassesMatchDirectSummation) {
  for (std::int64_t q = 1; q <= 150; ++q) {
    const double tol = 1e-9 * std::sqrt(static_cast<double>(q));
    for (std::int64_t p = 1; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t m = 0; m < q; ++m) {
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
        const GaussValue direct = gauss_direct(-p, m, q);
        ASSERT_NEAR(closed.re, direct.re, tol) << p << " " << m << " " << q;
        ASSERT_NEAR(closed.im, direct.im, tol) << p << " " << m << " " << q;
      }
    }
  }
}

TEST(GaussIdentityTest, DoublingForTwoModFour) {
  for (std::int64_t q = 6; q <= 200; q += 4) {
    const double tol = 1e-9 * std::sqrt(2.0 * static_cast<double>(q));
    for (std::int64_t p = 1; p < q; p += 2) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t m = 1; m < q; m += 2) {
        const auto lhs = gauss_direct(-p, m, q).value();
        const auto rhs = 2.0 * gauss_direct(-2 * p, m, q / 2).value();
        ASSERT_NEAR(std::abs(lhs - rhs), 0.0, tol) << p << " " << m << " " << q;
      }
    }
  }
}

TEST(ThetaSequenceTest, Examples) {
  const auto trivial = theta_sequence(1, 1);
  ASSERT_EQ(trivial.size(), 1U);
  EXPECT_EQ(trivial[0].m, 0);
  EXPECT_NEAR(trivial[0].theta, 0.0, 1e-15);

  const auto three = theta_sequence(1, 3);
  ASSERT_EQ(three.size(), 3U);
  for (const ThetaPhase& t : three) {
    const auto g = gauss_direct(-1, t.m, 3);
    double expected = std::atan2(g.im, g.re);
    if (expected < 0) expected += 2 * kPi;
    EXPECT_NEAR(t.theta, expected, 1e-14);
  }

  const auto four = theta_sequence(1, 4);
  ASSERT_EQ(four.size(), 2U);
  EXPECT_EQ(four[0].m, 0);
  EXPECT_EQ(four[1].m, 2);
}

TEST(ThetaSequenceTest, RangeAndPhaseDifferenceIdentity) {
  for (std::int64_t q = 1; q <= 99; q += 2) {
    for (std::int64_t p = 1; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto theta = theta_sequence(p, q);
      const std::int64_t phi = phi_p(p, q).phi;
      for (std::size_t i = 0; i < theta.size(); ++i) {
        ASSERT_GE(theta[i].theta, 0.0);
        ASSERT_LT(theta[i].theta, 2 * kPi);
        const std::int64_t m = theta[i].m;
        const double next = theta[(i + 1) % theta.size()].theta;
        const auto lhs = std::polar(1.0, next) * std::polar(1.0, -theta[i].theta);
        const auto rhs = std::polar(1.0, 2 * kPi * static_cast<double>((phi * (2 * m + 1)) % q) /
                                             static_cast<double>(q));
        ASSERT_NEAR(std::abs(lhs - rhs), 0.0, 1e-9) << p << " " << m << " " << q;
      }
    }
  }
}

}  // namespace
}  // namespace fprng
