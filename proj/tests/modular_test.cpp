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
#include <set>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace fprng {
namespace {

TEST(ModInverseTest, Examples) {
  EXPECT_EQ(mod_inverse(1, 7), (Residue{1, 7}));
  EXPECT_EQ(mod_inverse(4, 5), (Residue{4, 5}));
  EXPECT_EQ(mod_inverse(3, 7), (Residue{5, 7}));
  EXPECT_EQ(mod_inverse(-3, 7).value, 2);
  EXPECT_EQ(mod_inverse(12345, 1), (Residue{0, 1}));
}

TEST(ModInverseTest, Errors) {
  try {
    mod_inverse(6, 9);
    FAIL() << "expected NotInvertible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotInvertible);
  }
  try {
    mod_inverse(3, (std::int64_t{1} << 31) + 1);
    FAIL() << "expected RangeError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRange);
  }
  EXPECT_THROW(mod_inverse(1, 0), Error);
}

TEST(ModInverseTest, MatchesExhaustiveSearchSmall) {
  for (std::int64_t n = 1; n <= 200; ++n) {
    for (std::int64_t a = 0; a < n; ++a) {
      const auto expected = oracle::inverse_by_search(a, n);
      if (expected) {
        EXPECT_EQ(mod_inverse(a, n).value, *expected) << a << " mod " << n;
      } else {
        EXPECT_THROW(mod_inverse(a, n), Error);
      }
    }
  }
}

TEST(ModInverseTest, InverseIdentityUpTo10000) {
  for (std::int64_t n = 2; n <= 10000; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      ASSERT_EQ((a * mod_inverse(a, n).value) % n, 1) << a << " mod " << n;
    }
  }
}

TEST(ModInverseTest, LargestModulus) {
  const std::int64_t q = kMaxModulus;
  const std::int64_t a = 65539;
  EXPECT_EQ(mul_mod(a, mod_inverse(a, q).value, q), 1);
}

TEST(FermatInverseTest, Examples) {
  EXPECT_EQ(fermat_inverse(0, 5).value, 0);
  EXPECT_EQ(fermat_inverse(2, 5).value, 3);
  EXPECT_EQ(fermat_inverse(1, 2).value, 1);
  EXPECT_EQ(fermat_inverse(0, 2).value, 0);
}

TEST(FermatInverseTest, AgreesWithExtendedEuclidOnPrimes) {
  for (std::int64_t n = 2; n <= 1000; ++n) {
    if (!is_prime(n)) continue;
    EXPECT_EQ(fermat_inverse(n, n).value, 0);
    for (std::int64_t a = 1; a < n; ++a) {
      ASSERT_EQ(fermat_inverse(a, n), mod_inverse(a, n)) << a << " mod " << n;
    }
  }
}

TEST(JacobiTest, Examples) {
  EXPECT_EQ(jacobi(5, 1), 1);
  EXPECT_EQ(jacobi(2, 3), -1);
  EXPECT_EQ(jacobi(5, 9), 1);
  EXPECT_EQ(jacobi(3, 9), 0);
  EXPECT_EQ(jacobi(-1, 7), -1);
}

TEST(JacobiTest, EvenModulusRejected) {
  try {
    jacobi(3, 8);
    FAIL() << "expected EvenModulus";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEvenModulus);
  }
}

TEST(JacobiTest, MatchesEulerCriterionProduct) {
  for (std::int64_t n = 1; n <= 1000; n += 2) {
    for (std::int64_t a = -3; a < n + 3; ++a) {
      ASSERT_EQ(jacobi(a, n), oracle::jacobi_by_factoring(a, n)) << a << " / " << n;
      if (std::gcd(oracle::reduce(a, n), n) == 1) {
        ASSERT_EQ(jacobi(a, n) * jacobi(a, n), 1);
      }
    }
  }
}

TEST(TotientTest, Examples) {
  EXPECT_EQ(euler_totient(1), 1);
  EXPECT_EQ(euler_totient(12), 4);
  EXPECT_EQ(euler_totient(7), 6);
}

TEST(TotientTest, CountAndMultiplicativity) {
  std::vector<std::int64_t> phi(1001);
  for (std::int64_t q = 1; q <= 1000; ++q) {
    phi[q] = euler_totient(q);
    ASSERT_EQ(phi[q], oracle::totient_by_count(q)) << q;
    if (q % 4 == 2) {
      ASSERT_EQ(phi[q], phi[q / 2]) << q;
    }
  }
  for (std::int64_t a = 1; a <= 1000; ++a) {
    for (std::int64_t b = 1; a * b <= 1000; ++b) {
      if (std::gcd(a, b) == 1) {
        ASSERT_EQ(phi[a * b], phi[a] * phi[b]);
      }
    }
  }
}

TEST(FactorPow2Test, Examples) {
  EXPECT_EQ(factor_pow2(12), (FactoredModulus{2, 3, 12}));
  EXPECT_EQ(factor_pow2(7), (FactoredModulus{0, 7, 7}));
  EXPECT_EQ(factor_pow2(8), (FactoredModulus{3, 1, 8}));
  for (std::int64_t q = 1; q <= 4096; ++q) {
    const FactoredModulus f = factor_pow2(q);
    ASSERT_EQ(f.q_odd % 2, 1);
    ASSERT_EQ((f.q_odd << f.r), q);
  }
}

TEST(CrtTest, Examples) {
  EXPECT_EQ(crt_combine({0, 3}, {0, 4}), (Residue{0, 12}));
  EXPECT_EQ(crt_combine({1, 3}, {2, 4}), (Residue{10, 12}));
  EXPECT_EQ(crt_combine({2, 5}, {3, 7}), (Residue{17, 35}));
  try {
    crt_combine({1, 4}, {1, 6});
    FAIL() << "expected NotCoprime";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCoprime);
  }
}

TEST(CrtTest, BijectionOnCoprimeModuli) {
  for (std::int64_t n1 = 1; n1 <= 40; ++n1) {
    for (std::int64_t n2 = 1; n1 * n2 <= 1000; ++n2) {
      if (std::gcd(n1, n2) != 1) continue;
      std::set<std::int64_t> seen;
      for (std::int64_t v1 = 0; v1 < n1; ++v1) {
        for (std::int64_t v2 = 0; v2 < n2; ++v2) {
          const Residue r = crt_combine({v1, n1}, {v2, n2});
          ASSERT_EQ(r.modulus, n1 * n2);
          ASSERT_EQ(r.value % n1, v1);
          ASSERT_EQ(r.value % n2, v2);
          seen.insert(r.value);
        }
      }
      ASSERT_EQ(static_cast<std::int64_t>(seen.size()), n1 * n2);
    }
  }
  EXPECT_EQ(crt_combine({1, 3}, {2, 4}).value, *oracle::crt_by_scan(1, 3, 2, 4));
}

TEST(PhiTest, Examples) {
  EXPECT_EQ(phi_p(1, 5), (PhiResult{4, 5}));
  EXPECT_EQ(phi_p(1, 6), (PhiResult{1, 3}));
  EXPECT_EQ(phi_p(3, 8), (PhiResult{3, 8}));
  EXPECT_EQ(phi_p(0, 1), (PhiResult{0, 1}));
  EXPECT_EQ(phi_p(1, 2), (PhiResult{0, 1}));
  try {
    phi_p(2, 6);
    FAIL() << "expected NotCoprime";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCoprime);
  }
}

TEST(PhiTest, DefiningCongruenceAndInjectivity) {
  for (std::int64_t q = 1; q <= 400; ++q) {
    std::set<std::int64_t> images;
    std::int64_t units = 0;
    const std::int64_t n = q % 4 == 2 ? q / 2 : q;
    for (std::int64_t p = 0; p < n; ++p) {
      if (std::gcd(p, q) != 1) continue;
      ++units;
      const PhiResult r = phi_p(p, q);
      ASSERT_EQ(r.effective_modulus, n);
      ASSERT_LT(r.phi, n);
      const std::int64_t multiple = q % 2 == 1 ? 4 * p : p;
      ASSERT_EQ((multiple * r.phi) % n, 1 % n) << p << "/" << q;
      images.insert(r.phi);
    }
    ASSERT_EQ(static_cast<std::int64_t>(images.size()), units) << q;
  }
}

TEST(IsPrimeTest, AgreesWithTrialDivision) {
  for (std::int64_t n = 0; n <= 20000; ++n) {
    bool prime = n >= 2;
    for (std::int64_t f = 2; f * f <= n && prime; ++f) prime = n % f != 0;
    ASSERT_EQ(is_prime(n), prime) << n;
  }
  EXPECT_TRUE(is_prime(2147483647));
  EXPECT_FALSE(is_prime(std::int64_t{1} << 31));
}

}  // namespace
}  // namespace fprng
