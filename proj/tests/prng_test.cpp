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

#include "filament_prng/prng.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numeric>
#include <set>

#include "filament_prng/error.hpp"
#include "filament_prng/modular.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace fprng {
namespace {

StreamSpec lcg(std::int64_t a, std::int64_t b, std::int64_t x0, std::int64_t q) {
  StreamSpec s;
  s.kind = StreamKind::kLcg;
  s.a = a;
  s.b = b;
  s.seed = x0;
  s.modulus = q;
  return s;
}

StreamSpec eicg(std::int64_t q, std::int64_t a, std::int64_t b) {
  StreamSpec s;
  s.kind = StreamKind::kEicg;
  s.modulus = q;
  s.a = a;
  s.b = b;
  return s;
}

StreamSpec eicg_pow2(int omega, std::int64_t a, std::int64_t b) {
  StreamSpec s;
  s.kind = StreamKind::kEicgPow2;
  s.modulus = std::int64_t{1} << omega;
  s.a = a;
  s.b = b;
  return s;
}

std::vector<std::int64_t> raw(const std::vector<UnitSample>& samples) {
  std::vector<std::int64_t> out;
  for (const UnitSample& s : samples) out.push_back(s.x);
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kEmptyInput;
}

TEST(LcgTest, Examples) {
  for (const UnitSample& s : lcg_stream(lcg(1, 0, 5, 8), 10)) {
    EXPECT_EQ(s.x, 5);
    EXPECT_DOUBLE_EQ(s.u, 5.0 / 8.0);
  }
  EXPECT_EQ(raw(lcg_stream(randu_preset(), 3)),
            (std::vector<std::int64_t>{1, 65539, 393225}));

  // Hull-Dobell conditions hold for a = 5, b = 3, q = 16: full period.
  const auto full = lcg_stream(lcg(5, 3, 0, 16), 17);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 16; ++i) seen.insert(full[i].x);
  EXPECT_EQ(seen.size(), 16U);
  EXPECT_EQ(full[16].x, full[0].x);
}

TEST(LcgTest, JumpAheadMatchesIteration) {
  const StreamSpec spec = lcg(1103515245, 12345, 42, std::int64_t{1} << 31);
  const auto sequential = lcg_stream(spec, 5000);
  for (std::int64_t start : {0, 1, 2, 7, 1024, 4095}) {
    const auto tail = lcg_stream(spec, 5000 - start, start);
    for (std::size_t i = 0; i < tail.size(); ++i) {
      ASSERT_EQ(tail[i].x, sequential[start + i].x);
      ASSERT_EQ(tail[i].n, start + static_cast<std::int64_t>(i));
    }
  }
}

TEST(RanduTest, Preset) {
  const StreamSpec r = randu_preset();
  EXPECT_EQ(r.kind, StreamKind::kLcg);
  EXPECT_EQ(r.a, 65539);
  EXPECT_EQ(r.b, 0);
  EXPECT_EQ(r.modulus, 2147483648);
  EXPECT_EQ(r.seed % 2, 1);
  EXPECT_EQ(lcg_stream(r, 2)[1].x, 65539);
}

TEST(RanduTest, ThreeTermRecurrence) {
  const auto xs = raw(lcg_stream(randu_preset(), 100000));
  const std::int64_t q = std::int64_t{1} << 31;
  for (std::size_t n = 0; n + 2 < xs.size(); ++n) {
    ASSERT_EQ(oracle::reduce(9 * xs[n] - 6 * xs[n + 1] + xs[n + 2], q), 0) << n;
  }
}

TEST(EicgTest, Examples) {
  EXPECT_EQ(raw(eicg_stream(eicg(5, 1, 0), 5)), (std::vector<std::int64_t>{0, 1, 3, 2, 4}));

  const auto seven = raw(eicg_stream(eicg(7, 1, 0), 7));
  EXPECT_EQ(std::set<std::int64_t>(seven.begin(), seven.end()),
            (std::set<std::int64_t>{0, 1, 2, 3, 4, 5, 6}));

  const auto phi_stream = eicg_stream(eicg(5, 4, 0), 5);
  for (std::int64_t p = 1; p < 5; ++p) EXPECT_EQ(phi_stream[p].x, phi_p(p, 5).phi);
}

TEST(EicgTest, MatchesSearchOracle) {
  const auto samples = eicg_stream(eicg(101, 17, 33), 250);
  for (const UnitSample& s : samples) {
    const std::int64_t arg = (17 * s.n + 33) % 101;
    const std::int64_t expected = arg == 0 ? 0 : *oracle::inverse_by_search(arg, 101);
    ASSERT_EQ(s.x, expected);
    ASSERT_DOUBLE_EQ(s.u, static_cast<double>(expected) / 101.0);
  }
}

TEST(EicgTest, Errors) {
  EXPECT_EQ(code_of([] { eicg_stream(eicg(9, 1, 0), 3); }), ErrorCode::kCompositeModulus);
  EXPECT_EQ(code_of([] { eicg_stream(eicg(7, 14, 0), 3); }), ErrorCode::kBadParameters);
  EXPECT_EQ(code_of([] { eicg_stream(lcg(1, 0, 0, 7), 3); }), ErrorCode::kBadParameters);
}

TEST(EicgTest, FullPeriodPermutation) {
  for (std::int64_t q : {2, 3, 101, 1009, 9973}) {
    for (auto [a, b] : {std::pair{1, 0}, std::pair{4, 0}, std::pair{3, 7}, std::pair{-5, 11}}) {
      if (oracle::reduce(a, q) == 0) continue;
      const auto xs = raw(eicg_stream(eicg(q, a, b), q));
      std::vector<bool> hit(static_cast<std::size_t>(q), false);
      for (std::int64_t x : xs) hit[static_cast<std::size_t>(x)] = true;
      EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) << q;
      // Period q.
      EXPECT_EQ(raw(eicg_stream(eicg(q, a, b), std::min<std::int64_t>(5, q), q)),
                std::vector<std::int64_t>(xs.begin(), xs.begin() + std::min<std::int64_t>(5, q)));
    }
  }
}

TEST(EicgPow2Test, Examples) {
  const auto xs = raw(eicg_pow2_stream(eicg_pow2(5, 2, 1), 16));
  EXPECT_EQ(xs[0], 1);
  EXPECT_EQ(xs[1], 11);
  std::set<std::int64_t> odd;
  for (std::int64_t v = 1; v < 32; v += 2) odd.insert(v);
  EXPECT_EQ(std::set<std::int64_t>(xs.begin(), xs.end()), odd);
}

TEST(EicgPow2Test, Errors) {
  EXPECT_EQ(code_of([] { eicg_pow2_stream(eicg_pow2(5, 1, 1), 4); }), ErrorCode::kBadParameters);
  EXPECT_EQ(code_of([] { eicg_pow2_stream(eicg_pow2(5, 2, 2), 4); }), ErrorCode::kBadParameters);
  EXPECT_EQ(code_of([] { eicg_pow2_stream(eicg_pow2(4, 2, 1), 4); }), ErrorCode::kBadParameters);
  StreamSpec not_pow2 = eicg_pow2(5, 2, 1);
  not_pow2.modulus = 48;
  EXPECT_EQ(code_of([&] { eicg_pow2_stream(not_pow2, 4); }), ErrorCode::kBadParameters);
}

TEST(EicgPow2Test, VisitsOddResiduesOncePerPeriod) {
  for (int omega = 5; omega <= 16; ++omega) {
    for (auto [a, b] : {std::pair{2, 1}, std::pair{6, 3}, std::pair{-2, 5}}) {
      const StreamSpec spec = eicg_pow2(omega, a, b);
      const std::int64_t q = spec.modulus;
      const auto xs = raw(eicg_pow2_stream(spec, q / 2));
      std::set<std::int64_t> seen(xs.begin(), xs.end());
      ASSERT_EQ(static_cast<std::int64_t>(seen.size()), q / 2);
      for (std::int64_t x : seen) ASSERT_EQ(x % 2, 1);
    }
  }
}

TEST(VfeStreamTest, Examples) {
  const CornerAngle a = corner_angle(3, 5);
  const auto five = vfe_stream(3, 5);
  ASSERT_EQ(five.size(), 4U);
  for (const CirclePoint& z : five) {
    EXPECT_NEAR(std::hypot(z.re, z.im - a.cos_rho * a.cos_rho), a.sin_rho * a.sin_rho, 1e-12);
  }
  EXPECT_TRUE(vfe_stream(3, 1).empty());

  const auto eight = vfe_stream(4, 8);
  ASSERT_EQ(eight.size(), 4U);
  std::set<double> phases;
  for (const CirclePoint& z : eight) phases.insert(z.u * 8);
  EXPECT_EQ(phases, (std::set<double>{1, 3, 5, 7}));
}

TEST(VfeStreamTest, CountDistinctAndEicgEquivalence) {
  for (std::int64_t q : {2, 3, 10, 24, 97, 101, 128, 202, 210}) {
    const CornerAngle a = corner_angle(3, q);
    const auto pts = vfe_stream(3, q);
    ASSERT_EQ(static_cast<std::int64_t>(pts.size()), euler_totient(q)) << q;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ASSERT_NEAR(std::hypot(pts[i].re, pts[i].im - a.cos_rho * a.cos_rho),
                  a.sin_rho * a.sin_rho, 1e-9);
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        ASSERT_GT(std::hypot(pts[i].re - pts[j].re, pts[i].im - pts[j].im), 1e-9);
      }
    }
    if (is_prime(q) && q > 2) {
      const auto e = eicg_stream(eicg(q, 4, 0), q);
      for (const CirclePoint& z : pts) ASSERT_EQ(z.u, e[static_cast<std::size_t>(z.p)].u);
    }
  }
}

TEST(VfeStreamTest, PhaseStreamContinuesPastPeriod) {
  StreamSpec spec;
  spec.kind = StreamKind::kVfeCircle;
  spec.modulus = 10;
  const auto u = vfe_phase_stream(spec, 8);
  ASSERT_EQ(u.size(), 8U);
  EXPECT_EQ(u[0].n, 1);
  EXPECT_EQ(u[4].n, 11);
  EXPECT_EQ(u[4].x, u[0].x);
  const auto pts = vfe_stream(3, 10);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(pts[i].u, u[i].u);
  spec.modulus = 1;
  EXPECT_THROW(vfe_phase_stream(spec, 1), Error);
}

TEST(CompoundTest, Examples) {
  const auto two = compound_stream(3, {5, 7}, 1);
  ASSERT_EQ(two.size(), 1U);
  EXPECT_EQ(two[0].n, 1);
  EXPECT_EQ(two[0].x, 3);
  EXPECT_DOUBLE_EQ(two[0].u, 3.0 / 35.0);

  const auto one = compound_stream(3, {5}, 4);
  for (const UnitSample& s : one) {
    EXPECT_EQ(s.x, phi_p(s.n, 5).phi);
  }
  EXPECT_DOUBLE_EQ(one[0].u, 4.0 / 5.0);
}

TEST(CompoundTest, AdmissibleIndicesAndIdentity) {
  const auto s = compound_stream(4, {5, 7}, 2 * 24);
  std::int64_t expected_p = 0;
  for (const UnitSample& sample : s) {
    do {
      ++expected_p;
    } while (expected_p % 5 == 0 || expected_p % 7 == 0);
    ASSERT_EQ(sample.n, expected_p);
    ASSERT_LT(compound_identity_error(4, {5, 7}, sample.n), 1e-9);
  }
  // Second period repeats the first.
  for (int i = 0; i < 24; ++i) ASSERT_EQ(s[i].x, s[i + 24].x);
}

TEST(CompoundTest, BadPrimes) {
  EXPECT_EQ(code_of([] { compound_stream(3, {3, 7}, 1); }), ErrorCode::kBadPrimes);
  EXPECT_EQ(code_of([] { compound_stream(3, {5, 5}, 1); }), ErrorCode::kBadPrimes);
  EXPECT_EQ(code_of([] { compound_stream(3, {9}, 1); }), ErrorCode::kBadPrimes);
  EXPECT_EQ(code_of([] { compound_stream(3, {}, 1); }), ErrorCode::kBadPrimes);
}

TEST(GenerateTest, RestartAndParallelAreBitIdentical) {
  StreamSpec vfe;
  vfe.kind = StreamKind::kVfeCircle;
  vfe.modulus = 1009;
  StreamSpec compound;
  compound.kind = StreamKind::kCompound;
  compound.primes = {11, 13, 17};
  for (const StreamSpec& spec : {randu_preset(), eicg(1009, 3, 5), eicg_pow2(12, 6, 1), vfe,
                                 compound}) {
    const auto whole = generate(spec, 3000);
    std::vector<UnitSample> pieces;
    for (std::int64_t start = 0; start < 3000; start += 700) {
      const auto part = generate(spec, std::min<std::int64_t>(700, 3000 - start), start);
      pieces.insert(pieces.end(), part.begin(), part.end());
    }
    ::setenv("FILAMENT_PRNG_THREADS", "4", 1);
    const auto parallel = generate_parallel(spec, 3000);
    ::unsetenv("FILAMENT_PRNG_THREADS");
    ASSERT_EQ(pieces.size(), whole.size());
    for (std::size_t i = 0; i < whole.size(); ++i) {
      ASSERT_EQ(pieces[i].x, whole[i].x) << stream_kind_name(spec.kind) << " " << i;
      ASSERT_EQ(parallel[i].x, whole[i].x);
      ASSERT_EQ(parallel[i].n, whole[i].n);
      ASSERT_EQ(std::memcmp(&parallel[i].u, &whole[i].u, sizeof(double)), 0);
    }
  }
}

TEST(FamilyTest, DistinctnessPredicate) {
  EXPECT_TRUE(eicg_family_distinct({{1, 1}, {1, 2}, {2, 1}}, 7));
  // 2 * inverse(2) = 1 = 1 * inverse(1).
  EXPECT_FALSE(eicg_family_distinct({{1, 1}, {2, 2}}, 7));
}

}  // namespace
}  // namespace fprng
