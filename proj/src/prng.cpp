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

#include <algorithm>
#include <complex>
#include <numeric>
#include <set>
#include <string>

#include "filament_prng/error.hpp"
#include "filament_prng/gauss.hpp"
#include "filament_prng/modular.hpp"
#include "filament_prng/parallel.hpp"

namespace fprng {
namespace {

void require_count(std::int64_t count, std::int64_t start) {
  if (count < 0 || start < 0) {
    throw Error(ErrorCode::kBadParameters, "count and start must be nonnegative");
  }
}

void require_kind(const StreamSpec& spec, StreamKind kind) {
  if (spec.kind != kind) {
    throw Error(ErrorCode::kBadParameters,
                std::string("expected a ") + std::string(stream_kind_name(kind)) +
                    " spec, got " + std::string(stream_kind_name(spec.kind)));
  }
}

double to_unit(std::int64_t x, std::int64_t modulus) {
  const double u = static_cast<double>(x) / static_cast<double>(modulus);
  // Large moduli can round x / q up to 1.
  return u < 1.0 ? u : std::nextafter(1.0, 0.0);
}

// Units of Z_q in [1, q), ascending.
std::vector<std::int64_t> coprime_residues(std::int64_t q) {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 1; r < q; ++r) {
    if (std::gcd(r, q) == 1) out.push_back(r);
  }
  return out;
}

__int128 prime_product(const std::vector<std::int64_t>& primes) {
  __int128 product = 1;
  for (std::int64_t q : primes) product *= q;
  return product;
}

void validate_primes(const std::vector<std::int64_t>& primes) {
  if (primes.empty()) throw Error(ErrorCode::kBadPrimes, "no primes given");
  std::set<std::int64_t> seen;
  __int128 product = 1;
  for (std::int64_t q : primes) {
    if (q < 5 || q > kMaxModulus || !is_prime(q)) {
      throw Error(ErrorCode::kBadPrimes, std::to_string(q) + " is not a prime >= 5");
    }
    if (!seen.insert(q).second) {
      throw Error(ErrorCode::kBadPrimes, "prime " + std::to_string(q) + " repeated");
    }
    product *= q;
    if (product > (static_cast<__int128>(1) << 62)) {
      throw Error(ErrorCode::kRange, "product of primes exceeds 2^62");
    }
  }
}

// Numerator over Q = prod q_j of sum_j phi_j(p) / q_j mod 1.
std::int64_t compound_numerator(const std::vector<std::int64_t>& primes, std::int64_t p) {
  const __int128 total = prime_product(primes);
  __int128 acc = 0;
  for (std::int64_t q : primes) {
    const std::int64_t phi = mod_inverse(mul_mod(4, p, q), q).value;
    acc = (acc + static_cast<__int128>(phi) * (total / q)) % total;
  }
  return static_cast<std::int64_t>(acc);
}

bool compound_admissible(const std::vector<std::int64_t>& primes, std::int64_t p) {
  return std::all_of(primes.begin(), primes.end(),
                     [p](std::int64_t q) { return p % q != 0; });
}

}  // namespace

std::string_view stream_kind_name(StreamKind kind) {
  switch (kind) {
    case StreamKind::kVfeCircle: return "vfe";
    case StreamKind::kEicg: return "eicg";
    case StreamKind::kEicgPow2: return "eicg-pow2";
    case StreamKind::kLcg: return "lcg";
    case StreamKind::kCompound: return "compound";
  }
  return "unknown";
}

void StreamSpec::validate() const {
  switch (kind) {
    case StreamKind::kLcg:
      check_modulus(modulus);
      return;
    case StreamKind::kEicg:
      check_modulus(modulus);
      if (!is_prime(modulus)) {
        throw Error(ErrorCode::kCompositeModulus,
                    "EICG modulus " + std::to_string(modulus) + " is not prime");
      }
      if (mod_floor(a, modulus) == 0) {
        throw Error(ErrorCode::kBadParameters, "EICG multiplier a = 0 mod q");
      }
      return;
    case StreamKind::kEicgPow2: {
      check_modulus(modulus);
      const FactoredModulus f = factor_pow2(modulus);
      if (f.q_odd != 1 || f.r < 5) {
        throw Error(ErrorCode::kBadParameters,
                    "power-of-two EICG needs q = 2^w with w >= 5");
      }
      if (mod_floor(a, 4) != 2 || mod_floor(b, 2) != 1) {
        throw Error(ErrorCode::kBadParameters,
                    "power-of-two EICG needs a = 2 mod 4 and b odd");
      }
      return;
    }
    case StreamKind::kVfeCircle:
      corner_angle(M, modulus);
      return;
    case StreamKind::kCompound:
      corner_angle(M, 1);
      validate_primes(primes);
      return;
  }
}

std::int64_t StreamSpec::period() const {
  switch (kind) {
    case StreamKind::kLcg: return modulus;  // maximal period
    case StreamKind::kEicg: return modulus;
    case StreamKind::kEicgPow2: return modulus / 2;
    case StreamKind::kVfeCircle: return modulus == 1 ? 0 : euler_totient(modulus);
    case StreamKind::kCompound: {
      std::int64_t n = 1;
      for (std::int64_t q : primes) n *= q - 1;
      return n;
    }
  }
  return 0;
}

StreamSpec randu_preset() {
  StreamSpec spec;
  spec.kind = StreamKind::kLcg;
  spec.modulus = std::int64_t{1} << 31;
  spec.a = 65539;
  spec.b = 0;
  spec.seed = 1;
  return spec;
}

std::vector<UnitSample> lcg_stream(const StreamSpec& spec, std::int64_t count,
                                   std::int64_t start) {
  require_kind(spec, StreamKind::kLcg);
  spec.validate();
  require_count(count, start);
  const std::int64_t q = spec.modulus;
  const std::int64_t a = mod_floor(spec.a, q);
  const std::int64_t b = mod_floor(spec.b, q);

  // Jump ahead: x_start = A x_0 + B where (A, B) is the start-fold power of
  // the affine map x -> a x + b.
  std::int64_t jump_a = 1 % q;
  std::int64_t jump_b = 0;
  std::int64_t step_a = a;
  std::int64_t step_b = b;
  for (std::int64_t e = start; e != 0; e >>= 1) {
    if (e & 1) {
      jump_b = (mul_mod(step_a, jump_b, q) + step_b) % q;
      jump_a = mul_mod(step_a, jump_a, q);
    }
    step_b = (mul_mod(step_a, step_b, q) + step_b) % q;
    step_a = mul_mod(step_a, step_a, q);
  }
  std::int64_t x = (mul_mod(jump_a, spec.seed, q) + jump_b) % q;

  std::vector<UnitSample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    out.push_back({start + i, x, to_unit(x, q)});
    x = (mul_mod(a, x, q) + b) % q;
  }
  return out;
}

std::vector<UnitSample> eicg_stream(const StreamSpec& spec, std::int64_t count,
                                    std::int64_t start) {
  require_kind(spec, StreamKind::kEicg);
  spec.validate();
  require_count(count, start);
  const std::int64_t q = spec.modulus;
  std::vector<UnitSample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t n = start; n < start + count; ++n) {
    const std::int64_t arg = (mul_mod(spec.a, n, q) + mod_floor(spec.b, q)) % q;
    const std::int64_t x = fermat_inverse(arg, q).value;
    out.push_back({n, x, to_unit(x, q)});
  }
  return out;
}

std::vector<UnitSample> eicg_pow2_stream(const StreamSpec& spec, std::int64_t count,
                                         std::int64_t start) {
  require_kind(spec, StreamKind::kEicgPow2);
  spec.validate();
  require_count(count, start);
  const std::int64_t q = spec.modulus;
  std::vector<UnitSample> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t n = start; n < start + count; ++n) {
    const std::int64_t arg = (mul_mod(spec.a, n, q) + mod_floor(spec.b, q)) % q;
    const std::int64_t x = mod_inverse(arg, q).value;
    out.push_back({n, x, to_unit(x, q)});
  }
  return out;
}

std::vector<CirclePoint> vfe_stream(int M, std::int64_t q) {
  corner_angle(M, q);
  const std::int64_t m = q % 4 == 2 ? 1 : 0;
  std::vector<CirclePoint> out;
  for (std::int64_t p : coprime_residues(q)) out.push_back(z_qm_closed(M, q, p, m));
  return out;
}

std::vector<UnitSample> vfe_phase_stream(const StreamSpec& spec, std::int64_t count,
                                         std::int64_t start) {
  require_kind(spec, StreamKind::kVfeCircle);
  spec.validate();
  require_count(count, start);
  const std::int64_t q = spec.modulus;
  const std::vector<std::int64_t> residues = coprime_residues(q);
  std::vector<UnitSample> out;
  if (count == 0) return out;
  if (residues.empty()) {
    throw Error(ErrorCode::kBadParameters, "q = 1 yields an empty stream");
  }
  const auto per_block = static_cast<std::int64_t>(residues.size());
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t k = start; k < start + count; ++k) {
    const std::int64_t p =
        (k / per_block) * q + residues[static_cast<std::size_t>(k % per_block)];
    const PhiResult phi = phi_p(p, q);
    out.push_back({p, phi.phi, to_unit(phi.phi, phi.effective_modulus)});
  }
  return out;
}

std::vector<UnitSample> compound_stream(int M, const std::vector<std::int64_t>& primes,
                                        std::int64_t count, std::int64_t start) {
  corner_angle(M, 1);
  validate_primes(primes);
  require_count(count, start);
  const auto total = static_cast<std::int64_t>(prime_product(primes));
  std::int64_t per_block = 1;
  for (std::int64_t q : primes) per_block *= q - 1;

  std::vector<UnitSample> out;
  out.reserve(static_cast<std::size_t>(count));
  std::int64_t p = (start / per_block) * total;
  std::int64_t skip = start % per_block;
  while (static_cast<std::int64_t>(out.size()) < count) {
    ++p;
    if (!compound_admissible(primes, p)) continue;
    if (skip > 0) {
      --skip;
      continue;
    }
    const std::int64_t x = compound_numerator(primes, p);
    out.push_back({p, x, to_unit(x, total)});
  }
  return out;
}

double compound_identity_error(int M, const std::vector<std::int64_t>& primes,
                               std::int64_t p) {
  validate_primes(primes);
  std::complex<double> product{1.0, 0.0};
  for (std::int64_t q : primes) {
    const CornerAngle angle = corner_angle(M, q);
    const CirclePoint z = z_qm_closed(M, q, p, 0);
    const double c2 = angle.cos_rho * angle.cos_rho;
    const double s2 = angle.sin_rho * angle.sin_rho;
    const std::complex<double> iz = std::complex<double>(0.0, 1.0) *
                                    std::complex<double>(z.re, z.im);
    product *= (c2 + iz) / s2;
  }
  const auto total = static_cast<std::int64_t>(prime_product(primes));
  return std::abs(product - unit_root(compound_numerator(primes, p), total));
}

std::vector<UnitSample> generate(const StreamSpec& spec, std::int64_t count,
                                 std::int64_t start) {
  switch (spec.kind) {
    case StreamKind::kLcg: return lcg_stream(spec, count, start);
    case StreamKind::kEicg: return eicg_stream(spec, count, start);
    case StreamKind::kEicgPow2: return eicg_pow2_stream(spec, count, start);
    case StreamKind::kVfeCircle: return vfe_phase_stream(spec, count, start);
    case StreamKind::kCompound: return compound_stream(spec.M, spec.primes, count, start);
  }
  return {};
}

std::vector<UnitSample> generate_parallel(const StreamSpec& spec, std::int64_t count,
                                          std::int64_t start) {
  spec.validate();
  require_count(count, start);
  std::vector<UnitSample> out(static_cast<std::size_t>(count));
  parallel_chunks(count, [&](std::int64_t begin, std::int64_t end) {
    const std::vector<UnitSample> chunk = generate(spec, end - begin, start + begin);
    std::copy(chunk.begin(), chunk.end(), out.begin() + begin);
  });
  return out;
}

bool eicg_family_distinct(const std::vector<std::pair<std::int64_t, std::int64_t>>& ab,
                          std::int64_t q) {
  std::set<std::int64_t> seen;
  for (const auto& [a, b] : ab) {
    if (!seen.insert(mul_mod(b, mod_inverse(a, q).value, q)).second) return false;
  }
  return true;
}

}  // namespace fprng
