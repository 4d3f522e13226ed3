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

#include "filament_prng/filament.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "filament_prng/error.hpp"
#include "filament_prng/gauss.hpp"
#include "filament_prng/modular.hpp"

namespace fprng {

Mat3 identity3() {
  return {Vec3{1.0, 0.0, 0.0}, Vec3{0.0, 1.0, 0.0}, Vec3{0.0, 0.0, 1.0}};
}

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    }
  }
  return out;
}

Mat3 transpose(const Mat3& a) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = a[j][i];
  }
  return out;
}

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double determinant(const Mat3& a) { return dot(cross(a[0], a[1]), a[2]); }

double frobenius_distance(const Mat3& a, const Mat3& b) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double d = a[i][j] - b[i][j];
      sum += d * d;
    }
  }
  return std::sqrt(sum);
}

void PolygonConfig::validate() const {
  if (M < 3) {
    throw Error(ErrorCode::kDegeneratePolygon,
                "polygon needs M >= 3, got " + std::to_string(M));
  }
  check_modulus(time.q);
  if (time.p < 0 || std::gcd(time.p, time.q) != 1) {
    throw Error(ErrorCode::kNotCoprime, "time p/q = " + std::to_string(time.p) +
                                            "/" + std::to_string(time.q) +
                                            " not in lowest terms");
  }
}

CornerAngle corner_angle(int M, std::int64_t q) {
  if (M < 3) {
    throw Error(ErrorCode::kDegeneratePolygon,
                "polygon needs M >= 3, got " + std::to_string(M));
  }
  check_modulus(q);
  const double exponent = (q % 2 == 1 ? 2.0 : 4.0) / static_cast<double>(q);
  double c = 2.0 * std::pow(std::cos(std::numbers::pi / M), exponent) - 1.0;
  if (c > 1.0 && c < 1.0 + 1e-12) c = 1.0;
  if (c < -1.0 && c > -1.0 - 1e-12) c = -1.0;
  // (1 - c)(1 + c) keeps sin accurate when rho is small.
  const double s = std::sqrt((1.0 - c) * (1.0 + c));
  return {std::atan2(s, c), c, s};
}

CornerRotation rotation_matrix(const CornerAngle& angle, double theta) {
  const double c = angle.cos_rho;
  const double s = angle.sin_rho;
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  CornerRotation out;
  out.theta = theta;
  out.matrix = {
      Vec3{c, s * ct, s * st},
      Vec3{-s * ct, c * ct * ct + st * st, (c - 1.0) * ct * st},
      Vec3{-s * st, (c - 1.0) * ct * st, c * st * st + ct * ct},
  };
  return out;
}

std::int64_t corner_count(int M, std::int64_t q) {
  return q % 2 == 1 ? M * q : M * q / 2;
}

std::int64_t corner_gauss_index(std::int64_t j, std::int64_t q) {
  if (q % 2 == 1) return mod_floor(j, q);
  if (q % 4 == 2) return mod_floor(2 * j + 1, q);
  return mod_floor(2 * j, q);
}

double side_length(int M, std::int64_t q) {
  const double numerator = (q % 2 == 1 ? 2.0 : 4.0) * std::numbers::pi;
  return numerator / (static_cast<double>(M) * static_cast<double>(q));
}

FrameTransport::FrameTransport(const PolygonConfig& config, const Mat3& initial)
    : config_(config), initial_(initial) {
  config_.validate();
  const std::int64_t q = config_.time.q;
  angle_ = corner_angle(config_.M, q);
  corners_ = fprng::corner_count(config_.M, q);

  std::vector<double> theta(static_cast<std::size_t>(q), 0.0);
  for (const ThetaPhase& phase : theta_sequence(config_.time.p, q)) {
    theta[static_cast<std::size_t>(phase.m)] = phase.theta;
  }
  std::vector<Mat3> rotations(static_cast<std::size_t>(q));
  for (std::int64_t g : active_gauss_indices(q)) {
    rotations[static_cast<std::size_t>(g)] =
        rotation_matrix(angle_, theta[static_cast<std::size_t>(g)]).matrix;
  }

  frames_.reserve(static_cast<std::size_t>(corners_ + 2));
  frames_.push_back(initial_);
  for (std::int64_t j = 0; j <= corners_; ++j) {
    const Mat3& rotation =
        rotations[static_cast<std::size_t>(corner_gauss_index(j, q))];
    frames_.push_back(multiply(rotation, frames_.back()));
  }
}

const Mat3& FrameTransport::frame_after(std::int64_t j) const {
  if (j < -1 || j > corners_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "corner " + std::to_string(j) + " outside [-1, " +
                    std::to_string(corners_) + "]");
  }
  return frames_[static_cast<std::size_t>(j + 1)];
}

Mat3 FrameTransport::period_product() const {
  return multiply(frame_after(corners_ - 1), transpose(initial_));
}

std::int64_t FrameTransport::corner_for_index(std::int64_t m) const {
  if (m < 0 || m >= corners_) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(m) + " outside [0, " +
                    std::to_string(corners_) + ")");
  }
  // For q = 2 mod 4 the quantity with index m sits at the corner 2m - 1,
  // which is corner number m - 1 of the period.
  if (config_.time.q % 4 == 2) return m == 0 ? corners_ - 1 : m - 1;
  return m;
}

double FrameTransport::triple_product(std::int64_t m) const {
  const std::int64_t j = corner_for_index(m);
  if (config_.time.q == 2) return 0.0;
  const Mat3 tangents = {frame_after(j - 1)[0], frame_after(j)[0],
                         frame_after(j + 1)[0]};
  return determinant(tangents);
}

double FrameTransport::scalar_product(std::int64_t m) const {
  const std::int64_t j = corner_for_index(m);
  if (config_.time.q == 2) {
    return std::cos(4.0 * std::numbers::pi / config_.M);
  }
  return dot(frame_after(j - 1)[0], frame_after(j + 1)[0]);
}

std::vector<FrameMatrix> transport_frames(const PolygonConfig& config) {
  const FrameTransport transport(config);
  std::vector<FrameMatrix> out;
  out.reserve(static_cast<std::size_t>(transport.corner_count()));
  for (std::int64_t j = 0; j < transport.corner_count(); ++j) {
    out.push_back(FrameMatrix::from_matrix(transport.frame_after(j)));
  }
  return out;
}

double closure_residual(const PolygonConfig& config) {
  return frobenius_distance(FrameTransport(config).period_product(), identity3());
}

std::vector<Vec3> build_polygon(const PolygonConfig& config) {
  const FrameTransport transport(config);
  const double step = side_length(config.M, config.time.q);
  std::vector<Vec3> vertices;
  vertices.reserve(static_cast<std::size_t>(transport.corner_count()));
  Vec3 x{0.0, 0.0, 0.0};
  for (std::int64_t j = 0; j < transport.corner_count(); ++j) {
    vertices.push_back(x);
    const Vec3& tangent = transport.frame_after(j)[0];
    for (int d = 0; d < 3; ++d) x[d] += step * tangent[d];
  }
  return vertices;
}

double triple_product_geometric(const PolygonConfig& config, std::int64_t m) {
  return FrameTransport(config).triple_product(m);
}

double scalar_product_geometric(const PolygonConfig& config, std::int64_t m) {
  return FrameTransport(config).scalar_product(m);
}

CirclePoint z_qm_closed(int M, std::int64_t q, std::int64_t p, std::int64_t m) {
  const CornerAngle angle = corner_angle(M, q);
  const PhiResult phi = phi_p(p, q);
  const std::int64_t n = phi.effective_modulus;
  const std::int64_t k = q % 4 == 2 ? mul_mod(phi.phi, m, n)
                                    : mul_mod(phi.phi, 2 * mod_floor(m, n) + 1, n);
  const std::complex<double> e = unit_root(k, n);
  const double c2 = angle.cos_rho * angle.cos_rho;
  const double s2 = angle.sin_rho * angle.sin_rho;
  return {s2 * e.imag(), c2 - s2 * e.real(), p,
          static_cast<double>(k) / static_cast<double>(n)};
}

}  // namespace fprng
