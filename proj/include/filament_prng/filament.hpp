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

#ifndef FILAMENT_PRNG_FILAMENT_HPP_
#define FILAMENT_PRNG_FILAMENT_HPP_

#include <array>
#include <cstdint>
#include <vector>

namespace fprng {

using Vec3 = std::array<double, 3>;
// Row-major 3x3 matrix; frames are stored with one unit vector per row.
using Mat3 = std::array<Vec3, 3>;

Mat3 identity3();
Mat3 multiply(const Mat3& a, const Mat3& b);
Mat3 transpose(const Mat3& a);
double determinant(const Mat3& a);
double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double frobenius_distance(const Mat3& a, const Mat3& b);

// t = (2 pi / M^2) (p / q) with gcd(p, q) = 1.
struct RationalTime {
  std::int64_t p = 0;
  std::int64_t q = 1;
};

// A regular planar M-gon evolved to a rational time.
struct PolygonConfig {
  int M = 3;
  RationalTime time;

  // Throws kDegeneratePolygon, kRange or kNotCoprime.
  void validate() const;
};

// Turning angle between adjacent sides of the skew polygon.
struct CornerAngle {
  double rho = 0.0;
  double cos_rho = 1.0;
  double sin_rho = 0.0;
};

struct FrameMatrix {
  Vec3 T{1.0, 0.0, 0.0};
  Vec3 e1{0.0, 1.0, 0.0};
  Vec3 e2{0.0, 0.0, 1.0};

  Mat3 as_matrix() const { return {T, e1, e2}; }
  static FrameMatrix from_matrix(const Mat3& m) { return {m[0], m[1], m[2]}; }
};

struct CornerRotation {
  double theta = 0.0;
  Mat3 matrix = identity3();
};

// z = triple product + i * scalar product; u is the phase fraction in [0, 1)
// with z = i c^2 - i s^2 exp(2 pi i u), and p the generating index.
struct CirclePoint {
  double re = 0.0;
  double im = 0.0;
  std::int64_t p = 0;
  double u = 0.0;
};

// cos rho = 2 cos^{2/q}(pi/M) - 1 (q odd) or 2 cos^{4/q}(pi/M) - 1 (q even).
CornerAngle corner_angle(int M, std::int64_t q);

CornerRotation rotation_matrix(const CornerAngle& angle, double theta);

// Corners per period: Mq for q odd, Mq/2 for q even.
std::int64_t corner_count(int M, std::int64_t q);

// Index of the Gauss sum G(-p, g, q) attached to corner j of the period.
std::int64_t corner_gauss_index(std::int64_t j, std::int64_t q);

// Arc-length spacing of the corners: 2pi/(Mq) for q odd, 4pi/(Mq) otherwise.
double side_length(int M, std::int64_t q);

// Transports the frame (T, e1, e2) across the corners of one period and one
// extra corner, so that quantities at the last corner can look one ahead.
// Frames are never renormalized.
class FrameTransport {
 public:
  explicit FrameTransport(const PolygonConfig& config,
                          const Mat3& initial = identity3());

  const PolygonConfig& config() const { return config_; }
  const CornerAngle& angle() const { return angle_; }
  std::int64_t corner_count() const { return corners_; }

  // Frame after corner j for -1 <= j <= corner_count(); j = -1 is the
  // initial frame.
  const Mat3& frame_after(std::int64_t j) const;

  // Product of the corner rotations over one period, i.e. the final frame
  // with the initial frame factored out.
  Mat3 period_product() const;

  // The pair of quantities indexed the same way as z_qm_closed.
  double triple_product(std::int64_t m) const;
  double scalar_product(std::int64_t m) const;

 private:
  std::int64_t corner_for_index(std::int64_t m) const;

  PolygonConfig config_;
  CornerAngle angle_;
  std::int64_t corners_ = 0;
  Mat3 initial_;
  std::vector<Mat3> frames_;  // frames_[j + 1] = frame after corner j
};

std::vector<FrameMatrix> transport_frames(const PolygonConfig& config);

double closure_residual(const PolygonConfig& config);

// X_0 = 0 and X_{j+1} = X_j + l T_j where T_j is the tangent after corner j.
std::vector<Vec3> build_polygon(const PolygonConfig& config);

double triple_product_geometric(const PolygonConfig& config, std::int64_t m);
double scalar_product_geometric(const PolygonConfig& config, std::int64_t m);

//   q != 2 mod 4: i c^2 - i s^2 exp(2 pi i phi(p) (2m+1) / q)
//   q  = 2 mod 4: i c^2 - i s^2 exp(2 pi i phi(p) m / (q/2))
CirclePoint z_qm_closed(int M, std::int64_t q, std::int64_t p, std::int64_t m);

}  // namespace fprng

#endif  // FILAMENT_PRNG_FILAMENT_HPP_
