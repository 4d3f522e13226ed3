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

#include "filament_prng/serialize.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>

namespace fprng {
namespace {

void put_f64le(std::ostream& out, double value) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(value);
  char bytes[8];
  for (char& byte : bytes) {
    byte = static_cast<char>(bits & 0xFFU);
    bits >>= 8U;
  }
  out.write(bytes, sizeof bytes);
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  // snprintf honours LC_NUMERIC; force the decimal point.
  for (char* c = buf; *c != '\0'; ++c) {
    if (*c == ',') *c = '.';
  }
  return buf;
}

void write_samples_csv(std::ostream& out, std::span<const UnitSample> samples) {
  out << "n,x,u\n";
  for (const UnitSample& s : samples) {
    out << s.n << ',' << s.x << ',' << format_double(s.u) << '\n';
  }
}

void write_samples_json(std::ostream& out, std::span<const UnitSample> samples) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const UnitSample& s : samples) {
    rows.push_back({{"n", s.n}, {"x", s.x}, {"u", s.u}});
  }
  out << rows.dump(2) << '\n';
}

void write_samples_f64le(std::ostream& out, std::span<const UnitSample> samples) {
  for (const UnitSample& s : samples) put_f64le(out, s.u);
}

void write_circle_csv(std::ostream& out, std::span<const CirclePoint> points) {
  out << "p,re,im\n";
  for (const CirclePoint& z : points) {
    out << z.p << ',' << format_double(z.re) << ',' << format_double(z.im) << '\n';
  }
}

void write_circle_json(std::ostream& out, std::span<const CirclePoint> points) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CirclePoint& z : points) {
    rows.push_back({{"p", z.p}, {"re", z.re}, {"im", z.im}, {"u", z.u}});
  }
  out << rows.dump(2) << '\n';
}

void write_circle_f64le(std::ostream& out, std::span<const CirclePoint> points) {
  for (const CirclePoint& z : points) put_f64le(out, z.u);
}

void write_polygon_csv(std::ostream& out, std::span<const Vec3> vertices) {
  out << "index,x,y,z\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out << i << ',' << format_double(vertices[i][0]) << ','
        << format_double(vertices[i][1]) << ',' << format_double(vertices[i][2])
        << '\n';
  }
}

void write_polygon_json(std::ostream& out, std::span<const Vec3> vertices) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    rows.push_back({{"index", i},
                    {"x", vertices[i][0]},
                    {"y", vertices[i][1]},
                    {"z", vertices[i][2]}});
  }
  out << rows.dump(2) << '\n';
}

nlohmann::ordered_json to_json(const DiscrepancyReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.N;
  j["k"] = report.k;
  j["lags"] = report.lags;
  j["star"] = report.star;
  j["extreme_lower"] = report.extreme_lower;
  j["extreme_upper"] = report.extreme_upper;
  if (report.theorem2_upper) j["theorem2_upper"] = *report.theorem2_upper;
  if (report.theorem_lower_scale) j["theorem_lower_scale"] = *report.theorem_lower_scale;
  if (report.random_reference) j["random_reference"] = *report.random_reference;
  return j;
}

nlohmann::ordered_json to_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["p"] = report.p;
  j["k"] = report.k;
  j["upper"] = report.upper;
  j["t"] = report.t;
  j["lower_threshold"] = report.lower_threshold;
  j["A_p_t"] = report.A_p_t;
  return j;
}

}  // namespace fprng
