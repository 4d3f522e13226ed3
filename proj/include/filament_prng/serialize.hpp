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

#ifndef FILAMENT_PRNG_SERIALIZE_HPP_
#define FILAMENT_PRNG_SERIALIZE_HPP_

#include <ostream>
#include <span>
#include <string>

#include "filament_prng/filament.hpp"
#include "filament_prng/prng.hpp"
#include "filament_prng/stattest.hpp"
#include "json.hpp"

namespace fprng {

// 17 significant digits, '.' decimal point regardless of locale.
std::string format_double(double value);

// CSV output is LF-terminated with a header row.
void write_samples_csv(std::ostream& out, std::span<const UnitSample> samples);
void write_samples_json(std::ostream& out, std::span<const UnitSample> samples);
// Raw little-endian IEEE-754 doubles of u, no header.
void write_samples_f64le(std::ostream& out, std::span<const UnitSample> samples);

void write_circle_csv(std::ostream& out, std::span<const CirclePoint> points);
void write_circle_json(std::ostream& out, std::span<const CirclePoint> points);
void write_circle_f64le(std::ostream& out, std::span<const CirclePoint> points);

void write_polygon_csv(std::ostream& out, std::span<const Vec3> vertices);
void write_polygon_json(std::ostream& out, std::span<const Vec3> vertices);

nlohmann::ordered_json to_json(const DiscrepancyReport& report);
nlohmann::ordered_json to_json(const BoundReport& report);

}  // namespace fprng

#endif  // FILAMENT_PRNG_SERIALIZE_HPP_
