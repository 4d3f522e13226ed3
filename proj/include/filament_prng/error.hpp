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

#ifndef FILAMENT_PRNG_ERROR_HPP_
#define FILAMENT_PRNG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fprng {

enum class ErrorCode {
  kNotInvertible,
  kNotCoprime,
  kEvenModulus,
  kRange,
  kWrongParityClass,
  kDegeneratePolygon,
  kIndexOutOfRange,
  kCompositeModulus,
  kBadParameters,
  kBadPrimes,
  kBadLags,
  kTooLarge,
  kBadDimension,
  kBadT,
  kEmptyInput,
};

std::string_view error_code_name(ErrorCode code);

// Every precondition violation in the library surfaces as an Error carrying
// the code; the CLI maps these to its usage exit status.
class Error : public std::invalid_argument {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::invalid_argument(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fprng

#endif  // FILAMENT_PRNG_ERROR_HPP_
