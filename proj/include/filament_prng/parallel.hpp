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

#ifndef FILAMENT_PRNG_PARALLEL_HPP_
#define FILAMENT_PRNG_PARALLEL_HPP_

#include <cstdint>
#include <functional>

namespace fprng {

// Worker count: hardware concurrency, capped by FILAMENT_PRNG_THREADS when
// that variable holds a positive integer. Always at least 1.
int worker_count();

// Runs body(begin, end) over contiguous chunks of [0, n), one per worker.
// Chunk boundaries depend only on n and the worker count.
void parallel_chunks(std::int64_t n,
                     const std::function<void(std::int64_t, std::int64_t)>& body);

}  // namespace fprng

#endif  // FILAMENT_PRNG_PARALLEL_HPP_
