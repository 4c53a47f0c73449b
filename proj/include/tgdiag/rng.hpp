// Copyright 2026 The tgdiag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "tgdiag/types.hpp"

namespace tgdiag {

/// Sub-seed for an independent random stream, e.g. one per timestep or per
/// epoch: mix64(seed ^ mix64(stream)), where mix64 is the splitmix64 step
/// (add 0x9E3779B97F4A7C15, then the two xor-shift-multiply rounds).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// mt19937_64 with distribution helpers whose output is fixed by this code
/// rather than by the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tgdiag
