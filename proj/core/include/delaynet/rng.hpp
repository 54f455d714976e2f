// Copyright 2026 The Delaynet Authors
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

#ifndef DELAYNET_RNG_HPP
#define DELAYNET_RNG_HPP

#include <cstdint>
#include <random>

namespace delaynet {

// splitmix64 step; used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Deterministic random source. The engine is the standard-specified
// mt19937_64, and all distributions are hand-rolled on top of it so that
// identical seeds give identical draws on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer on [lo, hi], inclusive, via unbiased rejection.
  int uniform_int(int lo, int hi);

  // Zero-mean unit-variance Gaussian (polar method, no cached spare).
  double gaussian();

  double gaussian(double stddev) { return stddev * gaussian(); }

  std::uint64_t seed() const { return seed_; }

  // Derives an independent stream for sub-tasks (trials, channels, noise)
  // so that extra draws on one stream cannot shift another.
  Rng fork(std::uint64_t stream) const { return Rng(mix_seed(seed_, stream)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace delaynet

#endif  // DELAYNET_RNG_HPP
