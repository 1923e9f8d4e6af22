// Copyright 2026 The potgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POTGAME_RANDOM_H_
#define POTGAME_RANDOM_H_

#include <cstdint>
#include <limits>
#include <span>

#include "potgame/ratmat.h"

namespace potgame {

std::uint64_t SplitMix64(std::uint64_t x);

// SplitMix64 generator. Every draw of a simulation comes from the substream
// keyed by (seed, stream, t), so changing how many draws one step makes never
// shifts the randomness of another.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t t);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  // Uniform in [0, n).
  std::uint64_t Below(std::uint64_t n);
  // Index drawn from an exact probability vector.
  std::size_t Sample(std::span<const Rational> distribution);

 private:
  std::uint64_t state_;
};

// Seed of replica `run` derived from a batch seed.
std::uint64_t ReplicaSeed(std::uint64_t seed, std::uint64_t run);

}  // namespace potgame

#endif  // POTGAME_RANDOM_H_
