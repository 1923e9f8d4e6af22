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

#include "potgame/random.h"

#include <stdexcept>

namespace potgame {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t t)
    : state_(seed ^ SplitMix64(SplitMix64(stream) ^ (t * 0xd1b54a32d192ed03ULL))) {}

RandomStream::result_type RandomStream::operator()() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t RandomStream::Below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("RandomStream::Below: empty range");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = max() - max() % n;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return x % n;
}

std::size_t RandomStream::Sample(std::span<const Rational> distribution) {
  mpz_class denom = 1;
  for (const Rational& p : distribution) {
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), p.get_den_mpz_t());
  }
  if (!denom.fits_ulong_p()) {
    throw std::domain_error("RandomStream::Sample: common denominator exceeds 64 bits");
  }
  const std::uint64_t draw = Below(denom.get_ui());
  mpz_class cumulative = 0;
  for (std::size_t i = 0; i < distribution.size(); ++i) {
    cumulative += distribution[i].get_num() * (denom / distribution[i].get_den());
    if (draw < cumulative) return i;
  }
  throw std::invalid_argument("RandomStream::Sample: probabilities sum below 1");
}

std::uint64_t ReplicaSeed(std::uint64_t seed, std::uint64_t run) {
  return SplitMix64(seed + SplitMix64(run));
}

}  // namespace potgame
