/*
 * Copyright 2026 The ponplan Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ponplan/random.hpp"

namespace ponplan {

SplitMix64 make_stream(std::uint64_t seed, StreamDomain domain, std::uint64_t index) noexcept {
  const std::uint64_t key = mix64(seed ^ mix64(static_cast<std::uint64_t>(domain)));
  return SplitMix64(mix64(key + mix64(index)));
}

std::uint64_t uniform_index(SplitMix64& rng, std::uint64_t bound) noexcept {
  __extension__ using u128 = unsigned __int128;
  u128 product = static_cast<u128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace ponplan
