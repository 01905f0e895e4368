// Copyright 2026 The Authors.
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

#ifndef MUC_RANDOM_H_
#define MUC_RANDOM_H_

// Portable seeded randomness. std::mt19937_64's output sequence is fixed by
// the standard, but the std distributions are not, so bounded draws and
// shuffles are implemented here to keep generated files byte-identical
// across standard libraries.

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace muc {

// One SplitMix64 finalization step.
std::uint64_t Mix64(std::uint64_t x);

// Counter-based derivation of an independent seed from a master seed.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t a,
                         std::uint64_t b = 0);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(Mix64(seed)) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t UniformBelow(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t UniformInRange(std::uint64_t lo, std::uint64_t hi);
  // Uniform in [0, 1) with 53 random bits.
  double UniformReal();

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = UniformBelow(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace muc

#endif  // MUC_RANDOM_H_
