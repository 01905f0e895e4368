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

#ifndef MUC_RANDOM_INSTANCE_H_
#define MUC_RANDOM_INSTANCE_H_

#include <cstddef>
#include <cstdint>

#include "muc/setsys.h"

namespace muc {

struct RandomInstanceParams {
  std::size_t n = 20;
  std::size_t m = 6;
  std::size_t k = 2;
  // Caps on element frequency and set size; 0 means unconstrained (m and n).
  std::size_t r_max = 0;
  std::size_t d_max = 0;
  std::size_t d_min = 1;
};

// Draws m sets whose sizes are uniform in [d_min, d_max] (shrunk when the
// frequency cap leaves too few elements) and whose elements are uniform
// among those still below the frequency cap. Whole instances failing the
// caps are resampled. Deterministic per seed.
//
// Throws DomainError on contradictory parameters, e.g. r_max * n smaller
// than m * d_min, or when resampling gives up.
SetSystem GenerateRandomInstance(const RandomInstanceParams& params,
                                 std::uint64_t seed);

}  // namespace muc

#endif  // MUC_RANDOM_INSTANCE_H_
