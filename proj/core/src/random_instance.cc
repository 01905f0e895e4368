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

#include "muc/random_instance.h"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "muc/errors.h"
#include "muc/random.h"

namespace muc {
namespace {

constexpr int kMaxAttempts = 200;

std::optional<std::vector<ElementSet>> TryGenerate(
    const RandomInstanceParams& p, std::size_t r_max, std::size_t d_max,
    Rng& rng) {
  std::vector<std::size_t> freq(p.n + 1, 0);
  std::size_t slots = r_max * p.n;
  std::vector<ElementSet> sets;
  sets.reserve(p.m);
  std::vector<Element> available;
  for (std::size_t i = 0; i < p.m; ++i) {
    available.clear();
    for (std::size_t x = 1; x <= p.n; ++x) {
      if (freq[x] < r_max) available.push_back(static_cast<Element>(x));
    }
    const std::size_t sets_after = p.m - i - 1;
    std::size_t size = rng.UniformInRange(p.d_min, d_max);
    size = std::min(size, available.size());
    const std::size_t reserved = p.d_min * sets_after;
    if (slots >= reserved) size = std::min(size, slots - reserved);
    if (size < p.d_min) return std::nullopt;
    // Partial Fisher-Yates: the first `size` entries become the sample.
    for (std::size_t j = 0; j < size; ++j) {
      const std::size_t pick = j + rng.UniformBelow(available.size() - j);
      std::swap(available[j], available[pick]);
    }
    ElementSet set(available.begin(), available.begin() + size);
    std::sort(set.begin(), set.end());
    for (Element x : set) ++freq[x];
    slots -= size;
    sets.push_back(std::move(set));
  }
  return sets;
}

}  // namespace

SetSystem GenerateRandomInstance(const RandomInstanceParams& params,
                                 std::uint64_t seed) {
  const std::size_t r_max = params.r_max == 0 ? params.m : params.r_max;
  const std::size_t d_max = params.d_max == 0 ? params.n : params.d_max;
  if (params.m < 1 || params.k < 1 || params.k > params.m) {
    throw DomainError("need 1 <= k <= m");
  }
  if (params.d_min > d_max) throw DomainError("d_min exceeds d_max");
  if (d_max > params.n) throw DomainError("d_max exceeds n");
  if (r_max * params.n < params.m * params.d_min) {
    throw DomainError("infeasible: r_max * n = " +
                      std::to_string(r_max * params.n) + " < m * d_min = " +
                      std::to_string(params.m * params.d_min));
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    if (auto sets = TryGenerate(params, r_max, d_max, rng)) {
      return SetSystem(params.n, std::move(*sets), params.k);
    }
  }
  throw DomainError("could not satisfy frequency/size caps after " +
                    std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace muc
