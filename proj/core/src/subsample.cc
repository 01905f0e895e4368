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

#include "muc/subsample.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "muc/errors.h"
#include "muc/random.h"

namespace muc {
namespace {

double Log2M(std::size_t m) {
  return std::log2(static_cast<double>(std::max<std::size_t>(m, 2)));
}

}  // namespace

SubsampleInstance::SubsampleInstance(double guess_v, double p,
                                     std::uint64_t hash_seed, double size_cap)
    : guess_v_(guess_v), p_(p), hash_seed_(hash_seed), size_cap_(size_cap) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("p must lie in (0, 1]");
}

bool SubsampleInstance::Keeps(Element x) const {
  if (p_ >= 1.0) return true;
  const std::uint64_t h = Mix64(hash_seed_ ^ Mix64(x));
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  return u < p_;
}

ElementSet SubsampleInstance::Restrict(SetView set) const {
  ElementSet out;
  for (Element x : set) {
    if (Keeps(x)) out.push_back(x);
  }
  return out;
}

std::optional<ElementSet> SubsampleInstance::Ingest(SetView set) {
  if (terminated_) {
    ++ignored_;
    return std::nullopt;
  }
  ElementSet sampled = Restrict(set);
  if (static_cast<double>(sampled.size()) > size_cap_) {
    terminated_ = true;
    return std::nullopt;
  }
  max_sampled_size_ = std::max(max_sampled_size_, sampled.size());
  return sampled;
}

double SubsampleProbability(std::size_t m, std::size_t k, double eps, double c,
                            double guess_v) {
  const double p = c * static_cast<double>(k) * Log2M(m) / (eps * eps * guess_v);
  return std::min(1.0, p);
}

double SubsampleSizeCap(std::size_t m, std::size_t k, double eps, double c) {
  return 2.0 * c * static_cast<double>(k) * Log2M(m) / (eps * eps) *
         (1.0 + eps);
}

std::vector<SubsampleInstance> SpawnSubsampleInstances(
    const SubsampleParams& params) {
  if (params.n < 1) throw DomainError("subsampling needs n >= 1");
  if (!(params.eps > 0.0 && params.eps < 1.0)) {
    throw DomainError("eps must lie in (0, 1)");
  }
  if (!(params.c > 0.0)) throw DomainError("c must be positive");
  if (params.k < 1) throw DomainError("subsampling needs k >= 1");
  int guesses = 1;
  while ((std::uint64_t{1} << guesses) < params.n) ++guesses;
  const double cap =
      SubsampleSizeCap(params.m, params.k, params.eps, params.c);
  std::vector<SubsampleInstance> instances;
  for (int i = 1; i <= guesses; ++i) {
    const double v = std::ldexp(1.0, i);
    const double p =
        params.disable_subsampling
            ? 1.0
            : SubsampleProbability(params.m, params.k, params.eps, params.c, v);
    instances.emplace_back(v, p, DeriveSeed(params.seed, 0x5u, i), cap);
  }
  return instances;
}

SetSystem RestrictToSample(const SetSystem& system,
                           const SubsampleInstance& instance) {
  std::vector<ElementSet> sets;
  sets.reserve(system.num_sets());
  for (const ElementSet& s : system.sets()) sets.push_back(instance.Restrict(s));
  return SetSystem(system.universe_size(), std::move(sets), system.k());
}

}  // namespace muc
