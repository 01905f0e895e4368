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

#include "muc/hardgen.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include "muc/errors.h"
#include "muc/random.h"

namespace muc {
namespace {

constexpr std::size_t kMaxOwnerTable = std::size_t{1} << 30;

std::size_t CeilDiv(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

std::size_t DefaultHardA(std::size_t k, std::size_t m) {
  if (k < 1 || m < 1) throw DomainError("default a needs k, m >= 1");
  const double kd = static_cast<double>(k);
  const double value =
      kd * std::log2(static_cast<double>(m)) + std::log2(kd / 0.05);
  return static_cast<std::size_t>(std::max(1.0, std::ceil(value - 1e-9)));
}

std::size_t HardUniverseSize(std::size_t k, std::size_t a) {
  if (k < 2 || a < 1) throw DomainError("hard instances need k >= 2, a >= 1");
  std::uint64_t layers = 0;
  for (std::size_t t = 1; t <= k; ++t) layers += CeilDiv(a, t);
  const std::uint64_t n = static_cast<std::uint64_t>(k) * (k - 1) * layers;
  if (n > 0xFFFFFFFFull) throw CapacityError("hard universe too large");
  return static_cast<std::size_t>(n);
}

double IdenticalFamilyBound(std::size_t k, std::size_t a) {
  const double kd = static_cast<double>(k);
  return static_cast<double>(a) * kd * kd *
         (Harmonic(static_cast<std::int64_t>(k)) - 1.0);
}

double DistinctFamilyBound(std::size_t k, std::size_t a) {
  const double kd = static_cast<double>(k);
  return static_cast<double>(a) * kd * kd *
         (1.5 + 3.0 / std::sqrt(2.0 * kd));
}

double DistinguisherThreshold(std::size_t k, std::size_t a) {
  return std::sqrt(IdenticalFamilyBound(k, a) * DistinctFamilyBound(k, a));
}

LayeredUniverse::LayeredUniverse(const HardInstanceSpec& spec)
    : k_(spec.k), a_(spec.a), m_(spec.m) {
  if (k_ < 2 || a_ < 1 || m_ < 1) {
    throw DomainError("hard instances need k >= 2, a >= 1, m >= 1");
  }
  if (k_ > 255) throw DomainError("hard instances support at most 255 players");
  n_ = HardUniverseSize(k_, a_);
  if (m_ > kMaxOwnerTable / n_) throw CapacityError("m * n too large");
  offsets_.push_back(0);
  for (std::size_t t = 1; t <= k_; ++t) {
    offsets_.push_back(offsets_.back() + k_ * (k_ - 1) * CeilDiv(a_, t));
  }
  owners_.assign(m_ * n_, 0);
  std::vector<Element> layer;
  for (std::size_t i = 1; i <= m_; ++i) {
    std::uint8_t* row = owners_.data() + (i - 1) * n_;
    for (std::size_t t = 1; t <= k_; ++t) {
      const std::size_t size = layer_size(t);
      layer.resize(size);
      std::iota(layer.begin(), layer.end(),
                static_cast<Element>(layer_offset(t) + 1));
      Rng rng(DeriveSeed(spec.seed, i, t));
      rng.Shuffle(std::span<Element>(layer));
      const std::size_t part = (k_ - t) * CeilDiv(a_, t);
      for (std::size_t pos = 0; pos < k_ * part; ++pos) {
        row[layer[pos] - 1] = static_cast<std::uint8_t>(pos / part + 1);
      }
    }
  }
}

std::size_t LayeredUniverse::layer_offset(std::size_t t) const {
  if (t < 1 || t > k_) throw DomainError("layer out of range");
  return offsets_[t - 1];
}

std::size_t LayeredUniverse::layer_size(std::size_t t) const {
  if (t < 1 || t > k_) throw DomainError("layer out of range");
  return offsets_[t] - offsets_[t - 1];
}

double LayeredUniverse::q(std::size_t t) const {
  if (t < 1 || t > k_) throw DomainError("layer out of range");
  return static_cast<double>(k_ - t) / static_cast<double>(k_ - 1);
}

std::size_t LayeredUniverse::petal_region_size(std::size_t t) const {
  if (t < 1 || t > k_) throw DomainError("layer out of range");
  return k_ * (k_ - t) * CeilDiv(a_, t);
}

std::size_t LayeredUniverse::LayerOf(Element x) const {
  if (x < 1 || x > n_) throw DomainError("element out of range");
  const auto it = std::lower_bound(offsets_.begin() + 1, offsets_.end(),
                                   static_cast<std::size_t>(x));
  return static_cast<std::size_t>(it - offsets_.begin());
}

void LayeredUniverse::CheckIndex(std::size_t i) const {
  if (i < 1 || i > m_) throw DomainError("index out of range");
}

std::size_t LayeredUniverse::Owner(std::size_t i, Element x) const {
  CheckIndex(i);
  if (x < 1 || x > n_) throw DomainError("element out of range");
  return owners_[(i - 1) * n_ + (x - 1)];
}

ElementSet LayeredUniverse::PetalRegion(std::size_t i, std::size_t t) const {
  CheckIndex(i);
  ElementSet out;
  const std::uint8_t* row = owners_.data() + (i - 1) * n_;
  for (std::size_t x = layer_offset(t) + 1; x <= offsets_[t]; ++x) {
    if (row[x - 1] != 0) out.push_back(static_cast<Element>(x));
  }
  return out;
}

ElementSet LayeredUniverse::Part(std::size_t i, std::size_t t,
                                 std::size_t j) const {
  CheckIndex(i);
  if (j < 1 || j > k_) throw DomainError("player out of range");
  ElementSet out;
  const std::uint8_t* row = owners_.data() + (i - 1) * n_;
  for (std::size_t x = layer_offset(t) + 1; x <= offsets_[t]; ++x) {
    if (row[x - 1] == j) out.push_back(static_cast<Element>(x));
  }
  return out;
}

LayeredUniverse BuildLayers(const HardInstanceSpec& spec) {
  return LayeredUniverse(spec);
}

ElementSet PlayerSet(const LayeredUniverse& layers, std::size_t i,
                     std::size_t j) {
  if (i < 1 || i > layers.m()) throw DomainError("index out of range");
  if (j < 1 || j > layers.k()) throw DomainError("player out of range");
  ElementSet out;
  const std::size_t n = layers.universe_size();
  for (std::size_t x = 1; x <= n; ++x) {
    const std::size_t owner = layers.Owner(i, static_cast<Element>(x));
    if (owner == 0 || owner == j) out.push_back(static_cast<Element>(x));
  }
  return out;
}

DisjInputs GenDisjInputs(const HardInstanceSpec& spec) {
  if (spec.k < 1 || spec.m < 4 * spec.k) {
    throw DomainError("Disj inputs need m >= 4k");
  }
  Rng rng(DeriveSeed(spec.seed, 0xD15, 0));
  DisjInputs inputs;
  inputs.d.resize(spec.k);
  std::vector<std::uint32_t> pool;
  if (spec.answer == DisjAnswer::kYes) {
    inputs.i_star = static_cast<std::uint32_t>(rng.UniformInRange(1, spec.m));
  }
  for (std::uint32_t i = 1; i <= spec.m; ++i) {
    if (!inputs.i_star || i != *inputs.i_star) pool.push_back(i);
  }
  rng.Shuffle(std::span<std::uint32_t>(pool));
  const std::size_t target = CeilDiv(spec.m, 4);
  std::size_t own = inputs.i_star ? target - 1 : target;
  own = std::max(own, spec.k);
  for (std::size_t pos = 0; pos < own; ++pos) {
    const std::size_t player =
        pos < spec.k ? pos : rng.UniformBelow(spec.k);
    inputs.d[player].push_back(pool[pos]);
  }
  for (auto& d : inputs.d) {
    if (inputs.i_star) d.push_back(*inputs.i_star);
    std::sort(d.begin(), d.end());
  }
  return inputs;
}

std::string HardInstance::MetadataLine() const {
  std::ostringstream out;
  out << "hard " << spec.k << ' ' << spec.a << ' ' << spec.m << ' '
      << (spec.answer == DisjAnswer::kYes ? "yes" : "no") << ' ';
  if (inputs.i_star) {
    out << *inputs.i_star;
  } else {
    out << '-';
  }
  out << ' ' << spec.seed;
  return out.str();
}

HardInstance EmitStream(const HardInstanceSpec& spec) {
  return EmitStream(spec, LayeredUniverse(spec));
}

HardInstance EmitStream(const HardInstanceSpec& spec,
                        const LayeredUniverse& layers) {
  DisjInputs inputs = GenDisjInputs(spec);
  std::vector<ElementSet> sets;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> origin;
  for (std::size_t j = 1; j <= spec.k; ++j) {
    for (std::uint32_t i : inputs.d[j - 1]) {
      sets.push_back(PlayerSet(layers, i, j));
      origin.emplace_back(i, static_cast<std::uint32_t>(j));
    }
  }
  SetSystem system(layers.universe_size(), std::move(sets), spec.k);
  return HardInstance{spec, std::move(inputs), std::move(system),
                      std::move(origin)};
}

std::size_t VerifyIdenticalFamily(const LayeredUniverse& layers,
                                  std::size_t i) {
  std::vector<ElementSet> family;
  for (std::size_t j = 1; j <= layers.k(); ++j) {
    family.push_back(PlayerSet(layers, i, j));
  }
  std::vector<SetView> views(family.begin(), family.end());
  const std::size_t value = ComputeCoverageProfile(views).unique.size();
  std::size_t expected = 0;
  for (std::size_t t = 1; t <= layers.k(); ++t) {
    expected += layers.petal_region_size(t);
  }
  if (value != expected) {
    throw ConstructionError("identical family value " + std::to_string(value) +
                            " differs from sum q_t |U_t| = " +
                            std::to_string(expected));
  }
  const double bound = IdenticalFamilyBound(layers.k(), layers.a());
  if (static_cast<double>(value) < bound * (1.0 - 1e-12)) {
    throw ConstructionError("identical family value below a k^2 (H_k - 1)");
  }
  return value;
}

DistinctFamilyStats SampleDistinctFamilyValue(const LayeredUniverse& layers,
                                              std::size_t ell,
                                              std::size_t trials,
                                              std::uint64_t seed) {
  const std::size_t k = layers.k();
  const std::size_t m = layers.m();
  const std::size_t n = layers.universe_size();
  if (ell < 1 || ell > std::min(k, m)) {
    throw DomainError("ell must lie in [1, min(k, m)]");
  }
  if (trials < 1) throw DomainError("trials must be positive");

  DistinctFamilyStats stats;
  stats.ell = ell;
  stats.trials = trials;
  stats.layer_mean.assign(k, 0.0);
  stats.layer_stddev.assign(k, 0.0);
  stats.layer_max.assign(k, 0);
  stats.total_bound = DistinctFamilyBound(k, layers.a());
  for (std::size_t t = 1; t <= k; ++t) {
    const double td = static_cast<double>(t);
    const double kd = static_cast<double>(k);
    stats.layer_bound.push_back(
        kd * (static_cast<double>(layers.a()) + td) *
        static_cast<double>(ell) *
        std::pow(1.0 - td / kd, static_cast<double>(ell) - 1.0));
  }

  Rng rng(DeriveSeed(seed, ell, 0x5A));
  std::vector<std::uint32_t> indices(m);
  std::iota(indices.begin(), indices.end(), 1u);
  std::vector<std::uint8_t> freq(n);
  std::vector<std::vector<double>> per_layer(k);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    for (std::size_t s = 0; s < ell; ++s) {
      std::swap(indices[s], indices[s + rng.UniformBelow(m - s)]);
    }
    std::fill(freq.begin(), freq.end(), 0);
    for (std::size_t s = 0; s < ell; ++s) {
      const std::size_t i = indices[s];
      const std::size_t j = rng.UniformInRange(1, k);
      for (std::size_t x = 1; x <= n; ++x) {
        const std::size_t owner = layers.Owner(i, static_cast<Element>(x));
        if (owner == 0 || owner == j) ++freq[x - 1];
      }
    }
    std::size_t total = 0;
    for (std::size_t t = 1; t <= k; ++t) {
      std::size_t unique = 0;
      const std::size_t begin = layers.layer_offset(t);
      for (std::size_t x = begin; x < begin + layers.layer_size(t); ++x) {
        unique += freq[x] == 1 ? 1 : 0;
      }
      per_layer[t - 1].push_back(static_cast<double>(unique));
      stats.layer_max[t - 1] = std::max(stats.layer_max[t - 1], unique);
      total += unique;
    }
    stats.totals.push_back(total);
    stats.total_max = std::max(stats.total_max, total);
    if (static_cast<double>(total) >= stats.total_bound) ++stats.violations;
  }
  for (std::size_t t = 0; t < k; ++t) {
    const auto& values = per_layer[t];
    const double mean =
        std::accumulate(values.begin(), values.end(), 0.0) /
        static_cast<double>(trials);
    double sq = 0.0;
    for (double v : values) sq += (v - mean) * (v - mean);
    stats.layer_mean[t] = mean;
    stats.layer_stddev[t] =
        trials > 1 ? std::sqrt(sq / static_cast<double>(trials - 1)) : 0.0;
  }
  stats.total_mean =
      std::accumulate(stats.totals.begin(), stats.totals.end(), 0.0) /
      static_cast<double>(trials);
  return stats;
}

}  // namespace muc
