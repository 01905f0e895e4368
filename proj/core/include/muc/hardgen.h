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

#ifndef MUC_HARDGEN_H_
#define MUC_HARDGEN_H_

// Sunflower instances behind the streaming space lower bound.
//
// The universe is split into layers U_1..U_k, stored as contiguous element
// ranges, with |U_t| = k(k-1) ceil(a/t). For every index i in [m] and layer
// t, a seeded permutation of U_t picks the petal region Ũ_t^i, the first
// q_t |U_t| = k(k-t) ceil(a/t) positions with q_t = (k-t)/(k-1), and cuts
// it into k consecutive parts P^i_{t,1..k}. Player j's set for index i is
//
//   S_j^i = union over t of P^i_{t,j} and U_t \ Ũ_t^i.
//
// Indices i are 1..m and players j are 1..k throughout.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "muc/setsys.h"

namespace muc {

enum class DisjAnswer { kNo, kYes };

struct HardInstanceSpec {
  std::size_t k = 2;
  std::size_t a = 1;
  std::size_t m = 8;
  DisjAnswer answer = DisjAnswer::kNo;
  std::uint64_t seed = 0;
};

// ceil(k log2 m + log2(k / 0.05)).
std::size_t DefaultHardA(std::size_t k, std::size_t m);

// k(k-1) sum_t ceil(a/t). Throws CapacityError beyond 2^32 - 1.
std::size_t HardUniverseSize(std::size_t k, std::size_t a);

// a k^2 (H_k - 1): unique coverage of any identical-index family.
double IdenticalFamilyBound(std::size_t k, std::size_t a);
// a k^2 (3/2 + 3/sqrt(2k)): high-probability cap for distinct indices.
double DistinctFamilyBound(std::size_t k, std::size_t a);
// Geometric mean of the two bounds above, used to tell YES from NO.
double DistinguisherThreshold(std::size_t k, std::size_t a);

class LayeredUniverse {
 public:
  // Throws DomainError unless k >= 2, a >= 1 and m >= 1; CapacityError when
  // n or the m x n ownership table is too large.
  explicit LayeredUniverse(const HardInstanceSpec& spec);

  std::size_t k() const { return k_; }
  std::size_t a() const { return a_; }
  std::size_t m() const { return m_; }
  std::size_t universe_size() const { return n_; }

  // Layer t in 1..k occupies elements offset(t)+1 .. offset(t)+size(t).
  std::size_t layer_offset(std::size_t t) const;
  std::size_t layer_size(std::size_t t) const;
  // q_t = (k-t)/(k-1).
  double q(std::size_t t) const;
  // |Ũ_t^i| = k(k-t) ceil(a/t).
  std::size_t petal_region_size(std::size_t t) const;
  // Layer of an element.
  std::size_t LayerOf(Element x) const;

  // 0 when x lies in the shared part U_t \ Ũ_t^i, else the owning player.
  std::size_t Owner(std::size_t i, Element x) const;
  // Ũ_t^i and its parts, ascending.
  ElementSet PetalRegion(std::size_t i, std::size_t t) const;
  ElementSet Part(std::size_t i, std::size_t t, std::size_t j) const;

 private:
  void CheckIndex(std::size_t i) const;

  std::size_t k_;
  std::size_t a_;
  std::size_t m_;
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_;  // offsets_[t-1], plus n at the end
  std::vector<std::uint8_t> owners_;  // (i-1) * n + (x-1)
};

LayeredUniverse BuildLayers(const HardInstanceSpec& spec);

// S_j^i. Throws DomainError when i or j is out of range.
ElementSet PlayerSet(const LayeredUniverse& layers, std::size_t i,
                     std::size_t j);

struct DisjInputs {
  std::vector<std::vector<std::uint32_t>> d;  // d[j-1] ascending
  std::optional<std::uint32_t> i_star;        // YES only
};

// NO: pairwise-disjoint nonempty D_j whose union has at least m/4 indices.
// YES: the same plus one common index i* in every D_j. Throws DomainError
// when m < 4k.
DisjInputs GenDisjInputs(const HardInstanceSpec& spec);

struct HardInstance {
  HardInstanceSpec spec;
  DisjInputs inputs;
  SetSystem system;  // k = spec.k
  // (i, j) of every set, in stream order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> origin;

  // "hard k a m answer i* seed" with i* written "-" for NO.
  std::string MetadataLine() const;
};

// Sets S_j^i for j = 1..k and i in D_j ascending, player after player.
HardInstance EmitStream(const HardInstanceSpec& spec);
HardInstance EmitStream(const HardInstanceSpec& spec,
                        const LayeredUniverse& layers);

// |ũ(S_1^i..S_k^i)|. Throws ConstructionError unless it equals
// sum_t q_t |U_t| and is at least IdenticalFamilyBound.
std::size_t VerifyIdenticalFamily(const LayeredUniverse& layers,
                                  std::size_t i);

struct DistinctFamilyStats {
  std::size_t ell = 0;
  std::size_t trials = 0;
  // Index t-1 refers to layer t.
  std::vector<double> layer_mean;
  std::vector<double> layer_stddev;  // sample standard deviation
  std::vector<std::size_t> layer_max;
  std::vector<double> layer_bound;  // k (a+t) ell (1-t/k)^(ell-1)
  std::vector<std::size_t> totals;  // per trial
  double total_mean = 0.0;
  std::size_t total_max = 0;
  double total_bound = 0.0;  // DistinctFamilyBound
  std::size_t violations = 0;  // totals >= total_bound
};

// Samples collections of ell sets with distinct indices (uniform without
// replacement) and uniform players. Throws DomainError unless
// 1 <= ell <= min(k, m) and trials >= 1.
DistinctFamilyStats SampleDistinctFamilyValue(const LayeredUniverse& layers,
                                              std::size_t ell,
                                              std::size_t trials,
                                              std::uint64_t seed);

}  // namespace muc

#endif  // MUC_HARDGEN_H_
