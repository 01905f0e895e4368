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

#ifndef MUC_SUBSAMPLE_H_
#define MUC_SUBSAMPLE_H_

// Universe subsampling for set streams. One instance per power-of-two guess
// v of the optimum keeps each element independently with probability
// p = min(1, c k log2(m) / (eps^2 v)), decided by a keyed hash so that all
// sets see the same sampled universe. An instance terminates as soon as a
// sampled set grows beyond size_cap = (2 c k log2(m) / eps^2)(1 + eps).
//
// log2(m) is taken as log2(max(m, 2)) so that m = 1 still samples.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "muc/setsys.h"

namespace muc {

struct SubsampleParams {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 1;
  double eps = 0.1;
  double c = 4.0;
  std::uint64_t seed = 0;
  // Forces p = 1 for every guess (sampling becomes the identity).
  bool disable_subsampling = false;
};

class SubsampleInstance {
 public:
  SubsampleInstance(double guess_v, double p, std::uint64_t hash_seed,
                    double size_cap);

  double guess_v() const { return guess_v_; }
  double p() const { return p_; }
  std::uint64_t hash_seed() const { return hash_seed_; }
  double size_cap() const { return size_cap_; }
  bool terminated() const { return terminated_; }
  // Sets offered after termination.
  std::size_t ignored_after_termination() const { return ignored_; }
  std::size_t max_sampled_size() const { return max_sampled_size_; }

  // Whether element x belongs to the sampled universe.
  bool Keeps(Element x) const;
  ElementSet Restrict(SetView set) const;

  // Restricts the set to the sampled universe and returns it for the
  // wrapped algorithm. Returns nullopt once the instance is terminated,
  // including when this set is the one that exceeds size_cap.
  std::optional<ElementSet> Ingest(SetView set);

 private:
  double guess_v_;
  double p_;
  std::uint64_t hash_seed_;
  double size_cap_;
  bool terminated_ = false;
  std::size_t ignored_ = 0;
  std::size_t max_sampled_size_ = 0;
};

// Sampling probability and size cap of one guess.
double SubsampleProbability(std::size_t m, std::size_t k, double eps, double c,
                            double guess_v);
double SubsampleSizeCap(std::size_t m, std::size_t k, double eps, double c);

// One instance per guess v = 2^i, i = 1..max(1, ceil(log2 n)), in increasing
// v, each with an independently derived hash seed. Throws DomainError on
// n < 1, eps outside (0, 1) or c <= 0.
std::vector<SubsampleInstance> SpawnSubsampleInstances(
    const SubsampleParams& params);

// The system seen through one instance's sampled universe (same n, m, k).
SetSystem RestrictToSample(const SetSystem& system,
                           const SubsampleInstance& instance);

}  // namespace muc

#endif  // MUC_SUBSAMPLE_H_
