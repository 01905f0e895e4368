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

#ifndef MUC_ALGORITHMS_H_
#define MUC_ALGORITHMS_H_

// Offline unique-coverage algorithms. Each takes a collection C and returns
// a subcollection B of C whose unique coverage is a guaranteed fraction of
// C's coverage:
//
//   UniqueGreedy      |ũ(B)| >= |ψ(C)| / H_|C|
//   UniqueGreedyFreq  |ũ(B)| >= (1/H_ceil(r(r-1)/eps_r) - eps_r) |ψ(C)|
//   UniqueGreedySize  |ũ(B)| >= min(eps_d, (1-eps_d) beta(d, eps_hat_d)) |ψ(C)|
//
// with beta(d, e) = 1/H_ceil(d(d-1)/e) - e. Ties are broken towards the
// lowest set id / lowest group index, so results are deterministic.
//
// Returned subcollections list ids in the order of the input collection.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "muc/setsys.h"

namespace muc {

// Constants of the tuned UniqueGreedyFreq error parameter
// eps_r = 1 / (kUgfC1 ln r * (2 ln r + 2 ln ln r + kUgfC2)).
inline constexpr double kUgfC1 = 9.28;
inline constexpr double kUgfC2 = 5.61;

struct RatioBoundConfig {
  std::size_t k = 1;
  std::size_t r = 1;
  std::size_t d = 1;
  double eps_r = 0.5;
  double eps_d = 0.5;
  double eps_hat_d = 0.5;

  // Throws DomainError unless k, r, d >= 1 and every epsilon is in (0, 1).
  void Validate() const;

  // Epsilons that realize the closed-form ratios behind PhiBound: tuned
  // eps_r for r, tuned eps_hat_d for d, and eps_d = beta / (1 + beta).
  static RatioBoundConfig Tuned(std::size_t k, std::size_t r, std::size_t d);
};

// Tuned eps for frequency bound r >= 2 (also used with d for the size
// algorithm's inner call).
double UgfTunedEpsilon(std::size_t r);
// 1/H_ceil(r(r-1)/eps) - eps; may be negative for large eps.
double UgfRatio(std::size_t r, double eps);
// (1 - 1/(C1 ln r)) / (2 ln r + 2 ln ln r + C2), r >= 2.
double UgfSimpleRatio(std::size_t r);
// min(eps_d, (1 - eps_d) UgfRatio(d, eps_hat_d)).
double UgsRatio(std::size_t d, double eps_d, double eps_hat_d);

struct PhiComponents {
  double phi_k = 1.0;  // H_k
  double phi_r = 1.0;  // 1 / UgfSimpleRatio(r), or 1 when r = 1
  double phi_d = 1.0;  // 1 / beta(d, tuned eps) + 1, or 1 when d <= 1
  double phi = 1.0;    // min of the three
};

// Upper bound on the unique coverage ratio of any collection with at most
// k sets, max frequency r and max set size d. Throws DomainError unless all
// arguments are positive.
PhiComponents PhiBoundComponents(std::int64_t k, std::int64_t r,
                                 std::int64_t d);
double PhiBound(std::int64_t k, std::int64_t r, std::int64_t d);

// Throws DomainError on an empty collection.
SubCollection UniqueGreedy(const SubCollection& c);

struct UgfDiagnostics {
  std::size_t frequency_bound = 0;  // r used to size the groups
  std::uint64_t group_count = 0;    // ceil(r(r-1)/eps)
  std::size_t groups_used = 0;      // groups that received a set
  std::size_t overlap_sum = 0;      // sum over groups of |Cov>=2(G_i)|
  bool shortcut = false;            // r < 2: collection returned whole
};

struct UgfRun {
  SubCollection selection;
  UgfDiagnostics diagnostics;
};

// Uses the measured max frequency of c. When it is below 2 the sets are
// pairwise disjoint and c is returned whole. Throws DomainError unless
// eps_r is in (0, 1).
SubCollection UniqueGreedyFreq(const SubCollection& c, double eps_r);
UgfRun RunUniqueGreedyFreq(const SubCollection& c, double eps_r);

// Throws DomainError unless both epsilons are in (0, 1).
SubCollection UniqueGreedySize(const SubCollection& c, double eps_d,
                               double eps_hat_d);

struct AlgorithmOutcome {
  std::string name;
  SubCollection selection;
};

// UniqueGreedy, UniqueGreedyFreq and UniqueGreedySize with cfg's
// epsilons, in that order.
std::vector<AlgorithmOutcome> RunUniqueCoverageAlgorithms(
    const SubCollection& c, const RatioBoundConfig& cfg);

// The outcome above with the largest unique coverage; earlier wins ties.
// Throws DomainError on an empty collection.
SubCollection BestUniqueSubcollection(const SubCollection& c,
                                      const RatioBoundConfig& cfg);

// Index-level forms over arbitrary set lists; return selected positions in
// increasing order. `implicit_empty` appends that many empty sets after the
// explicit ones without materializing them.
std::vector<std::size_t> UniqueGreedyIndices(std::span<const SetView> sets,
                                             std::uint64_t implicit_empty = 0);
std::vector<std::size_t> UniqueGreedyFreqIndices(
    std::span<const SetView> sets, std::size_t frequency_bound, double eps,
    UgfDiagnostics* diagnostics = nullptr);
std::vector<std::size_t> UniqueGreedySizeIndices(std::span<const SetView> sets,
                                                 double eps_d,
                                                 double eps_hat_d);

}  // namespace muc

#endif  // MUC_ALGORITHMS_H_
