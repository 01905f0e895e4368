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

#ifndef MUC_ORACLE_H_
#define MUC_ORACLE_H_

// Exact brute-force solvers and the classic offline greedy for Max
// Coverage. The exact solvers enumerate every subcollection of 1..k sets in
// lexicographic order of their id lists and keep the first strict
// improvement, so ties resolve to the lexicographically smallest id list.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "muc/setsys.h"

namespace muc {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

struct OracleOptions {
  // Refuse (CapacityError) when sum_{l <= k} C(m, l) exceeds this.
  std::uint64_t max_candidates = kDefaultOracleBudget;
  // Cardinality bound; the system's k when unset.
  std::optional<std::size_t> k;
};

// sum_{l=1}^{k} C(m, l), saturating at UINT64_MAX.
std::uint64_t CandidateCount(std::size_t m, std::size_t k);

struct ExactSolution {
  std::vector<std::size_t> positions;  // increasing
  std::size_t value = 0;
};

// Index-level forms over an arbitrary list of sets. An empty list yields an
// empty solution of value 0.
ExactSolution ExactMaxUniqueCoverageIndices(std::span<const SetView> sets,
                                            std::size_t k,
                                            std::uint64_t max_candidates =
                                                kDefaultOracleBudget);
ExactSolution ExactMaxCoverageIndices(std::span<const SetView> sets,
                                      std::size_t k,
                                      std::uint64_t max_candidates =
                                          kDefaultOracleBudget);

SubCollection ExactMaxUniqueCoverage(const SetSystem& system,
                                     const OracleOptions& options = {});
SubCollection ExactMaxCoverage(const SetSystem& system,
                               const OracleOptions& options = {});

// k rounds of largest marginal coverage, lowest id on ties, stopping early
// once no set adds anything. Ids are returned in selection order.
SubCollection GreedyMaxCoverage(const SetSystem& system);
SubCollection GreedyMaxCoverage(const SetSystem& system, std::size_t k);

}  // namespace muc

#endif  // MUC_ORACLE_H_
