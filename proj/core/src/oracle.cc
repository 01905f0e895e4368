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

#include "muc/oracle.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <utility>

#include "muc/errors.h"

namespace muc {
namespace {

enum class Objective { kUnique, kCoverage };

std::size_t ResolveK(const SetSystem& system, const OracleOptions& options) {
  const std::size_t k = options.k.value_or(system.k());
  if (k < 1) throw DomainError("oracle needs k >= 1");
  return k;
}

void CheckBudget(std::size_t m, std::size_t k, std::uint64_t budget) {
  const std::uint64_t count = CandidateCount(m, k);
  if (count > budget) {
    throw CapacityError("oracle would enumerate " + std::to_string(count) +
                        " subcollections, budget is " +
                        std::to_string(budget));
  }
}

// Depth-first enumeration in lexicographic order of id lists, with covers
// kept as bitmasks. Requires every element to be at most 64.
class BitmaskSearch {
 public:
  BitmaskSearch(std::span<const SetView> sets, std::size_t k,
                Objective objective)
      : k_(k), objective_(objective) {
    masks_.reserve(sets.size());
    for (SetView s : sets) {
      std::uint64_t mask = 0;
      for (Element x : s) mask |= std::uint64_t{1} << (x - 1);
      masks_.push_back(mask);
    }
  }

  ExactSolution Run() {
    Recurse(0, 0, 0);
    return best_;
  }

 private:
  void Recurse(std::size_t start, std::uint64_t once, std::uint64_t twice) {
    for (std::size_t i = start; i < masks_.size(); ++i) {
      const std::uint64_t s = masks_[i];
      const std::uint64_t new_twice = twice | (once & s);
      const std::uint64_t new_once = once | s;
      const std::uint64_t scored = objective_ == Objective::kUnique
                                       ? new_once & ~new_twice
                                       : new_once;
      const auto value = static_cast<std::size_t>(std::popcount(scored));
      current_.push_back(i);
      if (!found_ || value > best_.value) {
        found_ = true;
        best_.value = value;
        best_.positions = current_;
      }
      if (current_.size() < k_) Recurse(i + 1, new_once, new_twice);
      current_.pop_back();
    }
  }

  std::vector<std::uint64_t> masks_;
  std::size_t k_;
  Objective objective_;
  std::vector<std::size_t> current_;
  ExactSolution best_;
  bool found_ = false;
};

class CountingSearch {
 public:
  CountingSearch(std::span<const SetView> sets, std::size_t k,
                 Objective objective)
      : sets_(sets),
        k_(k),
        objective_(objective),
        table_(MaxElement(sets)) {}

  ExactSolution Run() {
    Recurse(0);
    return best_;
  }

 private:
  void Recurse(std::size_t start) {
    for (std::size_t i = start; i < sets_.size(); ++i) {
      table_.Add(sets_[i]);
      current_.push_back(i);
      const std::size_t value = objective_ == Objective::kUnique
                                    ? table_.unique()
                                    : table_.covered();
      if (!found_ || value > best_.value) {
        found_ = true;
        best_.value = value;
        best_.positions = current_;
      }
      if (current_.size() < k_) Recurse(i + 1);
      current_.pop_back();
      table_.Remove(sets_[i]);
    }
  }

  std::span<const SetView> sets_;
  std::size_t k_;
  Objective objective_;
  FrequencyTable table_;
  std::vector<std::size_t> current_;
  ExactSolution best_;
  bool found_ = false;
};

ExactSolution Solve(std::span<const SetView> sets, std::size_t k,
                    std::uint64_t budget, Objective objective) {
  if (k < 1) throw DomainError("oracle needs k >= 1");
  CheckBudget(sets.size(), k, budget);
  if (MaxElement(sets) <= 64) {
    return BitmaskSearch(sets, k, objective).Run();
  }
  return CountingSearch(sets, k, objective).Run();
}

SubCollection ToSubCollection(const SetSystem& system,
                              const ExactSolution& solution) {
  std::vector<SetId> ids(solution.positions.begin(),
                         solution.positions.end());
  return SubCollection(system, std::move(ids));
}

}  // namespace

std::uint64_t CandidateCount(std::size_t m, std::size_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(m, l)
  for (std::size_t l = 1; l <= std::min(k, m); ++l) {
    // C(m, l) = C(m, l-1) * (m-l+1) / l; exact in 128 bits.
    const __uint128_t next =
        static_cast<__uint128_t>(binom) * (m - l + 1) / l;
    if (next > kMax) return kMax;
    binom = static_cast<std::uint64_t>(next);
    if (total > kMax - binom) return kMax;
    total += binom;
  }
  return total;
}

ExactSolution ExactMaxUniqueCoverageIndices(std::span<const SetView> sets,
                                            std::size_t k,
                                            std::uint64_t max_candidates) {
  return Solve(sets, k, max_candidates, Objective::kUnique);
}

ExactSolution ExactMaxCoverageIndices(std::span<const SetView> sets,
                                      std::size_t k,
                                      std::uint64_t max_candidates) {
  return Solve(sets, k, max_candidates, Objective::kCoverage);
}

SubCollection ExactMaxUniqueCoverage(const SetSystem& system,
                                     const OracleOptions& options) {
  const auto views = SubCollection::All(system).member_sets();
  return ToSubCollection(
      system, ExactMaxUniqueCoverageIndices(views, ResolveK(system, options),
                                            options.max_candidates));
}

SubCollection ExactMaxCoverage(const SetSystem& system,
                               const OracleOptions& options) {
  const auto views = SubCollection::All(system).member_sets();
  return ToSubCollection(
      system, ExactMaxCoverageIndices(views, ResolveK(system, options),
                                      options.max_candidates));
}

SubCollection GreedyMaxCoverage(const SetSystem& system) {
  return GreedyMaxCoverage(system, system.k());
}

SubCollection GreedyMaxCoverage(const SetSystem& system, std::size_t k) {
  std::vector<bool> covered(system.universe_size() + 1, false);
  std::vector<bool> taken(system.num_sets(), false);
  std::vector<SetId> ids;
  for (std::size_t round = 0; round < k; ++round) {
    std::size_t best_gain = 0;
    SetId best = 0;
    for (SetId id = 0; id < system.num_sets(); ++id) {
      if (taken[id]) continue;
      std::size_t gain = 0;
      for (Element x : system.set(id)) gain += covered[x] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = id;
      }
    }
    if (best_gain == 0) break;
    taken[best] = true;
    ids.push_back(best);
    for (Element x : system.set(best)) covered[x] = true;
  }
  return SubCollection(system, std::move(ids));
}

}  // namespace muc
