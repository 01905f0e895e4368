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

#include "muc/setsys.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "muc/errors.h"

namespace muc {
namespace {

constexpr std::int64_t kHarmonicTableSize = 1 << 16;

// H_0 .. H_{kHarmonicTableSize} by Neumaier-compensated forward summation.
const std::vector<double>& HarmonicTable() {
  static const std::vector<double> table = [] {
    std::vector<double> h(kHarmonicTableSize + 1, 0.0);
    double sum = 0.0;
    double compensation = 0.0;
    for (std::int64_t t = 1; t <= kHarmonicTableSize; ++t) {
      const double term = 1.0 / static_cast<double>(t);
      const double next = sum + term;
      if (std::abs(sum) >= std::abs(term)) {
        compensation += (sum - next) + term;
      } else {
        compensation += (term - next) + sum;
      }
      sum = next;
      h[t] = sum + compensation;
    }
    return h;
  }();
  return table;
}

// Euler-Maclaurin tail; below 1e-22 absolute error for t > 2^16.
double HarmonicAsymptotic(double t) {
  constexpr double kEulerGamma = 0.57721566490153286061;
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  return std::log(t) + kEulerGamma + 0.5 * inv - inv2 / 12.0 +
         inv2 * inv2 / 120.0;
}

void ValidateSet(const ElementSet& set, std::size_t n, std::size_t index) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] < 1 || set[i] > n) {
      throw StructuralError("set " + std::to_string(index) + ": element " +
                            std::to_string(set[i]) + " outside [1, " +
                            std::to_string(n) + "]");
    }
    if (i > 0 && set[i - 1] >= set[i]) {
      throw StructuralError("set " + std::to_string(index) +
                            ": elements not strictly increasing");
    }
  }
}

std::vector<SetView> Views(const SetSystem& system,
                           const std::vector<SetId>& ids) {
  std::vector<SetView> views;
  views.reserve(ids.size());
  for (SetId id : ids) views.emplace_back(system.set(id));
  return views;
}

}  // namespace

SetSystem::SetSystem(std::size_t universe_size, std::vector<ElementSet> sets,
                     std::size_t k)
    : universe_size_(universe_size), sets_(std::move(sets)), k_(k) {
  if (universe_size_ > std::numeric_limits<Element>::max()) {
    throw CapacityError("universe size exceeds 32-bit element ids");
  }
  if (sets_.size() > std::numeric_limits<SetId>::max()) {
    throw CapacityError("too many sets for 32-bit set ids");
  }
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    ValidateSet(sets_[i], universe_size_, i);
  }
  if (k_ < 1 || k_ > sets_.size()) {
    throw DomainError("cardinality constraint k=" + std::to_string(k_) +
                      " outside [1, m=" + std::to_string(sets_.size()) + "]");
  }
}

const ElementSet& SetSystem::set(SetId id) const {
  if (id >= sets_.size()) {
    throw StructuralError("set id " + std::to_string(id) + " out of range");
  }
  return sets_[id];
}

SetSystem SetSystem::WithK(std::size_t k) const {
  return SetSystem(universe_size_, sets_, k);
}

SubCollection::SubCollection(const SetSystem& system, std::vector<SetId> ids)
    : system_(&system), ids_(std::move(ids)) {
  std::vector<bool> seen(system.num_sets(), false);
  for (SetId id : ids_) {
    if (id >= system.num_sets()) {
      throw StructuralError("set id " + std::to_string(id) +
                            " out of range for m=" +
                            std::to_string(system.num_sets()));
    }
    if (seen[id]) {
      throw StructuralError("duplicate set id " + std::to_string(id));
    }
    seen[id] = true;
  }
  FrequencyTable table(system.universe_size());
  for (SetId id : ids_) table.Add(system.sets()[id]);
  unique_coverage_ = table.unique();
  coverage_ = table.covered();
}

SubCollection SubCollection::All(const SetSystem& system) {
  std::vector<SetId> ids(system.num_sets());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<SetId>(i);
  return SubCollection(system, std::move(ids));
}

SubCollection SubCollection::Empty(const SetSystem& system) {
  return SubCollection(system, {});
}

bool SubCollection::contains(SetId id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

std::vector<SetView> SubCollection::member_sets() const {
  return Views(*system_, ids_);
}

std::vector<SetId> SubCollection::sorted_ids() const {
  std::vector<SetId> sorted = ids_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

SubCollection SubCollection::Without(SetId id) const {
  std::vector<SetId> rest;
  rest.reserve(ids_.size());
  for (SetId other : ids_) {
    if (other != id) rest.push_back(other);
  }
  return SubCollection(*system_, std::move(rest));
}

CoverageProfile ComputeCoverageProfile(std::span<const SetView> sets) {
  FrequencyTable table(MaxElement(sets));
  for (SetView s : sets) table.Add(s);
  CoverageProfile profile;
  for (std::size_t x = 1; x <= table.max_element(); ++x) {
    const std::uint32_t c = table.count(static_cast<Element>(x));
    if (c == 0) continue;
    profile.covered.push_back(static_cast<Element>(x));
    if (c == 1) {
      profile.unique.push_back(static_cast<Element>(x));
    } else {
      profile.non_unique.push_back(static_cast<Element>(x));
    }
  }
  return profile;
}

CoverageProfile ComputeCoverageProfile(const SubCollection& c) {
  const auto views = c.member_sets();
  return ComputeCoverageProfile(std::span<const SetView>(views));
}

ElementSet Coverage(const SubCollection& c) {
  return ComputeCoverageProfile(c).covered;
}

ElementSet UniqueCover(const SubCollection& c) {
  return ComputeCoverageProfile(c).unique;
}

std::size_t MaxFrequency(std::span<const SetView> sets) {
  FrequencyTable table(MaxElement(sets));
  std::uint32_t best = 0;
  for (SetView s : sets) {
    table.Add(s);
    for (Element x : s) best = std::max(best, table.count(x));
  }
  return best;
}

std::size_t MaxFrequency(const SubCollection& c) {
  const auto views = c.member_sets();
  return MaxFrequency(std::span<const SetView>(views));
}

std::size_t MaxSetSize(std::span<const SetView> sets) {
  std::size_t best = 0;
  for (SetView s : sets) best = std::max(best, s.size());
  return best;
}

std::size_t MaxSetSize(const SubCollection& c) {
  const auto views = c.member_sets();
  return MaxSetSize(std::span<const SetView>(views));
}

double Harmonic(std::int64_t t) {
  if (t < 0) throw DomainError("harmonic number of negative index");
  if (t <= kHarmonicTableSize) return HarmonicTable()[t];
  return HarmonicAsymptotic(static_cast<double>(t));
}

double HarmonicOfCeil(double x) {
  if (!(x >= 0.0)) throw DomainError("harmonic number of negative index");
  if (x < 9.0e15) {
    return Harmonic(static_cast<std::int64_t>(CeilTolerant(x)));
  }
  return HarmonicAsymptotic(std::ceil(x));
}

std::uint64_t CeilTolerant(double x) {
  if (!(x >= 0.0)) throw DomainError("ceil of a negative value");
  const double floor = std::floor(x);
  if (x - floor <= 1e-9 * std::max(1.0, x)) {
    return static_cast<std::uint64_t>(floor);
  }
  return static_cast<std::uint64_t>(floor) + 1;
}

FrequencyTable::FrequencyTable(std::size_t max_element)
    : counts_(max_element + 1, 0) {}

void FrequencyTable::Add(SetView set) {
  for (Element x : set) {
    const std::uint32_t c = ++counts_[x];
    if (c == 1) {
      ++covered_;
      ++unique_;
    } else if (c == 2) {
      --unique_;
    }
  }
}

void FrequencyTable::Remove(SetView set) {
  for (Element x : set) {
    const std::uint32_t c = --counts_[x];
    if (c == 0) {
      --covered_;
      --unique_;
    } else if (c == 1) {
      ++unique_;
    }
  }
}

std::size_t FrequencyTable::UniqueContribution(SetView set) const {
  std::size_t n = 0;
  for (Element x : set) n += (counts_[x] == 1);
  return n;
}

Element MaxElement(std::span<const SetView> sets) {
  Element best = 0;
  for (SetView s : sets) {
    if (!s.empty()) best = std::max(best, s.back());
  }
  return best;
}

}  // namespace muc
