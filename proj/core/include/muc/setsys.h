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

#ifndef MUC_SETSYS_H_
#define MUC_SETSYS_H_

// Set systems, subcollections and the coverage primitives every other
// module is built on. Elements are dense integers 1..n; set ids are
// 0..m-1. All covers are computed by per-element frequency counting.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace muc {

using Element = std::uint32_t;
using SetId = std::uint32_t;
using ElementSet = std::vector<Element>;  // sorted, duplicate-free
using SetView = std::span<const Element>;

// Instance (U, V, k). Immutable after construction.
class SetSystem {
 public:
  // Throws StructuralError when a set is unsorted, has duplicates or holds
  // an element outside [1, n]; DomainError unless 1 <= k <= m.
  SetSystem(std::size_t universe_size, std::vector<ElementSet> sets,
            std::size_t k);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t num_sets() const { return sets_.size(); }
  std::size_t k() const { return k_; }

  const ElementSet& set(SetId id) const;
  const std::vector<ElementSet>& sets() const { return sets_; }

  // Same sets, different cardinality constraint.
  SetSystem WithK(std::size_t k) const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  std::size_t universe_size_;
  std::vector<ElementSet> sets_;
  std::size_t k_;
};

// A duplicate-free list of set ids of a parent SetSystem, with its unique
// coverage and coverage cached at construction. The parent must outlive
// the subcollection.
class SubCollection {
 public:
  // Throws StructuralError on an id >= m or a repeated id. Ids keep the
  // given order.
  SubCollection(const SetSystem& system, std::vector<SetId> ids);

  static SubCollection All(const SetSystem& system);
  static SubCollection Empty(const SetSystem& system);

  const SetSystem& system() const { return *system_; }
  const std::vector<SetId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(SetId id) const;

  // |ũ(C)| and |ψ(C)|.
  std::size_t unique_coverage() const { return unique_coverage_; }
  std::size_t coverage() const { return coverage_; }

  std::vector<SetView> member_sets() const;

  // Ids sorted ascending; handy for comparisons in tests and reports.
  std::vector<SetId> sorted_ids() const;

  SubCollection Without(SetId id) const;

 private:
  const SetSystem* system_;
  std::vector<SetId> ids_;
  std::size_t unique_coverage_ = 0;
  std::size_t coverage_ = 0;
};

// ψ, ũ and Cov≥2 of one collection. unique and non_unique partition
// covered.
struct CoverageProfile {
  ElementSet covered;
  ElementSet unique;
  ElementSet non_unique;
};

ElementSet Coverage(const SubCollection& c);
ElementSet UniqueCover(const SubCollection& c);
CoverageProfile ComputeCoverageProfile(const SubCollection& c);

// Largest element frequency within c; 0 for an empty coverage.
std::size_t MaxFrequency(const SubCollection& c);
// Largest member-set cardinality; 0 for an empty collection.
std::size_t MaxSetSize(const SubCollection& c);

// Same primitives over an arbitrary list of sets (derived collections such
// as group covers or restricted sets that have no parent SetSystem).
CoverageProfile ComputeCoverageProfile(std::span<const SetView> sets);
std::size_t MaxFrequency(std::span<const SetView> sets);
std::size_t MaxSetSize(std::span<const SetView> sets);

// H_t = 1 + 1/2 + ... + 1/t with H_0 = 0. Throws DomainError for t < 0.
double Harmonic(std::int64_t t);
// H_{ceil(x)} for x >= 0, also for x far beyond the 64-bit range.
double HarmonicOfCeil(double x);

// ceil(x) that ignores floating noise just above an integer, so that
// e.g. 4 / (1/3) yields 12 rather than 13.
std::uint64_t CeilTolerant(double x);

// Dense per-element frequency counts with running |ψ| and |ũ|.
class FrequencyTable {
 public:
  explicit FrequencyTable(std::size_t max_element);

  void Add(SetView set);
  void Remove(SetView set);

  std::uint32_t count(Element x) const { return counts_[x]; }
  std::size_t covered() const { return covered_; }
  std::size_t unique() const { return unique_; }
  std::size_t max_element() const { return counts_.size() - 1; }

  // |S ∩ ũ(current)| for a member S.
  std::size_t UniqueContribution(SetView set) const;

 private:
  std::vector<std::uint32_t> counts_;
  std::size_t covered_ = 0;
  std::size_t unique_ = 0;
};

// Largest element id in a list of sets (0 when all are empty).
Element MaxElement(std::span<const SetView> sets);

}  // namespace muc

#endif  // MUC_SETSYS_H_
