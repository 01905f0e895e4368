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

#include "muc/kernel.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <utility>

#include "muc/algorithms.h"
#include "muc/errors.h"

namespace muc {

std::uint64_t KernelCapacity(std::size_t k, std::size_t r, double eps,
                             double phi) {
  if (k < 1) throw DomainError("kernel needs k >= 1");
  if (r < 2) throw DomainError("kernel needs r >= 2");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
  if (!(phi >= 1.0)) throw DomainError("phi must be >= 1");
  const double raw = static_cast<double>(k) * static_cast<double>(r) *
                     (phi + 1.0) / eps;
  if (!(raw < 9.2e18)) throw CapacityError("kernel capacity overflows");
  return CeilTolerant(raw);
}

double KernelPhi(std::size_t k, std::size_t r, std::size_t d_bound) {
  return PhiBound(static_cast<std::int64_t>(k),
                  static_cast<std::int64_t>(std::max<std::size_t>(r, 2)),
                  static_cast<std::int64_t>(std::max<std::size_t>(d_bound, 1)));
}

KernelBuffer::KernelBuffer(std::uint64_t capacity) : capacity_(capacity) {
  if (capacity < 1) throw DomainError("kernel capacity must be positive");
}

bool KernelBuffer::Insert(SetId id, ElementSet elements) {
  if (held_.count(id) != 0) throw DomainError("set id inserted twice");
  const Rank rank{elements.size(), id};
  if (entries_.size() >= capacity_) {
    const Rank& lowest = std::prev(entries_.end())->first;
    if (lowest < rank) return false;
  }
  entries_.emplace(rank, std::move(elements));
  held_.insert(id);
  if (entries_.size() > capacity_) {
    const auto last = std::prev(entries_.end());
    held_.erase(last->first.id);
    entries_.erase(last);
  }
  return true;
}

std::vector<KernelEntry> KernelBuffer::entries() const {
  std::vector<KernelEntry> out;
  out.reserve(entries_.size());
  for (const auto& [rank, elements] : entries_) {
    out.push_back({rank.id, elements});
  }
  return out;
}

std::vector<SetId> KernelBuffer::ids() const {
  std::vector<SetId> out;
  out.reserve(entries_.size());
  for (const auto& entry : entries_) out.push_back(entry.first.id);
  return out;
}

KernelBuffer BuildKernel(const SetSystem& system, double eps, double phi) {
  return BuildKernel(system, eps, phi,
                     MaxFrequency(SubCollection::All(system)));
}

KernelBuffer BuildKernel(const SetSystem& system, double eps, double phi,
                         std::size_t r) {
  KernelBuffer buffer(KernelCapacity(system.k(), std::max<std::size_t>(r, 2),
                                     eps, phi));
  for (SetId id = 0; id < system.num_sets(); ++id) {
    buffer.Insert(id, system.set(id));
  }
  return buffer;
}

KernelSolution SolveInKernel(const KernelBuffer& buffer, std::size_t k,
                             std::uint64_t max_candidates) {
  auto entries = buffer.entries();
  std::sort(entries.begin(), entries.end(),
            [](const KernelEntry& a, const KernelEntry& b) {
              return a.id < b.id;
            });
  std::vector<SetView> views;
  views.reserve(entries.size());
  for (const auto& entry : entries) views.emplace_back(entry.elements);
  const ExactSolution exact =
      ExactMaxUniqueCoverageIndices(views, k, max_candidates);
  KernelSolution solution;
  solution.unique_coverage = exact.value;
  for (std::size_t p : exact.positions) solution.ids.push_back(entries[p].id);
  return solution;
}

SubCollection UniqueTopSets(const SetSystem& system, double eps,
                            std::optional<double> phi,
                            std::uint64_t max_candidates) {
  const std::size_t r = MaxFrequency(SubCollection::All(system));
  const double phi_value =
      phi.value_or(KernelPhi(system.k(), r, system.universe_size()));
  const KernelBuffer buffer = BuildKernel(system, eps, phi_value, r);
  return SubCollection(system,
                       SolveInKernel(buffer, system.k(), max_candidates).ids);
}

}  // namespace muc
