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

#ifndef MUC_KERNEL_H_
#define MUC_KERNEL_H_

// UniqueTopSets: keep the ceil(k r (phi + 1) / eps) largest sets and solve
// exactly inside them. Sets are ranked by (size desc, id asc), a total
// order, so the retained contents do not depend on arrival order.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "muc/oracle.h"
#include "muc/setsys.h"

namespace muc {

// ceil(k r (phi + 1) / eps). Throws DomainError unless k >= 1, r >= 2,
// eps in (0, 1) and phi >= 1; CapacityError past 2^63.
std::uint64_t KernelCapacity(std::size_t k, std::size_t r, double eps,
                             double phi);

// phi used to size kernels: PhiBound(k, r, d_bound), with r raised to 2.
double KernelPhi(std::size_t k, std::size_t r, std::size_t d_bound);

struct KernelEntry {
  SetId id = 0;
  ElementSet elements;
};

class KernelBuffer {
 public:
  explicit KernelBuffer(std::uint64_t capacity);

  std::uint64_t capacity() const { return capacity_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Inserts the set, evicting the lowest ranked entry when over capacity.
  // Returns whether the new set is retained. Throws DomainError when the
  // id is currently held.
  bool Insert(SetId id, ElementSet elements);

  // Entries in rank order (size desc, id asc).
  std::vector<KernelEntry> entries() const;
  std::vector<SetId> ids() const;

 private:
  struct Rank {
    std::size_t size;
    SetId id;
    bool operator<(const Rank& other) const {
      if (size != other.size) return size > other.size;
      return id < other.id;
    }
  };

  std::uint64_t capacity_;
  std::map<Rank, ElementSet> entries_;
  std::unordered_set<SetId> held_;
};

// Offline kernel of a system. r is the measured max frequency, raised to 2
// when the sets are pairwise disjoint.
KernelBuffer BuildKernel(const SetSystem& system, double eps, double phi);
KernelBuffer BuildKernel(const SetSystem& system, double eps, double phi,
                         std::size_t r);

struct KernelSolution {
  std::vector<SetId> ids;  // ascending original ids
  std::size_t unique_coverage = 0;
};

// Exact Max Unique Coverage over the buffer contents with at most k sets.
// Ties go to the lexicographically smallest list of original ids.
KernelSolution SolveInKernel(const KernelBuffer& buffer, std::size_t k,
                             std::uint64_t max_candidates =
                                 kDefaultOracleBudget);

// BuildKernel followed by SolveInKernel with the system's k; phi defaults to
// KernelPhi(k, r, n).
SubCollection UniqueTopSets(const SetSystem& system, double eps,
                            std::optional<double> phi = std::nullopt,
                            std::uint64_t max_candidates =
                                kDefaultOracleBudget);

}  // namespace muc

#endif  // MUC_KERNEL_H_
