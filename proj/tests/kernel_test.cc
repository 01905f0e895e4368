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
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "muc/algorithms.h"
#include "muc/errors.h"
#include "muc/random.h"
#include "muc/random_instance.h"
#include "test_util.h"

namespace muc {
namespace {

using ::muc::testing::MakeSystem;

TEST(KernelCapacityTest, WorkedExamples) {
  EXPECT_EQ(KernelCapacity(2, 2, 0.5, 1.5), 20u);
  // ceil(4 / (1 - delta)) is 5 for any delta the tolerance can see.
  EXPECT_EQ(KernelCapacity(1, 2, 1.0 - 1e-3, 1.0), 5u);
  EXPECT_EQ(KernelCapacity(1, 2, 1.0 - 1e-12, 1.0), 4u);
  EXPECT_EQ(KernelCapacity(3, 2, 0.25, 1.0), 2 * KernelCapacity(3, 2, 0.5, 1.0));
  EXPECT_THROW(KernelCapacity(0, 2, 0.5, 1.0), DomainError);
  EXPECT_THROW(KernelCapacity(1, 1, 0.5, 1.0), DomainError);
  EXPECT_THROW(KernelCapacity(1, 2, 1.0, 1.0), DomainError);
  EXPECT_THROW(KernelCapacity(1, 2, 0.5, 0.9), DomainError);
}

TEST(KernelBufferTest, TieRuleAndEviction) {
  KernelBuffer buffer(2);
  EXPECT_TRUE(buffer.Insert(0, {1, 2, 3, 4, 5}));
  EXPECT_TRUE(buffer.Insert(1, {1, 2, 3}));
  EXPECT_FALSE(buffer.Insert(2, {4, 5, 6}));  // equal size, larger id
  EXPECT_FALSE(buffer.Insert(3, {7}));
  EXPECT_EQ(buffer.ids(), (std::vector<SetId>{0, 1}));
  EXPECT_THROW(buffer.Insert(0, {1}), DomainError);

  KernelBuffer full(1);
  full.Insert(5, {1, 2, 3});
  EXPECT_FALSE(full.Insert(6, {1}));
  EXPECT_TRUE(full.Insert(4, {7, 8, 9}));  // equal size, smaller id wins
  EXPECT_EQ(full.ids(), (std::vector<SetId>{4}));
  EXPECT_EQ(full.size(), 1u);
}

TEST(BuildKernelTest, WorkedExamples) {
  const SetSystem small = MakeSystem(4, {{1}, {2, 3}, {4}}, 1);
  EXPECT_EQ(BuildKernel(small, 0.5, 1.5).size(), 3u);

  const SetSystem sizes =
      MakeSystem(12, {{1, 2, 3, 4, 5}, {6, 7, 8}, {9, 10, 11}, {12}}, 1);
  // Sizes [5, 3, 3, 1] with capacity 2.
  KernelBuffer buffer(2);
  for (SetId id = 0; id < sizes.num_sets(); ++id) {
    buffer.Insert(id, sizes.set(id));
  }
  EXPECT_EQ(buffer.ids(), (std::vector<SetId>{0, 1}));
}

TEST(SolveInKernelTest, WholeInstanceEqualsGlobalOracle) {
  const SetSystem sys = MakeSystem(4, {{1, 2}, {2, 3}, {3, 4}}, 2);
  const KernelBuffer buffer = BuildKernel(sys, 0.5, 1.5);
  const KernelSolution solution = SolveInKernel(buffer, 2);
  EXPECT_EQ(solution.ids, (std::vector<SetId>{0, 2}));
  EXPECT_EQ(solution.unique_coverage, 4u);
  EXPECT_EQ(UniqueTopSets(sys, 0.5).unique_coverage(), 4u);
}

TEST(SolveInKernelTest, SingleSetPicksGloballyLargest) {
  const SetSystem sys = MakeSystem(9, {{1, 2}, {3, 4, 5, 6}, {7, 8, 9}}, 1);
  EXPECT_EQ(UniqueTopSets(sys, 0.5).ids(), (std::vector<SetId>{1}));
}

TEST(SolveInKernelTest, EvictedOptimalSetsStillWithinOneMinusEps) {
  // 30 identical pairs of 4-sets (r = 2) plus singletons. Sets 56 and 58
  // form an optimal solution but rank far outside the kernel.
  std::vector<ElementSet> sets;
  for (Element p = 0; p < 30; ++p) {
    const ElementSet s{4 * p + 1, 4 * p + 2, 4 * p + 3, 4 * p + 4};
    sets.push_back(s);
    sets.push_back(s);
  }
  for (Element x = 121; x <= 125; ++x) sets.push_back({x});
  const SetSystem sys = MakeSystem(125, sets, 2);
  const SubCollection optimum(sys, {56, 58});
  EXPECT_EQ(optimum.unique_coverage(),
            ExactMaxUniqueCoverage(sys).unique_coverage());
  for (double eps : {0.3, 0.5}) {
    const double phi = KernelPhi(2, 2, 4);
    const KernelBuffer buffer = BuildKernel(sys, eps, phi);
    const auto ids = buffer.ids();
    EXPECT_LT(ids.size(), sys.num_sets());
    EXPECT_EQ(std::count(ids.begin(), ids.end(), 58u), 0);
    const auto solution = SolveInKernel(buffer, 2);
    EXPECT_GE(static_cast<double>(solution.unique_coverage),
              (1.0 - eps) * static_cast<double>(optimum.unique_coverage()));
  }
}

TEST(KernelBufferTest, PermutationInvariant) {
  RandomInstanceParams p;
  p.n = 30;
  p.m = 20;
  p.d_max = 8;
  const SetSystem sys = GenerateRandomInstance(p, 11);
  std::vector<SetId> order(sys.num_sets());
  std::iota(order.begin(), order.end(), 0u);
  KernelBuffer reference(7);
  for (SetId id : order) reference.Insert(id, sys.set(id));
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    rng.Shuffle(std::span<SetId>(order));
    KernelBuffer buffer(7);
    for (SetId id : order) {
      buffer.Insert(id, sys.set(id));
      EXPECT_LE(buffer.size(), 7u);
    }
    EXPECT_EQ(buffer.ids(), reference.ids());
  }
}

class KernelPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(KernelPropertyTest, WithinOneMinusEpsOfOptimum) {
  const auto seed = static_cast<std::uint64_t>(GetParam());
  Rng rng(seed);
  RandomInstanceParams p;
  p.n = 25;
  p.m = 6 + rng.UniformBelow(9);
  p.k = 1 + rng.UniformBelow(3);
  p.r_max = 2 + rng.UniformBelow(2);
  p.d_max = 6;
  const SetSystem sys = GenerateRandomInstance(p, seed);
  const std::size_t opt = ExactMaxUniqueCoverage(sys).unique_coverage();
  for (double eps : {0.3, 0.5}) {
    const SubCollection out = UniqueTopSets(sys, eps);
    EXPECT_GE(static_cast<double>(out.unique_coverage()),
              (1.0 - eps) * static_cast<double>(opt));
    EXPECT_LE(out.size(), sys.k());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, KernelPropertyTest, ::testing::Range(0, 60));

}  // namespace
}  // namespace muc
