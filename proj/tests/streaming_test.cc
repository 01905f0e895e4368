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

#include "muc/streaming.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include <gtest/gtest.h>

#include "muc/errors.h"
#include "muc/instance_io.h"
#include "muc/kernel.h"
#include "muc/oracle.h"
#include "muc/random.h"
#include "muc/random_instance.h"
#include "test_util.h"

namespace muc {
namespace {

using ::muc::testing::MakeSystem;

SubsampleParams Params(std::size_t n, std::size_t m, std::size_t k, double eps,
                       double c) {
  SubsampleParams p;
  p.n = n;
  p.m = m;
  p.k = k;
  p.eps = eps;
  p.c = c;
  p.seed = 17;
  return p;
}

TEST(SpawnSubsampleInstancesTest, WorkedExamples) {
  const auto instances = SpawnSubsampleInstances(Params(16, 8, 2, 0.5, 1.0));
  ASSERT_EQ(instances.size(), 4u);
  std::vector<double> guesses;
  for (const auto& inst : instances) guesses.push_back(inst.guess_v());
  EXPECT_EQ(guesses, (std::vector<double>{2, 4, 8, 16}));
  // c=1, k=2, m=8, eps=0.5, v=16: 2 * 3 / (0.25 * 16) = 1.5, clamped.
  EXPECT_DOUBLE_EQ(instances[3].p(), 1.0);
  EXPECT_DOUBLE_EQ(SubsampleProbability(8, 2, 0.5, 1.0, 16), 1.0);
  EXPECT_DOUBLE_EQ(SubsampleProbability(8, 2, 0.5, 1.0, 64), 6.0 / 16.0);
  EXPECT_DOUBLE_EQ(SubsampleSizeCap(8, 2, 0.5, 1.0), 2 * 2 * 3 / 0.25 * 1.5);
  EXPECT_EQ(SpawnSubsampleInstances(Params(1, 1, 1, 0.5, 1.0)).size(), 1u);
  EXPECT_EQ(SpawnSubsampleInstances(Params(17, 8, 1, 0.5, 1.0)).size(), 5u);
  EXPECT_THROW(SpawnSubsampleInstances(Params(0, 8, 1, 0.5, 1.0)), DomainError);
  EXPECT_THROW(SpawnSubsampleInstances(Params(8, 8, 1, 1.5, 1.0)), DomainError);
  EXPECT_THROW(SpawnSubsampleInstances(Params(8, 8, 1, 0.5, 0.0)), DomainError);
  std::set<std::uint64_t> seeds;
  for (const auto& inst : instances) seeds.insert(inst.hash_seed());
  EXPECT_EQ(seeds.size(), instances.size());
}

TEST(SubsampleInstanceTest, KeepsABernoulliSubsetConsistently) {
  SubsampleInstance inst(1024, 0.25, 99, 1e9);
  std::size_t kept = 0;
  for (Element x = 1; x <= 40000; ++x) {
    kept += inst.Keeps(x) ? 1 : 0;
    EXPECT_EQ(inst.Keeps(x), inst.Keeps(x));
  }
  EXPECT_NEAR(static_cast<double>(kept) / 40000.0, 0.25, 0.01);
  const ElementSet s{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  const ElementSet r = inst.Restrict(s);
  for (Element x : r) EXPECT_TRUE(inst.Keeps(x));
  EXPECT_TRUE(std::is_sorted(r.begin(), r.end()));
}

TEST(SubsampleInstanceTest, IngestTerminatesPastSizeCap) {
  SubsampleInstance full(2, 1.0, 1, 3.5);
  const ElementSet empty;
  auto forwarded = full.Ingest(empty);
  ASSERT_TRUE(forwarded.has_value());
  EXPECT_TRUE(forwarded->empty());
  const ElementSet small{1, 2, 3};
  EXPECT_EQ(*full.Ingest(small), small);  // p = 1 is the identity
  const ElementSet big{1, 2, 3, 4};
  EXPECT_FALSE(full.Ingest(big).has_value());
  EXPECT_TRUE(full.terminated());
  EXPECT_FALSE(full.Ingest(small).has_value());
  EXPECT_EQ(full.ignored_after_termination(), 1u);
}

TEST(ThresholdGreedyTest, WorkedExamples) {
  const SetSystem disjoint = MakeSystem(6, {{1, 2}, {3, 4}, {5, 6}}, 3);
  EXPECT_EQ(ThresholdGreedyMaxCoverage(disjoint, 3, 0.1).coverage(), 6u);
  const SetSystem three = MakeSystem(5, {{1, 2, 3}, {3, 4}, {4, 5}}, 2);
  EXPECT_GE(ThresholdGreedyMaxCoverage(three, 2, 0.1).coverage(), 3u);
  const SetSystem last = MakeSystem(8, {{1}, {2}, {3}, {1, 2, 3, 4, 5, 6, 7, 8}}, 1);
  EXPECT_EQ(ThresholdGreedyMaxCoverage(last, 1, 0.1).coverage(), 8u);
}

TEST(ThresholdGreedyTest, HalfApproximationUnderPermutations) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomInstanceParams p;
    p.n = 30;
    p.m = 9;
    p.k = 1 + seed % 3;
    p.d_max = 10;
    const SetSystem sys = GenerateRandomInstance(p, seed);
    const double best =
        static_cast<double>(ExactMaxCoverage(sys).coverage());
    std::vector<SetId> order(sys.num_sets());
    std::iota(order.begin(), order.end(), 0u);
    Rng rng(seed);
    for (int perm = 0; perm < 5; ++perm) {
      rng.Shuffle(std::span<SetId>(order));
      ThresholdGreedy greedy(sys.k(), 0.1);
      for (SetId id : order) greedy.Add(id, sys.set(id));
      const auto result = greedy.Best();
      EXPECT_LE(result.ids.size(), sys.k());
      EXPECT_EQ(SubCollection(sys, result.ids).coverage(), result.coverage);
      EXPECT_GE(static_cast<double>(result.coverage), (0.5 - 0.1) * best);
    }
  }
}

class EmptyStream : public SetStream {
 public:
  const InstanceHeader& header() const override { return header_; }
  std::optional<StreamedSet> Next() override { return std::nullopt; }

 private:
  InstanceHeader header_{5, 0, 1};
};

TEST(PipelineTest, EmptyStreamIsAnError) {
  EmptyStream a;
  EXPECT_THROW(StreamUniqueCoveragePipeline(a, StreamOptions{}), StreamError);
  EmptyStream b;
  EXPECT_THROW(StreamUniqueTopSets(b, StreamOptions{}), StreamError);
}

TEST(PipelineTest, AllTerminatedIsAnError) {
  std::vector<ElementSet> sets = {ElementSet(200)};
  std::iota(sets[0].begin(), sets[0].end(), 1u);
  const SetSystem sys = MakeSystem(200, sets, 1);
  SystemSetStream stream(sys);
  StreamOptions options;
  options.k = 1;
  options.eps = 0.9;
  options.c = 0.01;
  options.disable_subsampling = true;
  EXPECT_THROW(StreamUniqueCoveragePipeline(stream, options), StreamError);
}

TEST(PipelineTest, MeetsRatioWithSubsamplingDisabled) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomInstanceParams p;
    p.n = 20;
    p.m = 8;
    p.k = 1 + seed % 3;
    p.d_max = 6;
    const SetSystem sys = GenerateRandomInstance(p, seed);
    SystemSetStream stream(sys);
    StreamOptions options;
    options.k = sys.k();
    options.eps = 0.05;
    options.seed = seed;
    options.disable_subsampling = true;
    const StreamReport report = StreamUniqueCoveragePipeline(stream, options);
    EXPECT_FALSE(report.estimated);
    EXPECT_EQ(report.chosen_index, 0u);
    const SubCollection solution(sys, report.solution);
    EXPECT_EQ(solution.unique_coverage(), report.value);
    EXPECT_LE(solution.size(), sys.k());
    const SubCollection all = SubCollection::All(sys);
    const double phi = PhiBound(static_cast<std::int64_t>(sys.k()),
                                static_cast<std::int64_t>(MaxFrequency(all)),
                                static_cast<std::int64_t>(MaxSetSize(all)));
    const double opt =
        static_cast<double>(ExactMaxUniqueCoverage(sys).unique_coverage());
    EXPECT_LE(static_cast<double>(report.value), opt);
    EXPECT_GE(static_cast<double>(report.value),
              (1.0 / (2.0 * phi) - 3 * 0.05) * opt - 1e-9);
  }
}

TEST(PipelineTest, DeterministicPerSeed) {
  RandomInstanceParams p;
  p.n = 400;
  p.m = 12;
  p.k = 2;
  p.d_min = 80;
  p.d_max = 150;
  const SetSystem sys = GenerateRandomInstance(p, 3);
  auto run = [&](std::uint64_t seed) {
    SystemSetStream stream(sys);
    StreamOptions options;
    options.k = 2;
    options.eps = 0.3;
    options.seed = seed;
    const StreamReport report = StreamUniqueCoveragePipeline(stream, options);
    std::vector<double> ps;
    for (const auto& inst : report.instances) ps.push_back(inst.p);
    return std::make_tuple(report.solution, report.value, report.chosen_guess,
                           ps);
  };
  EXPECT_EQ(run(4), run(4));
}

TEST(TopSetsTest, EqualsOfflineKernelWithoutSubsampling) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomInstanceParams p;
    p.n = 25;
    p.m = 10;
    p.k = 1 + seed % 3;
    p.r_max = 3;
    p.d_max = 6;
    const SetSystem sys = GenerateRandomInstance(p, seed);
    StreamOptions options;
    options.k = sys.k();
    options.eps = 0.3;
    options.r_bound = 3;
    options.disable_subsampling = true;
    SystemSetStream stream(sys);
    const StreamReport report = StreamUniqueTopSets(stream, options);
    const double phi = KernelPhi(sys.k(), 3, sys.universe_size());
    const KernelSolution offline =
        SolveInKernel(BuildKernel(sys, 0.3, phi, 3), sys.k());
    EXPECT_EQ(report.solution, offline.ids);
    EXPECT_EQ(report.value, offline.unique_coverage);

    // A larger r bound only grows the kernel.
    options.r_bound = 6;
    SystemSetStream again(sys);
    EXPECT_GE(StreamUniqueTopSets(again, options).value, report.value);
  }
}

TEST(TopSetsTest, PermutedStreamsGiveTheSameReport) {
  RandomInstanceParams p;
  p.n = 300;
  p.m = 10;
  p.k = 2;
  p.r_max = 3;
  p.d_min = 40;
  p.d_max = 90;
  const SetSystem sys = GenerateRandomInstance(p, 8);
  StreamOptions options;
  options.k = 2;
  options.eps = 0.3;
  options.r_bound = 3;
  options.seed = 21;
  SystemSetStream base(sys);
  const StreamReport expected = StreamUniqueTopSets(base, options);
  std::vector<SetId> order(sys.num_sets());
  std::iota(order.begin(), order.end(), 0u);
  std::reverse(order.begin(), order.end());
  SystemSetStream reversed(sys, order);
  const StreamReport got = StreamUniqueTopSets(reversed, options);
  EXPECT_EQ(got.solution, expected.solution);
  EXPECT_EQ(got.chosen_guess, expected.chosen_guess);
}

TEST(SystemSetStreamTest, RejectsBadOrders) {
  const SetSystem sys = MakeSystem(2, {{1}, {2}}, 1);
  EXPECT_THROW(SystemSetStream(sys, {0}), DomainError);
  EXPECT_THROW(SystemSetStream(sys, {0, 0}), DomainError);
  EXPECT_NO_THROW(SystemSetStream(sys, {1, 0}));
}

}  // namespace
}  // namespace muc
