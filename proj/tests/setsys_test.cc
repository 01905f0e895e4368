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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "muc/errors.h"
#include "muc/random.h"
#include "muc/random_instance.h"
#include "test_util.h"

namespace muc {
namespace {

using ::muc::testing::MakeSystem;
using ::muc::testing::NaiveCover;
using ::muc::testing::NaiveHarmonic;
using ::muc::testing::NaiveUnique;
using ::muc::testing::Pick;

TEST(SetSystemTest, RejectsBrokenInvariants) {
  EXPECT_THROW(MakeSystem(3, {{1, 4}}), StructuralError);
  EXPECT_THROW(MakeSystem(3, {{0, 1}}), StructuralError);
  EXPECT_THROW(MakeSystem(3, {{2, 1}}), StructuralError);
  EXPECT_THROW(MakeSystem(3, {{1, 1}}), StructuralError);
  EXPECT_THROW(MakeSystem(3, {{1}}, 0), DomainError);
  EXPECT_THROW(MakeSystem(3, {{1}}, 2), DomainError);
  EXPECT_NO_THROW(MakeSystem(3, {{}, {1, 2, 3}}, 2));
}

TEST(SubCollectionTest, RejectsInvalidIds) {
  const SetSystem sys = MakeSystem(3, {{1}, {2}});
  EXPECT_THROW(SubCollection(sys, {2}), StructuralError);
  EXPECT_THROW(SubCollection(sys, {0, 0}), StructuralError);
  const SubCollection c(sys, {1, 0});
  EXPECT_EQ(c.ids(), (std::vector<SetId>{1, 0}));
  EXPECT_EQ(c.sorted_ids(), (std::vector<SetId>{0, 1}));
  EXPECT_TRUE(c.contains(1));
  EXPECT_EQ(c.Without(1).ids(), (std::vector<SetId>{0}));
}

TEST(CoverageTest, WorkedExamples) {
  const SetSystem sys = MakeSystem(4, {{1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(Coverage(SubCollection(sys, {0, 1})), (ElementSet{1, 2, 3}));
  EXPECT_TRUE(Coverage(SubCollection::Empty(sys)).empty());
  EXPECT_EQ(Coverage(SubCollection::All(sys)), (ElementSet{1, 2, 3, 4}));
}

TEST(UniqueCoverTest, WorkedExamples) {
  EXPECT_EQ(UniqueCover(SubCollection::All(MakeSystem(3, {{1, 2}, {2, 3}}))),
            (ElementSet{1, 3}));
  EXPECT_TRUE(
      UniqueCover(SubCollection::All(MakeSystem(3, {{1, 2, 3}, {1, 2, 3}})))
          .empty());
  EXPECT_EQ(UniqueCover(SubCollection::All(MakeSystem(2, {{1}, {2}}))),
            (ElementSet{1, 2}));
}

TEST(CoverageProfileTest, WorkedExamples) {
  const auto p1 =
      ComputeCoverageProfile(SubCollection::All(MakeSystem(3, {{1, 2}, {2, 3}})));
  EXPECT_EQ(p1.covered, (ElementSet{1, 2, 3}));
  EXPECT_EQ(p1.unique, (ElementSet{1, 3}));
  EXPECT_EQ(p1.non_unique, (ElementSet{2}));

  const SetSystem sys = MakeSystem(3, {{1}});
  const auto p2 = ComputeCoverageProfile(SubCollection::Empty(sys));
  EXPECT_TRUE(p2.covered.empty() && p2.unique.empty() && p2.non_unique.empty());

  const auto p3 = ComputeCoverageProfile(
      SubCollection::All(MakeSystem(3, {{1, 2}, {1, 2}, {3}})));
  EXPECT_EQ(p3.covered, (ElementSet{1, 2, 3}));
  EXPECT_EQ(p3.unique, (ElementSet{3}));
  EXPECT_EQ(p3.non_unique, (ElementSet{1, 2}));
}

TEST(MaxFrequencyTest, WorkedExamples) {
  EXPECT_EQ(MaxFrequency(SubCollection::All(MakeSystem(3, {{1, 2}, {2, 3}}))),
            2u);
  EXPECT_EQ(MaxFrequency(SubCollection::All(MakeSystem(2, {{1}, {2}}))), 1u);
  EXPECT_EQ(MaxFrequency(SubCollection::Empty(MakeSystem(2, {{1}}))), 0u);
}

TEST(MaxSetSizeTest, WorkedExamples) {
  EXPECT_EQ(MaxSetSize(SubCollection::All(MakeSystem(4, {{1, 2}, {2, 3, 4}}))),
            3u);
  EXPECT_EQ(MaxSetSize(SubCollection::All(MakeSystem(1, {{}}))), 0u);
  EXPECT_EQ(
      MaxSetSize(SubCollection::All(MakeSystem(3, {{1}, {1, 2}, {1, 2, 3}}))),
      3u);
}

TEST(HarmonicTest, WorkedExamples) {
  EXPECT_DOUBLE_EQ(Harmonic(0), 0.0);
  EXPECT_DOUBLE_EQ(Harmonic(1), 1.0);
  EXPECT_DOUBLE_EQ(Harmonic(2), 1.5);
  EXPECT_NEAR(Harmonic(8), 761.0 / 280.0, 1e-15);
  EXPECT_THROW(Harmonic(-1), DomainError);
}

TEST(HarmonicTest, MatchesDirectSummationAcrossTableBoundary) {
  for (std::int64_t t : {3, 100, 65535, 65536, 65537, 100000, 1000000}) {
    EXPECT_NEAR(Harmonic(t), NaiveHarmonic(static_cast<std::size_t>(t)), 1e-12)
        << t;
  }
}

TEST(HarmonicTest, OfCeilHandlesHugeArguments) {
  EXPECT_DOUBLE_EQ(HarmonicOfCeil(0.0), 0.0);
  EXPECT_DOUBLE_EQ(HarmonicOfCeil(1.5), 1.5);
  const double x = 1e30;
  EXPECT_NEAR(HarmonicOfCeil(x), std::log(x) + 0.5772156649015329, 1e-9);
}

TEST(CeilTolerantTest, IgnoresRoundingNoise) {
  EXPECT_EQ(CeilTolerant(4.0 / (1.0 / 3.0)), 12u);
  EXPECT_EQ(CeilTolerant(12.000001), 13u);
  EXPECT_EQ(CeilTolerant(0.0), 0u);
  EXPECT_EQ(CeilTolerant(2.5), 3u);
}

TEST(FrequencyTableTest, TracksRunningCovers) {
  FrequencyTable table(4);
  const ElementSet a{1, 2};
  const ElementSet b{2, 3};
  table.Add(a);
  table.Add(b);
  EXPECT_EQ(table.covered(), 3u);
  EXPECT_EQ(table.unique(), 2u);
  EXPECT_EQ(table.UniqueContribution(a), 1u);
  table.Remove(a);
  EXPECT_EQ(table.covered(), 2u);
  EXPECT_EQ(table.unique(), 2u);
}

class SetsysPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(SetsysPropertyTest, IdentitiesMatchNaiveCounting) {
  Rng rng(static_cast<std::uint64_t>(GetParam()));
  RandomInstanceParams params;
  params.n = 1 + rng.UniformBelow(15);
  params.m = 1 + rng.UniformBelow(8);
  params.k = 1;
  const SetSystem sys = GenerateRandomInstance(params, rng.Next());
  std::vector<SetId> ids;
  for (SetId id = 0; id < sys.num_sets(); ++id) {
    if (rng.UniformBelow(2) == 1) ids.push_back(id);
  }
  const SubCollection c(sys, ids);
  const auto profile = ComputeCoverageProfile(c);
  const auto sets = Pick(sys, ids);
  EXPECT_EQ(profile.covered, NaiveCover(sets));
  EXPECT_EQ(profile.unique, NaiveUnique(sets));
  EXPECT_EQ(c.unique_coverage(), profile.unique.size());
  EXPECT_EQ(c.coverage(), profile.covered.size());
  // Partition identity.
  ElementSet joined = profile.unique;
  joined.insert(joined.end(), profile.non_unique.begin(),
                profile.non_unique.end());
  std::sort(joined.begin(), joined.end());
  EXPECT_EQ(joined, profile.covered);
  EXPECT_EQ(profile.unique.size() + profile.non_unique.size(),
            profile.covered.size());
  EXPECT_LE(MaxFrequency(c), c.size());

  // Removing a member T: ψ(c \ T) = Cov≥2(c) ∪ (ũ(c) \ T).
  for (SetId t : ids) {
    ElementSet expected = profile.non_unique;
    for (Element x : profile.unique) {
      if (!std::binary_search(sys.set(t).begin(), sys.set(t).end(), x)) {
        expected.push_back(x);
      }
    }
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(Coverage(c.Without(t)), expected);
  }

  // Monotone coverage and subadditive unique cover for a split.
  std::vector<SetId> left;
  std::vector<SetId> right;
  for (SetId id : ids) (id % 2 == 0 ? left : right).push_back(id);
  const SubCollection cl(sys, left);
  const SubCollection cr(sys, right);
  EXPECT_GE(c.coverage(), cl.coverage());
  EXPECT_LE(c.unique_coverage(), cl.unique_coverage() + cr.unique_coverage());
}

INSTANTIATE_TEST_SUITE_P(Seeds, SetsysPropertyTest, ::testing::Range(0, 200));

}  // namespace
}  // namespace muc
