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

#ifndef MUC_STREAMING_H_
#define MUC_STREAMING_H_

// Single-pass set-streaming solvers built on universe subsampling.
//
// StreamUniqueCoveragePipeline runs a threshold-greedy Max Coverage pass in
// every subsampled instance, storing the chosen sets, and afterwards picks
// the best unique subcollection of the stored sets. StreamUniqueTopSets
// keeps a kernel buffer per instance and solves exactly inside it. Both
// report on the non-terminated instance with the smallest guess.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <vector>

#include "muc/algorithms.h"
#include "muc/instance_io.h"
#include "muc/oracle.h"
#include "muc/setsys.h"
#include "muc/subsample.h"

namespace muc {

// A one-pass source of fully specified sets.
class SetStream {
 public:
  virtual ~SetStream() = default;
  virtual const InstanceHeader& header() const = 0;
  virtual std::optional<StreamedSet> Next() = 0;
};

// Replays the sets of an in-memory system, optionally in a given order of
// ids (a permutation of 0..m-1).
class SystemSetStream : public SetStream {
 public:
  explicit SystemSetStream(const SetSystem& system,
                           std::vector<SetId> order = {});
  const InstanceHeader& header() const override { return header_; }
  std::optional<StreamedSet> Next() override;

 private:
  const SetSystem& system_;
  InstanceHeader header_;
  std::vector<SetId> order_;
  std::size_t next_ = 0;
};

// Reads sets lazily from instance text.
class ReaderSetStream : public SetStream {
 public:
  explicit ReaderSetStream(std::istream& in) : reader_(in) {}
  const InstanceHeader& header() const override { return reader_.header(); }
  std::optional<StreamedSet> Next() override { return reader_.Next(); }

 private:
  InstanceStreamReader reader_;
};

// Sieve-style one-pass Max Coverage. Guesses g = (1+eps)^j cover
// [delta, 2 k delta], delta being the largest set seen so far; each guess
// admits a set when its marginal coverage is at least g / (2k) and it holds
// fewer than k sets. Guesses below delta are dropped as delta grows.
class ThresholdGreedy {
 public:
  ThresholdGreedy(std::size_t k, double eps);

  void Add(SetId id, SetView set);

  struct Result {
    std::vector<SetId> ids;  // admission order
    std::vector<ElementSet> sets;
    std::size_t coverage = 0;
  };
  // Best-coverage solution over live guesses; earlier guess wins ties.
  Result Best() const;

  std::size_t live_guesses() const { return guesses_.size(); }
  // Sets currently held across all guesses.
  std::size_t stored_sets() const;

 private:
  struct Guess {
    double value = 0.0;
    std::vector<SetId> ids;
    std::vector<ElementSet> sets;
    std::vector<std::uint8_t> covered;
    std::size_t coverage = 0;
  };

  std::size_t k_;
  double eps_;
  double log_base_;
  std::size_t delta_ = 0;
  std::map<long long, Guess> guesses_;
};

SubCollection ThresholdGreedyMaxCoverage(const SetSystem& system,
                                         std::size_t k, double eps);

struct StreamOptions {
  std::size_t k = 1;
  double eps = 0.1;
  double c = 4.0;
  std::uint64_t seed = 0;
  bool disable_subsampling = false;
  // Pipeline: epsilons for the offline algorithms; tuned to the measured r
  // and d of each stored collection when unset.
  std::optional<RatioBoundConfig> cfg;
  // Top-sets: upper bound on the max frequency, and on the set size used
  // for phi (n when unset). phi itself may be overridden.
  std::size_t r_bound = 2;
  std::optional<std::size_t> d_bound;
  std::optional<double> phi;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
};

struct InstanceSummary {
  double guess_v = 0.0;
  double p = 1.0;
  bool terminated = false;
  std::size_t stored_sets = 0;
  std::vector<SetId> solution_ids;  // ascending
  // Unique coverage on the instance's sampled universe.
  std::size_t value = 0;
};

struct StreamReport {
  std::vector<InstanceSummary> instances;  // increasing guess
  std::size_t chosen_index = 0;
  double chosen_guess = 0.0;
  double p = 1.0;
  std::vector<SetId> solution;  // ascending original ids
  std::size_t value = 0;        // on the sampled universe
  double est_value = 0.0;       // value / p
  bool estimated = false;       // p < 1
  std::size_t sets_read = 0;
};

// Both throw StreamError on an empty stream or when every instance is
// terminated.
StreamReport StreamUniqueCoveragePipeline(SetStream& stream,
                                          const StreamOptions& options);
StreamReport StreamUniqueTopSets(SetStream& stream,
                                 const StreamOptions& options);

}  // namespace muc

#endif  // MUC_STREAMING_H_
