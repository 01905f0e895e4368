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
#include <utility>

#include "muc/errors.h"
#include "muc/kernel.h"

namespace muc {

SystemSetStream::SystemSetStream(const SetSystem& system,
                                 std::vector<SetId> order)
    : system_(system), order_(std::move(order)) {
  header_ = {system.universe_size(), system.num_sets(), system.k()};
  if (order_.empty()) {
    order_.resize(system.num_sets());
    std::iota(order_.begin(), order_.end(), SetId{0});
  }
  if (order_.size() != system.num_sets()) {
    throw DomainError("stream order must list every set once");
  }
  std::vector<bool> seen(system.num_sets(), false);
  for (SetId id : order_) {
    if (id >= system.num_sets() || seen[id]) {
      throw DomainError("stream order must be a permutation of the set ids");
    }
    seen[id] = true;
  }
}

std::optional<StreamedSet> SystemSetStream::Next() {
  if (next_ >= order_.size()) return std::nullopt;
  const SetId id = order_[next_++];
  return StreamedSet{id, system_.set(id)};
}

ThresholdGreedy::ThresholdGreedy(std::size_t k, double eps)
    : k_(k), eps_(eps), log_base_(std::log1p(eps)) {
  if (k < 1) throw DomainError("threshold greedy needs k >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
}

void ThresholdGreedy::Add(SetId id, SetView set) {
  if (set.size() > delta_) {
    delta_ = set.size();
    const double lo = std::log(static_cast<double>(delta_)) / log_base_;
    const double hi =
        std::log(2.0 * static_cast<double>(k_ * delta_)) / log_base_;
    const auto j_lo = static_cast<long long>(std::ceil(lo - 1e-9));
    const auto j_hi = static_cast<long long>(std::floor(hi + 1e-9));
    guesses_.erase(guesses_.begin(), guesses_.lower_bound(j_lo));
    for (long long j = j_lo; j <= j_hi; ++j) {
      auto [it, inserted] = guesses_.try_emplace(j);
      if (inserted) {
        it->second.value = std::pow(1.0 + eps_, static_cast<double>(j));
      }
    }
  }
  const double scale = 2.0 * static_cast<double>(k_);
  for (auto& [j, guess] : guesses_) {
    if (guess.ids.size() >= k_) continue;
    if (!set.empty() && guess.covered.size() <= set.back()) {
      guess.covered.resize(set.back() + 1, 0);
    }
    std::size_t gain = 0;
    for (Element x : set) gain += guess.covered[x] ? 0 : 1;
    if (gain == 0 ||
        static_cast<double>(gain) * scale < guess.value * (1.0 - 1e-12)) {
      continue;
    }
    for (Element x : set) guess.covered[x] = 1;
    guess.coverage += gain;
    guess.ids.push_back(id);
    guess.sets.emplace_back(set.begin(), set.end());
  }
}

ThresholdGreedy::Result ThresholdGreedy::Best() const {
  Result best;
  const Guess* chosen = nullptr;
  for (const auto& [j, guess] : guesses_) {
    if (chosen == nullptr || guess.coverage > chosen->coverage) {
      chosen = &guess;
    }
  }
  if (chosen != nullptr) {
    best.ids = chosen->ids;
    best.sets = chosen->sets;
    best.coverage = chosen->coverage;
  }
  return best;
}

std::size_t ThresholdGreedy::stored_sets() const {
  std::size_t total = 0;
  for (const auto& [j, guess] : guesses_) total += guess.ids.size();
  return total;
}

SubCollection ThresholdGreedyMaxCoverage(const SetSystem& system,
                                         std::size_t k, double eps) {
  ThresholdGreedy greedy(k, eps);
  for (SetId id = 0; id < system.num_sets(); ++id) {
    greedy.Add(id, system.set(id));
  }
  return SubCollection(system, greedy.Best().ids);
}

namespace {

std::vector<SubsampleInstance> Spawn(const InstanceHeader& header,
                                     const StreamOptions& options) {
  SubsampleParams params;
  params.n = header.n;
  params.m = header.m;
  params.k = options.k;
  params.eps = options.eps;
  params.c = options.c;
  params.seed = options.seed;
  params.disable_subsampling = options.disable_subsampling;
  return SpawnSubsampleInstances(params);
}

// Fans every streamed set out to the live instances. Sink is called as
// sink(instance index, id, sampled set); release(instance index) when an
// instance terminates.
template <typename Sink, typename Release>
std::size_t Replay(SetStream& stream, std::vector<SubsampleInstance>& instances,
                   Sink sink, Release release) {
  std::size_t read = 0;
  while (auto streamed = stream.Next()) {
    ++read;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if (instances[i].terminated()) continue;
      auto sampled = instances[i].Ingest(streamed->elements);
      if (sampled) {
        sink(i, streamed->id, std::move(*sampled));
      } else {
        release(i);
      }
    }
  }
  if (read == 0) throw StreamError("empty stream");
  return read;
}

StreamReport Select(std::vector<InstanceSummary> summaries,
                    std::size_t sets_read) {
  StreamReport report;
  report.sets_read = sets_read;
  std::optional<std::size_t> chosen;
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    if (!summaries[i].terminated) {
      chosen = i;
      break;
    }
  }
  report.instances = std::move(summaries);
  if (!chosen) {
    throw StreamError("every subsampled instance terminated; raise eps or c");
  }
  const InstanceSummary& best = report.instances[*chosen];
  report.chosen_index = *chosen;
  report.chosen_guess = best.guess_v;
  report.p = best.p;
  report.solution = best.solution_ids;
  report.value = best.value;
  report.est_value = static_cast<double>(best.value) / best.p;
  report.estimated = best.p < 1.0;
  return report;
}

InstanceSummary Summarize(const SubsampleInstance& instance) {
  InstanceSummary summary;
  summary.guess_v = instance.guess_v();
  summary.p = instance.p();
  summary.terminated = instance.terminated();
  return summary;
}

}  // namespace

StreamReport StreamUniqueCoveragePipeline(SetStream& stream,
                                          const StreamOptions& options) {
  const InstanceHeader header = stream.header();
  auto instances = Spawn(header, options);
  std::vector<std::optional<ThresholdGreedy>> states;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    states.emplace_back(std::in_place, options.k, options.eps);
  }
  const std::size_t read = Replay(
      stream, instances,
      [&](std::size_t i, SetId id, ElementSet sampled) {
        states[i]->Add(id, sampled);
      },
      [&](std::size_t i) { states[i].reset(); });

  std::vector<InstanceSummary> summaries;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    InstanceSummary summary = Summarize(instances[i]);
    if (!summary.terminated) {
      const ThresholdGreedy::Result greedy = states[i]->Best();
      summary.stored_sets = states[i]->stored_sets();
      if (!greedy.ids.empty()) {
        const SetSystem stored(header.n, greedy.sets, 1);
        const SubCollection all = SubCollection::All(stored);
        const RatioBoundConfig cfg =
            options.cfg.value_or(RatioBoundConfig::Tuned(
                options.k, std::max<std::size_t>(MaxFrequency(all), 1),
                std::max<std::size_t>(MaxSetSize(all), 1)));
        const SubCollection chosen = BestUniqueSubcollection(all, cfg);
        summary.value = chosen.unique_coverage();
        for (SetId pos : chosen.ids()) {
          summary.solution_ids.push_back(greedy.ids[pos]);
        }
        std::sort(summary.solution_ids.begin(), summary.solution_ids.end());
      }
    }
    summaries.push_back(std::move(summary));
  }
  return Select(std::move(summaries), read);
}

StreamReport StreamUniqueTopSets(SetStream& stream,
                                 const StreamOptions& options) {
  const InstanceHeader header = stream.header();
  auto instances = Spawn(header, options);
  const double phi = options.phi.value_or(
      KernelPhi(options.k, options.r_bound, options.d_bound.value_or(header.n)));
  const std::uint64_t capacity = KernelCapacity(
      options.k, std::max<std::size_t>(options.r_bound, 2), options.eps, phi);
  std::vector<std::optional<KernelBuffer>> buffers;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    buffers.emplace_back(std::in_place, capacity);
  }
  const std::size_t read = Replay(
      stream, instances,
      [&](std::size_t i, SetId id, ElementSet sampled) {
        buffers[i]->Insert(id, std::move(sampled));
      },
      [&](std::size_t i) { buffers[i].reset(); });

  std::vector<InstanceSummary> summaries;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    InstanceSummary summary = Summarize(instances[i]);
    if (!summary.terminated) {
      summary.stored_sets = buffers[i]->size();
      KernelSolution solution =
          SolveInKernel(*buffers[i], options.k, options.oracle_budget);
      summary.solution_ids = std::move(solution.ids);
      summary.value = solution.unique_coverage;
    }
    summaries.push_back(std::move(summary));
  }
  return Select(std::move(summaries), read);
}

}  // namespace muc
