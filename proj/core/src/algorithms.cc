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

#include "muc/algorithms.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "muc/errors.h"

namespace muc {
namespace {

// Relative slack on the float side of |ũ| H_l >= |ψ|.
constexpr double kRatioSlack = 1e-12;

bool RatioMet(std::size_t unique, std::size_t covered, std::uint64_t ell) {
  if (ell == 0) return true;
  return static_cast<double>(unique) *
             Harmonic(static_cast<std::int64_t>(ell)) >=
         static_cast<double>(covered) * (1.0 - kRatioSlack);
}

void RequireOpenUnit(double eps, const char* name) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw DomainError(std::string(name) + " must lie in (0, 1)");
  }
}

SubCollection Select(const SubCollection& c,
                     const std::vector<std::size_t>& positions) {
  std::vector<SetId> ids;
  ids.reserve(positions.size());
  for (std::size_t p : positions) ids.push_back(c.ids()[p]);
  return SubCollection(c.system(), std::move(ids));
}

std::vector<std::size_t> AllPositions(std::size_t count) {
  std::vector<std::size_t> all(count);
  for (std::size_t i = 0; i < count; ++i) all[i] = i;
  return all;
}

}  // namespace

void RatioBoundConfig::Validate() const {
  if (k < 1 || r < 1 || d < 1) throw DomainError("k, r, d must be >= 1");
  RequireOpenUnit(eps_r, "eps_r");
  RequireOpenUnit(eps_d, "eps_d");
  RequireOpenUnit(eps_hat_d, "eps_hat_d");
}

RatioBoundConfig RatioBoundConfig::Tuned(std::size_t k, std::size_t r,
                                         std::size_t d) {
  RatioBoundConfig cfg;
  cfg.k = k;
  cfg.r = r;
  cfg.d = d;
  if (r >= 2) cfg.eps_r = UgfTunedEpsilon(r);
  if (d >= 2) {
    cfg.eps_hat_d = UgfTunedEpsilon(d);
    const double beta = UgfRatio(d, cfg.eps_hat_d);
    if (beta > 0.0) cfg.eps_d = beta / (1.0 + beta);
  }
  cfg.Validate();
  return cfg;
}

double UgfTunedEpsilon(std::size_t r) {
  if (r < 2) throw DomainError("tuned eps needs r >= 2");
  const double ln_r = std::log(static_cast<double>(r));
  return 1.0 / (kUgfC1 * ln_r * (2.0 * ln_r + 2.0 * std::log(ln_r) + kUgfC2));
}

double UgfRatio(std::size_t r, double eps) {
  RequireOpenUnit(eps, "eps");
  const double rr = static_cast<double>(r);
  return 1.0 / HarmonicOfCeil(rr * (rr - 1.0) / eps) - eps;
}

double UgfSimpleRatio(std::size_t r) {
  if (r < 2) throw DomainError("closed-form ratio needs r >= 2");
  const double ln_r = std::log(static_cast<double>(r));
  return (1.0 - 1.0 / (kUgfC1 * ln_r)) /
         (2.0 * ln_r + 2.0 * std::log(ln_r) + kUgfC2);
}

double UgsRatio(std::size_t d, double eps_d, double eps_hat_d) {
  RequireOpenUnit(eps_d, "eps_d");
  return std::min(eps_d, (1.0 - eps_d) * UgfRatio(d, eps_hat_d));
}

PhiComponents PhiBoundComponents(std::int64_t k, std::int64_t r,
                                 std::int64_t d) {
  if (k < 1 || r < 1 || d < 1) {
    throw DomainError("phi bound needs positive k, r, d");
  }
  PhiComponents phi;
  phi.phi_k = Harmonic(k);
  if (r >= 2) phi.phi_r = 1.0 / UgfSimpleRatio(static_cast<std::size_t>(r));
  if (d >= 2) {
    const auto dd = static_cast<std::size_t>(d);
    const double beta = UgfRatio(dd, UgfTunedEpsilon(dd));
    phi.phi_d = beta > 0.0 ? 1.0 / beta + 1.0
                           : std::numeric_limits<double>::infinity();
  }
  phi.phi = std::min({phi.phi_k, phi.phi_r, phi.phi_d});
  return phi;
}

double PhiBound(std::int64_t k, std::int64_t r, std::int64_t d) {
  return PhiBoundComponents(k, r, d).phi;
}

std::vector<std::size_t> UniqueGreedyIndices(std::span<const SetView> sets,
                                             std::uint64_t implicit_empty) {
  const std::size_t explicit_count = sets.size();
  if (explicit_count + implicit_empty == 0) {
    throw DomainError("unique greedy needs a nonempty collection");
  }
  const Element max_element = MaxElement(sets);
  FrequencyTable table(max_element);
  for (SetView s : sets) table.Add(s);

  // owners[x] lists the positions of the sets containing x.
  std::vector<std::vector<std::uint32_t>> owners(max_element + 1);
  for (std::size_t i = 0; i < explicit_count; ++i) {
    for (Element x : sets[i]) owners[x].push_back(static_cast<std::uint32_t>(i));
  }
  std::vector<std::size_t> contribution(explicit_count);
  for (std::size_t i = 0; i < explicit_count; ++i) {
    contribution[i] = table.UniqueContribution(sets[i]);
  }
  std::vector<bool> alive(explicit_count, true);
  std::size_t alive_explicit = explicit_count;
  std::uint64_t empties = implicit_empty;

  while (!RatioMet(table.unique(), table.covered(), alive_explicit + empties)) {
    std::size_t best = explicit_count;
    for (std::size_t i = 0; i < explicit_count; ++i) {
      if (alive[i] && (best == explicit_count ||
                       contribution[i] < contribution[best])) {
        best = i;
      }
    }
    const bool explicit_wins =
        best < explicit_count && (empties == 0 || contribution[best] == 0);
    if (!explicit_wins) {
      // Dropping empty sets leaves ũ and ψ unchanged and only shrinks the
      // harmonic factor, so drop the fewest that make the ratio hold.
      std::uint64_t lo = 1;
      std::uint64_t hi = empties;
      if (!RatioMet(table.unique(), table.covered(),
                    alive_explicit + empties - hi)) {
        empties = 0;
        continue;
      }
      while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (RatioMet(table.unique(), table.covered(),
                     alive_explicit + empties - mid)) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      empties -= lo;
      continue;
    }
    alive[best] = false;
    --alive_explicit;
    table.Remove(sets[best]);
    for (Element x : sets[best]) {
      if (table.count(x) != 1) continue;
      for (std::uint32_t owner : owners[x]) {
        if (alive[owner]) {
          ++contribution[owner];
          break;
        }
      }
    }
  }

  std::vector<std::size_t> selected;
  selected.reserve(alive_explicit);
  for (std::size_t i = 0; i < explicit_count; ++i) {
    if (alive[i]) selected.push_back(i);
  }
  return selected;
}

std::vector<std::size_t> UniqueGreedyFreqIndices(
    std::span<const SetView> sets, std::size_t frequency_bound, double eps,
    UgfDiagnostics* diagnostics) {
  RequireOpenUnit(eps, "eps_r");
  UgfDiagnostics diag;
  diag.frequency_bound = frequency_bound;
  if (frequency_bound < 2) {
    diag.shortcut = true;
    diag.group_count = 1;
    diag.groups_used = sets.empty() ? 0 : 1;
    if (diagnostics != nullptr) *diagnostics = diag;
    return AllPositions(sets.size());
  }
  const double rr = static_cast<double>(frequency_bound);
  const double groups_real = rr * (rr - 1.0) / eps;
  if (groups_real > 1e18) throw CapacityError("too many groups");
  const std::uint64_t group_count = CeilTolerant(groups_real);
  diag.group_count = group_count;

  const Element max_element = MaxElement(sets);
  // Per element: (group, number of that group's sets containing it).
  std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>> in_groups(
      max_element + 1);
  std::vector<std::uint64_t> group_of(sets.size());
  std::uint64_t used = 0;
  std::vector<std::uint64_t> hits;
  for (std::size_t t = 0; t < sets.size(); ++t) {
    hits.clear();
    for (Element x : sets[t]) {
      for (const auto& [g, count] : in_groups[x]) {
        if (count == 1) hits.push_back(g);
      }
    }
    std::sort(hits.begin(), hits.end());
    // Lowest-index group whose unique cover misses the set entirely.
    std::uint64_t chosen = group_count;
    std::uint64_t expect = 0;
    for (std::size_t i = 0; i < hits.size() && expect < used;) {
      if (hits[i] != expect) break;
      while (i < hits.size() && hits[i] == expect) ++i;
      ++expect;
    }
    if (expect < used) {
      chosen = expect;
    } else if (used < group_count) {
      chosen = used;
    } else {
      // Every group intersects: smallest intersection, lowest index.
      std::size_t best_count = std::numeric_limits<std::size_t>::max();
      for (std::size_t i = 0; i < hits.size();) {
        std::size_t j = i;
        while (j < hits.size() && hits[j] == hits[i]) ++j;
        if (j - i < best_count) {
          best_count = j - i;
          chosen = hits[i];
        }
        i = j;
      }
    }
    if (chosen == used) ++used;
    group_of[t] = chosen;
    for (Element x : sets[t]) {
      auto& entries = in_groups[x];
      auto it = std::find_if(entries.begin(), entries.end(),
                             [&](const auto& e) { return e.first == chosen; });
      if (it == entries.end()) {
        entries.emplace_back(chosen, 1);
      } else {
        ++it->second;
      }
    }
  }

  std::vector<ElementSet> covers(used);
  std::size_t overlap_sum = 0;
  for (std::size_t x = 1; x <= max_element; ++x) {
    for (const auto& [g, count] : in_groups[x]) {
      covers[g].push_back(static_cast<Element>(x));
      if (count >= 2) ++overlap_sum;
    }
  }
  diag.groups_used = used;
  diag.overlap_sum = overlap_sum;

  std::vector<SetView> cover_views(covers.begin(), covers.end());
  const auto chosen_groups =
      UniqueGreedyIndices(cover_views, group_count - used);
  std::vector<bool> group_selected(used, false);
  for (std::size_t g : chosen_groups) group_selected[g] = true;

  std::vector<std::size_t> selected;
  for (std::size_t t = 0; t < sets.size(); ++t) {
    if (group_selected[group_of[t]]) selected.push_back(t);
  }
  if (diagnostics != nullptr) *diagnostics = diag;
  return selected;
}

std::vector<std::size_t> UniqueGreedySizeIndices(std::span<const SetView> sets,
                                                 double eps_d,
                                                 double eps_hat_d) {
  RequireOpenUnit(eps_d, "eps_d");
  RequireOpenUnit(eps_hat_d, "eps_hat_d");
  const std::size_t d = MaxSetSize(sets);
  FrequencyTable table(MaxElement(sets));
  for (SetView s : sets) table.Add(s);
  std::vector<bool> alive(sets.size(), true);

  // Make the collection minimal: drop, lowest position first, any set that
  // uniquely covers nothing.
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (alive[i] && table.UniqueContribution(sets[i]) == 0) {
        alive[i] = false;
        table.Remove(sets[i]);
        removed = true;
        break;
      }
    }
  }
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (alive[i]) minimal.push_back(i);
  }
  if (static_cast<double>(minimal.size()) >=
          eps_d * static_cast<double>(table.covered()) ||
      d < 2) {
    return minimal;
  }

  // Restrict to elements of frequency at most d.
  std::vector<ElementSet> restricted;
  restricted.reserve(minimal.size());
  for (std::size_t i : minimal) {
    ElementSet r;
    for (Element x : sets[i]) {
      if (table.count(x) <= d) r.push_back(x);
    }
    restricted.push_back(std::move(r));
  }
  std::vector<SetView> views(restricted.begin(), restricted.end());
  const auto chosen = UniqueGreedyFreqIndices(views, d, eps_hat_d);
  std::vector<std::size_t> selected;
  selected.reserve(chosen.size());
  for (std::size_t p : chosen) selected.push_back(minimal[p]);
  return selected;
}

SubCollection UniqueGreedy(const SubCollection& c) {
  if (c.empty()) throw DomainError("unique greedy needs a nonempty collection");
  const auto views = c.member_sets();
  return Select(c, UniqueGreedyIndices(views));
}

UgfRun RunUniqueGreedyFreq(const SubCollection& c, double eps_r) {
  RequireOpenUnit(eps_r, "eps_r");
  const auto views = c.member_sets();
  const std::size_t r = MaxFrequency(std::span<const SetView>(views));
  UgfDiagnostics diag;
  auto positions = UniqueGreedyFreqIndices(views, r, eps_r, &diag);
  assert(diag.shortcut ||
         static_cast<double>(diag.overlap_sum) <=
             eps_r * static_cast<double>(c.coverage()) + 1e-9);
  return UgfRun{Select(c, positions), diag};
}

SubCollection UniqueGreedyFreq(const SubCollection& c, double eps_r) {
  return RunUniqueGreedyFreq(c, eps_r).selection;
}

SubCollection UniqueGreedySize(const SubCollection& c, double eps_d,
                               double eps_hat_d) {
  const auto views = c.member_sets();
  return Select(c, UniqueGreedySizeIndices(views, eps_d, eps_hat_d));
}

std::vector<AlgorithmOutcome> RunUniqueCoverageAlgorithms(
    const SubCollection& c, const RatioBoundConfig& cfg) {
  cfg.Validate();
  std::vector<AlgorithmOutcome> outcomes;
  outcomes.push_back({"ug", UniqueGreedy(c)});
  outcomes.push_back({"ugf", UniqueGreedyFreq(c, cfg.eps_r)});
  outcomes.push_back({"ugs", UniqueGreedySize(c, cfg.eps_d, cfg.eps_hat_d)});
  return outcomes;
}

SubCollection BestUniqueSubcollection(const SubCollection& c,
                                      const RatioBoundConfig& cfg) {
  auto outcomes = RunUniqueCoverageAlgorithms(c, cfg);
  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    if (outcomes[i].selection.unique_coverage() >
        outcomes[best].selection.unique_coverage()) {
      best = i;
    }
  }
  return std::move(outcomes[best].selection);
}

}  // namespace muc
