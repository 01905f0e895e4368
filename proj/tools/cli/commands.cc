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

#include "cli/commands.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include "CLI11.hpp"
#include "cli/svg.h"
#include "cli/table.h"
#include "muc/algorithms.h"
#include "muc/errors.h"
#include "muc/hardgen.h"
#include "muc/instance_io.h"
#include "muc/kernel.h"
#include "muc/oracle.h"
#include "muc/random.h"
#include "muc/random_instance.h"
#include "muc/setsys.h"
#include "muc/streaming.h"

namespace muc::cli {
namespace {

constexpr double kSlack = 1e-9;

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string out_path;
  std::string format = "csv";
  std::uint64_t oracle_budget = kDefaultOracleBudget;
};

// Thrown when a checked bound fails after the report has been written.
struct BoundViolation {
  std::string what;
};

TableFormat Format(const GlobalOptions& g) {
  return g.format == "tsv" ? TableFormat::kTsv : TableFormat::kCsv;
}

// Report sink: the --out file when given, else the caller's stream.
class Output {
 public:
  Output(const GlobalOptions& g, std::ostream& fallback) {
    if (g.out_path.empty()) {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(g.out_path);
      if (!*file_) throw ParseError(0, "cannot write " + g.out_path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::vector<unsigned> ToUnsigned(const std::vector<SetId>& ids) {
  return {ids.begin(), ids.end()};
}

std::string Ids(const std::vector<SetId>& ids) {
  return JoinIds(ToUnsigned(ids));
}

std::string Flag(bool value) { return value ? "true" : "false"; }

std::string Join(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

std::optional<std::size_t> OracleValue(const SetSystem& system,
                                       std::uint64_t budget) {
  if (CandidateCount(system.num_sets(), system.k()) > budget) {
    return std::nullopt;
  }
  OracleOptions options;
  options.max_candidates = budget;
  return ExactMaxUniqueCoverage(system, options).unique_coverage();
}

double Ratio(double value, double reference) {
  if (reference <= 0.0) return value <= 0.0 ? 1.0 : std::nan("");
  return value / reference;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string algo;
  std::string instance;
  std::optional<std::size_t> k;
  double eps = 0.5;
  std::optional<double> phi;
  std::optional<std::size_t> d_bound;
  std::string base = "greedy-mc";
  bool oracle = false;
  std::optional<double> eps_r;
  std::optional<double> eps_d;
  std::optional<double> eps_hat_d;
};

// Guaranteed fraction of |ψ(C)| for the offline algorithms.
double OfflineBound(const std::string& algo, std::size_t size, std::size_t r,
                    std::size_t d, const RatioBoundConfig& cfg) {
  const double ug = 1.0 / Harmonic(static_cast<std::int64_t>(size));
  const double ugf = r >= 2 ? UgfRatio(r, cfg.eps_r) : 1.0;
  const double ugs = d >= 2 ? UgsRatio(d, cfg.eps_d, cfg.eps_hat_d) : 1.0;
  if (algo == "ug") return ug;
  if (algo == "ugf") return ugf;
  if (algo == "ugs") return ugs;
  return std::max({ug, ugf, ugs});
}

int RunSolve(const GlobalOptions& g, const SolveArgs& a, std::ostream& out) {
  SetSystem system = ReadInstanceFile(a.instance);
  if (a.k) system = system.WithK(*a.k);
  OracleOptions oracle_options;
  oracle_options.max_candidates = g.oracle_budget;

  Table table({"algorithm", "k", "solution_ids", "unique_coverage",
               "coverage", "r", "d", "base", "base_coverage", "bound",
               "bound_satisfied", "oracle_value", "ratio"});
  const SubCollection all = SubCollection::All(system);
  std::optional<SubCollection> selection;
  std::string base_name;
  std::string base_coverage;
  std::string bound_text;
  std::optional<bool> satisfied;
  std::size_t r = MaxFrequency(all);
  std::size_t d = MaxSetSize(all);
  std::optional<SubCollection> base;

  if (a.algo == "exact") {
    selection = ExactMaxUniqueCoverage(system, oracle_options);
  } else if (a.algo == "greedy-mc") {
    selection = GreedyMaxCoverage(system);
  } else if (a.algo == "kernel") {
    const double phi = a.phi.value_or(
        KernelPhi(system.k(), r, a.d_bound.value_or(system.universe_size())));
    const KernelBuffer buffer = BuildKernel(system, a.eps, phi, r);
    selection = SubCollection(
        system, SolveInKernel(buffer, system.k(), g.oracle_budget).ids);
    bound_text = FormatDouble(1.0 - a.eps);
  } else {
    if (a.base == "all") {
      base = all;
    } else if (a.base == "exact-mc") {
      base = ExactMaxCoverage(system, oracle_options);
    } else {
      base = GreedyMaxCoverage(system);
    }
    if (base->empty()) throw DomainError("base collection is empty");
    r = MaxFrequency(*base);
    d = MaxSetSize(*base);
    RatioBoundConfig cfg = RatioBoundConfig::Tuned(
        base->size(), std::max<std::size_t>(r, 1),
        std::max<std::size_t>(d, 1));
    if (a.eps_r) cfg.eps_r = *a.eps_r;
    if (a.eps_d) cfg.eps_d = *a.eps_d;
    if (a.eps_hat_d) cfg.eps_hat_d = *a.eps_hat_d;
    cfg.Validate();
    if (a.algo == "ug") {
      selection = UniqueGreedy(*base);
    } else if (a.algo == "ugf") {
      selection = UniqueGreedyFreq(*base, cfg.eps_r);
    } else if (a.algo == "ugs") {
      selection = UniqueGreedySize(*base, cfg.eps_d, cfg.eps_hat_d);
    } else {
      selection = BestUniqueSubcollection(*base, cfg);
    }
    const double bound = OfflineBound(a.algo, base->size(), r, d, cfg);
    bound_text = FormatDouble(bound);
    base_name = a.base;
    base_coverage = std::to_string(base->coverage());
    satisfied = static_cast<double>(selection->unique_coverage()) >=
                bound * static_cast<double>(base->coverage()) - kSlack;
  }

  std::optional<std::size_t> opt;
  if (a.oracle) opt = ExactMaxUniqueCoverage(system, oracle_options)
                          .unique_coverage();
  std::string ratio;
  if (opt) {
    ratio = FormatDouble(
        Ratio(static_cast<double>(selection->unique_coverage()),
              static_cast<double>(*opt)));
    if (a.algo == "kernel") {
      satisfied = static_cast<double>(selection->unique_coverage()) >=
                  (1.0 - a.eps) * static_cast<double>(*opt) - kSlack;
    }
  }
  table.AddRow({a.algo, std::to_string(system.k()),
                Ids(selection->ids()),
                std::to_string(selection->unique_coverage()),
                std::to_string(selection->coverage()), std::to_string(r),
                std::to_string(d), base_name, base_coverage, bound_text,
                satisfied ? Flag(*satisfied) : "",
                opt ? std::to_string(*opt) : "", ratio});
  Output sink(g, out);
  table.Write(sink.get(), Format(g),
              {"muc solve " + a.algo + " " + a.instance});
  if (satisfied && !*satisfied) {
    throw BoundViolation{"solve " + a.algo + " violated its bound"};
  }
  return kExitOk;
}

// ---------------------------------------------------------- generators

int RunGenRandom(const GlobalOptions& g, const RandomInstanceParams& p,
                 std::ostream& out) {
  const SetSystem system = GenerateRandomInstance(p, g.seed);
  std::ostringstream comment;
  comment << "gen-random n=" << p.n << " m=" << p.m << " k=" << p.k
          << " r_max=" << p.r_max << " d_max=" << p.d_max
          << " d_min=" << p.d_min << " seed=" << g.seed;
  Output sink(g, out);
  WriteInstance(sink.get(), system, {comment.str()});
  return kExitOk;
}

struct HardArgs {
  std::size_t k = 13;
  std::optional<std::size_t> a;
  std::size_t m = 64;
  std::string answer = "no";
  std::size_t trials = 20;
};

HardInstanceSpec ToSpec(const GlobalOptions& g, const HardArgs& h) {
  HardInstanceSpec spec;
  spec.k = h.k;
  spec.m = h.m;
  spec.a = h.a.value_or(DefaultHardA(h.k, h.m));
  spec.answer = h.answer == "yes" ? DisjAnswer::kYes : DisjAnswer::kNo;
  spec.seed = g.seed;
  return spec;
}

int RunGenHard(const GlobalOptions& g, const HardArgs& h, std::ostream& out) {
  const HardInstance instance = EmitStream(ToSpec(g, h));
  Output sink(g, out);
  WriteInstance(sink.get(), instance.system, {instance.MetadataLine()});
  return kExitOk;
}

// ---------------------------------------------------------- verify-hard

int RunVerifyHard(const GlobalOptions& g, const HardArgs& h,
                  std::ostream& out) {
  const HardInstanceSpec spec = ToSpec(g, h);
  const LayeredUniverse layers(spec);
  const std::size_t k = spec.k;
  Table table({"check", "ell", "layer", "value", "bound", "pass"});
  bool ok = true;

  // Every player set covers exactly t/k of each layer.
  std::size_t mismatches = 0;
  for (std::size_t i = 1; i <= spec.m; ++i) {
    for (std::size_t t = 1; t <= k; ++t) {
      std::vector<std::size_t> owners(k + 1, 0);
      const std::size_t begin = layers.layer_offset(t);
      for (std::size_t x = begin + 1; x <= begin + layers.layer_size(t); ++x) {
        ++owners[layers.Owner(i, static_cast<Element>(x))];
      }
      for (std::size_t j = 1; j <= k; ++j) {
        if ((owners[0] + owners[j]) * k != t * layers.layer_size(t)) {
          ++mismatches;
        }
      }
    }
  }
  ok = ok && mismatches == 0;
  table.AddRow({"layer_fraction", "", "", std::to_string(mismatches), "0",
                Flag(mismatches == 0)});

  std::size_t identical_min = std::numeric_limits<std::size_t>::max();
  bool identical_ok = true;
  for (std::size_t i = 1; i <= spec.m; ++i) {
    try {
      identical_min = std::min(identical_min, VerifyIdenticalFamily(layers, i));
    } catch (const ConstructionError&) {
      identical_ok = false;
    }
  }
  const double identical_bound = IdenticalFamilyBound(k, spec.a);
  ok = ok && identical_ok;
  table.AddRow({"identical_family", std::to_string(k), "",
                identical_ok ? std::to_string(identical_min) : "",
                FormatDouble(identical_bound, 10), Flag(identical_ok)});

  std::size_t distinct_max = 0;
  for (std::size_t ell = 1; ell <= std::min(k, spec.m); ++ell) {
    const DistinctFamilyStats stats = SampleDistinctFamilyValue(
        layers, ell, h.trials, DeriveSeed(g.seed, 0xE11, ell));
    distinct_max = std::max(distinct_max, stats.total_max);
    const bool total_ok = static_cast<double>(stats.violations) <=
                          0.05 * static_cast<double>(stats.trials);
    ok = ok && total_ok;
    table.AddRow({"distinct_total_max", std::to_string(ell), "",
                  std::to_string(stats.total_max),
                  FormatDouble(stats.total_bound, 10), Flag(total_ok)});
    for (std::size_t t = 1; t <= k; ++t) {
      const double stderr_mean =
          stats.layer_stddev[t - 1] /
          std::sqrt(static_cast<double>(stats.trials));
      const double bound = stats.layer_bound[t - 1] + 3.0 * stderr_mean;
      const bool layer_ok = stats.layer_mean[t - 1] <= bound + kSlack;
      ok = ok && layer_ok;
      table.AddRow({"distinct_layer_mean", std::to_string(ell),
                    std::to_string(t), FormatDouble(stats.layer_mean[t - 1]),
                    FormatDouble(bound), Flag(layer_ok)});
    }
  }

  // The two regimes separate only once H_k - 1 exceeds 3/2 + 3/sqrt(2k).
  const double threshold = DistinguisherThreshold(k, spec.a);
  const bool separated = identical_ok &&
                         static_cast<double>(identical_min) > threshold &&
                         static_cast<double>(distinct_max) < threshold;
  table.AddRow({"distinguisher", "", "",
                std::to_string(identical_min) + " / " +
                    std::to_string(distinct_max),
                FormatDouble(threshold, 10),
                identical_bound > DistinctFamilyBound(k, spec.a)
                    ? Flag(separated)
                    : "n/a"});
  if (identical_bound > DistinctFamilyBound(k, spec.a)) {
    ok = ok && separated;
  }

  Output sink(g, out);
  std::ostringstream comment;
  comment << "muc verify-hard k=" << k << " a=" << spec.a << " m=" << spec.m
          << " n=" << layers.universe_size() << " trials=" << h.trials
          << " seed=" << g.seed;
  table.Write(sink.get(), Format(g), {comment.str()});
  if (!ok) throw BoundViolation{"hard-instance checks failed"};
  return kExitOk;
}

// --------------------------------------------------------------- stream

struct StreamArgs {
  std::string instance;
  std::string algo = "pipeline";
  std::optional<std::size_t> k;
  double eps = 0.1;
  double c = 4.0;
  std::optional<std::size_t> r_bound;
  std::optional<std::size_t> d_bound;
  std::optional<double> phi;
  bool no_subsample = false;
  bool oracle = false;
};

int RunStream(const GlobalOptions& g, const StreamArgs& a,
              std::ostream& out) {
  std::ifstream in(a.instance);
  if (!in) throw ParseError(0, "cannot open " + a.instance);
  ReaderSetStream stream(in);
  StreamOptions options;
  options.k = a.k.value_or(stream.header().k);
  options.eps = a.eps;
  options.c = a.c;
  options.seed = g.seed;
  options.disable_subsampling = a.no_subsample;
  options.d_bound = a.d_bound;
  options.phi = a.phi;
  options.oracle_budget = g.oracle_budget;
  StreamReport report;
  if (a.algo == "topsets") {
    if (!a.r_bound) {
      throw DomainError("stream --algo topsets needs --r-bound");
    }
    options.r_bound = *a.r_bound;
    report = StreamUniqueTopSets(stream, options);
  } else {
    report = StreamUniqueCoveragePipeline(stream, options);
  }

  std::optional<SetSystem> full;
  std::optional<std::size_t> opt;
  if (a.oracle) {
    full = ReadInstanceFile(a.instance).WithK(options.k);
    opt = OracleValue(*full, g.oracle_budget);
    if (!opt) throw CapacityError("oracle budget exceeded");
  }
  Table table({"guess_v", "p", "terminated", "stored_sets", "selected",
               "solution_ids", "value", "est_value", "full_value",
               "oracle_value", "ratio"});
  for (std::size_t i = 0; i < report.instances.size(); ++i) {
    const InstanceSummary& s = report.instances[i];
    std::string full_value;
    std::string ratio;
    if (full && !s.terminated) {
      const std::size_t v =
          SubCollection(*full, s.solution_ids).unique_coverage();
      full_value = std::to_string(v);
      ratio = FormatDouble(
          Ratio(static_cast<double>(v), static_cast<double>(*opt)));
    }
    table.AddRow({FormatDouble(s.guess_v, 12), FormatDouble(s.p),
                  Flag(s.terminated), std::to_string(s.stored_sets),
                  Flag(i == report.chosen_index), Ids(s.solution_ids),
                  s.terminated ? "" : std::to_string(s.value),
                  s.terminated ? "" : FormatDouble(s.value / s.p),
                  full_value, opt ? std::to_string(*opt) : "", ratio});
  }
  std::ostringstream comment;
  comment << "muc stream algo=" << a.algo << " k=" << options.k
          << " eps=" << a.eps << " c=" << a.c << " seed=" << g.seed
          << " sets_read=" << report.sets_read
          << " chosen_guess=" << report.chosen_guess
          << (report.estimated ? " value_is_estimate" : "");
  Output sink(g, out);
  table.Write(sink.get(), Format(g), {comment.str()});
  return kExitOk;
}

// ----------------------------------------------------------- experiment

struct ExperimentArgs {
  std::vector<std::string> suites = {"all"};
  std::size_t trials = 20;
  std::size_t n = 20;
  std::size_t m = 8;
  std::vector<std::size_t> k_list = {2, 3};
  std::vector<std::size_t> r_list = {2, 3, 4};
  std::vector<std::size_t> d_list = {2, 3, 4};
  std::vector<std::size_t> a_list = {1, 2, 3};
  std::vector<double> eps_list = {0.1, 0.25, 0.5};
  std::size_t threads = 0;
  std::string svg_path;
};

const std::vector<std::string>& SuiteOrder() {
  static const std::vector<std::string> kOrder = {
      "ug", "ugf", "ugs", "best", "kernel", "pipeline", "hard"};
  return kOrder;
}

struct ExperimentRow {
  std::size_t suite_rank = 0;
  std::size_t trial = 0;
  std::string suite;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t d = 0;
  double eps = std::nan("");
  double value = 0.0;
  double reference = 0.0;
  std::optional<std::size_t> oracle_value;
  double bound = 0.0;
  bool satisfied = false;
  double wall_ms = 0.0;

  double ratio() const { return Ratio(value, reference); }
};

template <typename T>
const T& Cycle(const std::vector<T>& items, std::size_t trial) {
  return items[trial % items.size()];
}

ExperimentRow RunTrial(const GlobalOptions& g, const ExperimentArgs& e,
                       std::size_t suite_rank, std::size_t trial) {
  const std::string& suite = SuiteOrder()[suite_rank];
  ExperimentRow row;
  row.suite_rank = suite_rank;
  row.trial = trial;
  row.suite = suite;
  row.algorithm = suite;
  row.seed = DeriveSeed(g.seed, suite_rank + 1, trial);
  const auto start = std::chrono::steady_clock::now();

  if (suite == "hard") {
    HardInstanceSpec spec;
    spec.k = std::max<std::size_t>(Cycle(e.k_list, trial), 2);
    spec.a = std::max<std::size_t>(Cycle(e.a_list, trial), 1);
    spec.m = 4 * spec.k;
    spec.seed = row.seed;
    const LayeredUniverse layers(spec);
    row.algorithm = "identical_family";
    row.n = layers.universe_size();
    row.m = spec.m;
    row.k = spec.k;
    std::size_t reference = 0;
    for (std::size_t t = 1; t <= spec.k; ++t) {
      reference += layers.petal_region_size(t);
    }
    row.reference = static_cast<double>(reference);
    row.bound = IdenticalFamilyBound(spec.k, spec.a);
    try {
      std::size_t value = std::numeric_limits<std::size_t>::max();
      for (std::size_t i = 1; i <= spec.m; ++i) {
        value = std::min(value, VerifyIdenticalFamily(layers, i));
      }
      row.value = static_cast<double>(value);
      row.satisfied = row.value >= row.bound - kSlack;
    } catch (const ConstructionError&) {
      row.satisfied = false;
    }
  } else {
    RandomInstanceParams params;
    params.n = e.n;
    params.m = e.m;
    params.k = std::min(Cycle(e.k_list, trial), e.m);
    if (suite == "ugf" || suite == "kernel") params.r_max = Cycle(e.r_list, trial);
    if (suite == "ugs") params.d_max = Cycle(e.d_list, trial);
    const SetSystem system = GenerateRandomInstance(params, row.seed);
    const SubCollection all = SubCollection::All(system);
    row.n = system.universe_size();
    row.m = system.num_sets();
    row.k = system.k();
    row.r = MaxFrequency(all);
    row.d = MaxSetSize(all);
    row.oracle_value = OracleValue(system, g.oracle_budget);
    const double eps = Cycle(e.eps_list, trial);

    if (suite == "ug" || suite == "ugf" || suite == "ugs" || suite == "best") {
      RatioBoundConfig cfg = RatioBoundConfig::Tuned(
          all.size(), std::max<std::size_t>(row.r, 1),
          std::max<std::size_t>(row.d, 1));
      std::optional<SubCollection> out;
      if (suite == "ug") {
        out = UniqueGreedy(all);
        row.bound = OfflineBound("ug", all.size(), row.r, row.d, cfg);
      } else if (suite == "ugf") {
        row.eps = eps;
        cfg.eps_r = eps;
        out = UniqueGreedyFreq(all, eps);
        row.bound = OfflineBound("ugf", all.size(), row.r, row.d, cfg);
      } else if (suite == "ugs") {
        row.eps = eps;
        cfg.eps_d = eps;
        cfg.eps_hat_d = eps;
        out = UniqueGreedySize(all, eps, eps);
        row.bound = OfflineBound("ugs", all.size(), row.r, row.d, cfg);
      } else {
        out = BestUniqueSubcollection(all, cfg);
        row.bound = 1.0 / PhiBound(static_cast<std::int64_t>(all.size()),
                                   static_cast<std::int64_t>(
                                       std::max<std::size_t>(row.r, 1)),
                                   static_cast<std::int64_t>(
                                       std::max<std::size_t>(row.d, 1)));
      }
      row.value = static_cast<double>(out->unique_coverage());
      row.reference = static_cast<double>(all.coverage());
    } else {
      row.eps = eps;
      if (!row.oracle_value) throw CapacityError("oracle budget exceeded");
      row.reference = static_cast<double>(*row.oracle_value);
      if (suite == "kernel") {
        row.value = static_cast<double>(
            UniqueTopSets(system, eps, std::nullopt, g.oracle_budget)
                .unique_coverage());
        row.bound = 1.0 - eps;
      } else {
        SystemSetStream stream(system);
        StreamOptions options;
        options.k = system.k();
        options.eps = eps;
        options.seed = row.seed;
        options.disable_subsampling = true;
        const StreamReport report =
            StreamUniqueCoveragePipeline(stream, options);
        row.value = static_cast<double>(
            SubCollection(system, report.solution).unique_coverage());
        const double phi = PhiBound(
            static_cast<std::int64_t>(system.k()),
            static_cast<std::int64_t>(std::max<std::size_t>(row.r, 1)),
            static_cast<std::int64_t>(std::max<std::size_t>(row.d, 1)));
        row.bound = 1.0 / (2.0 * phi) - 3.0 * eps;
      }
    }
    row.satisfied = row.value >= row.bound * row.reference - kSlack;
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return row;
}

// Runs job(i) for i in [0, count) on `threads` workers.
void ParallelFor(std::size_t count, std::size_t threads,
                 const std::function<void(std::size_t)>& job) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (failure) std::rethrow_exception(failure);
}

void WriteExperimentSvg(const std::string& path,
                        const std::vector<ExperimentRow>& rows) {
  std::map<std::string, PlotSeries> series;
  for (const auto& row : rows) {
    const std::string label = row.suite + "/" + row.algorithm;
    auto& s = series[label];
    s.label = label;
    s.points.emplace_back(static_cast<double>(row.trial),
                          row.reference > 0 ? row.value / row.reference
                                            : std::nan(""));
  }
  PlotSpec spec;
  spec.title = "value / reference per trial";
  spec.x_label = "trial";
  spec.y_label = "ratio";
  for (auto& [label, s] : series) spec.series.push_back(std::move(s));
  spec.references.push_back({"ratio 1", 1.0});
  std::ofstream out(path);
  if (!out) throw ParseError(0, "cannot write " + path);
  WriteSvgPlot(out, spec);
}

int RunExperiment(const GlobalOptions& g, const ExperimentArgs& e,
                  const std::vector<std::string>& raw_args,
                  std::ostream& out) {
  std::vector<std::size_t> ranks;
  for (const auto& s : e.suites) {
    if (s == "all") {
      for (std::size_t i = 0; i < SuiteOrder().size(); ++i) ranks.push_back(i);
      continue;
    }
    const auto it = std::find(SuiteOrder().begin(), SuiteOrder().end(), s);
    if (it == SuiteOrder().end()) throw DomainError("unknown suite " + s);
    ranks.push_back(static_cast<std::size_t>(it - SuiteOrder().begin()));
  }
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  if (e.k_list.empty() || e.r_list.empty() || e.d_list.empty() ||
      e.a_list.empty() || e.eps_list.empty()) {
    throw DomainError("parameter lists must be nonempty");
  }

  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t rank : ranks) {
    for (std::size_t t = 0; t < e.trials; ++t) tasks.emplace_back(rank, t);
  }
  std::vector<ExperimentRow> rows(tasks.size());
  const std::size_t threads =
      e.threads > 0 ? e.threads
                    : std::max<unsigned>(1, std::thread::hardware_concurrency());
  ParallelFor(tasks.size(), threads, [&](std::size_t i) {
    rows[i] = RunTrial(g, e, tasks[i].first, tasks[i].second);
  });
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return std::tie(x.suite_rank, x.trial, x.algorithm) <
           std::tie(y.suite_rank, y.trial, y.algorithm);
  });

  Table table({"suite", "trial", "seed", "n", "m", "k", "r", "d", "eps",
               "algorithm", "value", "reference", "oracle_value", "ratio",
               "bound", "bound_satisfied", "wall_ms"});
  bool all_ok = true;
  for (const auto& row : rows) {
    all_ok = all_ok && row.satisfied;
    table.AddRow({row.suite, std::to_string(row.trial),
                  std::to_string(row.seed), std::to_string(row.n),
                  std::to_string(row.m), std::to_string(row.k),
                  std::to_string(row.r), std::to_string(row.d),
                  FormatDouble(row.eps), row.algorithm,
                  FormatDouble(row.value, 12), FormatDouble(row.reference, 12),
                  row.oracle_value ? std::to_string(*row.oracle_value) : "",
                  FormatDouble(row.ratio()), FormatDouble(row.bound),
                  Flag(row.satisfied), FormatDouble(row.wall_ms, 4)});
  }
  Output sink(g, out);
  table.Write(sink.get(), Format(g),
              {"muc experiment seed=" + std::to_string(g.seed),
               "args: " + Join(raw_args)});
  if (!e.svg_path.empty()) WriteExperimentSvg(e.svg_path, rows);
  if (!all_ok) throw BoundViolation{"experiment rows violated their bounds"};
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Max Unique Coverage algorithms, streaming and hard instances",
               "muc"};
  app.fallthrough();
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--seed", g.seed, "Master random seed")->capture_default_str();
  app.add_option("--out", g.out_path, "Write the report to this file");
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"csv", "tsv"}))
      ->capture_default_str();
  app.add_option("--oracle-budget", g.oracle_budget,
                 "Largest number of subcollections the exact oracle may "
                 "enumerate")
      ->capture_default_str();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run one solver on an instance");
  solve_cmd->add_option("algorithm", solve.algo)
      ->required()
      ->check(CLI::IsMember(
          {"exact", "greedy-mc", "ug", "ugf", "ugs", "best", "kernel"}));
  solve_cmd->add_option("instance", solve.instance)->required();
  solve_cmd->add_option("--k", solve.k, "Override the instance's k");
  solve_cmd->add_option("--eps", solve.eps, "Kernel error")
      ->capture_default_str();
  solve_cmd->add_option("--phi", solve.phi, "Kernel phi override");
  solve_cmd->add_option("--d-bound", solve.d_bound,
                        "Set-size bound for the kernel phi (default n)");
  solve_cmd->add_option("--base", solve.base,
                        "Collection handed to ug/ugf/ugs/best")
      ->check(CLI::IsMember({"greedy-mc", "exact-mc", "all"}))
      ->capture_default_str();
  solve_cmd->add_flag("--oracle", solve.oracle, "Compare with the exact OPT");
  solve_cmd->add_option("--eps-r", solve.eps_r);
  solve_cmd->add_option("--eps-d", solve.eps_d);
  solve_cmd->add_option("--eps-hat-d", solve.eps_hat_d);

  RandomInstanceParams gen;
  auto* gen_cmd =
      app.add_subcommand("gen-random", "Generate a random instance");
  gen_cmd->add_option("--n", gen.n)->capture_default_str();
  gen_cmd->add_option("--m", gen.m)->capture_default_str();
  gen_cmd->add_option("--k", gen.k)->capture_default_str();
  gen_cmd->add_option("--r-max", gen.r_max, "Frequency cap (0: none)");
  gen_cmd->add_option("--d-max", gen.d_max, "Set-size cap (0: none)");
  gen_cmd->add_option("--d-min", gen.d_min)->capture_default_str();

  HardArgs hard;
  auto* hard_cmd =
      app.add_subcommand("gen-hard", "Generate a Disj sunflower instance");
  auto* verify_cmd = app.add_subcommand(
      "verify-hard", "Check the sunflower construction's identities");
  for (auto* cmd : {hard_cmd, verify_cmd}) {
    cmd->add_option("--k", hard.k, "Players")->capture_default_str();
    cmd->add_option("--a", hard.a,
                    "Size parameter (default ceil(k log2 m + log2(k/0.05)))");
    cmd->add_option("--m", hard.m, "Index range")->capture_default_str();
  }
  hard_cmd->add_option("--answer", hard.answer)
      ->check(CLI::IsMember({"no", "yes"}))
      ->capture_default_str();
  verify_cmd->add_option("--trials", hard.trials,
                         "Sampled collections per ell")
      ->capture_default_str();

  StreamArgs stream;
  auto* stream_cmd =
      app.add_subcommand("stream", "Replay an instance file as a set stream");
  stream_cmd->add_option("instance", stream.instance)->required();
  stream_cmd->add_option("--algo", stream.algo)
      ->check(CLI::IsMember({"topsets", "pipeline"}))
      ->capture_default_str();
  stream_cmd->add_option("--k", stream.k, "Override the instance's k");
  stream_cmd->add_option("--eps", stream.eps)->capture_default_str();
  stream_cmd->add_option("--c", stream.c, "Subsampling constant")
      ->capture_default_str();
  stream_cmd->add_option("--r-bound", stream.r_bound,
                         "Upper bound on the max frequency (topsets)");
  stream_cmd->add_option("--d-bound", stream.d_bound,
                         "Set-size bound for phi (default n)");
  stream_cmd->add_option("--phi", stream.phi);
  stream_cmd->add_flag("--no-subsample", stream.no_subsample,
                       "Force p = 1 for every guess");
  stream_cmd->add_flag("--oracle", stream.oracle,
                       "Evaluate solutions on the full instance vs OPT");

  ExperimentArgs exp;
  auto* exp_cmd =
      app.add_subcommand("experiment", "Seeded sweep with bound checks");
  exp_cmd->add_option("--suite", exp.suites,
                      "ug, ugf, ugs, best, kernel, pipeline, hard or all")
      ->delimiter(',');
  exp_cmd->add_option("--trials", exp.trials)->capture_default_str();
  exp_cmd->add_option("--n", exp.n)->capture_default_str();
  exp_cmd->add_option("--m", exp.m)->capture_default_str();
  exp_cmd->add_option("--k-list", exp.k_list)->delimiter(',');
  exp_cmd->add_option("--r-list", exp.r_list)->delimiter(',');
  exp_cmd->add_option("--d-list", exp.d_list)->delimiter(',');
  exp_cmd->add_option("--a-list", exp.a_list)->delimiter(',');
  exp_cmd->add_option("--eps-list", exp.eps_list)->delimiter(',');
  exp_cmd->add_option("--threads", exp.threads, "Workers (0: all cores)");
  exp_cmd->add_option("--svg", exp.svg_path, "Also write a ratio plot");

  std::vector<std::string> argv_storage = {"muc"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "muc: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (solve_cmd->parsed()) return RunSolve(g, solve, out);
    if (gen_cmd->parsed()) return RunGenRandom(g, gen, out);
    if (hard_cmd->parsed()) return RunGenHard(g, hard, out);
    if (verify_cmd->parsed()) return RunVerifyHard(g, hard, out);
    if (stream_cmd->parsed()) return RunStream(g, stream, out);
    if (exp_cmd->parsed()) return RunExperiment(g, exp, args, out);
  } catch (const BoundViolation& e) {
    err << "muc: " << e.what << '\n';
    return kExitBound;
  } catch (const ParseError& e) {
    err << "muc: parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapacityError& e) {
    err << "muc: capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ConstructionError& e) {
    err << "muc: construction: " << e.what() << '\n';
    return kExitBound;
  } catch (const StructuralError& e) {
    err << "muc: invalid instance: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    err << "muc: " << e.what() << '\n';
    return kExitInput;
  } catch (const StreamError& e) {
    err << "muc: stream: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "muc: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace muc::cli
