#include "linkscale/scale_eval.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iterator>
#include <mutex>
#include <numeric>
#include <string>

#include "linkscale/errors.hpp"
#include "linkscale/rng.hpp"

namespace linkscale {

double mcc(const ConfusionCounts& c) noexcept {
  const auto tp = static_cast<double>(c.tp);
  const auto fp = static_cast<double>(c.fp);
  const auto fn = static_cast<double>(c.fn);
  const auto tn = static_cast<double>(c.tn);
  const double denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
  if (denom == 0.0) return 0.0;
  const double r = (tp * tn - fp * fn) / std::sqrt(denom);
  return std::clamp(r, -1.0, 1.0);
}

PairEvaluation evaluate_pair(const Graph& prev, const Graph& next, const PredictorConfig& cfg) {
  const auto actual = new_links(prev, next);
  PairEvaluation ev;
  ev.k = actual.size();
  const std::uint64_t universe = prev.non_edge_count();
  PairSet predicted;
  if (ev.k > 0) {
    const auto scored = score_all_non_edges(prev, cfg);
    auto sel = predict_top_k(scored, ev.k);
    ev.truncated = sel.truncated;
    predicted = std::move(sel.pairs);
  }
  PairSet hit;
  std::set_intersection(predicted.begin(), predicted.end(), actual.begin(), actual.end(),
                        std::back_inserter(hit));
  ev.counts.tp = hit.size();
  ev.counts.fp = predicted.size() - hit.size();
  ev.counts.fn = actual.size() - hit.size();
  ev.counts.tn = universe - ev.counts.tp - ev.counts.fp - ev.counts.fn;
  ev.mcc = mcc(ev.counts);
  return ev;
}

void SweepSettings::validate() const {
  if (!(subsample_fraction > 0.0 && subsample_fraction <= 1.0)) {
    throw ConfigError("subsample fraction must lie in (0, 1]");
  }
  if (subsample_threshold < 1) throw ConfigError("subsample threshold must be positive");
}

std::vector<std::size_t> sampled_pairs(std::size_t pairs_total, std::size_t w,
                                       const SweepSettings& settings) {
  std::vector<std::size_t> all(pairs_total);
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (pairs_total <= settings.subsample_threshold || settings.subsample_fraction >= 1.0) {
    return all;
  }
  const auto want = static_cast<std::size_t>(
      std::ceil(settings.subsample_fraction * static_cast<double>(pairs_total)));
  // Partial Fisher-Yates on the engine's raw output.
  auto rng = make_engine(settings.rng_seed, Stream::Subsample, w);
  for (std::size_t i = 0; i < want; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform01(rng) *
                                                       static_cast<double>(pairs_total - i));
    std::swap(all[i], all[std::min(j, pairs_total - 1)]);
  }
  all.resize(want);
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

struct Task {
  std::size_t entry;
  std::size_t w;
  std::size_t pair;
};

struct Plan {
  std::vector<SweepEntry> entries;
  std::vector<Task> tasks;
};

Plan plan_sweep(const GraphSequence& seq, const PredictorConfig& cfg,
                const SweepSettings& settings) {
  cfg.validate();
  settings.validate();
  if (seq.size() < 3) {
    throw SequenceTooShortError("sweep needs at least 3 snapshots, got " +
                                std::to_string(seq.size()));
  }
  Plan plan;
  const std::size_t max_w = seq.size() / 3;
  for (std::size_t w = 1; w <= max_w; ++w) {
    const std::size_t total = seq.size() / w - 1;
    const auto picked = sampled_pairs(total, w, settings);
    plan.entries.push_back({w, 0.0, picked.size(), total});
    for (auto p : picked) plan.tasks.push_back({plan.entries.size() - 1, w, p});
  }
  return plan;
}

double run_task(const GraphSequence& seq, const PredictorConfig& cfg, const Task& t) {
  const WindowSize w{t.w};
  const auto prev = aggregate_window(seq, w, t.pair);
  const auto next = aggregate_window(seq, w, t.pair + 1);
  return evaluate_pair(prev, next, cfg).mcc;
}

WindowSweepResult reduce(Plan plan, const std::vector<double>& scores) {
  // Tasks are grouped by entry in ascending pair order; summing in task
  // order keeps the mean independent of scheduling.
  std::vector<double> sums(plan.entries.size(), 0.0);
  for (std::size_t i = 0; i < plan.tasks.size(); ++i) sums[plan.tasks[i].entry] += scores[i];
  for (std::size_t e = 0; e < plan.entries.size(); ++e) {
    plan.entries[e].mean_mcc = sums[e] / static_cast<double>(plan.entries[e].pairs_evaluated);
  }
  return {std::move(plan.entries)};
}

}  // namespace

WindowSweepResult sweep(const GraphSequence& seq, const PredictorConfig& cfg,
                        const SweepSettings& settings) {
  auto plan = plan_sweep(seq, cfg, settings);
  std::vector<double> scores(plan.tasks.size(), 0.0);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<std::ptrdiff_t>(plan.tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      const auto idx = static_cast<std::size_t>(i);
      scores[idx] = run_task(seq, cfg, plan.tasks[idx]);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reduce(std::move(plan), scores);
}

double resemblance(std::span<const NodePair> predicted, std::span<const NodePair> actual) {
  if (predicted.empty() && actual.empty()) return 1.0;
  std::size_t common = 0;
  auto i = predicted.begin();
  auto j = actual.begin();
  while (i != predicted.end() && j != actual.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  const std::size_t uni = predicted.size() + actual.size() - common;
  return static_cast<double>(common) / static_cast<double>(uni);
}

std::vector<ResemblanceEntry> resemblance_report(const GraphSequence& seq,
                                                 std::span<const PredictorConfig> cfgs,
                                                 WindowSize w) {
  const auto baseline = std::find_if(cfgs.begin(), cfgs.end(), [](const PredictorConfig& c) {
    return c.kind == PredictorKind::AdamicAdar;
  });
  if (baseline == cfgs.end()) throw ConfigError("resemblance report needs adamic-adar");
  for (const auto& c : cfgs) c.validate();

  const auto agg = aggregate(seq, w);
  if (agg.size() < 2) {
    throw SequenceTooShortError("window " + std::to_string(w.value) +
                                " leaves fewer than two snapshots");
  }
  std::vector<ResemblanceEntry> out;
  for (const auto& c : cfgs) out.push_back({c.kind, 0.0, 0.0});
  const std::size_t pairs = agg.size() - 1;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto actual = new_links(agg[i], agg[i + 1]);
    for (std::size_t c = 0; c < cfgs.size(); ++c) {
      PairSet predicted;
      if (!actual.empty()) {
        predicted = predict_top_k(score_all_non_edges(agg[i], cfgs[c]), actual.size()).pairs;
      }
      out[c].mean += resemblance(predicted, actual);
    }
  }
  for (auto& e : out) e.mean /= static_cast<double>(pairs);
  const double base = out[static_cast<std::size_t>(baseline - cfgs.begin())].mean;
  for (auto& e : out) e.relative = e.mean - base;
  return out;
}

namespace reference {

WindowSweepResult sweep(const GraphSequence& seq, const PredictorConfig& cfg,
                        const SweepSettings& settings) {
  auto plan = plan_sweep(seq, cfg, settings);
  std::vector<double> scores;
  scores.reserve(plan.tasks.size());
  for (const auto& t : plan.tasks) scores.push_back(run_task(seq, cfg, t));
  return reduce(std::move(plan), scores);
}

}  // namespace reference

}  // namespace linkscale
