#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "linkscale/graph.hpp"
#include "linkscale/predictors.hpp"

namespace linkscale {

/// Classification outcome over the candidate universe (non-edges of the
/// earlier snapshot).
struct ConfusionCounts {
  std::uint64_t tp{0};
  std::uint64_t fp{0};
  std::uint64_t fn{0};
  std::uint64_t tn{0};

  std::uint64_t total() const noexcept { return tp + fp + fn + tn; }
  bool operator==(const ConfusionCounts&) const = default;
};

/// Matthews correlation coefficient; 0 whenever a marginal is empty.
double mcc(const ConfusionCounts& c) noexcept;

struct PairEvaluation {
  ConfusionCounts counts;
  double mcc{0.0};
  std::size_t k{0};
  bool truncated{false};
};

/// Predicts the k = |new links| top-scored non-edges of `prev` and compares
/// them with the links that actually appear in `next`.
PairEvaluation evaluate_pair(const Graph& prev, const Graph& next, const PredictorConfig& cfg);

inline double score_pair(const Graph& prev, const Graph& next, const PredictorConfig& cfg) {
  return evaluate_pair(prev, next, cfg).mcc;
}

struct SweepSettings {
  double subsample_fraction{0.10};
  std::size_t subsample_threshold{30};
  std::uint64_t rng_seed{1};

  void validate() const;
};

struct SweepEntry {
  std::size_t w{1};
  double mean_mcc{0.0};
  std::size_t pairs_evaluated{0};
  std::size_t pairs_total{0};
};

struct WindowSweepResult {
  std::vector<SweepEntry> entries;  // ascending w
};

/// Indices of the consecutive pairs scored for one window size: all of them
/// up to the threshold, else ceil(fraction * total) drawn without
/// replacement from a substream keyed on (seed, w). Sorted.
std::vector<std::size_t> sampled_pairs(std::size_t pairs_total, std::size_t w,
                                       const SweepSettings& settings);

/// Mean MCC of link prediction for every window size 1..floor(L/3).
/// Throws SequenceTooShortError when L < 3.
WindowSweepResult sweep(const GraphSequence& seq, const PredictorConfig& cfg,
                        const SweepSettings& settings = {});

/// |a ∩ b| / |a ∪ b| over sorted pair sets; 1 when both are empty.
double resemblance(std::span<const NodePair> predicted, std::span<const NodePair> actual);

struct ResemblanceEntry {
  PredictorKind kind;
  double mean{0.0};      // raw mean resemblance over consecutive pairs
  double relative{0.0};  // mean minus the Adamic-Adar mean
};

/// Mean resemblance of each predictor's top-k prediction at window w,
/// reported relative to Adamic-Adar. Throws ConfigError when Adamic-Adar is
/// not among `cfgs`.
std::vector<ResemblanceEntry> resemblance_report(const GraphSequence& seq,
                                                 std::span<const PredictorConfig> cfgs,
                                                 WindowSize w);

namespace reference {

/// Single-threaded sweep; must agree exactly with the parallel one.
WindowSweepResult sweep(const GraphSequence& seq, const PredictorConfig& cfg,
                        const SweepSettings& settings = {});

}  // namespace reference

}  // namespace linkscale
