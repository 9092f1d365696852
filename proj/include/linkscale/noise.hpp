#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "linkscale/graph.hpp"

namespace linkscale {

/// How raw draws map onto output snapshot indices.
enum class Timeline {
  /// Output window k of width mu is [mu*k - mu/2, mu*k + mu/2) in draw
  /// coordinates, so aggregating at mu recovers the source steps. Early draws
  /// prepend whole mu-wide blocks; the default length grows to the latest draw.
  Centered,
  /// Index 0 is the earliest draw (draws shift right when any is negative),
  /// and the default length grows past mu * t to hold the latest draw.
  EarliestDraw,
  /// Index = raw draw, clamped into [0, L' - 1].
  Fixed,
};

std::string_view to_string(Timeline t) noexcept;
Timeline parse_timeline(std::string_view name);

/// Gaussian oversampling: an edge seen in ground-truth step i is observed at
/// round(N(mu * i, sigma^2)).
struct NoiseParams {
  std::size_t mu{100};
  double sigma{8.0};
  std::uint64_t rng_seed{1};
  /// Output snapshot count. Unset means mu * t (extended to hold every draw
  /// except under Timeline::Fixed). When set, placements are clamped into it.
  std::optional<std::size_t> output_length;
  Timeline timeline{Timeline::Centered};

  void validate() const;
};

/// Where one edge occurrence from source step `source` was placed.
struct Placement {
  std::uint32_t source{0};
  std::int64_t draw{0};     // rounded draw before shifting and clamping
  std::uint64_t target{0};  // output snapshot index
  NodePair pair;
};

struct NoisySequence {
  GraphSequence sequence;
  std::uint64_t shift{0};  // added to every draw before clamping
  std::optional<std::vector<Placement>> provenance;
};

/// Draws every edge occurrence independently. Occurrences of the same edge
/// landing in one output snapshot collapse to a single edge.
GraphSequence apply_noise(const GraphSequence& seq, const NoiseParams& params);

/// As apply_noise, optionally keeping the placement of every occurrence.
NoisySequence apply_noise_traced(const GraphSequence& seq, const NoiseParams& params,
                                 bool keep_provenance = true);

/// Fraction of occurrences placed outside [mu*i - mu/2, mu*i + mu/2) of their
/// source step i, measured on the output timeline with the shift removed.
/// Throws UnsupportedError when provenance was not kept.
double mixing_fraction(const NoisySequence& noisy, std::size_t mu);

namespace reference {

/// Single-threaded apply_noise; must agree exactly with the parallel one.
GraphSequence apply_noise(const GraphSequence& seq, const NoiseParams& params);

}  // namespace reference

}  // namespace linkscale
