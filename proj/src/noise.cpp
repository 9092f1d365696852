#include "linkscale/noise.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "linkscale/errors.hpp"
#include "linkscale/rng.hpp"

namespace linkscale {

std::string_view to_string(Timeline t) noexcept {
  switch (t) {
    case Timeline::Centered: return "centered";
    case Timeline::EarliestDraw: return "earliest-draw";
    case Timeline::Fixed: break;
  }
  return "fixed";
}

Timeline parse_timeline(std::string_view name) {
  if (name == "centered") return Timeline::Centered;
  if (name == "earliest-draw") return Timeline::EarliestDraw;
  if (name == "fixed") return Timeline::Fixed;
  throw ConfigError("unknown timeline '" + std::string(name) + "'");
}

void NoiseParams::validate() const {
  if (mu < 1) throw ConfigError("mu must be at least 1");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw ConfigError("sigma must be finite and >= 0");
  if (output_length && *output_length < 1) throw ConfigError("output length must be positive");
}

namespace {

std::vector<Placement> draw_snapshot(const Graph& g, std::uint32_t source,
                                     const NoiseParams& params) {
  std::vector<Placement> out;
  out.reserve(g.edge_count());
  const double mean = static_cast<double>(params.mu) * static_cast<double>(source);
  auto rng = make_engine(params.rng_seed, Stream::Noise, source);
  std::normal_distribution<double> normal(mean, params.sigma > 0.0 ? params.sigma : 1.0);
  for (const auto& e : g.edges()) {
    const double draw = params.sigma > 0.0 ? normal(rng) : mean;
    // std::round is half-away-from-zero.
    out.push_back({source, static_cast<std::int64_t>(std::round(draw)), 0, e});
  }
  return out;
}

NoisySequence assemble(const GraphSequence& seq, std::vector<std::vector<Placement>> per_source,
                       const NoiseParams& params, bool keep_provenance) {
  std::int64_t lo = 0, hi = 0;
  bool any = false;
  for (const auto& draws : per_source) {
    for (const auto& p : draws) {
      lo = any ? std::min(lo, p.draw) : p.draw;
      hi = any ? std::max(hi, p.draw) : p.draw;
      any = true;
    }
  }
  const auto mu = static_cast<std::int64_t>(params.mu);
  std::int64_t shift = 0;
  std::size_t length = params.mu * seq.size();
  if (params.timeline == Timeline::Centered) {
    shift = mu / 2;
    if (lo + shift < 0) {
      const std::int64_t blocks = (-(lo + shift) + mu - 1) / mu;
      shift += blocks * mu;
      length += static_cast<std::size_t>(blocks * mu);
    }
  } else if (params.timeline == Timeline::EarliestDraw && lo < 0) {
    shift = -lo;
  }
  if (params.output_length) {
    length = *params.output_length;
  } else if (params.timeline != Timeline::Fixed && any) {
    length = std::max(length, static_cast<std::size_t>(hi + shift + 1));
  }
  const auto last = static_cast<std::int64_t>(length - 1);

  std::vector<std::vector<NodePair>> buckets(length);
  for (auto& draws : per_source) {
    for (auto& p : draws) {
      p.target = static_cast<std::uint64_t>(std::clamp<std::int64_t>(p.draw + shift, 0, last));
      buckets[p.target].push_back(p.pair);
    }
  }
  std::vector<Graph> snapshots;
  snapshots.reserve(length);
  for (auto& b : buckets) snapshots.emplace_back(seq.node_count(), std::move(b));

  NoisySequence out{GraphSequence(seq.node_count(), std::move(snapshots)),
                    static_cast<std::uint64_t>(shift), std::nullopt};
  if (keep_provenance) {
    std::vector<Placement> all;
    for (auto& draws : per_source) all.insert(all.end(), draws.begin(), draws.end());
    out.provenance = std::move(all);
  }
  return out;
}

}  // namespace

NoisySequence apply_noise_traced(const GraphSequence& seq, const NoiseParams& params,
                                 bool keep_provenance) {
  params.validate();
  std::vector<std::vector<Placement>> per_source(seq.size());
  const auto count = static_cast<std::ptrdiff_t>(seq.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto src = static_cast<std::size_t>(i);
    per_source[src] = draw_snapshot(seq[src], static_cast<std::uint32_t>(src), params);
  }
  return assemble(seq, std::move(per_source), params, keep_provenance);
}

GraphSequence apply_noise(const GraphSequence& seq, const NoiseParams& params) {
  return apply_noise_traced(seq, params, false).sequence;
}

double mixing_fraction(const NoisySequence& noisy, std::size_t mu) {
  if (!noisy.provenance) throw UnsupportedError("mixing_fraction needs placement provenance");
  const auto& placements = *noisy.provenance;
  if (placements.empty()) return 0.0;
  const auto m = static_cast<std::int64_t>(mu);
  std::size_t outside = 0;
  for (const auto& p : placements) {
    // Doubled to keep mu/2 exact: inside iff 2*mu*i - mu <= 2j < 2*mu*i + mu.
    const auto centre = 2 * m * static_cast<std::int64_t>(p.source);
    const auto twice_j =
        2 * (static_cast<std::int64_t>(p.target) - static_cast<std::int64_t>(noisy.shift));
    if (twice_j < centre - m || twice_j >= centre + m) ++outside;
  }
  return static_cast<double>(outside) / static_cast<double>(placements.size());
}

namespace reference {

GraphSequence apply_noise(const GraphSequence& seq, const NoiseParams& params) {
  params.validate();
  std::vector<std::vector<Placement>> per_source;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    per_source.push_back(draw_snapshot(seq[i], static_cast<std::uint32_t>(i), params));
  }
  return assemble(seq, std::move(per_source), params, false).sequence;
}

}  // namespace reference

}  // namespace linkscale
