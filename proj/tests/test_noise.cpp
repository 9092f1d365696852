#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "linkscale/errors.hpp"
#include "linkscale/noise.hpp"
#include "linkscale/synth.hpp"
#include "oracles.hpp"

using namespace linkscale;

namespace {

GraphSequence complete_sequence(std::size_t n, std::size_t length) {
  std::vector<NodePair> es;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) es.push_back({u, v});
  }
  return GraphSequence(n, std::vector<Graph>(length, Graph(n, es)));
}

std::size_t occurrences(const GraphSequence& seq) {
  std::size_t total = 0;
  for (const auto& g : seq) total += g.edge_count();
  return total;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

TEST(NoiseParams, Validation) {
  NoiseParams p;
  EXPECT_NO_THROW(p.validate());
  p.mu = 0;
  EXPECT_THROW(p.validate(), ConfigError);
  p = {};
  p.sigma = -1;
  EXPECT_THROW(p.validate(), ConfigError);
  p = {};
  p.output_length = 0;
  EXPECT_THROW(p.validate(), ConfigError);
  EXPECT_EQ(parse_timeline("centered"), Timeline::Centered);
  EXPECT_EQ(parse_timeline(to_string(Timeline::Fixed)), Timeline::Fixed);
  EXPECT_EQ(parse_timeline(to_string(Timeline::EarliestDraw)), Timeline::EarliestDraw);
  EXPECT_THROW(parse_timeline("uniform"), ConfigError);
}

TEST(ApplyNoise, FixedTimelineSigmaZeroLandsOnMultiples) {
  std::mt19937 rng(30);
  const auto seq = oracle::random_sequence(rng, 8, 3, 0.3);
  NoiseParams p;
  p.mu = 2;
  p.sigma = 0.0;
  p.timeline = Timeline::Fixed;
  const auto out = apply_noise(seq, p);
  ASSERT_EQ(out.size(), 6u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(out[2 * i], seq[i]);
    EXPECT_EQ(out[2 * i + 1].edge_count(), 0u);
  }
}

TEST(ApplyNoise, CenteredTimelineSigmaZeroLandsMidWindow) {
  std::mt19937 rng(31);
  const auto seq = oracle::random_sequence(rng, 8, 3, 0.3);
  NoiseParams p;
  p.mu = 4;
  p.sigma = 0.0;
  const auto out = apply_noise(seq, p);
  ASSERT_EQ(out.size(), 12u);
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (j % 4 == 2) {
      EXPECT_EQ(out[j], seq[j / 4]);
    } else {
      EXPECT_EQ(out[j].edge_count(), 0u);
    }
  }
}

TEST(ApplyNoise, SigmaZeroRoundTripsForEveryTimeline) {
  std::mt19937 rng(32);
  std::uniform_int_distribution<std::size_t> len(1, 10), mu(1, 9);
  for (auto tl : {Timeline::Centered, Timeline::EarliestDraw, Timeline::Fixed}) {
    for (int t = 0; t < 30; ++t) {
      const auto seq = oracle::random_sequence(rng, 10, len(rng), 0.2);
      NoiseParams p;
      p.mu = mu(rng);
      p.sigma = 0.0;
      p.timeline = tl;
      const auto out = apply_noise(seq, p);
      EXPECT_EQ(out.size(), p.mu * seq.size());
      EXPECT_EQ(aggregate(out, WindowSize{p.mu}), seq);
    }
  }
}

TEST(ApplyNoise, MuOneSigmaZeroIsIdentity) {
  std::mt19937 rng(33);
  const auto seq = oracle::random_sequence(rng, 10, 6, 0.2);
  NoiseParams p;
  p.mu = 1;
  p.sigma = 0.0;
  EXPECT_EQ(apply_noise(seq, p), seq);
}

TEST(ApplyNoise, ConservesOccurrencesAndStaysInRange) {
  std::mt19937 rng(34);
  const auto seq = oracle::random_sequence(rng, 20, 5, 0.2);
  for (auto tl : {Timeline::Centered, Timeline::EarliestDraw, Timeline::Fixed}) {
    NoiseParams p;
    p.mu = 6;
    p.sigma = 9.0;
    p.timeline = tl;
    const auto out = apply_noise_traced(seq, p);
    ASSERT_TRUE(out.provenance);
    EXPECT_EQ(out.provenance->size(), occurrences(seq));
    std::size_t placed = 0;
    for (const auto& pl : *out.provenance) {
      ASSERT_LT(pl.target, out.sequence.size());
      EXPECT_TRUE(out.sequence[pl.target].has_edge(pl.pair.u, pl.pair.v));
      EXPECT_TRUE(seq[pl.source].has_edge(pl.pair.u, pl.pair.v));
      ++placed;
    }
    EXPECT_EQ(placed, occurrences(seq));
  }
}

TEST(ApplyNoise, ExplicitLengthClamps) {
  const auto seq = complete_sequence(10, 4);
  NoiseParams p;
  p.mu = 5;
  p.sigma = 30.0;
  p.output_length = 12;
  for (auto tl : {Timeline::Centered, Timeline::EarliestDraw, Timeline::Fixed}) {
    p.timeline = tl;
    const auto out = apply_noise_traced(seq, p);
    EXPECT_EQ(out.sequence.size(), 12u);
    bool hit_first = false, hit_last = false;
    for (const auto& pl : *out.provenance) {
      hit_first = hit_first || pl.target == 0;
      hit_last = hit_last || pl.target == 11;
    }
    EXPECT_TRUE(hit_first && hit_last);
  }
}

TEST(ApplyNoise, FixedTimelineClampsNegativeDrawsToZero) {
  const auto seq = complete_sequence(10, 2);
  NoiseParams p;
  p.mu = 10;
  p.sigma = 5.0;
  p.timeline = Timeline::Fixed;
  const auto out = apply_noise_traced(seq, p);
  EXPECT_EQ(out.sequence.size(), 20u);
  EXPECT_EQ(out.shift, 0u);
  for (const auto& pl : *out.provenance) {
    if (pl.draw < 0) EXPECT_EQ(pl.target, 0u);
    if (pl.draw > 19) EXPECT_EQ(pl.target, 19u);
  }
}

TEST(ApplyNoise, CenteredShiftKeepsWindowPhase) {
  const auto seq = complete_sequence(12, 3);
  NoiseParams p;
  p.mu = 10;
  p.sigma = 6.0;
  const auto out = apply_noise_traced(seq, p);
  EXPECT_EQ(out.shift % p.mu, p.mu / 2);
  for (const auto& pl : *out.provenance) {
    EXPECT_EQ(static_cast<std::int64_t>(pl.target), pl.draw + static_cast<std::int64_t>(out.shift));
  }
}

TEST(ApplyNoise, DeterministicAndParallelMatchesReference) {
  std::mt19937 rng(35);
  const auto seq = oracle::random_sequence(rng, 30, 8, 0.15);
  NoiseParams p;
  p.mu = 7;
  p.sigma = 3.5;
  p.rng_seed = 99;
  EXPECT_EQ(apply_noise(seq, p), apply_noise(seq, p));
  EXPECT_EQ(apply_noise(seq, p), reference::apply_noise(seq, p));
  auto q = p;
  q.rng_seed = 100;
  EXPECT_NE(apply_noise(seq, p), apply_noise(seq, q));
}

TEST(ApplyNoise, DefaultScaleLengthAndBursts) {
  const auto truth = generate_sequence(GenParams{});
  NoiseParams p;  // mu 100, sigma 8
  const auto tight = apply_noise_traced(truth, p);
  EXPECT_EQ(tight.sequence.size(), 2000u);
  // Well-separated bursts: the boundary between consecutive windows is empty.
  for (std::size_t i = 1; i < truth.size(); ++i) {
    EXPECT_EQ(tight.sequence[tight.shift + 100 * i - 50].edge_count(), 0u) << i;
  }
  // Sample mean of the raw draws of each source lies within 3 sigma/sqrt(count) of mu*i.
  std::vector<double> sum(truth.size(), 0.0), count(truth.size(), 0.0);
  for (const auto& pl : *tight.provenance) {
    sum[pl.source] += static_cast<double>(pl.draw);
    count[pl.source] += 1.0;
  }
  for (std::size_t i = 0; i < truth.size(); ++i) {
    EXPECT_NEAR(sum[i] / count[i], 100.0 * i, 3 * 8.0 / std::sqrt(count[i]));
  }

  p.sigma = 40.0;
  const auto loose = apply_noise_traced(truth, p, false);
  // Overlapping bumps: no gap anywhere between the first and last burst centres.
  for (std::size_t j = loose.shift; j <= loose.shift + 1900; ++j) {
    EXPECT_GT(loose.sequence[j].edge_count(), 0u) << j;
  }
}

TEST(MixingFraction, SigmaZeroIsZero) {
  std::mt19937 rng(36);
  const auto seq = oracle::random_sequence(rng, 15, 6, 0.2);
  NoiseParams p;
  p.mu = 5;
  p.sigma = 0.0;
  EXPECT_EQ(mixing_fraction(apply_noise_traced(seq, p), p.mu), 0.0);
}

TEST(MixingFraction, TightNoiseAtDefaultScale) {
  const auto truth = generate_sequence(GenParams{});
  NoiseParams p;
  const double m = mixing_fraction(apply_noise_traced(truth, p), p.mu);
  EXPECT_LT(m, 0.01);
}

TEST(MixingFraction, NeedsProvenance) {
  const auto seq = complete_sequence(4, 2);
  EXPECT_THROW(mixing_fraction(apply_noise_traced(seq, NoiseParams{}, false), 100),
               UnsupportedError);
}

TEST(MixingFraction, MonotoneInSigma) {
  const auto seq = complete_sequence(30, 6);
  double previous = -1.0;
  for (double sigma : {0.0, 1.0, 2.0, 4.0, 8.0, 16.0, 64.0}) {
    double total = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      NoiseParams p;
      p.mu = 10;
      p.sigma = sigma;
      p.rng_seed = seed;
      total += mixing_fraction(apply_noise_traced(seq, p), p.mu);
    }
    EXPECT_GE(total, previous) << sigma;
    previous = total;
  }
}

TEST(MixingFraction, MatchesGaussianWindowProbability) {
  const auto seq = complete_sequence(100, 3);
  const double draws = static_cast<double>(occurrences(seq));
  for (double sigma : {3.0, 12.0, 60.0, 600.0}) {
    NoiseParams p;
    p.mu = 20;
    p.sigma = sigma;
    p.rng_seed = 7;
    const double measured = mixing_fraction(apply_noise_traced(seq, p), p.mu);
    // Rounded draw j is inside iff the raw draw lies in [-mu/2 - 0.5, mu/2 - 0.5).
    const double inside = normal_cdf((10.0 - 0.5) / sigma) - normal_cdf((-10.0 - 0.5) / sigma);
    const double expected = 1.0 - inside;
    const double se = std::sqrt(expected * (1 - expected) / draws);
    EXPECT_NEAR(measured, expected, 4 * se + 1e-12) << sigma;
  }
}
