#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "linkscale/graph.hpp"

namespace linkscale {

enum class PredictorKind { AdamicAdar, Katz, GraphDistance, RootedPageRank };

/// CLI/file token for a kind: adamic-adar, katz, graph-distance, rooted-pagerank.
std::string_view to_string(PredictorKind kind) noexcept;
/// Inverse of to_string. Throws ConfigError on an unknown name.
PredictorKind parse_predictor_kind(std::string_view name);

/// Which similarity score to use. beta is read only for Katz, alpha only for
/// rooted PageRank.
struct PredictorConfig {
  PredictorKind kind{PredictorKind::AdamicAdar};
  double beta{0.005};
  double alpha{0.15};
  double katz_tolerance{1e-9};
  double pagerank_tolerance{1e-10};
  std::size_t max_iterations{10'000};

  /// Throws ConfigError on non-positive tolerances, zero iterations or
  /// an out-of-range alpha/beta for the selected kind.
  void validate() const;

  static PredictorConfig of(PredictorKind kind) {
    PredictorConfig c;
    c.kind = kind;
    return c;
  }
};

struct ScoredPair {
  NodePair pair;
  double score{0.0};
};

// ---------------------------------------------------------------------------
// Pairwise scores. All are symmetric in (x, y) bit for bit.
// ---------------------------------------------------------------------------

/// Sum of 1/ln|Γ(z)| over common neighbors z.
double adamic_adar(const Graph& g, NodeId x, NodeId y);

/// Sum over l >= 1 of beta^l * (number of length-l walks from x to y),
/// truncated once the remaining tail is provably below `tolerance`.
double katz(const Graph& g, NodeId x, NodeId y, double beta, double tolerance = 1e-9,
            std::size_t max_iterations = 10'000);

/// -d(x, y), or -infinity when y is unreachable from x.
double graph_distance(const Graph& g, NodeId x, NodeId y);

/// pi_x(y) + pi_y(x) for the walk that restarts at its root with
/// probability alpha. A walker on a degree-0 node returns to the root.
double rooted_pagerank(const Graph& g, NodeId x, NodeId y, double alpha,
                       double tolerance = 1e-10, std::size_t max_iterations = 10'000);

/// Dispatches to one of the four scores above.
double score(const Graph& g, NodeId x, NodeId y, const PredictorConfig& cfg);

// ---------------------------------------------------------------------------
// Single-source building blocks shared by the pairwise and batch paths.
// ---------------------------------------------------------------------------

/// Row `source` of sum_{l>=1} beta^l A^l.
std::vector<double> katz_row(const Graph& g, NodeId source, double beta, double tolerance,
                             std::size_t max_iterations);

/// Stationary distribution of the walk rooted at `root`, by power iteration
/// until the L1 change between sweeps drops below `tolerance`.
std::vector<double> rooted_pagerank_vector(const Graph& g, NodeId root, double alpha,
                                           double tolerance, std::size_t max_iterations);

/// Hop counts from `source`; unreachable nodes get -1.
std::vector<int> bfs_distances(const Graph& g, NodeId source);

/// Largest adjacency eigenvalue by power iteration on A + I.
double spectral_radius(const Graph& g, std::size_t max_iterations = 10'000);

/// Upper bound on the spectral radius: max over edges of sqrt(deg(u) deg(v)).
double spectral_radius_bound(const Graph& g) noexcept;

// ---------------------------------------------------------------------------
// Batch scoring (OpenMP across source nodes).
// ---------------------------------------------------------------------------

/// Dense symmetric table of scores for every pair u != v.
class ScoreMatrix {
 public:
  explicit ScoreMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double operator()(NodeId u, NodeId v) const noexcept {
    return u < v ? data_[u * n_ + v] : data_[v * n_ + u];
  }
  double& upper(NodeId u, NodeId v) noexcept { return data_[u * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

ScoreMatrix score_matrix(const Graph& g, const PredictorConfig& cfg);

/// One entry per non-edge, in lexicographic pair order. Values match
/// calling `score` on each pair exactly.
std::vector<ScoredPair> score_all_non_edges(const Graph& g, const PredictorConfig& cfg);

/// Same as above over the existing edges (used for low-score deletion).
std::vector<ScoredPair> score_edges(const Graph& g, const PredictorConfig& cfg);

struct Selection {
  PairSet pairs;           // sorted
  bool truncated{false};   // asked for more pairs than were scored
};

/// The k highest-scored pairs. Equal scores are resolved in favor of the
/// lexicographically smaller pair.
Selection predict_top_k(std::span<const ScoredPair> scored, std::size_t k);

/// The k lowest-scored pairs, ties again to the smaller pair.
Selection select_bottom_k(std::span<const ScoredPair> scored, std::size_t k);

namespace reference {

/// Serial pairwise loop over non_edges(g). Kept as the oracle for the batch
/// kernels and as the baseline in the benchmarks.
std::vector<ScoredPair> score_all_non_edges(const Graph& g, const PredictorConfig& cfg);

}  // namespace reference

}  // namespace linkscale
