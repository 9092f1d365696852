#include "linkscale/predictors.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>

#include "linkscale/errors.hpp"

namespace linkscale {

std::string_view to_string(PredictorKind kind) noexcept {
  switch (kind) {
    case PredictorKind::AdamicAdar: return "adamic-adar";
    case PredictorKind::Katz: return "katz";
    case PredictorKind::GraphDistance: return "graph-distance";
    case PredictorKind::RootedPageRank: return "rooted-pagerank";
  }
  return "unknown";
}

PredictorKind parse_predictor_kind(std::string_view name) {
  for (auto k : {PredictorKind::AdamicAdar, PredictorKind::Katz, PredictorKind::GraphDistance,
                 PredictorKind::RootedPageRank}) {
    if (name == to_string(k)) return k;
  }
  throw ConfigError("unknown predictor '" + std::string(name) + "'");
}

void PredictorConfig::validate() const {
  if (!(katz_tolerance > 0.0) || !(pagerank_tolerance > 0.0)) {
    throw ConfigError("tolerances must be positive");
  }
  if (max_iterations < 1) throw ConfigError("max_iterations must be at least 1");
  if (kind == PredictorKind::Katz && !(beta > 0.0)) throw ConfigError("katz beta must be > 0");
  if (kind == PredictorKind::RootedPageRank && !(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("rooted pagerank alpha must lie in (0, 1)");
  }
}

namespace {

void check_pair(const Graph& g, NodeId x, NodeId y) {
  if (x == y) throw InvalidArgumentError("score requested for identical nodes");
  if (x >= g.node_count() || y >= g.node_count()) {
    throw InvalidArgumentError("node out of range");
  }
}

std::vector<double> inverse_log_degrees(const Graph& g) {
  std::vector<double> w(g.node_count(), 0.0);
  for (NodeId z = 0; z < g.node_count(); ++z) {
    // Only nodes of degree >= 2 can be common neighbors.
    if (g.degree(z) >= 2) w[z] = 1.0 / std::log(static_cast<double>(g.degree(z)));
  }
  return w;
}

double inverse_log_degree(const Graph& g, NodeId z) {
  return 1.0 / std::log(static_cast<double>(g.degree(z)));
}

void multiply_adjacency(const Graph& g, const std::vector<double>& in, std::vector<double>& out) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    double s = 0.0;
    for (NodeId nb : g.neighbors(u)) s += in[nb];
    out[u] = s;
  }
}

/// Radius used for the Katz tail bound; throws if the series diverges.
double katz_radius(const Graph& g, double beta) {
  if (!(beta > 0.0)) throw ConfigError("katz beta must be > 0");
  const double bound = spectral_radius_bound(g);
  if (beta * bound < 1.0) return bound;
  const double lambda = spectral_radius(g);
  if (beta * lambda >= 1.0) {
    throw DivergenceError("katz beta " + std::to_string(beta) + " >= 1/lambda_max (lambda_max = " +
                          std::to_string(lambda) + ")");
  }
  return lambda;
}

std::vector<double> katz_row_with_radius(const Graph& g, NodeId source, double beta, double radius,
                                         double tolerance, std::size_t max_iterations) {
  const std::size_t n = g.node_count();
  std::vector<double> acc(n, 0.0), walk(n, 0.0), next(n, 0.0);
  walk[source] = 1.0;
  const double q = beta * radius;
  const double tail_factor = q / (1.0 - q);
  for (std::size_t l = 1; l <= max_iterations; ++l) {
    multiply_adjacency(g, walk, next);
    walk.swap(next);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      walk[i] *= beta;  // walk = beta^l A^l e_x
      acc[i] += walk[i];
      norm2 += walk[i] * walk[i];
    }
    // |(beta^{l+j} A^{l+j} e_x)_y| <= q^j * ||walk||_2, summed over j >= 1.
    if (std::sqrt(norm2) * tail_factor < tolerance) return acc;
  }
  throw IterationLimitError("katz series did not converge in " + std::to_string(max_iterations) +
                            " terms");
}

/// Runs `body(i)` for i in [0, count) across OpenMP threads and rethrows the
/// first exception raised by any iteration.
template <class Body>
void parallel_rows(std::size_t count, Body&& body) {
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

double adamic_adar(const Graph& g, NodeId x, NodeId y) {
  check_pair(g, x, y);
  auto a = g.neighbors(x);
  auto b = g.neighbors(y);
  double s = 0.0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      s += inverse_log_degree(g, *i);
      ++i;
      ++j;
    }
  }
  return s;
}

double spectral_radius_bound(const Graph& g) noexcept {
  double best = 0.0;
  for (const auto& e : g.edges()) {
    best = std::max(best, std::sqrt(static_cast<double>(g.degree(e.u)) *
                                    static_cast<double>(g.degree(e.v))));
  }
  return best;
}

double spectral_radius(const Graph& g, std::size_t max_iterations) {
  const std::size_t n = g.node_count();
  if (g.edge_count() == 0 || n == 0) return 0.0;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  double lambda = 0.0;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    multiply_adjacency(g, x, y);
    double rayleigh = 0.0, norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += x[i];  // (A + I) x
      rayleigh += x[i] * y[i];
      norm2 += y[i] * y[i];
    }
    const double norm = std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    if (it > 0 && std::abs(rayleigh - lambda) <= 1e-14 * rayleigh) {
      lambda = rayleigh;
      break;
    }
    lambda = rayleigh;
  }
  return lambda - 1.0;
}

std::vector<double> katz_row(const Graph& g, NodeId source, double beta, double tolerance,
                             std::size_t max_iterations) {
  if (source >= g.node_count()) throw InvalidArgumentError("node out of range");
  return katz_row_with_radius(g, source, beta, katz_radius(g, beta), tolerance, max_iterations);
}

double katz(const Graph& g, NodeId x, NodeId y, double beta, double tolerance,
            std::size_t max_iterations) {
  check_pair(g, x, y);
  const NodeId lo = std::min(x, y), hi = std::max(x, y);
  return katz_row(g, lo, beta, tolerance, max_iterations)[hi];
}

std::vector<int> bfs_distances(const Graph& g, NodeId source) {
  std::vector<int> dist(g.node_count(), -1);
  std::vector<NodeId> frontier{source}, next;
  dist[source] = 0;
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (NodeId u : frontier) {
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = depth;
          next.push_back(v);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

double graph_distance(const Graph& g, NodeId x, NodeId y) {
  check_pair(g, x, y);
  const int d = bfs_distances(g, std::min(x, y))[std::max(x, y)];
  return d < 0 ? -std::numeric_limits<double>::infinity() : -static_cast<double>(d);
}

std::vector<double> rooted_pagerank_vector(const Graph& g, NodeId root, double alpha,
                                           double tolerance, std::size_t max_iterations) {
  if (root >= g.node_count()) throw InvalidArgumentError("node out of range");
  const std::size_t n = g.node_count();
  std::vector<double> pi(n, 0.0), next(n, 0.0);
  pi[root] = 1.0;
  const double stay = 1.0 - alpha;
  for (std::size_t it = 0; it < max_iterations; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    double to_root = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      const double mass = pi[u];
      if (mass == 0.0) continue;
      const auto deg = g.degree(u);
      if (deg == 0) {
        to_root += mass;
        continue;
      }
      to_root += alpha * mass;
      const double share = stay * mass / static_cast<double>(deg);
      for (NodeId v : g.neighbors(u)) next[v] += share;
    }
    next[root] += to_root;
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change += std::abs(next[i] - pi[i]);
    pi.swap(next);
    if (change < tolerance) return pi;
  }
  throw IterationLimitError("rooted pagerank did not converge in " +
                            std::to_string(max_iterations) + " iterations");
}

double rooted_pagerank(const Graph& g, NodeId x, NodeId y, double alpha, double tolerance,
                       std::size_t max_iterations) {
  check_pair(g, x, y);
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("rooted pagerank alpha must lie in (0, 1)");
  const NodeId lo = std::min(x, y), hi = std::max(x, y);
  const double forward = rooted_pagerank_vector(g, lo, alpha, tolerance, max_iterations)[hi];
  const double backward = rooted_pagerank_vector(g, hi, alpha, tolerance, max_iterations)[lo];
  return forward + backward;
}

double score(const Graph& g, NodeId x, NodeId y, const PredictorConfig& cfg) {
  switch (cfg.kind) {
    case PredictorKind::AdamicAdar: return adamic_adar(g, x, y);
    case PredictorKind::Katz:
      return katz(g, x, y, cfg.beta, cfg.katz_tolerance, cfg.max_iterations);
    case PredictorKind::GraphDistance: return graph_distance(g, x, y);
    case PredictorKind::RootedPageRank:
      return rooted_pagerank(g, x, y, cfg.alpha, cfg.pagerank_tolerance, cfg.max_iterations);
  }
  throw ConfigError("unknown predictor kind");
}

ScoreMatrix score_matrix(const Graph& g, const PredictorConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.node_count();
  ScoreMatrix m(n);
  switch (cfg.kind) {
    case PredictorKind::AdamicAdar: {
      const auto weight = inverse_log_degrees(g);
      parallel_rows(n, [&](std::size_t row) {
        const auto x = static_cast<NodeId>(row);
        // Contributions reach each y in ascending z, the same order the
        // pairwise merge visits common neighbors.
        for (NodeId z : g.neighbors(x)) {
          for (NodeId y : g.neighbors(z)) {
            if (y > x) m.upper(x, y) += weight[z];
          }
        }
      });
      break;
    }
    case PredictorKind::Katz: {
      const double radius = katz_radius(g, cfg.beta);
      parallel_rows(n, [&](std::size_t row) {
        const auto x = static_cast<NodeId>(row);
        const auto r = katz_row_with_radius(g, x, cfg.beta, radius, cfg.katz_tolerance,
                                            cfg.max_iterations);
        for (NodeId y = x + 1; y < n; ++y) m.upper(x, y) = r[y];
      });
      break;
    }
    case PredictorKind::GraphDistance: {
      parallel_rows(n, [&](std::size_t row) {
        const auto x = static_cast<NodeId>(row);
        const auto d = bfs_distances(g, x);
        for (NodeId y = x + 1; y < n; ++y) {
          m.upper(x, y) =
              d[y] < 0 ? -std::numeric_limits<double>::infinity() : -static_cast<double>(d[y]);
        }
      });
      break;
    }
    case PredictorKind::RootedPageRank: {
      std::vector<std::vector<double>> pi(n);
      parallel_rows(n, [&](std::size_t row) {
        pi[row] = rooted_pagerank_vector(g, static_cast<NodeId>(row), cfg.alpha,
                                         cfg.pagerank_tolerance, cfg.max_iterations);
      });
      for (NodeId x = 0; x < n; ++x) {
        for (NodeId y = x + 1; y < n; ++y) m.upper(x, y) = pi[x][y] + pi[y][x];
      }
      break;
    }
  }
  return m;
}

std::vector<ScoredPair> score_all_non_edges(const Graph& g, const PredictorConfig& cfg) {
  const auto m = score_matrix(g, cfg);
  std::vector<ScoredPair> out;
  out.reserve(g.non_edge_count());
  for (const auto& p : non_edges(g)) out.push_back({p, m(p.u, p.v)});
  return out;
}

std::vector<ScoredPair> score_edges(const Graph& g, const PredictorConfig& cfg) {
  const auto m = score_matrix(g, cfg);
  std::vector<ScoredPair> out;
  out.reserve(g.edge_count());
  for (const auto& p : g.edges()) out.push_back({p, m(p.u, p.v)});
  return out;
}

namespace {

template <class Before>
Selection select_k(std::span<const ScoredPair> scored, std::size_t k, Before before) {
  Selection sel;
  sel.truncated = k > scored.size();
  const std::size_t take = std::min(k, scored.size());
  std::vector<std::size_t> idx(scored.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto cmp = [&](std::size_t a, std::size_t b) {
    const auto& sa = scored[a];
    const auto& sb = scored[b];
    if (sa.score != sb.score) return before(sa.score, sb.score);
    return sa.pair < sb.pair;
  };
  if (take < idx.size()) {
    std::nth_element(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(take), idx.end(), cmp);
  }
  sel.pairs.reserve(take);
  for (std::size_t i = 0; i < take; ++i) sel.pairs.push_back(scored[idx[i]].pair);
  std::sort(sel.pairs.begin(), sel.pairs.end());
  return sel;
}

}  // namespace

Selection predict_top_k(std::span<const ScoredPair> scored, std::size_t k) {
  return select_k(scored, k, [](double a, double b) { return a > b; });
}

Selection select_bottom_k(std::span<const ScoredPair> scored, std::size_t k) {
  return select_k(scored, k, [](double a, double b) { return a < b; });
}

namespace reference {

std::vector<ScoredPair> score_all_non_edges(const Graph& g, const PredictorConfig& cfg) {
  cfg.validate();
  std::vector<ScoredPair> out;
  for (const auto& p : non_edges(g)) out.push_back({p, score(g, p.u, p.v, cfg)});
  return out;
}

}  // namespace reference

}  // namespace linkscale
