#include "linkscale/synth.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "linkscale/errors.hpp"

namespace linkscale {

std::size_t GenParams::node_count() const noexcept {
  return std::visit([](const auto& m) { return m.n; }, seed_model);
}

void GenParams::validate() const {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if (m.n < 1) throw ConfigError("seed model needs at least one node");
        if constexpr (std::is_same_v<T, ErdosRenyi>) {
          if (!(m.p >= 0.0 && m.p <= 1.0)) throw ConfigError("ER p must lie in [0, 1]");
        } else {
          if (m.m < 1 || m.m >= m.n) throw ConfigError("BA requires 1 <= m < n");
        }
      },
      seed_model);
  if (steps < 1) throw ConfigError("steps must be at least 1");
  evolve_score.validate();
}

namespace {

Graph erdos_renyi(const ErdosRenyi& model, Engine& rng) {
  std::vector<NodePair> edges;
  const auto n = static_cast<NodeId>(model.n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (uniform01(rng) < model.p) edges.push_back({u, v});
    }
  }
  return Graph(model.n, std::move(edges));
}

Graph barabasi_albert(const BarabasiAlbert& model, Engine& rng) {
  std::vector<NodePair> edges;
  // Every edge endpoint appears once here, so a uniform pick is a
  // degree-proportional pick.
  std::vector<NodeId> endpoints;
  const auto m = static_cast<NodeId>(model.m);
  for (NodeId u = 0; u < m; ++u) {
    for (NodeId v = u + 1; v < m; ++v) {
      edges.push_back({u, v});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<NodeId> chosen;
  for (auto v = m; v < model.n; ++v) {
    chosen.clear();
    while (chosen.size() < model.m) {
      NodeId target;
      if (endpoints.empty()) {
        // Single-node core: nothing has degree yet.
        std::uniform_int_distribution<NodeId> pick(0, v - 1);
        target = pick(rng);
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
        target = endpoints[pick(rng)];
      }
      if (std::find(chosen.begin(), chosen.end(), target) == chosen.end()) {
        chosen.push_back(target);
      }
    }
    for (NodeId t : chosen) {
      edges.push_back(make_pair(t, v));
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph(model.n, std::move(edges));
}

}  // namespace

Graph seed_graph(const SeedModel& model, Engine& rng) {
  return std::visit(
      [&](const auto& m) -> Graph {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ErdosRenyi>) {
          return erdos_renyi(m, rng);
        } else {
          return barabasi_albert(m, rng);
        }
      },
      model);
}

StepResult evolve_step(const Graph& g, const GenParams& params) {
  if (g.node_count() != params.node_count()) {
    throw ShapeError("evolve_step: graph has " + std::to_string(g.node_count()) +
                     " nodes, params describe " + std::to_string(params.node_count()));
  }
  StepResult step;
  if (params.delta == 0) {
    step.graph = g;
    return step;
  }
  const auto candidates = score_all_non_edges(g, params.evolve_score);
  auto added = predict_top_k(candidates, params.delta);
  step.saturated = added.truncated;
  step.added = std::move(added.pairs);

  std::vector<NodePair> kept(g.edges().begin(), g.edges().end());
  if (params.delete_low) {
    const auto existing = score_edges(g, params.evolve_score);
    auto removed = select_bottom_k(existing, params.delta);
    step.saturated = step.saturated || removed.truncated;
    step.removed = std::move(removed.pairs);
    std::vector<NodePair> remaining;
    std::set_difference(kept.begin(), kept.end(), step.removed.begin(), step.removed.end(),
                        std::back_inserter(remaining));
    kept.swap(remaining);
  }
  kept.insert(kept.end(), step.added.begin(), step.added.end());
  step.graph = Graph(g.node_count(), std::move(kept));
  return step;
}

GeneratedSequence generate(const GenParams& params) {
  params.validate();
  auto rng = make_engine(params.rng_seed, Stream::SeedGraph);
  std::vector<Graph> snapshots;
  snapshots.reserve(params.steps);
  snapshots.push_back(seed_graph(params.seed_model, rng));
  GeneratedSequence out;
  for (std::size_t i = 1; i < params.steps; ++i) {
    auto step = evolve_step(snapshots.back(), params);
    if (step.saturated) ++out.saturated_steps;
    snapshots.push_back(std::move(step.graph));
  }
  out.sequence = GraphSequence(params.node_count(), std::move(snapshots));
  return out;
}

}  // namespace linkscale
