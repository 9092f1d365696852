#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>

#include "linkscale/graph.hpp"
#include "linkscale/predictors.hpp"
#include "linkscale/rng.hpp"

namespace linkscale {

struct ErdosRenyi {
  std::size_t n{250};
  double p{0.05};
};

/// Preferential attachment grown from a complete graph on the first m nodes.
struct BarabasiAlbert {
  std::size_t n{250};
  std::size_t m{5};
};

using SeedModel = std::variant<ErdosRenyi, BarabasiAlbert>;

/// Ground-truth generator settings. Each step adds the `delta` top-scored
/// non-edges under `evolve_score`; with `delete_low` it also removes the
/// `delta` lowest-scored edges of the same snapshot.
struct GenParams {
  SeedModel seed_model{ErdosRenyi{}};
  PredictorConfig evolve_score{};
  std::size_t delta{50};
  std::size_t steps{20};
  bool delete_low{false};
  std::uint64_t rng_seed{1};

  std::size_t node_count() const noexcept;
  void validate() const;
};

Graph seed_graph(const SeedModel& model, Engine& rng);

struct StepResult {
  Graph graph;
  PairSet added;
  PairSet removed;
  bool saturated{false};  // fewer than delta candidates were available
};

StepResult evolve_step(const Graph& g, const GenParams& params);

struct GeneratedSequence {
  GraphSequence sequence;
  std::size_t saturated_steps{0};
};

GeneratedSequence generate(const GenParams& params);

/// Snapshot 0 is the seed graph, each later snapshot one evolve_step on.
inline GraphSequence generate_sequence(const GenParams& params) {
  return generate(params).sequence;
}

}  // namespace linkscale
