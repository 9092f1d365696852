// linkscale: generate, perturb, aggregate and sweep dynamic-network sequences.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "commands.hpp"
#include "linkscale/errors.hpp"

namespace {

using nlohmann::json;

void apply_thread_env() {
#ifdef _OPENMP
  if (const char* env = std::getenv("LINKSCALE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
#endif
}

int fail(const std::string& kind, const std::string& message, int code) {
  std::cerr << "linkscale: error[" << kind << "]: " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_env();
  CLI::App app{"Window-size selection for oversampled dynamic networks via link prediction"};
  app.set_version_flag("--version", linkscale::cli::kToolVersion);
  app.require_subcommand(1);

  std::string command;
  json params;

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a ground-truth graph sequence");
  std::string model = "er", score = "adamic-adar", gen_out;
  std::size_t n = 250, m = 5, delta = 50, steps = 20;
  double p = 0.05, gen_beta = 0.005;
  bool delete_low = false;
  std::uint64_t gen_seed = 1;
  gen->add_option("--model", model, "Seed graph model: er or ba")->capture_default_str();
  gen->add_option("--n", n, "Node count")->capture_default_str();
  gen->add_option("--p", p, "ER edge probability")->capture_default_str();
  gen->add_option("--m", m, "BA edges per new node")->capture_default_str();
  gen->add_option("--score", score, "Similarity score driving growth")->capture_default_str();
  gen->add_option("--beta", gen_beta, "Katz beta when --score katz")->capture_default_str();
  gen->add_option("--delta", delta, "Edges added per step")->capture_default_str();
  gen->add_option("--steps", steps, "Number of snapshots")->capture_default_str();
  gen->add_flag("--delete-low", delete_low, "Also delete the delta lowest-scored edges");
  gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output sequence file")->required();
  gen->callback([&] {
    command = "generate";
    params = {{"model", model}, {"n", n},         {"p", p},
              {"m", m},         {"score", score}, {"beta", gen_beta},
              {"delta", delta}, {"steps", steps}, {"delete_low", delete_low},
              {"seed", gen_seed}, {"out", gen_out}};
  });

  // perturb
  auto* per = app.add_subcommand("perturb", "Apply Gaussian oversampling noise");
  std::string per_in, per_out, timeline = "centered";
  std::size_t mu = 100;
  double sigma = 8.0;
  std::optional<std::size_t> length;
  std::uint64_t per_seed = 1;
  per->add_option("--in", per_in, "Input sequence file")->required();
  per->add_option("--mu", mu, "Oversampling rate (mean separation)")->capture_default_str();
  per->add_option("--sigma", sigma, "Temporal spread")->capture_default_str();
  per->add_option("--length", length, "Output length (default mu*t, grown to hold every draw)");
  per->add_option("--timeline", timeline, "centered, earliest-draw or fixed")->capture_default_str();
  per->add_option("--seed", per_seed, "RNG seed")->capture_default_str();
  per->add_option("--out", per_out, "Output sequence file")->required();
  per->callback([&] {
    command = "perturb";
    params = {{"in", per_in},       {"mu", mu},     {"sigma", sigma},
              {"timeline", timeline}, {"seed", per_seed}, {"out", per_out}};
    params["length"] = length ? json(*length) : json(nullptr);
  });

  // aggregate
  auto* agg = app.add_subcommand("aggregate", "Merge consecutive snapshots into windows");
  std::string agg_in, agg_out;
  std::size_t window = 1;
  agg->add_option("--in", agg_in, "Input sequence file")->required();
  agg->add_option("--window", window, "Window size w")->required();
  agg->add_option("--out", agg_out, "Output sequence file")->required();
  agg->callback([&] {
    command = "aggregate";
    params = {{"in", agg_in}, {"window", window}, {"out", agg_out}};
  });

  // sweep
  auto* sw = app.add_subcommand("sweep", "Score every window size by link-prediction MCC");
  std::string sw_in, sw_out, predictor = "adamic-adar";
  double beta = 0.005, alpha = 0.15, subsample = 0.10;
  std::size_t threshold = 30;
  std::uint64_t sw_seed = 1;
  sw->add_option("--in", sw_in, "Input sequence file")->required();
  sw->add_option("--predictor", predictor, "adamic-adar, katz, graph-distance, rooted-pagerank")
      ->capture_default_str();
  sw->add_option("--beta", beta, "Katz beta")->capture_default_str();
  sw->add_option("--alpha", alpha, "Rooted PageRank restart probability")->capture_default_str();
  sw->add_option("--subsample", subsample, "Fraction of pairs scored on long sequences")
      ->capture_default_str();
  sw->add_option("--subsample-threshold", threshold, "Pair count above which to subsample")
      ->capture_default_str();
  sw->add_option("--seed", sw_seed, "RNG seed for subsampling")->capture_default_str();
  sw->add_option("--out", sw_out, "Output CSV")->required();
  sw->callback([&] {
    command = "sweep";
    params = {{"in", sw_in},          {"predictor", predictor},
              {"beta", beta},         {"alpha", alpha},
              {"subsample", subsample}, {"subsample_threshold", threshold},
              {"seed", sw_seed},      {"out", sw_out}};
  });

  // report
  auto* rep = app.add_subcommand("report", "Collect sweep CSVs into plot data and an SVG");
  std::vector<std::string> rep_inputs, rep_labels;
  std::string rep_out;
  std::optional<std::string> rep_svg;
  rep->add_option("inputs", rep_inputs, "Sweep CSV files")->required();
  rep->add_option("--label", rep_labels, "Curve label, once per input");
  rep->add_option("--out", rep_out, "Plot-data CSV")->required();
  rep->add_option("--svg", rep_svg, "Optional SVG chart");
  rep->callback([&] {
    command = "report";
    params = {{"inputs", rep_inputs}, {"labels", rep_labels}, {"out", rep_out}};
    params["svg"] = rep_svg ? json(*rep_svg) : json(nullptr);
  });

  // ingest
  auto* ing = app.add_subcommand("ingest", "Bin timestamped contact events into a sequence");
  std::string events, ing_out, ing_labels;
  std::uint64_t bin_width = 600, origin = 0;
  ing->add_option("--events", events, "Event file: timestamp,u,v per line")->required();
  ing->add_option("--bin-width", bin_width, "Bin width in timestamp units")->capture_default_str();
  ing->add_option("--origin", origin, "Timestamp of bin 0")->capture_default_str();
  ing->add_option("--out", ing_out, "Output sequence file")->required();
  ing->add_option("--labels", ing_labels, "Output label map CSV")->required();
  ing->callback([&] {
    command = "ingest";
    params = {{"events", events}, {"bin_width", bin_width}, {"origin", origin},
              {"out", ing_out},   {"labels", ing_labels}};
  });

  // resemblance
  auto* res = app.add_subcommand("resemblance", "Compare predictors by resemblance at one window");
  std::string res_in, res_out;
  std::size_t res_window = 1;
  std::vector<std::string> res_predictors{"adamic-adar", "katz", "graph-distance",
                                          "rooted-pagerank"};
  double res_beta = 0.005, res_alpha = 0.15;
  res->add_option("--in", res_in, "Input sequence file")->required();
  res->add_option("--window", res_window, "Window size w")->required();
  res->add_option("--predictor", res_predictors, "Predictors (adamic-adar required)")
      ->capture_default_str();
  res->add_option("--beta", res_beta, "Katz beta")->capture_default_str();
  res->add_option("--alpha", res_alpha, "Rooted PageRank alpha")->capture_default_str();
  res->add_option("--out", res_out, "Output CSV")->required();
  res->callback([&] {
    command = "resemblance";
    params = {{"in", res_in},     {"window", res_window}, {"predictors", res_predictors},
              {"beta", res_beta}, {"alpha", res_alpha},   {"out", res_out}};
  });

  // replay
  auto* rp = app.add_subcommand("replay", "Rerun the command recorded in a manifest");
  std::string manifest;
  rp->add_option("manifest", manifest, "Manifest JSON")->required();
  rp->callback([&] { command = "replay"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 2);
  }

  try {
    if (command == "replay") {
      linkscale::cli::replay_manifest(manifest);
    } else {
      linkscale::cli::run_command(command, params);
    }
  } catch (const linkscale::ConfigError& e) {
    return fail("usage", e.what(), 2);
  } catch (const linkscale::Error& e) {
    return fail(e.kind(), e.what(), 1);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
  return 0;
}
