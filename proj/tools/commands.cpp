#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "linkscale/errors.hpp"
#include "linkscale/io.hpp"
#include "linkscale/noise.hpp"
#include "linkscale/scale_eval.hpp"
#include "linkscale/synth.hpp"

namespace linkscale::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes through a sibling temp file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content) {
  const fs::path target(path);
  if (target.has_parent_path() && !fs::exists(target.parent_path())) {
    throw Error("io", "directory of '" + path + "' does not exist");
  }
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io", "cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw Error("io", "write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, target);
}

GraphSequence load_sequence(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_sequence(in);
}

void save_sequence(const std::string& path, const GraphSequence& seq) {
  std::ostringstream out;
  write_sequence(out, seq);
  write_file_atomic(path, out.str());
}

void write_manifest(const std::string& command, const json& params,
                    const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs) {
  json m;
  m["tool"] = "linkscale";
  m["version"] = kToolVersion;
  m["command"] = command;
  m["params"] = params;
  m["inputs"] = inputs;
  m["outputs"] = outputs;
  write_file_atomic(outputs.front() + ".manifest.json", m.dump(2) + "\n");
}

template <class T>
T get(const json& p, const char* key) {
  if (!p.contains(key)) throw ConfigError(std::string("missing parameter '") + key + "'");
  try {
    return p.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("parameter '") + key + "' has the wrong type");
  }
}

PredictorConfig predictor_from(const json& p, const char* kind_key) {
  PredictorConfig cfg;
  cfg.kind = parse_predictor_kind(get<std::string>(p, kind_key));
  cfg.beta = get<double>(p, "beta");
  if (p.contains("alpha")) cfg.alpha = get<double>(p, "alpha");
  cfg.validate();
  return cfg;
}

void cmd_generate(const json& p) {
  GenParams gp;
  const auto model = get<std::string>(p, "model");
  if (model == "er") {
    gp.seed_model = ErdosRenyi{get<std::size_t>(p, "n"), get<double>(p, "p")};
  } else if (model == "ba") {
    gp.seed_model = BarabasiAlbert{get<std::size_t>(p, "n"), get<std::size_t>(p, "m")};
  } else {
    throw ConfigError("model must be 'er' or 'ba'");
  }
  gp.evolve_score = predictor_from(p, "score");
  gp.delta = get<std::size_t>(p, "delta");
  gp.steps = get<std::size_t>(p, "steps");
  gp.delete_low = get<bool>(p, "delete_low");
  gp.rng_seed = get<std::uint64_t>(p, "seed");
  const auto out = get<std::string>(p, "out");

  const auto result = generate(gp);
  if (result.saturated_steps > 0) {
    std::cerr << "linkscale: warning[saturated]: " << result.saturated_steps
              << " step(s) ran out of candidate pairs\n";
  }
  save_sequence(out, result.sequence);
  write_manifest("generate", p, {}, {out});
}

void cmd_perturb(const json& p) {
  NoiseParams np;
  np.mu = get<std::size_t>(p, "mu");
  np.sigma = get<double>(p, "sigma");
  np.rng_seed = get<std::uint64_t>(p, "seed");
  if (p.contains("length") && !p.at("length").is_null()) {
    np.output_length = get<std::size_t>(p, "length");
  }
  np.timeline = parse_timeline(get<std::string>(p, "timeline"));
  const auto in = get<std::string>(p, "in");
  const auto out = get<std::string>(p, "out");
  save_sequence(out, apply_noise(load_sequence(in), np));
  write_manifest("perturb", p, {in}, {out});
}

void cmd_aggregate(const json& p) {
  const auto in = get<std::string>(p, "in");
  const auto out = get<std::string>(p, "out");
  const WindowSize w{get<std::size_t>(p, "window")};
  save_sequence(out, aggregate(load_sequence(in), w));
  write_manifest("aggregate", p, {in}, {out});
}

void cmd_sweep(const json& p) {
  const auto cfg = predictor_from(p, "predictor");
  SweepSettings s;
  s.subsample_fraction = get<double>(p, "subsample");
  s.subsample_threshold = get<std::size_t>(p, "subsample_threshold");
  s.rng_seed = get<std::uint64_t>(p, "seed");
  const auto in = get<std::string>(p, "in");
  const auto out = get<std::string>(p, "out");
  const auto result = sweep(load_sequence(in), cfg, s);
  write_file_atomic(out, write_sweep_csv(result));
  write_manifest("sweep", p, {in}, {out});
}

struct Series {
  std::string label;
  WindowSweepResult result;
};

std::string render_svg(const std::vector<Series>& series) {
  constexpr double width = 720, height = 420, left = 60, right = 170, top = 20, bottom = 50;
  const double plot_w = width - left - right, plot_h = height - top - bottom;
  std::size_t max_w = 1;
  double lo = 0.0, hi = 1.0;
  for (const auto& s : series) {
    for (const auto& e : s.result.entries) {
      max_w = std::max(max_w, e.w);
      lo = std::min(lo, e.mean_mcc);
      hi = std::max(hi, e.mean_mcc);
    }
  }
  auto x_of = [&](double w) { return left + plot_w * (w - 1.0) / std::max(1.0, double(max_w) - 1.0); };
  auto y_of = [&](double v) { return top + plot_h * (hi - v) / (hi - lo); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};
  char buf[160];
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  std::snprintf(buf, sizeof buf,
                "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" "
                "stroke=\"#444\"/>\n",
                left, top, plot_w, plot_h);
  svg << buf;
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%.1f\" y1=\"%.2f\" x2=\"%.1f\" y2=\"%.2f\" stroke=\"#bbb\" "
                "stroke-dasharray=\"4 3\"/>\n",
                left, y_of(0.0), left + plot_w, y_of(0.0));
  svg << buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\">window size w (1..%zu)</text>\n",
                left + plot_w / 2, height - 15, max_w);
  svg << buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"15\" y=\"%.1f\" transform=\"rotate(-90 15 %.1f)\" "
                "text-anchor=\"middle\">mean MCC</text>\n",
                top + plot_h / 2, top + plot_h / 2);
  svg << buf;
  for (double tick : {lo, 0.0, hi}) {
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.2f\" text-anchor=\"end\">%.2f</text>\n", left - 6,
                  y_of(tick) + 4, tick);
    svg << buf;
  }
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = colors[i % std::size(colors)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& e : series[i].result.entries) {
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", x_of(double(e.w)), y_of(e.mean_mcc));
      svg << buf;
    }
    svg << "\"/>\n";
    const double ly = top + 16.0 * double(i + 1);
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"%s\" "
                  "stroke-width=\"2\"/>\n",
                  left + plot_w + 10, ly - 4, left + plot_w + 30, ly - 4, color);
    svg << buf;
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\">", left + plot_w + 36, ly);
    svg << buf << series[i].label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void cmd_report(const json& p) {
  const auto inputs = get<std::vector<std::string>>(p, "inputs");
  if (inputs.empty()) throw ConfigError("report needs at least one sweep csv");
  auto labels = p.contains("labels") ? get<std::vector<std::string>>(p, "labels")
                                     : std::vector<std::string>{};
  if (!labels.empty() && labels.size() != inputs.size()) {
    throw ConfigError("give one label per input or none");
  }
  std::vector<Series> series;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::istringstream in(read_file(inputs[i]));
    series.push_back({labels.empty() ? fs::path(inputs[i]).stem().string() : labels[i],
                      read_sweep_csv(in)});
  }
  const auto out = get<std::string>(p, "out");
  std::ostringstream data;
  data << "series,w,mean_mcc\n";
  char buf[32];
  for (const auto& s : series) {
    for (const auto& e : s.result.entries) {
      std::snprintf(buf, sizeof buf, "%.6f", e.mean_mcc);
      data << s.label << ',' << e.w << ',' << buf << '\n';
    }
  }
  write_file_atomic(out, data.str());
  std::vector<std::string> outputs{out};
  if (p.contains("svg") && !p.at("svg").is_null()) {
    const auto svg = get<std::string>(p, "svg");
    write_file_atomic(svg, render_svg(series));
    outputs.push_back(svg);
  }
  write_manifest("report", p, inputs, outputs);
}

void cmd_ingest(const json& p) {
  const auto events_path = get<std::string>(p, "events");
  BinSpec spec{get<std::uint64_t>(p, "bin_width"), get<std::uint64_t>(p, "origin")};
  std::istringstream in(read_file(events_path));
  const auto binned = bin_events(parse_events(in), spec);
  const auto out = get<std::string>(p, "out");
  const auto labels = get<std::string>(p, "labels");
  save_sequence(out, binned.sequence);
  std::ostringstream lab;
  write_labels(lab, binned.labels);
  write_file_atomic(labels, lab.str());
  write_manifest("ingest", p, {events_path}, {out, labels});
}

void cmd_resemblance(const json& p) {
  std::vector<PredictorConfig> cfgs;
  for (const auto& name : get<std::vector<std::string>>(p, "predictors")) {
    PredictorConfig c;
    c.kind = parse_predictor_kind(name);
    c.beta = get<double>(p, "beta");
    c.alpha = get<double>(p, "alpha");
    cfgs.push_back(c);
  }
  const auto in = get<std::string>(p, "in");
  const auto out = get<std::string>(p, "out");
  const auto report =
      resemblance_report(load_sequence(in), cfgs, WindowSize{get<std::size_t>(p, "window")});
  std::ostringstream csv;
  csv << "predictor,mean_resemblance,relative_to_adamic_adar\n";
  char buf[64];
  for (const auto& e : report) {
    std::snprintf(buf, sizeof buf, "%.6f,%.6f", e.mean, e.relative);
    csv << to_string(e.kind) << ',' << buf << '\n';
  }
  write_file_atomic(out, csv.str());
  write_manifest("resemblance", p, {in}, {out});
}

}  // namespace

void run_command(const std::string& command, const json& params) {
  if (command == "generate") return cmd_generate(params);
  if (command == "perturb") return cmd_perturb(params);
  if (command == "aggregate") return cmd_aggregate(params);
  if (command == "sweep") return cmd_sweep(params);
  if (command == "report") return cmd_report(params);
  if (command == "ingest") return cmd_ingest(params);
  if (command == "resemblance") return cmd_resemblance(params);
  throw ConfigError("unknown command '" + command + "'");
}

void replay_manifest(const std::string& manifest_path) {
  json m;
  try {
    m = json::parse(read_file(manifest_path));
  } catch (const json::parse_error& e) {
    throw FormatError("manifest '" + manifest_path + "': " + e.what());
  }
  if (!m.contains("command") || !m.contains("params")) {
    throw FormatError("manifest '" + manifest_path + "' lacks command/params");
  }
  run_command(m.at("command").get<std::string>(), m.at("params"));
}

}  // namespace linkscale::cli
