#include "linkscale/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "linkscale/errors.hpp"

namespace linkscale {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_uint(std::string_view s, T& value) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

}  // namespace

std::vector<ContactEvent> parse_events(std::istream& in) {
  std::vector<ContactEvent> events;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (blank(view) || view.front() == '#') continue;
    const auto fields = split_fields(view);
    if (fields.size() != 3) {
      throw ParseError(lineno, "expected 'timestamp,u,v', got " + std::to_string(fields.size()) +
                                   " fields");
    }
    if (fields[0].front() == '-') throw ParseError(lineno, "negative timestamp");
    ContactEvent ev;
    if (!parse_uint(fields[0], ev.timestamp)) {
      throw ParseError(lineno, "bad timestamp '" + std::string(fields[0]) + "'");
    }
    ev.u_label = std::string(fields[1]);
    ev.v_label = std::string(fields[2]);
    if (ev.u_label == ev.v_label) throw ParseError(lineno, "contact of a node with itself");
    events.push_back(std::move(ev));
  }
  return events;
}

BinnedEvents bin_events(const std::vector<ContactEvent>& events, const BinSpec& spec) {
  if (spec.bin_width < 1) throw ConfigError("bin width must be at least 1");
  if (events.empty()) throw InvalidArgumentError("no events to bin");
  BinnedEvents out;
  std::unordered_map<std::string, NodeId> index;
  auto node_of = [&](const std::string& label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<NodeId>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };
  std::uint64_t max_ts = 0;
  for (const auto& ev : events) {
    if (ev.timestamp < spec.origin) {
      throw RangeError("event at " + std::to_string(ev.timestamp) + " precedes origin " +
                       std::to_string(spec.origin));
    }
    max_ts = std::max(max_ts, ev.timestamp);
  }
  const std::size_t bins = (max_ts - spec.origin) / spec.bin_width + 1;
  std::vector<std::vector<NodePair>> buckets(bins);
  for (const auto& ev : events) {
    const NodeId u = node_of(ev.u_label);
    const NodeId v = node_of(ev.v_label);
    buckets[(ev.timestamp - spec.origin) / spec.bin_width].push_back(make_pair(u, v));
  }
  std::vector<Graph> snapshots;
  snapshots.reserve(bins);
  for (auto& b : buckets) snapshots.emplace_back(out.labels.size(), std::move(b));
  out.sequence = GraphSequence(out.labels.size(), std::move(snapshots));
  return out;
}

void write_sequence(std::ostream& out, const GraphSequence& seq) {
  out << seq.node_count() << ' ' << seq.size() << '\n';
  for (const auto& g : seq) {
    out << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  }
}

GraphSequence read_sequence(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_fields = [&](const char* what) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!blank(line)) return split_fields(line);
    }
    throw FormatError(std::string("unexpected end of file, expected ") + what);
  };
  auto fail = [&](const std::string& msg) -> FormatError {
    return FormatError("line " + std::to_string(lineno) + ": " + msg);
  };

  auto header = next_fields("header 'n L'");
  std::size_t n = 0, length = 0;
  if (header.size() != 2 || !parse_uint(header[0], n) || !parse_uint(header[1], length)) {
    throw fail("header must be 'n L'");
  }
  if (n < 1 || length < 1) throw fail("header needs n >= 1 and L >= 1");

  std::vector<Graph> snapshots;
  snapshots.reserve(length);
  for (std::size_t s = 0; s < length; ++s) {
    auto count_line = next_fields("edge count");
    std::size_t m = 0;
    if (count_line.size() != 1 || !parse_uint(count_line[0], m)) {
      throw fail("expected edge count for snapshot " + std::to_string(s));
    }
    std::vector<NodePair> edges;
    edges.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
      auto f = next_fields("edge");
      NodeId u = 0, v = 0;
      if (f.size() != 2 || !parse_uint(f[0], u) || !parse_uint(f[1], v)) {
        throw fail("expected 'u v'");
      }
      if (u == v || u >= n || v >= n) throw fail("invalid edge " + std::string(f[0]) + " " +
                                                 std::string(f[1]));
      edges.push_back(make_pair(u, v));
    }
    Graph g(n, std::move(edges));
    if (g.edge_count() != m) throw fail("duplicate edges in snapshot " + std::to_string(s));
    snapshots.push_back(std::move(g));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!blank(line)) throw fail("trailing content after last snapshot");
  }
  return GraphSequence(n, std::move(snapshots));
}

void write_labels(std::ostream& out, const std::vector<std::string>& labels) {
  out << "index,label\n";
  for (std::size_t i = 0; i < labels.size(); ++i) out << i << ',' << labels[i] << '\n';
}

void write_sweep_csv(std::ostream& out, const WindowSweepResult& result) {
  out << "w,mean_mcc,pairs_evaluated,pairs_total\n";
  auto rows = result.entries;
  std::sort(rows.begin(), rows.end(),
            [](const SweepEntry& a, const SweepEntry& b) { return a.w < b.w; });
  char buf[64];
  for (const auto& e : rows) {
    std::snprintf(buf, sizeof buf, "%.6f", e.mean_mcc);
    out << e.w << ',' << buf << ',' << e.pairs_evaluated << ',' << e.pairs_total << '\n';
  }
}

std::string write_sweep_csv(const WindowSweepResult& result) {
  std::ostringstream out;
  write_sweep_csv(out, result);
  return out.str();
}

WindowSweepResult read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "w,mean_mcc,pairs_evaluated,pairs_total") {
    throw FormatError("sweep csv must start with 'w,mean_mcc,pairs_evaluated,pairs_total'");
  }
  WindowSweepResult result;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    const auto f = split_fields(line);
    SweepEntry e;
    bool ok = f.size() == 4 && parse_uint(f[0], e.w) && parse_uint(f[2], e.pairs_evaluated) &&
              parse_uint(f[3], e.pairs_total);
    if (ok) {
      auto [ptr, ec] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), e.mean_mcc);
      ok = ec == std::errc() && ptr == f[1].data() + f[1].size();
    }
    if (!ok) throw FormatError("line " + std::to_string(lineno) + ": malformed sweep row");
    result.entries.push_back(e);
  }
  return result;
}

}  // namespace linkscale
