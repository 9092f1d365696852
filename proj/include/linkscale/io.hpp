#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "linkscale/graph.hpp"
#include "linkscale/scale_eval.hpp"

namespace linkscale {

/// One observed contact. Labels are opaque tokens kept verbatim.
struct ContactEvent {
  std::uint64_t timestamp{0};
  std::string u_label;
  std::string v_label;

  bool operator==(const ContactEvent&) const = default;
};

struct BinSpec {
  std::uint64_t bin_width{1};
  std::uint64_t origin{0};
};

/// Reads `timestamp,u,v` lines (commas and/or whitespace as separators).
/// Blank lines and lines starting with '#' are skipped. Throws ParseError
/// naming the 1-based line on anything else that does not parse.
std::vector<ContactEvent> parse_events(std::istream& in);

struct BinnedEvents {
  GraphSequence sequence;
  std::vector<std::string> labels;  // labels[i] is node i, by first appearance
};

/// Snapshot k collects events with floor((ts - origin) / bin_width) == k.
/// Direction is discarded. Throws RangeError for ts < origin.
BinnedEvents bin_events(const std::vector<ContactEvent>& events, const BinSpec& spec);

/// Text sequence format:
///   n L
///   m_0
///   u v      (m_0 lines)
///   m_1
///   ...
void write_sequence(std::ostream& out, const GraphSequence& seq);
/// Throws FormatError on any header, count or edge inconsistency.
GraphSequence read_sequence(std::istream& in);

/// `index,label` lines after an `index,label` header.
void write_labels(std::ostream& out, const std::vector<std::string>& labels);

/// Header `w,mean_mcc,pairs_evaluated,pairs_total`, rows ascending in w,
/// mean_mcc with 6 decimals.
void write_sweep_csv(std::ostream& out, const WindowSweepResult& result);
std::string write_sweep_csv(const WindowSweepResult& result);
WindowSweepResult read_sweep_csv(std::istream& in);

}  // namespace linkscale
