#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "contact_fixture.hpp"
#include "linkscale/errors.hpp"
#include "linkscale/io.hpp"
#include "linkscale/scale_eval.hpp"
#include "linkscale/synth.hpp"
#include "oracles.hpp"

using namespace linkscale;

namespace {

std::vector<ContactEvent> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_events(in);
}

GraphSequence read(const std::string& text) {
  std::istringstream in(text);
  return read_sequence(in);
}

std::string written(const GraphSequence& seq) {
  std::ostringstream out;
  write_sequence(out, seq);
  return out.str();
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(ParseEvents, Examples) {
  EXPECT_TRUE(parse("").empty());
  EXPECT_EQ(parse("10,a,b"), (std::vector<ContactEvent>{{10, "a", "b"}}));
  EXPECT_EQ(parse("# t u v\n\n10 a  b\n20,\tb , c\n"),
            (std::vector<ContactEvent>{{10, "a", "b"}, {20, "b", "c"}}));
}

TEST(ParseEvents, ReportsLineNumbers) {
  EXPECT_EQ(parse_error_line("# header\n1,a,b\n2,a\n3,b,c\n"), 3u);
  EXPECT_EQ(parse_error_line("1,a,b\n-4,a,b\n"), 2u);
  EXPECT_EQ(parse_error_line("x,a,b\n"), 1u);
  EXPECT_EQ(parse_error_line("1,a,a\n"), 1u);
  EXPECT_EQ(parse_error_line("1,a,b,c\n"), 1u);
  try {
    parse("1,a,b\n\n7,a\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 3: ", 0), 0u);
    EXPECT_EQ(e.kind(), "parse");
  }
}

TEST(BinEvents, Examples) {
  const auto one = bin_events({{7, "x", "y"}}, {10, 0});
  EXPECT_EQ(one.sequence.size(), 1u);
  EXPECT_EQ(one.sequence[0].edge_count(), 1u);

  const auto two = bin_events({{0, "a", "b"}, {10, "a", "b"}}, {10, 0});
  EXPECT_EQ(two.sequence.size(), 2u);

  const auto three = bin_events({{0, "a", "b"}, {5, "a", "b"}, {12, "b", "c"}}, {10, 0});
  EXPECT_EQ(three.labels, (std::vector<std::string>{"a", "b", "c"}));
  ASSERT_EQ(three.sequence.size(), 2u);
  EXPECT_EQ(three.sequence[0], Graph(3, {{0, 1}}));
  EXPECT_EQ(three.sequence[1], Graph(3, {{1, 2}}));
}

TEST(BinEvents, DirectionDiscardedAndOriginApplied) {
  const auto b = bin_events({{105, "b", "a"}, {108, "a", "b"}, {131, "c", "a"}}, {10, 100});
  ASSERT_EQ(b.sequence.size(), 4u);
  EXPECT_EQ(b.sequence[0], Graph(3, {{0, 1}}));
  EXPECT_EQ(b.sequence[1].edge_count(), 0u);
  EXPECT_EQ(b.labels, (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_EQ(b.sequence[3], Graph(3, {{1, 2}}));
  EXPECT_THROW(bin_events({{99, "a", "b"}}, {10, 100}), RangeError);
  EXPECT_THROW(bin_events({}, {10, 0}), InvalidArgumentError);
  EXPECT_THROW(bin_events({{1, "a", "b"}}, {0, 0}), ConfigError);
}

TEST(BinEvents, ContactFixtureHasHalfDayBins) {
  std::istringstream in(fixture::half_day_contact_events(7));
  const auto b = bin_events(parse_events(in), {fixture::kBinSeconds, 0});
  EXPECT_LE(b.sequence.node_count(), 40u);
  EXPECT_GE(b.sequence.size(), fixture::kBinsPerHalfDay * (fixture::kHalfDays - 1));
}

TEST(Sequence, RoundTripsIncludingEmptySnapshots) {
  const GraphSequence seq(5, {Graph(5, {}), Graph(5, {{0, 4}, {1, 2}}), Graph(5, {})});
  const auto text = written(seq);
  EXPECT_EQ(text, "5 3\n0\n2\n0 4\n1 2\n0\n");
  EXPECT_EQ(read(text), seq);
}

TEST(Sequence, GeneratedSequenceRoundTripsByteStably) {
  GenParams p;
  p.seed_model = ErdosRenyi{80, 0.05};
  p.delta = 5;
  const auto seq = generate_sequence(p);
  ASSERT_EQ(seq.size(), 20u);
  const auto text = written(seq);
  EXPECT_EQ(read(text), seq);
  EXPECT_EQ(written(read(text)), text);
}

TEST(Sequence, FormatErrors) {
  EXPECT_THROW(read(""), FormatError);
  EXPECT_THROW(read("3\n"), FormatError);
  EXPECT_THROW(read("0 1\n0\n"), FormatError);
  EXPECT_THROW(read("3 2\n1\n0 1\n"), FormatError);      // truncated
  EXPECT_THROW(read("3 1\n2\n0 1\n"), FormatError);      // missing edge line
  EXPECT_THROW(read("3 1\n1\n0 3\n"), FormatError);      // out of range
  EXPECT_THROW(read("3 1\n1\n1 1\n"), FormatError);      // self-loop
  EXPECT_THROW(read("3 1\n2\n0 1\n1 0\n"), FormatError);  // duplicate
  EXPECT_THROW(read("3 1\n0\n0\n"), FormatError);        // trailing content
  EXPECT_THROW(read("3 1\n1\n0 x\n"), FormatError);
  EXPECT_NO_THROW(read("3 1\n1\n0 1\n\n"));
}

TEST(Labels, Csv) {
  std::ostringstream out;
  write_labels(out, {"alice", "bob"});
  EXPECT_EQ(out.str(), "index,label\n0,alice\n1,bob\n");
}

TEST(SweepCsv, Examples) {
  EXPECT_EQ(write_sweep_csv(WindowSweepResult{}), "w,mean_mcc,pairs_evaluated,pairs_total\n");
  const WindowSweepResult one{{{1, 0.5, 10, 10}}};
  EXPECT_EQ(write_sweep_csv(one), "w,mean_mcc,pairs_evaluated,pairs_total\n1,0.500000,10,10\n");
}

TEST(SweepCsv, RowsSortedAndRoundTrip) {
  const WindowSweepResult r{{{2, -0.25, 3, 4}, {1, 1.0 / 3.0, 9, 9}}};
  const auto text = write_sweep_csv(r);
  EXPECT_EQ(text,
            "w,mean_mcc,pairs_evaluated,pairs_total\n1,0.333333,9,9\n2,-0.250000,3,4\n");
  std::istringstream in(text);
  const auto back = read_sweep_csv(in);
  ASSERT_EQ(back.entries.size(), 2u);
  EXPECT_EQ(back.entries[0].w, 1u);
  EXPECT_NEAR(back.entries[0].mean_mcc, 0.333333, 1e-12);
  EXPECT_EQ(back.entries[1].pairs_total, 4u);
  std::istringstream bad("w,score\n");
  EXPECT_THROW(read_sweep_csv(bad), FormatError);
  std::istringstream bad_row("w,mean_mcc,pairs_evaluated,pairs_total\n1,abc,1,1\n");
  EXPECT_THROW(read_sweep_csv(bad_row), FormatError);
}

TEST(SweepCsv, RowCountIsThirdOfLength) {
  std::mt19937 rng(50);
  const auto seq = oracle::random_sequence(rng, 10, 17, 0.2);
  const auto text = write_sweep_csv(sweep(seq, PredictorConfig{}));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 17 / 3);
}
