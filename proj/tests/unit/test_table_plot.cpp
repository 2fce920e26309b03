#include <gtest/gtest.h>

#include <fstream>

#include "auger/errors.hpp"
#include "auger/plot.hpp"
#include "auger/table.hpp"
#include "test_support.hpp"

namespace auger {
namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

TEST(Table, CsvRoundTripIsLossless) {
  Table t({"x", "y", "label"});
  t.add_row(std::vector<std::string>{"0.1", "1e-300", "weak"});
  Table n({"a", "b"});
  n.add_row(std::vector<double>{0.1, 1.0 / 3.0});
  n.add_row(std::vector<double>{-2.5e300, 4.9e-324});
  const auto back = Table::from_csv(n.to_csv());
  EXPECT_EQ(back.header(), n.header());
  EXPECT_EQ(back.number(0, "b"), 1.0 / 3.0);
  EXPECT_EQ(back.number(1, "a"), -2.5e300);
  EXPECT_EQ(back.number(1, "b"), 4.9e-324);
  EXPECT_EQ(Table::from_csv(t.to_csv()).cell(0, "label"), "weak");
}

TEST(Table, Errors) {
  Table t({"x"});
  EXPECT_THROW(t.add_row(std::vector<double>{1.0, 2.0}), ValidationError);
  EXPECT_THROW(t.column_index("y"), ValidationError);
  EXPECT_THROW(Table::from_csv(""), ValidationError);
  EXPECT_THROW(Table::from_csv("a,b\n1\n"), ValidationError);
}

TEST(Table, SaveLoad) {
  const auto dir = testing::scratch_dir("table");
  Table t({"t", "v"});
  t.add_row(std::vector<double>{0.0, 2.0});
  t.save(dir / "x.csv");
  EXPECT_EQ(Table::load(dir / "x.csv").to_csv(), t.to_csv());
}

TEST(Svg, OnePolylinePerSeries) {
  PlotSpec spec;
  spec.title = "a < b";
  spec.log_x = true;
  spec.log_y = true;
  spec.series = {{"one", {1, 10, 100}, {1, 2, 3}}, {"two", {1, 10, 100}, {3, 2, 1}}};
  const auto svg = render_svg(spec);
  EXPECT_EQ(svg.rfind("<svg", 0) == 0 || svg.rfind("<?xml", 0) == 0, true);
  EXPECT_EQ(count(svg, "class=\"series\""), 2u);
  EXPECT_NE(svg.find("data-label=\"one\""), std::string::npos);
  EXPECT_NE(svg.find("a &lt; b"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Svg, PumpSweepHasThreeSeries) {
  Table t({"w_p", "j_ph", "regime", "j_weak", "j_saturated"});
  t.add_row(std::vector<std::string>{"1", "0.5", "weak", "0.5", "10"});
  t.add_row(std::vector<std::string>{"10", "4", "intermediate", "5", "10"});
  const auto spec = plot_spec_for(t, PlotKind::pump_sweep, true);
  EXPECT_EQ(spec.series.size(), 3u);
  EXPECT_EQ(count(emit_plot(t, PlotKind::pump_sweep, true), "class=\"series\""), 3u);
}

TEST(Svg, EmptyTableRejected) {
  Table t({"t", "n2_radiative", "n2_auger"});
  EXPECT_THROW(emit_plot(t, PlotKind::decay, true), EmptyTable);
}

}  // namespace
}  // namespace auger
