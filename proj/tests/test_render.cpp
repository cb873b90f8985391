#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "residuum/render.hpp"

using namespace residuum;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
    return count;
}

void expect_well_formed(const std::string& svg) {
    std::istringstream in(svg);
    boost::property_tree::ptree tree;
    EXPECT_NO_THROW(boost::property_tree::read_xml(in, tree));
    EXPECT_EQ(tree.count("svg"), 1U);
}

std::string fixed3(double v) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << v;
    return out.str();
}

}  // namespace

TEST(Render, CardioidCounts) {
    const std::string svg = render::to_svg(designgraph::build_design({83, 2, 1.0}));
    expect_well_formed(svg);
    EXPECT_EQ(count_of(svg, "<line"), 82U);
    EXPECT_EQ(count_of(svg, "<circle"), 84U);
}

TEST(Render, SingleNail) {
    const std::string svg = render::to_svg(designgraph::build_design({1, 2, 1.0}));
    expect_well_formed(svg);
    EXPECT_EQ(count_of(svg, "<line"), 0U);
    EXPECT_EQ(count_of(svg, "<circle"), 2U);
}

TEST(Render, HighlightsDoubledAndDegenerate) {
    RenderStyle style;
    style.highlight_doubled = true;
    const std::string svg = render::to_svg(designgraph::build_design({56, 3, 1.0}), style);
    expect_well_formed(svg);
    EXPECT_EQ(count_of(svg, "<line class=\"doubled\""), 3U);
    EXPECT_EQ(count_of(svg, "<circle class=\"degenerate\""), 2U);
    EXPECT_EQ(count_of(svg, "<line"), 51U);

    const std::string plain = render::to_svg(designgraph::build_design({56, 3, 1.0}));
    EXPECT_EQ(count_of(plain, "class=\"doubled\""), 0U);
}

TEST(Render, NailCoordinates) {
    RenderStyle style;
    style.canvas_size = 500.0;
    style.margin = 50.0;
    const std::string svg = render::to_svg(designgraph::build_design({12, 5, 1.0}), style);
    const double c = 250.0;
    const double radius = 200.0;
    // Nail 0 at 3 o'clock, nail n/4 at 12 o'clock (screen y decreases).
    EXPECT_NE(svg.find("cx=\"" + fixed3(c + radius) + "\" cy=\"" + fixed3(c) + "\""), std::string::npos);
    EXPECT_NE(svg.find("cx=\"" + fixed3(c) + "\" cy=\"" + fixed3(c - radius) + "\""), std::string::npos);
    const double angle = 2.0 * std::numbers::pi * 5.0 / 12.0;
    EXPECT_NE(svg.find("cx=\"" + fixed3(c + radius * std::cos(angle)) + "\" cy=\"" +
                       fixed3(c - radius * std::sin(angle)) + "\""),
              std::string::npos);
}

TEST(Render, ByteDeterministic) {
    RenderStyle style;
    style.show_labels = true;
    style.label_every = 5;
    const auto graph = designgraph::build_design({83, 4, 1.0});
    const std::string first = render::to_svg(graph, style);
    EXPECT_EQ(first, render::to_svg(graph, style));
    expect_well_formed(first);
    EXPECT_EQ(count_of(first, "<text"), 17U);
}

TEST(Render, RejectsBadStyle) {
    const auto graph = designgraph::build_design({10, 3, 1.0});
    RenderStyle style;
    style.margin = 400.0;
    EXPECT_THROW(render::to_svg(graph, style), std::invalid_argument);
    style = RenderStyle{};
    style.stroke_width = 0.0;
    EXPECT_THROW(render::to_svg(graph, style), std::invalid_argument);
    style = RenderStyle{};
    style.label_every = 0;
    EXPECT_THROW(render::to_svg(graph, style), std::invalid_argument);
}
