#include "residuum/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string_view>

namespace residuum::render {
namespace {

// Fixed three decimals; -0.000 is printed as 0.000.
std::string fixed3(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.3f", value);
    std::string text(buffer);
    if (text == "-0.000") text = "0.000";
    return text;
}

struct Point {
    double x;
    double y;
};

class Layout {
public:
    Layout(const RenderStyle& style, std::uint64_t n)
        : centre_(style.canvas_size / 2.0), radius_(style.canvas_size / 2.0 - style.margin), n_(n) {}

    [[nodiscard]] Point nail(std::uint64_t k) const {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_);
        return {centre_ + radius_ * std::cos(angle), centre_ - radius_ * std::sin(angle)};
    }

    [[nodiscard]] double centre() const { return centre_; }
    [[nodiscard]] double radius() const { return radius_; }

private:
    double centre_;
    double radius_;
    std::uint64_t n_;
};

}  // namespace

void validate(const RenderStyle& style) {
    if (!(style.canvas_size > 2.0 * style.margin) || style.margin < 0.0) {
        throw std::invalid_argument("canvas_size must exceed twice the margin");
    }
    if (!(style.stroke_width > 0.0)) {
        throw std::invalid_argument("stroke_width must be positive");
    }
    if (style.label_every < 1) {
        throw std::invalid_argument("label_every must be at least 1");
    }
}

std::string to_svg(const DesignGraph& graph, const RenderStyle& style) {
    validate(style);
    const std::uint64_t n = graph.params.n;
    const Layout layout(style, n);
    const std::string size = fixed3(style.canvas_size);
    const std::string stroke = fixed3(style.stroke_width);
    const std::string nail_radius = fixed3(std::max(1.0, 2.0 * style.stroke_width));

    std::string out;
    out.reserve(256 + 96 * (graph.edges.size() + n));
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
           "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
    out += "<title>residue design n=" + std::to_string(n) + " a=" + std::to_string(graph.params.a) + "</title>\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<circle class=\"boundary\" cx=\"" + fixed3(layout.centre()) + "\" cy=\"" + fixed3(layout.centre()) +
           "\" r=\"" + fixed3(layout.radius()) + "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"" + stroke +
           "\"/>\n";

    out += "<g class=\"segments\" stroke-width=\"" + stroke + "\" stroke-linecap=\"round\">\n";
    for (const Edge& e : graph.edges) {
        const Point p = layout.nail(e.lo);
        const Point q = layout.nail(e.hi);
        const bool marked = style.highlight_doubled && e.kind == EdgeKind::doubled;
        out += "<line";
        if (marked) out += " class=\"doubled\"";
        out += " x1=\"" + fixed3(p.x) + "\" y1=\"" + fixed3(p.y) + "\" x2=\"" + fixed3(q.x) + "\" y2=\"" +
               fixed3(q.y) + "\" stroke=\"" + (marked ? "#d62728" : "#1f3b73") + "\"";
        if (marked) out += " stroke-width=\"" + fixed3(3.0 * style.stroke_width) + "\"";
        out += "/>\n";
    }
    out += "</g>\n";

    out += "<g class=\"nails\">\n";
    auto degenerate = graph.degenerate_nails.begin();
    for (std::uint64_t k = 0; k < n; ++k) {
        while (degenerate != graph.degenerate_nails.end() && *degenerate < k) ++degenerate;
        const bool marked =
            style.highlight_doubled && degenerate != graph.degenerate_nails.end() && *degenerate == k;
        const Point p = layout.nail(k);
        out += "<circle";
        if (marked) out += " class=\"degenerate\"";
        out += " cx=\"" + fixed3(p.x) + "\" cy=\"" + fixed3(p.y) + "\" r=\"" +
               (marked ? fixed3(3.0 * std::max(1.0, 2.0 * style.stroke_width)) : nail_radius) + "\" fill=\"" +
               (marked ? "#d62728" : "#000000") + "\"/>\n";
    }
    out += "</g>\n";

    if (style.show_labels) {
        const double label_radius = layout.radius() + style.margin / 2.0;
        out += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"" + fixed3(std::max(6.0, style.margin / 3.0)) +
               "\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
        for (std::uint64_t k = 0; k < n; k += style.label_every) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            out += "<text x=\"" + fixed3(layout.centre() + label_radius * std::cos(angle)) + "\" y=\"" +
                   fixed3(layout.centre() - label_radius * std::sin(angle)) + "\">" + std::to_string(k) +
                   "</text>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace residuum::render
