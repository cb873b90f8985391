#pragma once

#include <string>

#include "residuum/design_graph.hpp"

namespace residuum {

/// Sizes are in SVG pixels.
struct RenderStyle {
    double canvas_size = 800.0;
    double margin = 40.0;
    double stroke_width = 0.75;
    bool highlight_doubled = false;
    bool show_labels = false;
    unsigned label_every = 1;
};

namespace render {

/// Throws std::invalid_argument when the style is unusable.
void validate(const RenderStyle& style);

/// SVG 1.1 document: the boundary circle, one circle per nail (nail k at
/// angle 2 pi k / n, counterclockwise from 3 o'clock) and one line per edge.
/// Output is byte-deterministic.
std::string to_svg(const DesignGraph& graph, const RenderStyle& style = {});

}  // namespace render
}  // namespace residuum
