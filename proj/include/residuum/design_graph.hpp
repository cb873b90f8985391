#pragma once

#include <cstdint>
#include <vector>

#include "residuum/numtheory.hpp"

namespace residuum {

enum class EdgeKind : std::uint8_t { plain, doubled };

/// Unordered nail pair with lo < hi.
struct Edge {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    EdgeKind kind = EdgeKind::plain;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Deduplicated residue design. Loops (ak = k) are recorded as degenerate
/// nails, never as edges. Edges are sorted by (lo, hi).
struct DesignGraph {
    DesignParams params;
    std::vector<Edge> edges;
    std::vector<std::uint64_t> degenerate_nails;  // ascending

    [[nodiscard]] std::uint64_t nail_count() const noexcept { return params.n; }
};

/// Strings in physical order; each is a trail of nails.
struct RoutePlan {
    std::vector<std::vector<std::uint64_t>> strings;
    double total_length = 0.0;
};

namespace designgraph {

DesignGraph build_design(const DesignParams& params);

/// Minimum number of trails covering every edge exactly once: per connected
/// component with edges, max(1, odd-degree nails / 2).
std::uint64_t string_count(const DesignGraph& graph);

/// Deterministic trail decomposition with exactly string_count() strings.
/// Components are emitted by smallest nail. Each walk starts at the smallest
/// odd-degree nail (or smallest nail) and prefers the design edge k -> ak,
/// then the smallest unused neighbour.
RoutePlan route(const DesignGraph& graph);

/// Checks that doubled and degenerate sources are exactly H and that the
/// sub-design on H, relabelled k -> k / (n/m), is build_design(m, a).
bool verify_subgroup_correspondence(const DesignParams& params);

}  // namespace designgraph
}  // namespace residuum
