#include "residuum/design_graph.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "residuum/metrics.hpp"

namespace residuum::designgraph {

DesignGraph build_design(const DesignParams& params) {
    validate(params);
    const std::uint64_t n = params.n;
    const std::uint64_t a = params.a % n;
    DesignGraph graph;
    graph.params = params;
    graph.edges.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        const std::uint64_t image = numtheory::mul_mod(a, k, n);
        if (image == k) {
            graph.degenerate_nails.push_back(k);
            continue;
        }
        const bool doubled = numtheory::mul_mod(a, image, n) == k;
        // A doubled pair is generated from both ends; keep the copy from its low end.
        if (doubled && image < k) continue;
        graph.edges.push_back(Edge{std::min(k, image), std::max(k, image),
                                   doubled ? EdgeKind::doubled : EdgeKind::plain});
    }
    std::sort(graph.edges.begin(), graph.edges.end(),
              [](const Edge& x, const Edge& y) { return std::pair(x.lo, x.hi) < std::pair(y.lo, y.hi); });
    return graph;
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t size) : parent_(size) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return;
        if (x > y) std::swap(x, y);
        parent_[y] = x;  // root is the smallest nail of the component
    }

private:
    std::vector<std::size_t> parent_;
};

struct Components {
    std::vector<std::size_t> root;             // per nail
    std::vector<std::uint64_t> degree;         // per nail
    std::vector<std::size_t> roots_with_edges;  // ascending
};

Components components_of(const DesignGraph& graph) {
    const std::size_t n = graph.params.n;
    DisjointSets sets(n);
    Components result;
    result.degree.assign(n, 0);
    for (const Edge& e : graph.edges) {
        sets.unite(e.lo, e.hi);
        ++result.degree[e.lo];
        ++result.degree[e.hi];
    }
    result.root.resize(n);
    std::vector<bool> seen(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        result.root[v] = sets.find(v);
        if (result.degree[v] > 0 && !seen[result.root[v]]) {
            seen[result.root[v]] = true;
            result.roots_with_edges.push_back(result.root[v]);
        }
    }
    return result;
}

// Multigraph over nails used during routing; virtual edges pair up odd nails.
struct WorkEdge {
    std::size_t u;
    std::size_t v;
    bool is_virtual;
};

struct Incidence {
    std::size_t neighbour;
    std::size_t edge;
};

class Router {
public:
    explicit Router(const DesignGraph& graph)
        : graph_(graph), n_(graph.params.n), a_(graph.params.a % graph.params.n), adjacency_(n_),
          cursor_(n_, 0), design_edge_(n_, kNone) {
        for (const Edge& e : graph.edges) add_edge(e.lo, e.hi, false);
        for (std::size_t id = 0; id < edges_.size(); ++id) {
            const WorkEdge& e = edges_[id];
            if (numtheory::mul_mod(a_, e.u, n_) == e.v) design_edge_[e.u] = id;
            if (numtheory::mul_mod(a_, e.v, n_) == e.u) design_edge_[e.v] = id;
        }
    }

    RoutePlan run() {
        const Components comps = components_of(graph_);
        std::vector<std::vector<std::size_t>> odd_by_root(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            if (comps.degree[v] % 2 == 1) odd_by_root[comps.root[v]].push_back(v);
        }
        for (const auto& odd : odd_by_root) {
            // Join o2-o3, o4-o5, ... so only the smallest and largest odd nails stay odd.
            for (std::size_t i = 1; i + 2 < odd.size(); i += 2) add_edge(odd[i], odd[i + 1], true);
        }
        for (auto& list : adjacency_) {
            std::sort(list.begin(), list.end(), [this](const Incidence& x, const Incidence& y) {
                if (edges_[x.edge].is_virtual != edges_[y.edge].is_virtual) return !edges_[x.edge].is_virtual;
                return std::pair(x.neighbour, x.edge) < std::pair(y.neighbour, y.edge);
            });
        }
        used_.assign(edges_.size(), false);

        RoutePlan plan;
        for (std::size_t root : comps.roots_with_edges) {
            const auto& odd = odd_by_root[root];
            const std::size_t start = odd.empty() ? root : odd.front();
            for (auto& piece : trail_from(start)) plan.strings.push_back(std::move(piece));
        }
        for (const auto& string : plan.strings) {
            for (std::size_t i = 1; i < string.size(); ++i) {
                plan.total_length += metrics::chord_length(
                    graph_.params.r, n_, static_cast<std::int64_t>(string[i]) - static_cast<std::int64_t>(string[i - 1]));
            }
        }
        return plan;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    void add_edge(std::size_t u, std::size_t v, bool is_virtual) {
        const std::size_t id = edges_.size();
        edges_.push_back(WorkEdge{u, v, is_virtual});
        adjacency_[u].push_back(Incidence{v, id});
        adjacency_[v].push_back(Incidence{u, id});
    }

    std::size_t next_edge(std::size_t v) {
        const std::size_t preferred = design_edge_[v];
        if (preferred != kNone && !used_[preferred]) return preferred;
        auto& list = adjacency_[v];
        std::size_t& pos = cursor_[v];
        while (pos < list.size() && used_[list[pos].edge]) ++pos;
        return pos < list.size() ? list[pos].edge : kNone;
    }

    // Hierholzer from `start`, split into strings at virtual edges.
    std::vector<std::vector<std::uint64_t>> trail_from(std::size_t start) {
        struct Frame {
            std::size_t nail;
            std::size_t via;  // edge used to reach this nail
        };
        std::vector<Frame> stack{{start, kNone}};
        std::vector<Frame> circuit;
        while (!stack.empty()) {
            const std::size_t v = stack.back().nail;
            const std::size_t id = next_edge(v);
            if (id == kNone) {
                circuit.push_back(stack.back());
                stack.pop_back();
                continue;
            }
            used_[id] = true;
            const WorkEdge& e = edges_[id];
            stack.push_back(Frame{e.u == v ? e.v : e.u, id});
        }
        std::reverse(circuit.begin(), circuit.end());

        // circuit[i].via joins circuit[i - 1] and circuit[i].
        std::vector<std::vector<std::uint64_t>> pieces(1);
        pieces.back().push_back(circuit.front().nail);
        for (std::size_t i = 1; i < circuit.size(); ++i) {
            if (edges_[circuit[i].via].is_virtual) {
                pieces.emplace_back();
            }
            pieces.back().push_back(circuit[i].nail);
        }
        return pieces;
    }

    const DesignGraph& graph_;
    std::size_t n_;
    std::uint64_t a_;
    std::vector<WorkEdge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::vector<std::size_t> cursor_;
    std::vector<std::size_t> design_edge_;
    std::vector<bool> used_;
};

}  // namespace

std::uint64_t string_count(const DesignGraph& graph) {
    const Components comps = components_of(graph);
    std::vector<std::uint64_t> odd(graph.params.n, 0);
    for (std::size_t v = 0; v < graph.params.n; ++v) {
        if (comps.degree[v] % 2 == 1) ++odd[comps.root[v]];
    }
    std::uint64_t count = 0;
    for (std::size_t root : comps.roots_with_edges) count += std::max<std::uint64_t>(1, odd[root] / 2);
    return count;
}

RoutePlan route(const DesignGraph& graph) { return Router(graph).run(); }

bool verify_subgroup_correspondence(const DesignParams& params) {
    const DesignGraph full = build_design(params);
    const std::vector<std::uint64_t> subgroup = numtheory::enumerate_H(params);

    std::vector<std::uint64_t> sources = full.degenerate_nails;
    std::vector<Edge> doubled;
    for (const Edge& e : full.edges) {
        if (e.kind != EdgeKind::doubled) continue;
        sources.push_back(e.lo);
        sources.push_back(e.hi);
        doubled.push_back(e);
    }
    std::sort(sources.begin(), sources.end());
    if (sources != subgroup) return false;

    const std::uint64_t m = subgroup.size();
    const std::uint64_t step = params.n / m;
    DesignGraph relabelled;
    for (std::uint64_t nail : full.degenerate_nails) relabelled.degenerate_nails.push_back(nail / step);
    for (const Edge& e : doubled) relabelled.edges.push_back(Edge{e.lo / step, e.hi / step, e.kind});

    const DesignGraph small = build_design(DesignParams{m, params.a, params.r});
    // In the m-nail design every edge must itself be doubled.
    return relabelled.edges == small.edges && relabelled.degenerate_nails == small.degenerate_nails;
}

}  // namespace residuum::designgraph
