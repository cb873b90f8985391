// residuum: analyze, route, render and catalogue residue designs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "residuum/analysis.hpp"
#include "residuum/design_graph.hpp"
#include "residuum/render.hpp"
#include "residuum/sweep.hpp"

namespace {

using namespace residuum;

bool write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << contents;
    return static_cast<bool>(out.flush());
}

int run_analyze(const DesignParams& params, const std::string& format) {
    const AnalysisRecord record = analysis::analyze(params);
    if (format == "text") {
        std::cout << analysis::to_text(record);
    } else if (format == "csv") {
        std::cout << analysis::kCsvHeader << '\n' << analysis::to_csv_row(record) << '\n';
    } else {
        std::cout << analysis::to_json(record) << '\n';
    }
    return 0;
}

int run_route(const DesignParams& params) {
    const RoutePlan plan = designgraph::route(designgraph::build_design(params));
    for (const auto& string : plan.strings) {
        for (std::size_t i = 0; i < string.size(); ++i) {
            if (i > 0) std::cout << ',';
            std::cout << string[i];
        }
        std::cout << '\n';
    }
    return 0;
}

int run_render(const DesignParams& params, const RenderStyle& style, std::string out_path) {
    if (out_path.empty()) {
        out_path = "design_n" + std::to_string(params.n) + "_a" + std::to_string(params.a) + ".svg";
    }
    const std::string svg = render::to_svg(designgraph::build_design(params), style);
    if (!write_file(out_path, svg)) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return 2;
    }
    std::cout << out_path << '\n';
    return 0;
}

struct CatalogOptions {
    sweep::CatalogGrid grid;
    std::string out_path;
    std::string format = "csv";
    bool primes_only = false;
    bool units_only = false;
    long long strings = -1;
};

bool keep(const CatalogOptions& options, const AnalysisRecord& row) {
    if (options.primes_only && !row.is_prime_n) return false;
    if (options.units_only && numtheory::gcd(row.params.a % row.params.n, row.params.n) != 1) return false;
    return options.strings < 0 || row.string_count == static_cast<std::uint64_t>(options.strings);
}

int run_catalog(const CatalogOptions& options) {
    const auto rows = sweep::catalog_parallel(options.grid, sweep::threads_from_env());
    std::ostringstream out;
    if (options.format == "json") {
        out << "[";
        bool first = true;
        for (const auto& row : rows) {
            if (!keep(options, row)) continue;
            out << (first ? "\n" : ",\n") << analysis::to_json(row);
            first = false;
        }
        out << "\n]\n";
    } else {
        out << analysis::kCsvHeader << '\n';
        for (const auto& row : rows) {
            if (!keep(options, row)) continue;
            out << analysis::to_csv_row(row) << '\n';
        }
    }
    if (options.out_path.empty() || options.out_path == "-") {
        std::cout << out.str();
        return 0;
    }
    if (!write_file(options.out_path, out.str())) {
        std::cerr << "error: cannot write " << options.out_path << '\n';
        return 2;
    }
    std::cout << options.out_path << '\n';
    return 0;
}

int run_verify(const sweep::VerifyGrid& grid) {
    const sweep::VerifyReport report = sweep::verify_parallel(grid, sweep::threads_from_env());
    char line[160];
    std::snprintf(line, sizeof line, "cells checked        %llu\n", static_cast<unsigned long long>(report.cells));
    std::cout << line;
    std::snprintf(line, sizeof line, "max |gross - oracle| %.3e\n", report.max_gross_error);
    std::cout << line;
    std::snprintf(line, sizeof line, "max |net - oracle|   %.3e\n", report.max_net_error);
    std::cout << line;
    std::snprintf(line, sizeof line, "subgroup mismatches  %llu\n",
                  static_cast<unsigned long long>(report.subgroup_mismatches));
    std::cout << line;
    std::snprintf(line, sizeof line, "tolerance            %.1e * n * r\n", grid.tolerance);
    std::cout << line;
    if (report.passed()) {
        std::cout << "PASS\n";
        return 0;
    }
    std::cout << "FAIL (" << report.failures.size() << " cells)\n";
    for (std::size_t i = 0; i < report.failures.size() && i < 10; ++i) {
        const auto& cell = report.failures[i];
        std::snprintf(line, sizeof line, "  n=%llu a=%llu gross_err=%.3e net_err=%.3e subgroup=%s\n",
                      static_cast<unsigned long long>(cell.n), static_cast<unsigned long long>(cell.a),
                      cell.gross_error, cell.net_error, cell.subgroup_match ? "ok" : "mismatch");
        std::cout << line;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Residue design string-art calculator"};
    app.require_subcommand(1);

    DesignParams params;
    std::string format = "json";
    auto* analyze = app.add_subcommand("analyze", "Lengths, subgroup structure and string count of one design");
    analyze->add_option("--n", params.n, "Number of nails")->required()->check(CLI::Range(1ULL, 100000000ULL));
    analyze->add_option("--a", params.a, "Multiplicative factor")->required()->check(CLI::PositiveNumber);
    analyze->add_option("--r", params.r, "Circle radius")->capture_default_str();
    analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));

    auto* route = app.add_subcommand("route", "Nail-by-nail routing, one line per string");
    route->add_option("--n", params.n, "Number of nails")->required()->check(CLI::Range(1ULL, 100000000ULL));
    route->add_option("--a", params.a, "Multiplicative factor")->required();

    RenderStyle style;
    std::string out_path;
    auto* render_cmd = app.add_subcommand("render", "Write the design as SVG");
    render_cmd->add_option("--n", params.n, "Number of nails")->required()->check(CLI::Range(1ULL, 100000000ULL));
    render_cmd->add_option("--a", params.a, "Multiplicative factor")->required();
    render_cmd->add_flag("--highlight-doubled", style.highlight_doubled, "Mark doubled edges and degenerate nails");
    render_cmd->add_flag("--labels", style.show_labels, "Number the nails");
    render_cmd->add_option("--label-every", style.label_every, "Label every k-th nail")->capture_default_str();
    render_cmd->add_option("--size", style.canvas_size, "Canvas size in pixels")->capture_default_str();
    render_cmd->add_option("--margin", style.margin, "Margin in pixels")->capture_default_str();
    render_cmd->add_option("--stroke", style.stroke_width, "Stroke width in pixels")->capture_default_str();
    render_cmd->add_option("-o,--out", out_path, "Output path (default design_n{n}_a{a}.svg)");

    CatalogOptions catalog;
    auto* catalog_cmd = app.add_subcommand("catalog", "Analyze every (n, a) in a grid");
    catalog_cmd->add_option("--n-min", catalog.grid.n_min)->required();
    catalog_cmd->add_option("--n-max", catalog.grid.n_max)->required();
    catalog_cmd->add_option("--a-min", catalog.grid.a_min)->required();
    catalog_cmd->add_option("--a-max", catalog.grid.a_max)->required();
    catalog_cmd->add_option("--r", catalog.grid.r)->capture_default_str();
    catalog_cmd->add_option("--format", catalog.format)->check(CLI::IsMember({"csv", "json"}));
    catalog_cmd->add_flag("--primes-only", catalog.primes_only, "Keep only prime n");
    catalog_cmd->add_flag("--units-only", catalog.units_only, "Keep only rows with gcd(a, n) = 1");
    catalog_cmd->add_option("--string-count", catalog.strings, "Keep only rows with this string count");
    catalog_cmd->add_option("-o,--out", catalog.out_path, "Output path (default stdout)");

    sweep::VerifyGrid verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against brute-force oracles");
    verify_cmd->add_option("--n-max", verify.n_max)->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--a-factor-max", verify.a_factor_max, "a ranges over [2, factor * n]")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--r", verify.r)->capture_default_str();
    verify_cmd->add_option("--inject-cot-fault", verify.cot_bias, "Perturb the cotangent (negative control)")
        ->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(params, format);
        if (*route) {
            params.r = 1.0;
            return run_route(params);
        }
        if (*render_cmd) return run_render(params, style, out_path);
        if (*catalog_cmd) return run_catalog(catalog);
        if (*verify_cmd) return run_verify(verify);
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 2;
    }
    return 0;
}
