#include "residuum/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include <omp.h>

#include "residuum/metrics.hpp"
#include "residuum/oracle.hpp"

namespace residuum::sweep {
namespace {

using Cell = std::pair<std::uint64_t, std::uint64_t>;

std::vector<Cell> catalog_cells(const CatalogGrid& grid) {
    if (grid.n_min < 1 || grid.n_min > grid.n_max) throw std::invalid_argument("empty or invalid n range");
    if (grid.a_min < 2 || grid.a_min > grid.a_max) throw std::invalid_argument("empty or invalid a range");
    validate(DesignParams{grid.n_min, grid.a_min, grid.r});
    std::vector<Cell> cells;
    cells.reserve((grid.n_max - grid.n_min + 1) * (grid.a_max - grid.a_min + 1));
    for (std::uint64_t n = grid.n_min; n <= grid.n_max; ++n) {
        for (std::uint64_t a = grid.a_min; a <= grid.a_max; ++a) cells.emplace_back(n, a);
    }
    return cells;
}

std::vector<Cell> verify_cells(const VerifyGrid& grid) {
    if (grid.n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    if (grid.a_factor_max < 1) throw std::invalid_argument("a_factor_max must be at least 1");
    validate(DesignParams{1, 2, grid.r});
    std::vector<Cell> cells;
    for (std::uint64_t n = 1; n <= grid.n_max; ++n) {
        for (std::uint64_t a = 2; a <= std::max<std::uint64_t>(2, grid.a_factor_max * n); ++a) {
            cells.emplace_back(n, a);
        }
    }
    return cells;
}

CellResult check_cell(const VerifyGrid& grid, const Cell& cell) {
    const DesignParams params{cell.first, cell.second, grid.r};
    const LengthReport closed = metrics::detail::net_length(params, grid.cot_bias);
    CellResult result;
    result.n = cell.first;
    result.a = cell.second;
    result.gross_error = std::abs(closed.gross - oracle::brute_gross(params));
    result.net_error = std::abs(closed.net - oracle::brute_net(params));
    result.subgroup_match = numtheory::enumerate_H(params) == oracle::brute_H(params);
    const double tolerance = grid.tolerance * static_cast<double>(params.n) * params.r;
    result.passed = result.gross_error <= tolerance && result.net_error <= tolerance && result.subgroup_match;
    return result;
}

VerifyReport summarize(const std::vector<CellResult>& results) {
    VerifyReport report;
    report.cells = results.size();
    for (const CellResult& cell : results) {
        report.max_gross_error = std::max(report.max_gross_error, cell.gross_error);
        report.max_net_error = std::max(report.max_net_error, cell.net_error);
        if (!cell.subgroup_match) ++report.subgroup_mismatches;
        if (!cell.passed) report.failures.push_back(cell);
    }
    return report;
}

int resolve_threads(unsigned threads) {
    return threads == 0 ? omp_get_max_threads() : static_cast<int>(threads);
}

}  // namespace

std::vector<AnalysisRecord> catalog_serial(const CatalogGrid& grid) {
    std::vector<AnalysisRecord> rows;
    for (const Cell& cell : catalog_cells(grid)) {
        rows.push_back(analysis::analyze(DesignParams{cell.first, cell.second, grid.r}));
    }
    return rows;
}

std::vector<AnalysisRecord> catalog_parallel(const CatalogGrid& grid, unsigned threads) {
    const std::vector<Cell> cells = catalog_cells(grid);
    std::vector<AnalysisRecord> rows(cells.size());
    const auto count = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve_threads(threads))
    for (std::int64_t i = 0; i < count; ++i) {
        rows[i] = analysis::analyze(DesignParams{cells[i].first, cells[i].second, grid.r});
    }
    return rows;
}

VerifyReport verify_serial(const VerifyGrid& grid) {
    std::vector<CellResult> results;
    for (const Cell& cell : verify_cells(grid)) results.push_back(check_cell(grid, cell));
    return summarize(results);
}

VerifyReport verify_parallel(const VerifyGrid& grid, unsigned threads) {
    const std::vector<Cell> cells = verify_cells(grid);
    std::vector<CellResult> results(cells.size());
    const auto count = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve_threads(threads))
    for (std::int64_t i = 0; i < count; ++i) {
        results[i] = check_cell(grid, cells[i]);
    }
    return summarize(results);
}

unsigned threads_from_env() {
    const char* value = std::getenv("RESIDUUM_THREADS");
    if (value == nullptr) return 0;
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(value, &end, 10);
    if (end == value || *end != '\0') return 0;
    return static_cast<unsigned>(parsed);
}

}  // namespace residuum::sweep
