#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "residuum/analysis.hpp"

// Grid sweeps over (n, a). Each cell is independent; the *_parallel kernels
// use OpenMP and must produce exactly what the *_serial references produce.
namespace residuum::sweep {

struct CatalogGrid {
    std::uint64_t n_min = 1;
    std::uint64_t n_max = 1;
    std::uint64_t a_min = 2;
    std::uint64_t a_max = 2;
    double r = 1.0;
};

/// Rows sorted by (n, a).
std::vector<AnalysisRecord> catalog_serial(const CatalogGrid& grid);
std::vector<AnalysisRecord> catalog_parallel(const CatalogGrid& grid, unsigned threads = 0);

struct VerifyGrid {
    std::uint64_t n_max = 1;
    std::uint64_t a_factor_max = 2;  // a ranges over [2, a_factor_max * n]
    double r = 1.0;
    double tolerance = 1e-9;         // per unit of n * r
    double cot_bias = 0.0;           // fault injection for negative controls
};

struct CellResult {
    std::uint64_t n = 0;
    std::uint64_t a = 0;
    double gross_error = 0.0;
    double net_error = 0.0;
    bool subgroup_match = true;
    bool passed = true;
};

struct VerifyReport {
    std::uint64_t cells = 0;
    double max_gross_error = 0.0;
    double max_net_error = 0.0;
    std::uint64_t subgroup_mismatches = 0;
    std::vector<CellResult> failures;  // in (n, a) order

    [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

VerifyReport verify_serial(const VerifyGrid& grid);
VerifyReport verify_parallel(const VerifyGrid& grid, unsigned threads = 0);

/// RESIDUUM_THREADS, or 0 (auto) when unset or unparsable.
unsigned threads_from_env();

}  // namespace residuum::sweep
