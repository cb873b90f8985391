#include "residuum/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace residuum::metrics {

double chord_length(double r, std::uint64_t n, std::int64_t j) {
    const auto modulus = static_cast<std::int64_t>(n);
    std::int64_t steps = j % modulus;
    if (steps < 0) steps += modulus;
    return 2.0 * r * std::sin(std::numbers::pi * static_cast<double>(steps) / static_cast<double>(n));
}

namespace detail {

double cot_sum(double r, std::uint64_t g, std::uint64_t n, double cot_bias) {
    // Angle lies in (0, pi/2]; at pi/2 (g == n) cos is ~6e-17, not exactly 0.
    const double angle = (std::numbers::pi * static_cast<double>(g)) / (2.0 * static_cast<double>(n));
    const double cot = std::cos(angle) / std::sin(angle) + cot_bias;
    return 2.0 * r * static_cast<double>(g) * cot;
}

LengthReport net_length(const DesignParams& params, double cot_bias) {
    const SubgroupInfo info = numtheory::doubled_subgroup(params);
    LengthReport report;
    report.m = info.m;
    report.g1 = info.g1;
    report.g2 = info.g2;
    report.gross = cot_sum(params.r, info.g1, params.n, cot_bias);
    report.net = report.gross - 0.5 * cot_sum(params.r, info.g2, info.m, cot_bias);
    report.approx = approx_length(params);
    // Every fixed point of k -> ak lies in H, so H splits into g1 loops and
    // (m - g1) / 2 doubled pairs.
    report.degenerate_count = info.g1;
    report.doubled_segment_count = (info.m - info.g1) / 2;
    return report;
}

}  // namespace detail

double gross_length(const DesignParams& params) {
    validate(params);
    return detail::cot_sum(params.r, numtheory::step_gcd(params.a, params.n), params.n);
}

LengthReport net_length(const DesignParams& params) { return detail::net_length(params, 0.0); }

double approx_length(const DesignParams& params) {
    const SubgroupInfo info = numtheory::doubled_subgroup(params);
    const double weight = 4.0 * static_cast<double>(params.n) - 2.0 * static_cast<double>(info.m);
    return weight * params.r / std::numbers::pi;
}

double lagrange_sum(std::uint64_t m, double theta) {
    const double half = std::sin(theta / 2.0);
    const double threshold = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(theta));
    if (std::abs(half) <= threshold) {
        throw std::domain_error("lagrange_sum: theta is a multiple of 2*pi");
    }
    const auto count = static_cast<double>(m);
    return std::sin(count * theta / 2.0) * std::sin((count + 1.0) * theta / 2.0) / half;
}

}  // namespace residuum::metrics
