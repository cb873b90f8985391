#pragma once

#include <cstdint>

#include "residuum/numtheory.hpp"

namespace residuum {

/// Lengths are in the units of DesignParams::r.
struct LengthReport {
    double gross = 0.0;   // per-k sum, doubled segments counted twice
    double net = 0.0;     // physical string, each segment once
    double approx = 0.0;  // (4n - 2m) r / pi
    std::uint64_t m = 1;
    std::uint64_t g1 = 1;
    std::uint64_t g2 = 1;
    std::uint64_t doubled_segment_count = 0;  // unordered pairs {s, as}, s in H, as != s
    std::uint64_t degenerate_count = 0;       // s with as = s (mod n)
};

namespace metrics {

/// 2r sin(pi j / n), with j reduced mod n (negative j allowed).
double chord_length(double r, std::uint64_t n, std::int64_t j);

/// Sum over k of |k -> ak mod n| in closed form: 2 r g cot(pi g / 2n), g = gcd(a - 1, n).
double gross_length(const DesignParams& params);

/// gross - S(m, a, r) / 2, plus the segment tallies.
LengthReport net_length(const DesignParams& params);

double approx_length(const DesignParams& params);

/// Closed form of sum_{j=0}^{m} sin(j theta). Throws std::domain_error when
/// theta is (numerically) a multiple of 2 pi, where the naive sum is 0.
double lagrange_sum(std::uint64_t m, double theta);

namespace detail {

/// 2 r g cot(pi g / 2n) with an additive bias on the cotangent; the bias is
/// nonzero only for fault-injection runs of the verifier.
double cot_sum(double r, std::uint64_t g, std::uint64_t n, double cot_bias = 0.0);

LengthReport net_length(const DesignParams& params, double cot_bias);

}  // namespace detail
}  // namespace metrics
}  // namespace residuum
