#include "residuum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

namespace residuum::oracle {
namespace {

__extension__ using Wide = unsigned __int128;

std::uint64_t times_mod(std::uint64_t x, std::uint64_t y, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<Wide>(x % n) * (y % n)) % n);
}

double chord(double r, std::uint64_t steps, std::uint64_t n) {
    return 2.0 * r * std::sin(std::numbers::pi * static_cast<double>(steps) / static_cast<double>(n));
}

}  // namespace

double brute_gross(const DesignParams& params) {
    validate(params);
    const std::uint64_t n = params.n;
    // a - 1 taken mod n without going negative.
    const std::uint64_t shift = (params.a % n + n - 1) % n;
    double total = 0.0;
    for (std::uint64_t k = 0; k < n; ++k) {
        total += chord(params.r, times_mod(shift, k, n), n);
    }
    return total;
}

double brute_net(const DesignParams& params) {
    validate(params);
    const std::uint64_t n = params.n;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    pairs.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) {
        const std::uint64_t target = times_mod(params.a, k, n);
        if (target != k) pairs.emplace_back(std::min(k, target), std::max(k, target));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    double total = 0.0;
    for (const auto& [lo, hi] : pairs) total += chord(params.r, hi - lo, n);
    return total;
}

std::vector<std::uint64_t> brute_H(const DesignParams& params) {
    validate(params);
    const std::uint64_t n = params.n;
    std::vector<std::uint64_t> members;
    for (std::uint64_t s = 0; s < n; ++s) {
        if (times_mod(params.a, times_mod(params.a, s, n), n) == s) members.push_back(s);
    }
    return members;
}

}  // namespace residuum::oracle
