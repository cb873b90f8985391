#pragma once

#include <cstdint>
#include <vector>

#include "residuum/numtheory.hpp"

// Brute-force references. O(n) or O(n log n) per query, written without any
// of the closed-form helpers they are used to check.
namespace residuum::oracle {

/// Direct sum of 2r sin(pi d_k / n), d_k = (a - 1) k mod n.
double brute_gross(const DesignParams& params);

/// Sum of chords over the distinct unordered pairs {k, ak mod n}, k != ak.
double brute_net(const DesignParams& params);

/// Scan of s in [0, n) with a^2 s = s (mod n).
std::vector<std::uint64_t> brute_H(const DesignParams& params);

}  // namespace residuum::oracle
