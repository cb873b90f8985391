#pragma once

#include <cstdint>
#include <vector>

namespace residuum {

/// One residue design: n nails on a circle of radius r, nail k joined to
/// nail a*k mod n. `a` is kept as given; arithmetic reduces it mod n.
struct DesignParams {
    std::uint64_t n = 1;
    std::uint64_t a = 2;
    double r = 1.0;
};

/// Throws std::invalid_argument unless n >= 1, a >= 2 and r is finite and > 0.
void validate(const DesignParams& params);

/// Structure of H = {s in Z_n : a^2 s = s (mod n)}, the sources of doubled
/// or degenerate segments.
struct SubgroupInfo {
    std::uint64_t m = 1;          // |H|, the largest divisor of n with a^2 = 1 (mod m)
    std::uint64_t generator = 1;  // n / m; equals n (i.e. 0 in Z_n) when H = {0}
    std::uint64_t g1 = 1;         // gcd(a - 1, n)
    std::uint64_t g2 = 1;         // gcd(a - 1, m)

    friend bool operator==(const SubgroupInfo&, const SubgroupInfo&) = default;
};

namespace numtheory {

/// gcd(0, 0) is 0.
std::uint64_t gcd(std::uint64_t x, std::uint64_t y) noexcept;

/// (x * y) mod n without overflow; n > 0.
std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t n) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) noexcept;

/// gcd(a - 1, n) with a reduced mod n first, so a = 1 (mod n) gives n.
std::uint64_t step_gcd(std::uint64_t a, std::uint64_t n) noexcept;

SubgroupInfo doubled_subgroup(const DesignParams& params);

/// Ascending elements of H; always starts with 0.
std::vector<std::uint64_t> enumerate_H(const DesignParams& params);

/// Deterministic for the whole 64-bit range.
bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors, ascending (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Smallest d >= 1 with a^d = 1 (mod n). Requires n >= 2 and gcd(a, n) = 1;
/// throws std::domain_error otherwise.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// Throws std::domain_error unless p is prime and gcd(a, p) = 1.
bool is_primitive_root(std::uint64_t a, std::uint64_t p);

}  // namespace numtheory
}  // namespace residuum
