#include "residuum/numtheory.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace residuum {

void validate(const DesignParams& params) {
    if (params.n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    if (params.a < 2) {
        throw std::invalid_argument("a must be at least 2, got " + std::to_string(params.a));
    }
    if (!std::isfinite(params.r) || params.r <= 0.0) {
        throw std::invalid_argument("r must be a positive finite radius");
    }
}

namespace numtheory {

__extension__ using Wide = unsigned __int128;

std::uint64_t gcd(std::uint64_t x, std::uint64_t y) noexcept { return std::gcd(x, y); }

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(static_cast<Wide>(x) * y % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) noexcept {
    std::uint64_t result = 1 % n;
    base %= n;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        exp >>= 1U;
    }
    return result;
}

std::uint64_t step_gcd(std::uint64_t a, std::uint64_t n) noexcept {
    const std::uint64_t a_minus_one = (a % n + n - 1) % n;
    return gcd(a_minus_one, n);
}

SubgroupInfo doubled_subgroup(const DesignParams& params) {
    validate(params);
    const std::uint64_t n = params.n;
    const std::uint64_t a = params.a % n;
    // The largest divisor m of n with m | a^2 - 1 is gcd(a^2 - 1, n).
    const std::uint64_t square_minus_one = (mul_mod(a, a, n) + n - 1) % n;
    SubgroupInfo info;
    info.m = gcd(square_minus_one, n);
    info.generator = n / info.m;
    info.g1 = step_gcd(params.a, n);
    info.g2 = step_gcd(params.a, info.m);
    return info;
}

std::vector<std::uint64_t> enumerate_H(const DesignParams& params) {
    const SubgroupInfo info = doubled_subgroup(params);
    std::vector<std::uint64_t> elements;
    elements.reserve(info.m);
    for (std::uint64_t i = 0; i < info.m; ++i) {
        elements.push_back(i * info.generator);
    }
    return elements;
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : kBases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t base : kBases) {
        std::uint64_t x = pow_mod(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t q = 2; q <= n / q; q += (q == 2 ? 1 : 2)) {
        if (n % q == 0) {
            factors.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

namespace {

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = n;
    for (std::uint64_t q : prime_factors(n)) {
        phi = phi / q * (q - 1);
    }
    return phi;
}

}  // namespace

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
    if (n < 2) {
        throw std::domain_error("multiplicative order needs a modulus of at least 2");
    }
    if (gcd(a % n, n) != 1) {
        throw std::domain_error("multiplicative order undefined: gcd(" + std::to_string(a) + ", " +
                                std::to_string(n) + ") != 1");
    }
    std::uint64_t order = euler_phi(n);
    for (std::uint64_t q : prime_factors(order)) {
        while (order % q == 0 && pow_mod(a, order / q, n) == 1) {
            order /= q;
        }
    }
    return order;
}

bool is_primitive_root(std::uint64_t a, std::uint64_t p) {
    if (!is_prime(p)) {
        throw std::domain_error(std::to_string(p) + " is not prime");
    }
    if (gcd(a % p, p) != 1) {
        throw std::domain_error(std::to_string(a) + " is not a unit mod " + std::to_string(p));
    }
    for (std::uint64_t q : prime_factors(p - 1)) {
        if (pow_mod(a, (p - 1) / q, p) == 1) return false;
    }
    return true;
}

}  // namespace numtheory
}  // namespace residuum
