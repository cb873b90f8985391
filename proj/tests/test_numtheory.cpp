#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "reference.hpp"
#include "residuum/numtheory.hpp"

using namespace residuum;
using namespace residuum::numtheory;

TEST(Gcd, Examples) {
    EXPECT_EQ(gcd(2, 56), 2U);
    EXPECT_EQ(gcd(1, 83), 1U);
    EXPECT_EQ(gcd(24, 40), 8U);
    EXPECT_EQ(gcd(7, 0), 7U);
    EXPECT_EQ(gcd(0, 0), 0U);
}

TEST(Validate, RejectsBadParams) {
    EXPECT_THROW(validate({0, 2, 1.0}), std::invalid_argument);
    EXPECT_THROW(validate({5, 1, 1.0}), std::invalid_argument);
    EXPECT_THROW(validate({5, 2, 0.0}), std::invalid_argument);
    EXPECT_THROW(validate({5, 2, -1.0}), std::invalid_argument);
    EXPECT_THROW(validate({5, 2, std::numeric_limits<double>::infinity()}), std::invalid_argument);
    EXPECT_NO_THROW(validate({1, 2, 0.5}));
}

TEST(DoubledSubgroup, WorkedExamples) {
    const SubgroupInfo h56 = doubled_subgroup({56, 3, 5.0});
    EXPECT_EQ(h56.m, 8U);
    EXPECT_EQ(h56.generator, 7U);
    EXPECT_EQ(h56.g1, 2U);
    EXPECT_EQ(h56.g2, 2U);

    const SubgroupInfo trivial = doubled_subgroup({40, 2, 1.0});
    EXPECT_EQ(trivial.m, 1U);
    EXPECT_EQ(trivial.generator, 40U);

    EXPECT_EQ(doubled_subgroup({40, 6, 1.0}).generator, 8U);

    const SubgroupInfo whole = doubled_subgroup({12, 5, 1.0});
    EXPECT_EQ(whole.m, 12U);
    EXPECT_EQ(whole.generator, 1U);
}

TEST(DoubledSubgroup, AReducedModN) {
    // a = 1 (mod n) is allowed: everything is degenerate and g1 = n.
    const SubgroupInfo info = doubled_subgroup({10, 11, 1.0});
    EXPECT_EQ(info.m, 10U);
    EXPECT_EQ(info.g1, 10U);
    EXPECT_EQ(doubled_subgroup({56, 3 + 56 * 7, 1.0}), doubled_subgroup({56, 3, 1.0}));
}

TEST(EnumerateH, WorkedExamples) {
    EXPECT_EQ(enumerate_H({56, 3, 1.0}), (std::vector<std::uint64_t>{0, 7, 14, 21, 28, 35, 42, 49}));
    EXPECT_EQ(enumerate_H({40, 2, 1.0}), (std::vector<std::uint64_t>{0}));
    std::vector<std::uint64_t> all(12);
    std::iota(all.begin(), all.end(), 0U);
    EXPECT_EQ(enumerate_H({12, 5, 1.0}), all);
    EXPECT_EQ(enumerate_H({1, 2, 1.0}), (std::vector<std::uint64_t>{0}));
}

TEST(DoubledSubgroup, MatchesDivisorScanExhaustively) {
    for (std::uint64_t n = 1; n <= 300; ++n) {
        for (std::uint64_t a = 2; a <= 2 * n; ++a) {
            const SubgroupInfo info = doubled_subgroup({n, a, 1.0});
            ASSERT_EQ(info.m, reference::largest_square_root_divisor(n, a)) << n << ' ' << a;
            ASSERT_EQ(info.generator * info.m, n);
            ASSERT_EQ(info.g1, reference::euclid((a + n - 1) % n, n));
            ASSERT_EQ(info.g2, reference::euclid((a + info.m - 1) % info.m, info.m));
        }
    }
}

TEST(DoubledSubgroup, SubgroupProperties) {
    for (std::uint64_t n = 1; n <= 120; ++n) {
        for (std::uint64_t a = 2; a <= 2 * n; ++a) {
            const DesignParams params{n, a, 1.0};
            const auto h = enumerate_H(params);
            const SubgroupInfo info = doubled_subgroup(params);
            ASSERT_EQ(h.front(), 0U);
            ASSERT_EQ(h.size(), info.m);
            // Closed under addition mod n.
            std::vector<bool> member(n, false);
            for (auto s : h) member[s] = true;
            for (auto s : h) {
                for (auto t : h) ASSERT_TRUE(member[(s + t) % n]);
            }
            // m = n exactly when a^2 = 1 (mod n).
            ASSERT_EQ(info.m == n, reference::mod_mul(a, a, n) == 1 % n);
            // a^2 = 1 (mod m) and fails for every larger divisor.
            ASSERT_EQ(reference::mod_mul(a, a, info.m), 1 % info.m);
            for (std::uint64_t d = info.m + 1; d <= n; ++d) {
                if (n % d == 0) ASSERT_NE(reference::mod_mul(a, a, d), 1 % d);
            }
        }
    }
}

TEST(IsPrime, Examples) {
    EXPECT_TRUE(is_prime(83));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(56));
    EXPECT_FALSE(is_prime(0));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    EXPECT_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to bases 2, 3, 5, 7
    EXPECT_FALSE(is_prime(4294967297ULL));           // F5 = 641 * 6700417
}

TEST(IsPrime, AgreesWithTrialDivision) {
    for (std::uint64_t n = 0; n <= 20000; ++n) {
        ASSERT_EQ(is_prime(n), reference::trial_division_prime(n)) << n;
    }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> dist(1ULL << 30, 1ULL << 36);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t n = dist(rng);
        ASSERT_EQ(is_prime(n), reference::trial_division_prime(n)) << n;
    }
}

TEST(MultiplicativeOrder, Examples) {
    EXPECT_EQ(multiplicative_order(2, 83), 82U);
    EXPECT_EQ(multiplicative_order(1, 83), 1U);
    EXPECT_EQ(multiplicative_order(1, 10), 1U);
    EXPECT_EQ(multiplicative_order(4, 83), 41U);
}

TEST(MultiplicativeOrder, Errors) {
    EXPECT_THROW(multiplicative_order(4, 10), std::domain_error);
    EXPECT_THROW(multiplicative_order(83, 83), std::domain_error);
    EXPECT_THROW(multiplicative_order(3, 1), std::domain_error);
}

TEST(MultiplicativeOrder, AgreesWithPowerLoop) {
    for (std::uint64_t n = 2; n <= 400; ++n) {
        for (std::uint64_t a = 1; a < 2 * n; ++a) {
            if (reference::euclid(a % n, n) != 1) continue;
            ASSERT_EQ(multiplicative_order(a, n), reference::power_loop_order(a, n)) << a << " mod " << n;
        }
    }
}

TEST(PrimitiveRoot, Examples) {
    EXPECT_TRUE(is_primitive_root(2, 83));
    EXPECT_TRUE(is_primitive_root(3, 7));
    EXPECT_FALSE(is_primitive_root(4, 83));
    EXPECT_THROW(is_primitive_root(2, 84), std::domain_error);
    EXPECT_THROW(is_primitive_root(83, 83), std::domain_error);
}

TEST(PrimitiveRoot, ConsistentWithOrder) {
    for (std::uint64_t p = 2; p <= 1000; ++p) {
        if (!reference::trial_division_prime(p)) continue;
        for (std::uint64_t a = 1; a < p; ++a) {
            const std::uint64_t order = multiplicative_order(a, p);
            ASSERT_EQ((p - 1) % order, 0U);
            ASSERT_EQ(is_primitive_root(a, p), order == p - 1) << a << " mod " << p;
        }
        // Squares never generate the whole group.
        if (p > 2) ASSERT_FALSE(is_primitive_root(4, p)) << p;
    }
}
