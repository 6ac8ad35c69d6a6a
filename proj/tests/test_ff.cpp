#include <gtest/gtest.h>

#include <vector>

#include "coinv/ff.hpp"

using namespace coinv;

namespace {

bool trial_division(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d < n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST(PrimeTest, MatchesTrialDivision) {
    for (u64 n = 0; n < 2000; ++n) EXPECT_EQ(is_prime(n), trial_division(n)) << n;
}

TEST(PrimeFieldTest, RejectsComposite) {
    EXPECT_THROW(PrimeField(9), std::invalid_argument);
    EXPECT_THROW(PrimeField(1), std::invalid_argument);
}

TEST(PrimeFieldTest, ArithmeticAgreesWithIntegers) {
    for (u64 p : {2u, 3u, 5u, 7u, 13u, 101u}) {
        PrimeField F(p);
        for (u32 a = 0; a < p; ++a)
            for (u32 b = 0; b < p; ++b) {
                EXPECT_EQ(F.add(a, b), (a + b) % p);
                EXPECT_EQ(F.sub(a, b), (a + p - b) % p);
                EXPECT_EQ(F.mul(a, b), (a * b) % p);
            }
    }
}

TEST(PrimeFieldTest, InverseAndDivision) {
    PrimeField F(101);
    for (u32 a = 1; a < 101; ++a) {
        EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
        EXPECT_EQ(F.mul(F.div(7, a), a), 7u);
    }
    EXPECT_THROW(F.inv(0), std::domain_error);
}

TEST(PrimeFieldTest, ReduceNegative) {
    PrimeField F(7);
    EXPECT_EQ(F.reduce(-1), 6u);
    EXPECT_EQ(F.reduce(-14), 0u);
    EXPECT_EQ(F.reduce(15), 1u);
}

TEST(PrimeFieldTest, BinomialMatchesPascalTriangle) {
    for (u64 p : {3u, 5u, 7u, 11u}) {
        PrimeField F(p);
        std::vector<std::vector<u64>> C(60, std::vector<u64>(60, 0));
        for (std::size_t n = 0; n < 60; ++n) {
            C[n][0] = 1;
            for (std::size_t k = 1; k <= n; ++k) C[n][k] = (C[n - 1][k - 1] + C[n - 1][k]) % p;
        }
        for (u64 n = 0; n < 60; ++n)
            for (u64 k = 0; k < 60; ++k) EXPECT_EQ(F.binomial(n, k), C[n][k]) << n << " " << k;
    }
}

TEST(PrimeFieldTest, SignedBinomial) {
    PrimeField F(7);
    // binom(-1, k) = (-1)^k
    for (i64 k = 0; k < 10; ++k) EXPECT_EQ(F.binomial_signed(-1, k), k % 2 ? 6u : 1u);
    EXPECT_EQ(F.binomial_signed(5, -1), 0u);
}

TEST(PrimeFieldTest, PowerSums) {
    for (u64 p : {3u, 5u, 7u}) {
        PrimeField F(p);
        for (u64 l = 1; l <= 3 * p; ++l) {
            u32 s = 0;
            for (u32 t = 0; t < p; ++t) s = F.add(s, F.pow(t, l));
            EXPECT_EQ(F.power_sum(l), s);
        }
    }
}

TEST(PrimeFieldTest, Factorial) {
    PrimeField F(13);
    u32 f = 1;
    for (u64 n = 0; n < 13; ++n) {
        if (n) f = F.mul(f, static_cast<u32>(n));
        EXPECT_EQ(F.factorial(n), f);
    }
    // Wilson
    EXPECT_EQ(F.factorial(12), 12u);
}
