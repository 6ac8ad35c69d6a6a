#include <gtest/gtest.h>

#include <random>

#include "coinv/rep.hpp"
#include "test_util.hpp"

using namespace coinv;

namespace {

// sigma applied m times, one step at a time.
Polynomial sigma_iterated(const RepSpec& rep, unsigned m, Polynomial f) {
    for (unsigned i = 0; i < m; ++i) f = sigma(rep, 1, f);
    return f;
}

}  // namespace

TEST(RepSpecTest, Layout) {
    RepSpec rep(5, {2, 3});
    EXPECT_EQ(rep.nvars(), 5u);
    EXPECT_EQ(rep.var(1, 1), 2u);
    EXPECT_EQ(rep.level(4), 3u);
    EXPECT_EQ(rep.label(), "V2+V3");
    EXPECT_EQ(RepSpec(3, {3, 3, 3}).label(), "3V3");
    EXPECT_THROW(RepSpec(3, {4}), std::invalid_argument);
    EXPECT_THROW(RepSpec(6, {2}), std::invalid_argument);
    EXPECT_THROW(RepSpec(5, {}), std::invalid_argument);
}

TEST(SigmaTest, SpecExamples) {
    RepSpec v3(5, {3});
    auto X = v3.x(0, 1), Y = v3.x(0, 2), Z = v3.x(0, 3);
    EXPECT_EQ(sigma(v3, 1, Z), Z + Y);
    EXPECT_EQ(sigma(v3, 2, Z), Z + Y.scaled(2) + X);
    EXPECT_EQ(sigma(v3, 4, X), X);
    EXPECT_EQ(delta(v3, Z), Y);
    EXPECT_TRUE(delta(v3, v3.constant(3)).is_zero());

    RepSpec v2(3, {2});
    auto x = v2.x(0, 1), y = v2.x(0, 2);
    EXPECT_EQ(delta(v2, y * y), (x * y).scaled(2) + x * x);
    EXPECT_EQ(transfer(v2, y * y), (x * x).scaled(2));
}

TEST(SigmaTest, ClosedFormMatchesIteration) {
    RepSpec rep(7, {2, 4});
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
        auto f = testutil::random_poly(rep.ring(), rng, 4, 5);
        for (unsigned m = 0; m < 7; ++m) EXPECT_EQ(sigma(rep, m, f), sigma_iterated(rep, m, f));
    }
}

TEST(SigmaTest, OrderDividesP) {
    for (u64 p : {3u, 5u, 7u}) {
        RepSpec rep(p, {2, 3});
        std::mt19937 rng(static_cast<unsigned>(p));
        for (int it = 0; it < 10; ++it) {
            auto f = testutil::random_poly(rep.ring(), rng, 4, 6);
            EXPECT_EQ(sigma(rep, static_cast<u32>(p), f), f);
            EXPECT_EQ(sigma_iterated(rep, static_cast<unsigned>(p), f), f);
        }
    }
}

TEST(SigmaTest, IsRingHomomorphism) {
    RepSpec rep(5, {4});
    std::mt19937 rng(9);
    for (int it = 0; it < 20; ++it) {
        auto f = testutil::random_poly(rep.ring(), rng, 3, 4), g = testutil::random_poly(rep.ring(), rng, 3, 4);
        EXPECT_EQ(sigma(rep, 1, f * g), sigma(rep, 1, f) * sigma(rep, 1, g));
        EXPECT_EQ(sigma(rep, 1, f + g), sigma(rep, 1, f) + sigma(rep, 1, g));
    }
}

TEST(DeltaTest, NilpotentOnLowDegrees) {
    for (u64 p : {3u, 5u}) {
        RepSpec rep(p, {2, 3});
        for (unsigned d = 0; d <= 4; ++d)
            for (const auto& m : monomials_of_degree(*rep.ring(), d))
                EXPECT_TRUE(delta_power(rep, Polynomial::term(rep.ring(), m), static_cast<unsigned>(p)).is_zero());
    }
}

TEST(DeltaTest, TransferIsDeltaToTheP1) {
    for (u64 p : {3u, 5u, 7u}) {
        RepSpec rep(p, {3});
        std::mt19937 rng(static_cast<unsigned>(p) + 100);
        for (int it = 0; it < 10; ++it) {
            auto f = testutil::random_poly(rep.ring(), rng, 5, 5);
            auto t = transfer(rep, f);
            EXPECT_EQ(t, delta_power(rep, f, static_cast<unsigned>(p - 1)));
            EXPECT_TRUE(delta(rep, t).is_zero());
        }
        RepSpec v2(p, {2});
        auto y = v2.x(0, 2).pow(static_cast<unsigned>(p - 1));
        EXPECT_EQ(transfer(v2, y), delta_power(v2, y, static_cast<unsigned>(p - 1)));
    }
}

TEST(DeltaTest, LowersWeightOnIsobaricInput) {
    RepSpec rep(7, {5});
    for (unsigned d = 1; d <= 4; ++d)
        for (const auto& m : monomials_of_degree(*rep.ring(), d)) {
            const auto dm = delta(rep, Polynomial::term(rep.ring(), m));
            for (const auto& t : dm.terms()) EXPECT_LT(t.m.weight(), m.weight());
        }
}

TEST(NormTest, Examples) {
    for (u64 p : {3u, 5u, 7u}) {
        RepSpec v2(p, {2});
        auto X = v2.x(0, 1), Y = v2.x(0, 2);
        unsigned e = static_cast<unsigned>(p);
        EXPECT_EQ(norm(v2, Y), Y.pow(e) - Y * X.pow(e - 1));
        EXPECT_EQ(norm(v2, X), X.pow(e));
    }
    RepSpec v3(3, {3});
    auto X = v3.x(0, 1), Y = v3.x(0, 2), Z = v3.x(0, 3);
    EXPECT_EQ(norm(v3, Z), Z.pow(3) + (Y * Y * Z).scaled(2) + X * Y * Z + X * Z * Z);
    EXPECT_EQ(norm(v3, Z), Z * (Z + Y) * (Z + Y.scaled(2) + X));
    EXPECT_TRUE(delta(v3, norm(v3, Z)).is_zero());
}

TEST(BilinearTest, AreInvariant) {
    for (u64 p : {3u, 5u, 7u}) {
        RepSpec rep(p, {2, 3, 3});
        auto inv = bilinear_invariants(rep);
        EXPECT_FALSE(inv.empty());
        for (const auto& [name, f] : inv) EXPECT_TRUE(delta(rep, f).is_zero()) << name;
    }
    RepSpec two(5, {2, 2});
    auto X1 = two.x(0, 1), Y1 = two.x(0, 2), X2 = two.x(1, 1), Y2 = two.x(1, 2);
    bool found = false;
    for (const auto& [name, f] : bilinear_invariants(two)) found = found || f == X2 * Y1 - X1 * Y2;
    EXPECT_TRUE(found);
}

TEST(RhoTest, EquivariantAndOnGenerators) {
    RepSpec rep(5, {2, 3});
    RepSpec tgt = rho_target(rep);
    EXPECT_EQ(rho_projection(rep, tgt, rep.x(1, 3)), tgt.x(1, 2));
    EXPECT_EQ(rho_projection(rep, tgt, rep.x(1, 2)), tgt.x(1, 1));
    EXPECT_TRUE(rho_projection(rep, tgt, rep.x(1, 1)).is_zero());
    EXPECT_EQ(rho_projection(rep, tgt, rep.x(0, 1)), tgt.x(0, 1));
    std::mt19937 rng(21);
    for (int it = 0; it < 20; ++it) {
        auto f = testutil::random_poly(rep.ring(), rng, 4, 6);
        EXPECT_EQ(rho_projection(rep, tgt, sigma(rep, 1, f)), sigma(tgt, 1, rho_projection(rep, tgt, f)));
    }
}
