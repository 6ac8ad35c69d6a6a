#include <gtest/gtest.h>

#include <random>

#include "coinv/poly.hpp"
#include "test_util.hpp"

using namespace coinv;

namespace {

RingPtr ring(u64 p, std::size_t n) { return PolyRing::make(PrimeField(p), n); }

// Degree first, then reverse lex with the scan starting at the first variable.
int definition_cmp(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    unsigned da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

}  // namespace

TEST(GrevlexTest, Examples) {
    auto R = ring(5, 4);
    EXPECT_GT(grevlex_cmp(R->monomial({0, 1, 1, 0}), R->monomial({1, 0, 0, 1})), 0);
    EXPECT_GT(grevlex_cmp(R->monomial({0, 0, 0, 2}), R->monomial({0, 0, 1, 1})), 0);
    auto m = R->monomial({1, 2, 0, 3});
    EXPECT_EQ(grevlex_cmp(m, m), 0);
}

TEST(GrevlexTest, MatchesDefinitionOnAllSmallMonomials) {
    auto R = ring(3, 3);
    std::vector<std::vector<unsigned>> ev;
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b)
            for (unsigned c = 0; c < 4; ++c) ev.push_back({a, b, c});
    for (const auto& a : ev)
        for (const auto& b : ev) EXPECT_EQ(grevlex_cmp(R->monomial(a), R->monomial(b)), definition_cmp(a, b));
}

TEST(GrevlexTest, CompatibleWithMultiplication) {
    auto R = ring(7, 5);
    std::mt19937 rng(1);
    std::uniform_int_distribution<unsigned> ex(0, 4);
    auto rnd = [&] {
        std::vector<unsigned> e(5);
        for (auto& x : e) x = ex(rng);
        return R->monomial(e);
    };
    for (int it = 0; it < 2000; ++it) {
        auto a = rnd(), b = rnd(), c = rnd();
        int ab = grevlex_cmp(a, b);
        EXPECT_EQ(grevlex_cmp(a * c, b * c), ab);
        EXPECT_EQ(grevlex_cmp(b, a), -ab);
        EXPECT_GE(grevlex_cmp(a * c, a), 0);
    }
}

TEST(MonomialTest, WeightIsAdditive) {
    auto R = std::make_shared<const PolyRing>(PrimeField(5), std::vector<unsigned>{1, 2, 3}, std::vector<std::string>{"a", "b", "c"});
    auto a = R->monomial({1, 2, 3}), b = R->monomial({2, 0, 1});
    EXPECT_EQ(a.weight(), 1u + 4 + 9);
    EXPECT_EQ((a * b).weight(), a.weight() + b.weight());
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    EXPECT_EQ(R->lcm(a, b), R->monomial({2, 2, 3}));
    EXPECT_TRUE(b.divides(a * b));
    EXPECT_EQ((a * b) / b, a);
}

TEST(MonomialTest, MonomialsOfDegree) {
    auto R = ring(5, 2);
    auto d0 = monomials_of_degree(*R, 0);
    ASSERT_EQ(d0.size(), 1u);
    EXPECT_EQ(d0[0], R->one());
    auto d2 = monomials_of_degree(*R, 2);
    ASSERT_EQ(d2.size(), 3u);
    EXPECT_EQ(d2[0], R->monomial({0, 2}));
    EXPECT_EQ(d2[1], R->monomial({1, 1}));
    EXPECT_EQ(d2[2], R->monomial({2, 0}));
    EXPECT_EQ(monomials_of_degree(*ring(5, 3), 2).size(), 6u);
}

TEST(MonomialTest, ExponentOverflowIsReported) {
    auto R = ring(5, 1);
    auto m = R->var(0, 200);
    EXPECT_THROW(m * m, std::overflow_error);
}

TEST(PolynomialTest, SpecExamples) {
    auto R = ring(3, 2);
    auto X = Polynomial::variable(R, 0), Y = Polynomial::variable(R, 1);
    auto f = X * X + Y.scaled(2);
    EXPECT_TRUE((f + (-f)).is_zero());
    EXPECT_EQ(Polynomial::constant(R, 1) * f, f);
    EXPECT_EQ((Y + X).pow(2) - Y.pow(2), (X * Y).scaled(2) + X * X);
}

TEST(PolynomialTest, RingAxiomsOnRandomInputs) {
    auto R = ring(7, 4);
    std::mt19937 rng(7);
    for (int it = 0; it < 100; ++it) {
        auto f = testutil::random_poly(R, rng, 4, 6), g = testutil::random_poly(R, rng, 4, 6),
             h = testutil::random_poly(R, rng, 3, 5);
        EXPECT_EQ(f * g, g * f);
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_EQ(f - g + g, f);
        if (!f.is_zero() && !g.is_zero()) {
            EXPECT_EQ((f * g).leading_monomial(), f.leading_monomial() * g.leading_monomial());
        }
    }
}

TEST(PolynomialTest, TermsStayStrictlyDecreasing) {
    auto R = ring(5, 3);
    std::mt19937 rng(3);
    for (int it = 0; it < 50; ++it) {
        auto f = testutil::random_poly(R, rng, 5, 8) * testutil::random_poly(R, rng, 5, 8);
        for (std::size_t i = 1; i < f.terms().size(); ++i) EXPECT_GT(grevlex_cmp(f.terms()[i - 1].m, f.terms()[i].m), 0);
        for (const auto& t : f.terms()) EXPECT_NE(t.c, 0u);
    }
}

TEST(PolynomialTest, FrobeniusInCharacteristicP) {
    auto R = ring(5, 2);
    auto X = Polynomial::variable(R, 0), Y = Polynomial::variable(R, 1);
    EXPECT_EQ((X + Y).pow(5), X.pow(5) + Y.pow(5));
}

TEST(PolynomialTest, StringRoundTrip) {
    auto R = ring(11, 3);
    std::mt19937 rng(11);
    for (int it = 0; it < 50; ++it) {
        auto f = testutil::random_poly(R, rng, 5, 6);
        EXPECT_EQ(parse_polynomial(R, f.to_string()), f) << f.to_string();
    }
    auto g = parse_polynomial(R, "2*x3^2*x2 + x1");
    EXPECT_EQ(g.to_string(), "2*x3^2*x2 + x1");
    EXPECT_THROW(parse_polynomial(R, "2*q"), std::invalid_argument);
}

TEST(PolynomialTest, DifferentRingsAreRejected) {
    auto f = Polynomial::variable(ring(5, 2), 0);
    auto g = Polynomial::variable(ring(7, 2), 0);
    EXPECT_THROW(f + g, std::invalid_argument);
}
