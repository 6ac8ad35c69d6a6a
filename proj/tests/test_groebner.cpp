#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "coinv/groebner.hpp"
#include "coinv/hilbert.hpp"
#include "test_util.hpp"

using namespace coinv;

namespace {

RingPtr ring(u64 p, std::size_t n) { return PolyRing::make(PrimeField(p), n); }

// Reduced echelon basis of the degree-d part of a homogeneous ideal, by plain linear algebra.
// With columns in decreasing grevlex order, the rows are exactly the reduced basis elements of
// degree d together with their multiples, and the pivots are the leading monomials of I_d.
struct MacaulayDegree {
    std::vector<Monomial> pivots;
    std::vector<Polynomial> rows;
};

MacaulayDegree macaulay(const RingPtr& R, const std::vector<Polynomial>& gens, unsigned d) {
    auto cols = monomials_of_degree(*R, d);
    std::unordered_map<Monomial, std::size_t, MonomialHash> at;
    for (std::size_t j = 0; j < cols.size(); ++j) at.emplace(cols[j], j);
    std::vector<std::vector<u32>> rows;
    for (const auto& g : gens) {
        int dg = g.total_degree();
        if (dg > int(d)) continue;
        for (const auto& m : monomials_of_degree(*R, d - unsigned(dg))) {
            std::vector<u32> r(cols.size(), 0);
            const auto gm = g.mul_term(m, 1);
            for (const auto& t : gm.terms()) r[at.at(t.m)] = t.c;
            rows.push_back(std::move(r));
        }
    }
    MacaulayDegree out;
    if (rows.empty()) return out;
    Matrix E = row_span(R->field(), rows, cols.size());
    for (std::size_t i = 0; i < E.rows(); ++i) {
        std::vector<Term> t;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (E(i, j)) t.push_back({cols[j], E(i, j)});
        out.pivots.push_back(t.front().m);
        out.rows.push_back(Polynomial::from_sorted(R, std::move(t)));
    }
    return out;
}

void expect_matches_macaulay(const RingPtr& R, const std::vector<Polynomial>& gens, unsigned upto) {
    GroebnerBasis G = reduced_gb(R, gens);
    auto lms = G.leading_monomials();
    for (unsigned d = 0; d <= upto; ++d) {
        auto M = macaulay(R, gens, d);
        std::vector<Monomial> in_lm;
        for (const auto& m : monomials_of_degree(*R, d))
            if (std::any_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); })) in_lm.push_back(m);
        EXPECT_EQ(M.pivots, in_lm) << "degree " << d;
        for (const auto& g : G.elements())
            if (g.total_degree() == int(d)) {
                EXPECT_NE(std::find(M.rows.begin(), M.rows.end(), g), M.rows.end()) << g.to_string();
            }
    }
}

}  // namespace

TEST(NormalFormTest, Examples) {
    auto R = ring(5, 2);
    auto X = Polynomial::variable(R, 0), Y = Polynomial::variable(R, 1);
    EXPECT_TRUE(normal_form(Y.pow(5), {X, Y.pow(5)}).is_zero());

    RepSpec v5(7, {5});
    auto G = paper_gb(v5);
    ASSERT_TRUE(G);
    auto x = [&](unsigned j) { return v5.x(0, j); };
    EXPECT_EQ(normal_form(x(3) * x(3), *G), x(3) * x(2) + (x(4) * x(2)).scaled(2));
}

TEST(NormalFormTest, IdempotentAndCongruent) {
    auto R = ring(7, 3);
    std::mt19937 rng(2);
    for (int it = 0; it < 20; ++it) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(testutil::random_homogeneous(R, rng, 2 + k % 2, 3));
        GroebnerBasis G = reduced_gb(R, gens);
        auto f = testutil::random_poly(R, rng, 5, 8);
        auto r = G.normal_form(f);
        EXPECT_EQ(G.normal_form(r), r);
        EXPECT_TRUE(G.contains(f - r));
        for (const auto& t : r.terms())
            for (const auto& l : G.leading_monomials()) EXPECT_FALSE(l.divides(t.m));
    }
}

TEST(ReducedGBTest, Examples) {
    auto R = ring(7, 4);
    auto X = [&](std::size_t i) { return Polynomial::variable(R, i - 1); };
    auto G = reduced_gb(R, {X(1), X(2).pow(2) - X(1) * (X(2) + X(3).scaled(2)),
                            X(2).pow(3) + X(1).pow(2) * (X(4).scaled(3) - X(2)) - (X(1) * X(2) * X(3)).scaled(3)});
    EXPECT_EQ(G.elements(), (std::vector<Polynomial>{X(1), X(2).pow(2)}));

    auto mono = reduced_gb(R, {X(1) * X(2), X(3).pow(2), X(2).pow(3)});
    EXPECT_EQ(mono.size(), 3u);
    EXPECT_TRUE(mono.is_monomial_ideal());

    auto S = ring(5, 2);
    auto x = Polynomial::variable(S, 0), y = Polynomial::variable(S, 1);
    EXPECT_EQ(reduced_gb(S, {x, y}).elements(), (std::vector<Polynomial>{x, y}));
    EXPECT_EQ(reduced_gb(S, {}).size(), 0u);
    EXPECT_EQ(reduced_gb(S, {Polynomial(S), x}).elements(), std::vector<Polynomial>{x});
}

TEST(ReducedGBTest, MatchesLinearAlgebraOracle) {
    std::mt19937 rng(17);
    for (u64 p : {2u, 5u, 7u}) {
        auto R = ring(p, 3);
        for (int it = 0; it < 8; ++it) {
            std::vector<Polynomial> gens;
            for (int k = 0; k < 3; ++k) gens.push_back(testutil::random_homogeneous(R, rng, 2 + (it + k) % 2, 4));
            expect_matches_macaulay(R, gens, 7);
        }
    }
}

TEST(ReducedGBTest, HilbertIdealsMatchLinearAlgebraOracle) {
    for (const auto& rep : {RepSpec(3, {2, 3}), RepSpec(5, {4}), RepSpec(5, {5})}) {
        std::vector<Polynomial> gens;
        for (unsigned d = 1; d <= rep.p(); ++d)
            for (const auto& f : invariants_in_degree(rep, d).basis) gens.push_back(f);
        expect_matches_macaulay(rep.ring(), gens, rep.p() + 2);
    }
}

TEST(ReducedGBTest, CanonicalUnderPermutationAndScaling) {
    auto R = ring(11, 4);
    std::mt19937 rng(5);
    for (int it = 0; it < 10; ++it) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 4; ++k) gens.push_back(testutil::random_homogeneous(R, rng, 2 + k % 2, 3));
        auto G = reduced_gb(R, gens);
        EXPECT_TRUE(satisfies_buchberger_criterion(G.elements()));
        for (const auto& g : G.elements()) EXPECT_EQ(g.terms().front().c, 1u);
        for (int t = 0; t < 3; ++t) {
            std::shuffle(gens.begin(), gens.end(), rng);
            std::vector<Polynomial> scaled;
            for (const auto& g : gens) scaled.push_back(g.scaled(std::uniform_int_distribution<u32>(1, 10)(rng)));
            scaled.push_back(gens[0] * gens[1]);
            EXPECT_EQ(reduced_gb(R, scaled), G);
        }
    }
}

TEST(ReducedGBTest, OutputSortedByLeadingMonomial) {
    auto G = reduced_gb(RepSpec(5, {4}).ring(), *paper_gb(RepSpec(5, {4})));
    for (std::size_t i = 1; i < G.size(); ++i)
        EXPECT_LT(grevlex_cmp(G.elements()[i - 1].leading_monomial(), G.elements()[i].leading_monomial()), 0);
}

TEST(IdealEqualTest, Examples) {
    auto R = ring(3, 2);
    auto x = Polynomial::variable(R, 0), y = Polynomial::variable(R, 1);
    EXPECT_TRUE(ideal_equal(R, {x}, {x, x * x}));
    EXPECT_FALSE(ideal_equal(R, {x}, {y}));
}

TEST(QuotientBasisTest, Examples) {
    RepSpec v2(5, {2});
    QuotientBasis Q2(make_reduced(v2.ring(), *paper_gb(v2)));
    EXPECT_EQ(Q2.hilbert_series(), (std::vector<u64>{1, 1, 1, 1, 1}));
    for (unsigned d = 0; d < 5; ++d) EXPECT_EQ(Q2.degree(d).front(), v2.ring()->var(1, d));

    RepSpec v4(5, {4});
    QuotientBasis Q4(make_reduced(v4.ring(), *paper_gb(v4)));
    EXPECT_EQ(Q4.hilbert_series(), (std::vector<u64>{1, 3, 5, 6, 6, 5, 3, 1}));
    EXPECT_EQ(Q4.total_dim(), 30u);
    EXPECT_EQ(Q4.top_degree(), 7);
    const auto a = v4.ring()->monomial({0, 0, 3, 4}), b = v4.ring()->monomial({0, 1, 1, 4});
    std::size_t factors = 0;
    for (unsigned d = 0; d <= 7; ++d)
        for (const auto& m : Q4.degree(d)) {
            EXPECT_TRUE(m.divides(a) || m.divides(b));
            EXPECT_EQ(Q4.index_of(m) >= 0, true);
            ++factors;
        }
    EXPECT_EQ(factors, 30u);

    auto R = ring(7, 3);
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < 3; ++i) vars.push_back(Polynomial::variable(R, i));
    QuotientBasis Q1(reduced_gb(R, vars));
    EXPECT_EQ(Q1.hilbert_series(), std::vector<u64>{1});
    EXPECT_EQ(Q1.index_of(R->var(0)), -1);
}

TEST(QuotientBasisTest, InfiniteQuotientNamesTheVariable) {
    auto R = ring(5, 2);
    auto G = reduced_gb(R, {Polynomial::variable(R, 0)});
    try {
        QuotientBasis Q(G);
        FAIL() << "expected an error";
    } catch (const std::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("x2"), std::string::npos);
    }
}

TEST(QuotientBasisTest, DimensionIsSeriesSum) {
    for (const auto& rep : {RepSpec(3, {2, 3}), RepSpec(7, {4}), RepSpec(5, {5})}) {
        QuotientBasis Q(make_reduced(rep.ring(), *paper_gb(rep)));
        auto h = Q.hilbert_series();
        u64 s = 0;
        for (auto x : h) s += x;
        EXPECT_EQ(s, Q.total_dim());
        EXPECT_EQ(int(h.size()) - 1, Q.top_degree());
        EXPECT_NE(h.back(), 0u);
    }
}
