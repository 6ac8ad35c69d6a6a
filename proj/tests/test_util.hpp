#pragma once

#include <random>
#include <vector>

#include "coinv/poly.hpp"

namespace testutil {

inline coinv::Polynomial random_poly(const coinv::RingPtr& R, std::mt19937& rng, unsigned maxdeg, int nterms) {
    std::uniform_int_distribution<unsigned> ex(0, maxdeg);
    std::uniform_int_distribution<coinv::u32> co(0, R->field().p() - 1);
    std::vector<coinv::Term> t;
    for (int k = 0; k < nterms; ++k) {
        std::vector<unsigned> e(R->nvars());
        unsigned left = ex(rng);
        for (auto& x : e) {
            x = std::uniform_int_distribution<unsigned>(0, left)(rng);
            left -= x;
        }
        t.push_back({R->monomial(e), co(rng)});
    }
    return coinv::Polynomial::from_terms(R, std::move(t));
}

inline coinv::Polynomial random_homogeneous(const coinv::RingPtr& R, std::mt19937& rng, unsigned d, int nterms) {
    auto all = coinv::monomials_of_degree(*R, d);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<coinv::u32> co(1, R->field().p() - 1);
    std::vector<coinv::Term> t;
    for (int k = 0; k < nterms; ++k) t.push_back({all[pick(rng)], co(rng)});
    return coinv::Polynomial::from_terms(R, std::move(t));
}

}  // namespace testutil
