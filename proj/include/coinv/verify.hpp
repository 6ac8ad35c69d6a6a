#ifndef COINV_VERIFY_HPP
#define COINV_VERIFY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "check.hpp"
#include "hilbert.hpp"
#include "modstruct.hpp"
#include "normform.hpp"

namespace coinv {

// Expansion of (1 + t + ... + t^(p-1))^e times a given polynomial in t.
inline std::vector<u64> times_geometric(std::vector<u64> a, unsigned p, unsigned e) {
    for (unsigned r = 0; r < e; ++r) {
        std::vector<u64> b(a.size() + p - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (unsigned k = 0; k < p; ++k) b[i + k] += a[i];
        a = std::move(b);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Closed-form Hilbert series, when one is known.
inline std::optional<std::vector<u64>> expected_hilbert_series(const RepSpec& rep) {
    const unsigned p = rep.p();
    const unsigned r = static_cast<unsigned>(rep.nblocks());
    if (rep.all_blocks_in({2})) return times_geometric({1}, p, r);
    if (p > 2 && is_sorted_v2_v3(rep)) return times_geometric({1, rep.count(3)}, p, r);
    if (rep.blocks() == std::vector<unsigned>{4} && p >= 5) {
        std::vector<u64> a(p - 1, 2);
        a[0] = 1;
        a[p - 2] = 1;
        return times_geometric(a, p, 1);
    }
    if (rep.blocks() == std::vector<unsigned>{5} && p == 5) return times_geometric({1, 3, 4, 2}, p, 1);
    if (rep.blocks() == std::vector<unsigned>{5} && p > 5) {
        std::vector<u64> a(p - 1, 3);
        a[0] = 1;
        a[1] = 3;
        a[2] = 4;
        a[p - 3] = 2;
        a[p - 2] = 1;
        return times_geometric(a, p, 1);
    }
    return std::nullopt;
}

// Hilbert ideals and coinvariant modules, computed once per representation.
class CaseCache {
public:
    const HilbertIdeal& ideal(const RepSpec& rep) { return entry(rep).H; }
    CoinvariantModule& module(const RepSpec& rep) {
        auto& e = entry(rep);
        if (!e.M) e.M = std::make_unique<CoinvariantModule>(rep, e.H.gb);
        return *e.M;
    }
    std::vector<std::pair<RepSpec, const HilbertIdeal*>> computed() const {
        std::vector<std::pair<RepSpec, const HilbertIdeal*>> out;
        for (const auto& [k, e] : cache_) out.emplace_back(e.rep, &e.H);
        return out;
    }

private:
    struct Entry {
        RepSpec rep;
        HilbertIdeal H;
        std::unique_ptr<CoinvariantModule> M;
    };
    Entry& entry(const RepSpec& rep) {
        auto key = std::make_pair(rep.p(), rep.blocks());
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, Entry{rep, hilbert_ideal(rep), nullptr}).first;
        return it->second;
    }
    std::map<std::pair<u32, std::vector<unsigned>>, Entry> cache_;
};

namespace suites {

inline std::string case_tag(const RepSpec& rep) { return rep.label() + " p=" + std::to_string(rep.p()); }

inline std::vector<RepSpec> groebner_cases() {
    std::vector<RepSpec> out;
    for (unsigned p : {3u, 5u, 7u})
        for (unsigned m = 1; m <= 3; ++m) out.emplace_back(p, std::vector<unsigned>(m, 2));
    for (unsigned p : {3u, 5u, 7u})
        for (unsigned l = 1; l <= 3; ++l)
            for (unsigned m = 0; m + l <= 3; ++m) {
                std::vector<unsigned> b(m, 2);
                b.insert(b.end(), l, 3);
                out.emplace_back(p, b);
            }
    for (unsigned p : {5u, 7u, 11u}) out.emplace_back(p, std::vector<unsigned>{4});
    for (unsigned p : {5u, 7u, 11u}) out.emplace_back(p, std::vector<unsigned>{5});
    return out;
}

inline std::vector<CheckResult> norm() {
    std::vector<CheckResult> out;
    for (unsigned p : {3u, 5u, 7u, 11u, 13u}) out.push_back(check_norm_expansion(p));
    return out;
}

inline std::vector<CheckResult> lemmas() {
    std::vector<CheckResult> out;
    for (unsigned p : {3u, 5u, 7u, 11u, 13u}) out.push_back(check_power_sums(p));
    for (unsigned p : {5u, 7u})
        for (auto& c : check_subset_lemmas(p)) out.push_back(c);
    return out;
}

inline std::vector<CheckResult> groebner(CaseCache& cache) {
    std::vector<CheckResult> out;
    for (const auto& rep : groebner_cases()) {
        const auto& H = cache.ideal(rep);
        auto expect = paper_gb(rep);
        CheckResult c{"groebner " + case_tag(rep), "reduced Groebner basis of the Hilbert ideal equals the stated basis",
                      expect && H.gb.elements() == *expect, std::to_string(H.gb.size()) + " elements"};
        if (!c.pass) {
            c.detail = "computed:";
            for (const auto& g : H.gb.elements()) c.detail += " [" + g.to_string() + "]";
        }
        out.push_back(c);
    }
    return out;
}

inline std::string series_string(const std::vector<u64>& s) {
    std::string out;
    for (auto x : s) out += (out.empty() ? "" : " ") + std::to_string(x);
    return out;
}

inline std::vector<CheckResult> series(CaseCache& cache) {
    std::vector<CheckResult> out;
    for (const auto& rep : groebner_cases()) {
        auto got = cache.ideal(rep).quotient.hilbert_series();
        auto want = expected_hilbert_series(rep);
        out.push_back({"hilbert-series " + case_tag(rep), "Hilbert series equals the expanded closed form",
                       want && got == *want, series_string(got)});
    }
    return out;
}

inline std::vector<CheckResult> top_degree(CaseCache& cache) {
    std::vector<CheckResult> out;
    for (const auto& rep : groebner_cases()) {
        const int td = cache.ideal(rep).top_degree();
        const int p = int(rep.p());
        if (rep.all_blocks_in({4}) || rep.all_blocks_in({5})) {
            out.push_back({"top-degree " + case_tag(rep), "top degree of the coinvariants of V4 and V5 is 2p-3", td == 2 * p - 3,
                           "td=" + std::to_string(td)});
        } else if (rep.count(3) > 0) {
            const int want = int(rep.nblocks()) * (p - 1) + 1;
            out.push_back({"top-degree " + case_tag(rep), "top degree is (m+l)(p-1)+1, the degree of y_j (y_1...z_(m+l))^(p-1)",
                           td == want, "td=" + std::to_string(td)});
        }
    }
    for (unsigned n : {4u, 5u}) {
        RepSpec rep(13, {n});
        const int td = cache.ideal(rep).top_degree();
        out.push_back({"top-degree " + case_tag(rep), "top degree of the coinvariants of V4 and V5 is 2p-3", td == 23,
                       "td=" + std::to_string(td)});
    }
    return out;
}

inline std::vector<CheckResult> modules(CaseCache& cache) {
    std::vector<CheckResult> out;
    auto add = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
    for (unsigned p : {3u, 5u})
        for (unsigned l = 1; l <= 3; ++l) add(check_decomposition(cache.module(RepSpec(p, std::vector<unsigned>(l, 3)))));
    for (unsigned p : {5u, 7u, 11u}) add(check_decomposition(cache.module(RepSpec(p, {4}))));
    for (unsigned p : {5u, 7u, 11u, 13u}) add(check_decomposition(cache.module(RepSpec(p, {5}))));
    return out;
}

inline std::vector<CheckResult> degree_bound(CaseCache& cache) {
    std::vector<CheckResult> out;
    for (const auto& [rep, H] : cache.computed())
        out.push_back({"degree-bound " + case_tag(rep), "the Hilbert ideal is generated in degrees at most p",
                       H->gb.max_degree() <= int(rep.p()), "max degree " + std::to_string(H->gb.max_degree())});
    return out;
}

inline std::vector<CheckResult> transfers() {
    std::vector<CheckResult> out;
    for (unsigned p : {3u, 5u})
        for (unsigned l = 1; l <= 2; ++l)
            for (unsigned m = 0; m + l <= 2; ++m) {
                std::vector<unsigned> b(m, 2);
                b.insert(b.end(), l, 3);
                for (auto& c : transfer_vanishing_checks(RepSpec(p, b))) out.push_back(c);
            }
    for (auto& c : transfer_vanishing_checks(RepSpec(7, {5}))) out.push_back(c);
    return out;
}

inline std::vector<CheckResult> delta(CaseCache& cache) {
    std::vector<CheckResult> out;
    auto add = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
    for (unsigned p : {7u, 11u}) {
        add(check_v4_delta_lemmas(cache.module(RepSpec(p, {4}))));
        add(check_v5_delta_lemmas(cache.module(RepSpec(p, {5}))));
    }
    for (unsigned p : {5u, 7u})
        for (unsigned n : {4u, 5u}) add(check_weight_filtration(cache.module(RepSpec(p, {n}))));
    return out;
}

inline std::vector<CheckResult> certificates(CaseCache& cache) {
    std::vector<CheckResult> out;
    for (const auto& [rep, H] : cache.computed()) {
        std::size_t comps = 0;
        for (const auto& e : H->certificate) comps += e.components;
        std::string range = H->top_degree() > int(H->dmax_used)
                                ? "degrees " + std::to_string(H->dmax_used + 1) + ".." + std::to_string(H->top_degree())
                                : "no degrees above the generator bound";
        out.push_back({"certificate " + case_tag(rep),
                       "every invariant of degree above the generator bound and at most the top degree reduces to 0",
                       H->certified() && H->certificate.size() == std::size_t(std::max(0, H->top_degree() - int(H->dmax_used))),
                       range + ", " + std::to_string(comps) + " components"});
    }
    return out;
}

}  // namespace suites
}  // namespace coinv

#endif
