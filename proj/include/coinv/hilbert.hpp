#ifndef COINV_HILBERT_HPP
#define COINV_HILBERT_HPP

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "check.hpp"
#include "groebner.hpp"
#include "linalg.hpp"
#include "rep.hpp"

namespace coinv {

using MonomialIndex = std::unordered_map<Monomial, std::size_t, MonomialHash>;

inline MonomialIndex index_monomials(const std::vector<Monomial>& ms) {
    MonomialIndex idx;
    idx.reserve(ms.size() * 2);
    for (std::size_t i = 0; i < ms.size(); ++i) idx.emplace(ms[i], i);
    return idx;
}

// Exponent vectors of total degree d in n variables.
inline std::vector<std::vector<unsigned>> exponent_vectors(unsigned n, unsigned d) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> e(n, 0);
    auto rec = [&](auto&& self, unsigned i, unsigned left) -> void {
        if (i + 1 == n) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (unsigned a = 0; a <= left; ++a) {
            e[i] = a;
            self(self, i + 1, left - a);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

// Block degree vectors summing to d.
inline std::vector<std::vector<unsigned>> multidegrees_of_degree(const RepSpec& rep, unsigned d) {
    return exponent_vectors(static_cast<unsigned>(rep.nblocks()), d);
}

inline std::vector<Monomial> monomials_of_multidegree(const RepSpec& rep, const std::vector<unsigned>& md) {
    std::vector<Monomial> out{rep.ring()->one()};
    for (std::size_t b = 0; b < rep.nblocks(); ++b) {
        auto local = exponent_vectors(rep.blocks()[b], md[b]);
        std::vector<Monomial> next;
        next.reserve(out.size() * local.size());
        for (const auto& m : out)
            for (const auto& e : local) {
                Monomial x = m;
                for (unsigned t = 0; t < e.size(); ++t) {
                    x.e[rep.offset(b) + t] = static_cast<std::uint8_t>(e[t]);
                    x.deg = static_cast<std::uint16_t>(x.deg + e[t]);
                    x.wt = static_cast<std::uint16_t>(x.wt + e[t] * (t + 1));
                }
                next.push_back(x);
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

// Calls fn(monomial, coefficient) for every term of sigma(m), possibly with repeated monomials.
template <class Fn>
void for_each_sigma_term(const RepSpec& rep, const Monomial& m, Fn&& fn) {
    const PrimeField& F = rep.field();
    const std::size_t n = rep.nvars();
    Monomial cur = m;
    for (std::size_t v = 0; v < n; ++v) cur.e[v] = 0;
    cur.wt = 0;
    auto rec = [&](auto&& self, std::size_t v, u32 coef) -> void {
        if (v == n) {
            fn(cur, coef);
            return;
        }
        const unsigned e = m.e[v];
        const unsigned lv = rep.level(v);
        if (e == 0 || lv == 1) {
            cur.e[v] = static_cast<std::uint8_t>(cur.e[v] + e);
            cur.wt = static_cast<std::uint16_t>(cur.wt + e * lv);
            self(self, v + 1, coef);
            cur.e[v] = static_cast<std::uint8_t>(cur.e[v] - e);
            cur.wt = static_cast<std::uint16_t>(cur.wt - e * lv);
            return;
        }
        for (unsigned a = 0; a <= e; ++a) {
            u32 c = F.binomial(e, a);
            if (!c) continue;
            cur.e[v] = static_cast<std::uint8_t>(cur.e[v] + e - a);
            cur.e[v - 1] = static_cast<std::uint8_t>(cur.e[v - 1] + a);
            const unsigned w = (e - a) * lv + a * (lv - 1);
            cur.wt = static_cast<std::uint16_t>(cur.wt + w);
            self(self, v + 1, F.mul(coef, c));
            cur.e[v] = static_cast<std::uint8_t>(cur.e[v] - (e - a));
            cur.e[v - 1] = static_cast<std::uint8_t>(cur.e[v - 1] - a);
            cur.wt = static_cast<std::uint16_t>(cur.wt - w);
        }
    };
    rec(rec, 0, 1);
}

// Matrix of Delta = sigma - 1 on the span of `monos`, which must be sigma-stable.
inline Matrix delta_matrix(const RepSpec& rep, const std::vector<Monomial>& monos, const MonomialIndex& idx) {
    const PrimeField& F = rep.field();
    Matrix D(F, monos.size(), monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j) {
        for_each_sigma_term(rep, monos[j], [&](const Monomial& t, u32 c) {
            std::size_t i = idx.at(t);
            D(i, j) = F.add(D(i, j), c);
        });
        D(j, j) = F.sub(D(j, j), 1);
    }
    return D;
}

struct InvariantSpace {
    unsigned degree = 0;
    std::vector<Polynomial> basis;  // echelonized, sorted by decreasing leading monomial
};

inline InvariantSpace invariants_in_degree(const RepSpec& rep, unsigned d) {
    InvariantSpace out{d, {}};
    for (const auto& md : multidegrees_of_degree(rep, d)) {
        auto monos = monomials_of_multidegree(rep, md);
        auto idx = index_monomials(monos);
        Matrix K = delta_matrix(rep, monos, idx).kernel();
        for (std::size_t r = 0; r < K.rows(); ++r) {
            std::vector<Term> terms;
            for (std::size_t j = 0; j < monos.size(); ++j)
                if (K(r, j)) terms.push_back({monos[j], K(r, j)});
            out.basis.push_back(Polynomial::from_sorted(rep.ring(), std::move(terms)));
        }
    }
    std::sort(out.basis.begin(), out.basis.end(), [](const Polynomial& a, const Polynomial& b) {
        return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return out;
}

// Normal forms of monomials as sparse coordinate vectors over the standard monomials of their
// degree, computed through NF(x_v * s) for standard s and memoized.
class NormalFormTable {
public:
    using Vec = std::vector<std::pair<std::size_t, u32>>;

    NormalFormTable(const GroebnerBasis& G, const QuotientBasis& Q) : G_(G), Q_(Q) {
        for (const auto& g : G_.elements())
            if (g.size() == 1) mono_.push_back(g.leading_monomial());
    }

    const Vec& of(const Monomial& m) {
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second;
        Vec out;
        if (!in_monomial_part(m)) {
            long self = Q_.index_of(m);
            if (self >= 0) {
                out.push_back({static_cast<std::size_t>(self), 1});
            } else {
                std::size_t v = 0;
                while (!m.e[v]) ++v;
                const Monomial x = G_.ring()->var(v);
                const Vec& lower = of(m / x);
                const PrimeField& F = G_.ring()->field();
                std::map<std::size_t, u32> acc;
                const auto& prev = Q_.degree(m.deg - 1);
                for (const auto& [s, c] : lower) {
                    for (const auto& [t, ct] : times_var(v, prev[s])) {
                        u32& slot = acc[t];
                        slot = F.add(slot, F.mul(c, ct));
                    }
                }
                for (const auto& [t, c] : acc)
                    if (c) out.push_back({t, c});
            }
        }
        return memo_.emplace(m, std::move(out)).first->second;
    }

private:
    bool in_monomial_part(const Monomial& m) const {
        for (const auto& l : mono_)
            if (l.divides(m)) return true;
        return false;
    }
    const Vec& times_var(std::size_t v, const Monomial& s) {
        const Monomial m = s * G_.ring()->var(v);
        auto key = m;
        auto it = mul_.find(key);
        if (it != mul_.end()) return it->second;
        Vec out;
        Polynomial nf = G_.normal_form(Polynomial::term(G_.ring(), m, 1));
        for (const auto& t : nf.terms()) out.push_back({static_cast<std::size_t>(Q_.index_of(t.m)), t.c});
        return mul_.emplace(key, std::move(out)).first->second;
    }

    const GroebnerBasis& G_;
    const QuotientBasis& Q_;
    std::vector<Monomial> mono_;
    std::unordered_map<Monomial, Vec, MonomialHash> memo_;
    std::unordered_map<Monomial, Vec, MonomialHash> mul_;
};

struct CertificateEntry {
    unsigned degree = 0;
    std::size_t components = 0;  // multidegree components with a nonzero quotient
    std::size_t dense = 0;       // of those, checked by a rank test
    std::size_t tensor = 0;      // of those, checked through tensor Jordan decompositions
    bool pass = true;
};

namespace detail {

// S^d(V_n) with its Delta matrix and an explicit Jordan basis.
struct FactorModule {
    std::vector<std::vector<unsigned>> exps;
    std::map<std::vector<unsigned>, std::size_t> index;
    std::vector<JordanChain> chains;
};

class CertificateContext {
public:
    explicit CertificateContext(const RepSpec& rep) : rep_(rep) {}

    const FactorModule& factor(unsigned n, unsigned d) {
        auto key = std::make_pair(n, d);
        auto it = factors_.find(key);
        if (it != factors_.end()) return it->second;
        RepSpec single(rep_.p(), {n});
        auto monos = monomials_of_degree(*single.ring(), d);
        auto idx = index_monomials(monos);
        Matrix D = delta_matrix(single, monos, idx);
        FactorModule fm;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            std::vector<unsigned> e(n);
            for (unsigned t = 0; t < n; ++t) e[t] = monos[i].e[t];
            fm.index.emplace(e, i);
            fm.exps.push_back(std::move(e));
        }
        fm.chains = jordan_chains(D);
        return factors_.emplace(key, std::move(fm)).first->second;
    }

    // Invariants of a tensor product of standard Jordan blocks J_k (sigma e_t = e_t + e_{t+1}).
    const Matrix& standard_invariants(const std::vector<unsigned>& ks) {
        auto it = std_inv_.find(ks);
        if (it != std_inv_.end()) return it->second;
        std::size_t dim = 1;
        for (unsigned k : ks) dim *= k;
        std::vector<std::size_t> stride(ks.size(), 1);
        for (std::size_t b = ks.size(); b-- > 1;) stride[b - 1] = stride[b] * ks[b];
        Matrix T(rep_.field(), dim, dim);
        std::vector<unsigned> j(ks.size());
        for (std::size_t col = 0; col < dim; ++col) {
            std::size_t rem = col;
            for (std::size_t b = 0; b < ks.size(); ++b) {
                j[b] = static_cast<unsigned>(rem / stride[b]);
                rem %= stride[b];
            }
            for (unsigned S = 1; S < (1u << ks.size()); ++S) {
                std::size_t row = col;
                bool ok = true;
                for (std::size_t b = 0; b < ks.size() && ok; ++b)
                    if (S >> b & 1) {
                        if (j[b] + 1 >= ks[b]) ok = false;
                        row += stride[b];
                    }
                if (ok) T(row, col) = rep_.field().add(T(row, col), 1);
            }
        }
        return std_inv_.emplace(ks, T.kernel()).first->second;
    }

private:
    const RepSpec& rep_;
    std::map<std::pair<unsigned, unsigned>, FactorModule> factors_;
    std::map<std::vector<unsigned>, Matrix> std_inv_;
};

inline constexpr std::size_t kBlasThreshold = 400;

// Rows of the normal-form map must lie in the row span of Delta on the component.
inline bool certify_dense(const RepSpec& rep, const std::vector<Monomial>& monos, const std::vector<Monomial>& std_monos,
                          NormalFormTable& nft, const QuotientBasis& Q) {
    const PrimeField& F = rep.field();
    const std::size_t n = monos.size(), s = std_monos.size();
    auto idx = index_monomials(monos);
    std::vector<std::size_t> qpos;  // degree-local index -> component-local index
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < s; ++i) local.emplace(static_cast<std::size_t>(Q.index_of(std_monos[i])), i);
    auto fill = [&](auto&& set_entry) {
        for (std::size_t j = 0; j < n; ++j) {
            for_each_sigma_term(rep, monos[j], [&](const Monomial& t, u32 c) { set_entry(idx.at(t), j, c, true); });
            set_entry(j, j, F.neg(1), true);
            for (const auto& [q, c] : nft.of(monos[j])) set_entry(n + local.at(q), j, c, true);
        }
    };
    if (n >= kBlasThreshold && RowSpaceTest::supported(F.p())) {
        RowSpaceTest rt(F, n, s, n);
        fill([&](std::size_t i, std::size_t j, u32 c, bool) {
            float& x = rt.row(i)[j];
            x = static_cast<float>(F.add(static_cast<u32>(x), c));
        });
        return rt.run();
    }
    Matrix D(F, n, n), N(F, s, n);
    fill([&](std::size_t i, std::size_t j, u32 c, bool) {
        if (i < n)
            D(i, j) = F.add(D(i, j), c);
        else
            N(i - n, j) = F.add(N(i - n, j), c);
    });
    return rows_in_span(D, N);
}

// Same question for a component that is a tensor product of two or more symmetric powers.
inline bool certify_tensor(const RepSpec& rep, const std::vector<unsigned>& md, const std::vector<Monomial>& std_monos,
                           NormalFormTable& nft, const QuotientBasis& Q, CertificateContext& ctx) {
    const PrimeField& F = rep.field();
    std::vector<std::size_t> blocks;
    for (std::size_t b = 0; b < md.size(); ++b)
        if (md[b]) blocks.push_back(b);
    std::vector<const FactorModule*> fac;
    for (auto b : blocks) fac.push_back(&ctx.factor(rep.blocks()[b], md[b]));
    std::map<std::size_t, std::size_t> local;
    for (std::size_t i = 0; i < std_monos.size(); ++i)
        local.emplace(static_cast<std::size_t>(Q.index_of(std_monos[i])), i);

    struct Support {
        std::vector<std::size_t> pos;  // index in each factor
        std::vector<std::pair<std::size_t, u32>> nf;
    };
    std::vector<Support> support;
    for (const auto& m : monomials_of_multidegree(rep, md)) {
        const auto& nf = nft.of(m);
        if (nf.empty()) continue;
        Support s;
        for (std::size_t f = 0; f < blocks.size(); ++f) {
            const std::size_t b = blocks[f];
            std::vector<unsigned> e(rep.blocks()[b]);
            for (unsigned t = 0; t < e.size(); ++t) e[t] = m.e[rep.offset(b) + t];
            s.pos.push_back(fac[f]->index.at(e));
        }
        for (const auto& [q, c] : nf) s.nf.push_back({local.at(q), c});
        support.push_back(std::move(s));
    }
    if (support.empty()) return true;

    const std::size_t r = blocks.size();
    std::vector<std::size_t> choice(r, 0);
    while (true) {
        std::vector<unsigned> ks(r);
        for (std::size_t f = 0; f < r; ++f) ks[f] = static_cast<unsigned>(fac[f]->chains[choice[f]].length());
        std::size_t dim = 1;
        for (unsigned k : ks) dim *= k;
        // y[m][j] = prod_f chain_f[j_f][pos_f(m)]
        std::vector<std::vector<u32>> y;
        bool any = false;
        for (const auto& s : support) {
            std::vector<u32> t{1};
            for (std::size_t f = 0; f < r; ++f) {
                const auto& ch = fac[f]->chains[choice[f]].vectors;
                std::vector<u32> nt;
                nt.reserve(t.size() * ks[f]);
                for (u32 a : t)
                    for (unsigned jf = 0; jf < ks[f]; ++jf) nt.push_back(F.mul(a, ch[jf][s.pos[f]]));
                t = std::move(nt);
            }
            if (std::any_of(t.begin(), t.end(), [](u32 v) { return v != 0; })) any = true;
            y.push_back(std::move(t));
        }
        if (any) {
            const Matrix& K = ctx.standard_invariants(ks);
            for (std::size_t w = 0; w < K.rows(); ++w) {
                std::vector<u32> val(std_monos.size(), 0);
                for (std::size_t si = 0; si < support.size(); ++si) {
                    u64 dot = 0;
                    for (std::size_t j = 0; j < dim; ++j) dot = (dot + u64{K(w, j)} * y[si][j]) % F.p();
                    if (!dot) continue;
                    for (const auto& [q, c] : support[si].nf) val[q] = F.add(val[q], F.mul(static_cast<u32>(dot), c));
                }
                if (std::any_of(val.begin(), val.end(), [](u32 v) { return v != 0; })) return false;
            }
        }
        std::size_t f = 0;
        while (f < r && ++choice[f] == fac[f]->chains.size()) choice[f++] = 0;
        if (f == r) break;
    }
    return true;
}

}  // namespace detail

// Checks that every invariant of degree d has normal form zero, one multidegree component at a time.
inline CertificateEntry certify_degree(const RepSpec& rep, const GroebnerBasis& G, const QuotientBasis& Q, unsigned d,
                                       NormalFormTable& nft, detail::CertificateContext& ctx) {
    CertificateEntry e;
    e.degree = d;
    std::map<std::vector<unsigned>, std::vector<Monomial>> groups;
    for (const auto& m : Q.degree(d)) groups[rep.multidegree(m)].push_back(m);
    for (const auto& [md, std_monos] : groups) {
        ++e.components;
        std::size_t nonzero = 0;
        for (unsigned x : md) nonzero += x > 0;
        bool ok;
        if (nonzero <= 1) {
            ++e.dense;
            ok = detail::certify_dense(rep, monomials_of_multidegree(rep, md), std_monos, nft, Q);
        } else {
            ++e.tensor;
            ok = detail::certify_tensor(rep, md, std_monos, nft, Q, ctx);
        }
        if (!ok) {
            e.pass = false;
            break;
        }
    }
    (void)G;
    return e;
}

struct HilbertIdealOptions {
    unsigned dmax = 0;     // 0 selects p
    bool certify = true;
};

struct HilbertIdeal {
    GroebnerBasis gb;
    QuotientBasis quotient;
    unsigned dmax_used = 0;
    std::vector<unsigned> escalations;  // degrees at which the generator bound was raised
    std::vector<CertificateEntry> certificate;

    bool certified() const {
        return std::all_of(certificate.begin(), certificate.end(), [](const CertificateEntry& c) { return c.pass; });
    }
    int top_degree() const { return quotient.top_degree(); }
};

namespace detail {
// Adds the degree-d invariants that are not already in the ideal, after interreducing them.
inline void ingest_degree(const RepSpec& rep, GroebnerBuilder& builder, unsigned d) {
    auto inv = invariants_in_degree(rep, d);
    std::vector<Polynomial> fresh;
    for (const auto& f : inv.basis) {
        Polynomial h = normal_form(f, builder.current());
        if (!h.is_zero()) fresh.push_back(h);
    }
    if (fresh.empty()) {
        builder.complete_to_degree(d);
        return;
    }
    auto monos = monomials_of_degree(*rep.ring(), d);
    auto idx = index_monomials(monos);
    Matrix M(rep.field(), fresh.size(), monos.size());
    for (std::size_t i = 0; i < fresh.size(); ++i)
        for (const auto& t : fresh[i].terms()) M(i, idx.at(t.m)) = t.c;
    std::size_t r = M.rref().size();
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < monos.size(); ++j)
            if (M(i, j)) terms.push_back({monos[j], M(i, j)});
        builder.add(Polynomial::from_sorted(rep.ring(), std::move(terms)));
    }
    builder.complete_to_degree(d);
}
}  // namespace detail

inline HilbertIdeal hilbert_ideal(const RepSpec& rep, HilbertIdealOptions opt = {}) {
    HilbertIdeal H;
    unsigned dmax = opt.dmax ? opt.dmax : rep.p();
    GroebnerBuilder builder(rep.ring());
    for (unsigned d = 1; d <= dmax; ++d) detail::ingest_degree(rep, builder, d);
    while (true) {
        builder.complete();
        H.gb = builder.reduced();
        if (!satisfies_buchberger_criterion(H.gb.elements()))
            throw std::logic_error("Buchberger postcondition failed");
        try {
            H.quotient = QuotientBasis(H.gb);
        } catch (const std::domain_error&) {
            ++dmax;
            H.escalations.push_back(dmax);
            detail::ingest_degree(rep, builder, dmax);
            continue;
        }
        H.certificate.clear();
        if (!opt.certify) break;
        NormalFormTable nft(H.gb, H.quotient);
        detail::CertificateContext ctx(rep);
        unsigned failed = 0;
        for (int d = static_cast<int>(dmax) + 1; d <= H.quotient.top_degree(); ++d) {
            H.certificate.push_back(certify_degree(rep, H.gb, H.quotient, static_cast<unsigned>(d), nft, ctx));
            if (!H.certificate.back().pass) {
                failed = static_cast<unsigned>(d);
                break;
            }
        }
        if (!failed) break;
        for (unsigned d = dmax + 1; d <= failed; ++d) detail::ingest_degree(rep, builder, d);
        dmax = failed;
        H.escalations.push_back(dmax);
    }
    H.dmax_used = dmax;
    return H;
}

// ---- Explicit bases and generating sets from the literature ----

// True for V2 summands followed by V3 summands.
inline bool is_sorted_v2_v3(const RepSpec& rep) {
    if (!rep.all_blocks_in({2, 3})) return false;
    return std::is_sorted(rep.blocks().begin(), rep.blocks().end());
}

namespace detail {
inline Polynomial mono(const RepSpec& rep, std::initializer_list<std::pair<std::size_t, unsigned>> factors, u32 c = 1) {
    std::vector<unsigned> e(rep.nvars(), 0);
    for (auto [v, k] : factors) e[v] += k;
    return Polynomial::term(rep.ring(), rep.ring()->monomial(e), c);
}
inline void sort_by_lm(std::vector<Polynomial>& v) {
    std::sort(v.begin(), v.end(), [](const Polynomial& a, const Polynomial& b) {
        return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
}
}  // namespace detail

// The reduced Groebner basis claimed for the Hilbert ideal, when one is known for this case.
inline std::optional<std::vector<Polynomial>> paper_gb(const RepSpec& rep) {
    const unsigned p = rep.p();
    std::vector<Polynomial> out;
    using detail::mono;
    if (rep.all_blocks_in({2})) {
        for (std::size_t b = 0; b < rep.nblocks(); ++b) {
            out.push_back(mono(rep, {{rep.var(b, 1), 1}}));
            out.push_back(mono(rep, {{rep.var(b, 2), p}}));
        }
    } else if (p > 2 && is_sorted_v2_v3(rep)) {
        const std::size_t m = rep.count(2);
        for (std::size_t b = 0; b < rep.nblocks(); ++b) {
            out.push_back(mono(rep, {{rep.var(b, 1), 1}}));
            if (b < m) {
                out.push_back(mono(rep, {{rep.var(b, 2), p}}));
            } else {
                out.push_back(mono(rep, {{rep.var(b, 3), p}}));
                for (std::size_t c = b; c < rep.nblocks(); ++c)
                    out.push_back(mono(rep, {{rep.var(b, 2), 1}, {rep.var(c, 2), 1}}));
            }
        }
    } else if (rep.blocks() == std::vector<unsigned>{4} && p >= 5) {
        out = {mono(rep, {{0, 1}}), mono(rep, {{1, 2}}), mono(rep, {{1, 1}, {2, p - 3}}), mono(rep, {{2, p - 1}}),
               mono(rep, {{3, p}})};
    } else if (rep.blocks() == std::vector<unsigned>{5} && p >= 5) {
        const u32 m1 = p - 1, m2 = p - 2;
        Polynomial q = mono(rep, {{2, 2}}) + mono(rep, {{1, 1}, {3, 1}}, m2) + mono(rep, {{1, 1}, {2, 1}}, m1);
        out = {mono(rep, {{0, 1}}), mono(rep, {{1, 2}}), q, mono(rep, {{1, 1}, {2, 1}, {3, 1}})};
        if (p == 5) {
            out.push_back(mono(rep, {{2, 1}, {3, 2}}) + mono(rep, {{1, 1}, {3, 2}}, 2));
            out.push_back(mono(rep, {{1, 1}, {3, 3}}));
            out.push_back(mono(rep, {{3, 4}}));
        } else {
            out.push_back(mono(rep, {{1, 1}, {3, p - 4}}));
            out.push_back(mono(rep, {{2, 1}, {3, p - 3}}));
            out.push_back(mono(rep, {{3, p - 1}}));
        }
        out.push_back(mono(rep, {{4, p}}));
    } else {
        return std::nullopt;
    }
    detail::sort_by_lm(out);
    return out;
}

struct GeneratorSet {
    std::vector<NamedPolynomial> elements;
    std::vector<std::string> omitted;  // named members that cannot be constructed here
};

namespace detail {
// Monomials dividing prod_i x_{v_i}^(p-1), the empty product excluded.
inline std::vector<Monomial> divisors_of_power(const RepSpec& rep, const std::vector<std::size_t>& vars, unsigned e) {
    std::vector<Monomial> out;
    std::vector<unsigned> exps(rep.nvars(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == vars.size()) {
            Monomial m = rep.ring()->monomial(exps);
            if (m.deg) out.push_back(m);
            return;
        }
        for (unsigned a = 0; a <= e; ++a) {
            exps[vars[i]] = a;
            self(self, i + 1);
        }
        exps[vars[i]] = 0;
    };
    rec(rec, 0);
    return out;
}
inline std::string tr_name(const RepSpec& rep, const Monomial& m) {
    return "Tr(" + monomial_to_string(m, rep.ring()->names()) + ")";
}
}  // namespace detail

// The known generating sets of the invariant ring that the Groebner bases are derived from.
inline std::optional<GeneratorSet> paper_generators(const RepSpec& rep) {
    const unsigned p = rep.p();
    GeneratorSet S;
    auto add = [&](std::string name, Polynomial f) { S.elements.push_back({std::move(name), std::move(f)}); };
    auto names = rep.ring()->names();
    auto var = [&](std::size_t v) { return Polynomial::variable(rep.ring(), v); };
    auto tr = [&](const Monomial& m) { add(detail::tr_name(rep, m), transfer(rep, Polynomial::term(rep.ring(), m))); };
    if (rep.all_blocks_in({2}) || (p > 2 && is_sorted_v2_v3(rep))) {
        const bool pure = rep.all_blocks_in({2});
        std::vector<std::size_t> tops;
        for (std::size_t b = 0; b < rep.nblocks(); ++b) {
            add(names[rep.var(b, 1)], var(rep.var(b, 1)));
            const std::size_t top = rep.var(b, rep.blocks()[b]);
            add("N(" + names[top] + ")", norm(rep, var(top)));
            tops.push_back(top);
        }
        if (pure) {
            for (std::size_t i = 0; i < rep.nblocks(); ++i)
                for (std::size_t j = i + 1; j < rep.nblocks(); ++j)
                    add("u_" + std::to_string(i + 1) + std::to_string(j + 1),
                        rep.x(j, 1) * rep.x(i, 2) - rep.x(i, 1) * rep.x(j, 2));
        } else {
            for (auto& np : bilinear_invariants(rep))
                if (np.name[0] != 'u') S.elements.push_back(np);
            S.omitted.push_back("generators of the full invariant ring beyond the Hilbert ideal generators");
        }
        for (const auto& m : detail::divisors_of_power(rep, tops, p - 1)) tr(m);
        return S;
    }
    if (rep.blocks() == std::vector<unsigned>{4} && p >= 5) {
        auto X = [&](unsigned i) { return var(i - 1); };
        auto c = [&](i64 v) { return rep.constant(v); };
        add("x1", X(1));
        add("x2^2 - x1(x2 + 2x3)", X(2) * X(2) - X(1) * (X(2) + c(2) * X(3)));
        add("x2^3 + x1^2(3x4 - x2) - 3x1x2x3", X(2).pow(3) + X(1) * X(1) * (c(3) * X(4) - X(2)) - c(3) * X(1) * X(2) * X(3));
        add("N(x4)", norm(rep, X(4)));
        S.omitted.push_back("g (quartic rational invariant with leading term x2^2 x3^2)");
        auto M = [&](unsigned a3, unsigned a4) { return rep.ring()->monomial({0, 0, a3, a4}); };
        unsigned l, q;
        if (p % 3 == 1) {
            l = (p - 1) / 3;
            q = 2 * l + 1;
        } else {
            l = (p + 1) / 3;
            q = 2 * l - 1;
        }
        for (unsigned i = 0; i <= p - 2; ++i) tr(M(i, p - 1));
        for (unsigned i = 3; i <= p - 2; ++i) tr(M(i, p - 2));
        for (unsigned j = q; j <= p - 2; ++j) tr(M(0, j));
        for (unsigned j = 2 * l - 1; j <= p - 2; ++j) tr(M(2, j));
        return S;
    }
    if (rep.blocks() == std::vector<unsigned>{5} && p >= 5) {
        auto X = [&](unsigned i) { return var(i - 1); };
        auto c = [&](i64 v) { return rep.constant(v); };
        add("x1", X(1));
        add("x2^2 - x1(x2 + 2x3)", X(2) * X(2) - X(1) * (X(2) + c(2) * X(3)));
        add("x3^2 - x2(x3 + 2x4) + x1(x3 + 3x4 + 2x5)",
            X(3) * X(3) - X(2) * (X(3) + c(2) * X(4)) + X(1) * (X(3) + c(3) * X(4) + c(2) * X(5)));
        add("x2^3 + x1^2(3x4 - x2) - 3x1x2x3", X(2).pow(3) + X(1) * X(1) * (c(3) * X(4) - X(2)) - c(3) * X(1) * X(2) * X(3));
        add("N(x5)", norm(rep, X(5)));
        S.omitted.push_back("inv(x3^3) (cubic rational invariant, known only modulo x1)");
        S.omitted.push_back("the decomposable sixth rational invariant");
        auto M = [&](unsigned a2, unsigned a3, unsigned a4, unsigned a5) { return rep.ring()->monomial({0, a2, a3, a4, a5}); };
        tr(M(1, 1, 0, (p - 1) / 2));
        for (unsigned i = 0; i <= p - 2; ++i) {
            tr(M(0, 0, i, p - 1));
            tr(M(1, 0, i, p - 1));
        }
        for (unsigned i = 3; i <= p - 2; ++i) {
            tr(M(0, 0, i, p - 2));
            tr(M(1, 0, i, p - 2));
        }
        for (unsigned i = (p - 1) / 2; i <= p - 2; ++i) {
            tr(M(0, 0, 2, i));
            tr(M(1, 0, 2, i));
        }
        for (unsigned i = (p + 1) / 2; i <= p - 1; ++i) tr(M(0, 0, 0, i));
        for (unsigned i = (p - 1) / 2; i <= p - 2; ++i) tr(M(1, 0, 0, i));
        return S;
    }
    return std::nullopt;
}

// Transfer images that must vanish in the Hilbert ideal, or on particular monomials.
inline std::vector<CheckResult> transfer_vanishing_checks(const RepSpec& rep, unsigned max_degree = 0) {
    std::vector<CheckResult> out;
    const unsigned p = rep.p();
    const std::string tag = " " + rep.label() + " p=" + std::to_string(p);
    if (p > 2 && is_sorted_v2_v3(rep)) {
        std::vector<Polynomial> gens;
        std::vector<std::size_t> tops;
        for (std::size_t b = 0; b < rep.nblocks(); ++b) {
            gens.push_back(rep.x(b, 1));
            const std::size_t top = rep.var(b, rep.blocks()[b]);
            gens.push_back(norm(rep, Polynomial::variable(rep.ring(), top)));
            tops.push_back(top);
        }
        for (auto& np : bilinear_invariants(rep))
            if (np.name[0] != 'u') gens.push_back(np.poly);
        GroebnerBasis G = reduced_gb(rep.ring(), gens);
        CheckResult lam{"lambda-basis" + tag,
                        "X_i, N(Y_i), d_i, w_ij, N(Z_i) generate the ideal with reduced basis {X_i, Y_i^p, Y_iY_j, Z_i^p}",
                        G.elements() == *paper_gb(rep), std::to_string(G.size()) + " elements"};
        out.push_back(lam);
        CheckResult trc{"transfer-in-ideal" + tag, "Tr(beta) lies in that ideal for every beta dividing (Y Z)^(p-1)", true, ""};
        std::size_t n = 1;
        if (!G.contains(transfer(rep, rep.constant(1)))) {
            trc.pass = false;
            trc.detail += "Tr(1) ";
        }
        for (const auto& m : detail::divisors_of_power(rep, tops, p - 1)) {
            ++n;
            if (!G.contains(transfer(rep, Polynomial::term(rep.ring(), m)))) {
                trc.pass = false;
                trc.detail += detail::tr_name(rep, m) + " ";
            }
        }
        if (trc.pass) trc.detail = std::to_string(n) + " transfers";
        out.push_back(trc);
    }
    if (rep.blocks() == std::vector<unsigned>{5}) {
        const unsigned top = max_degree ? max_degree : p + 2;
        CheckResult a{"transfer-x5-vanishing" + tag,
                      "x2^a x3^b x4^c x5^d is absent from Tr(x5^i) when c + 2b + 3a < p - 1", true, ""};
        CheckResult b{"transfer-x4x5-vanishing" + tag,
                      "x2^a x3^b x4^c x5^d is absent from Tr(x4^k x5^i) when i - d + b + 2a < p - 1", true, ""};
        std::size_t na = 0, nb = 0;
        for (unsigned k = 0; k <= top; ++k)
            for (unsigned i = 0; i + k <= top; ++i) {
                Polynomial T = transfer(rep, Polynomial::term(rep.ring(), rep.ring()->monomial({0, 0, 0, k, i})));
                for (const auto& e : exponent_vectors(4, k + i)) {
                    const unsigned A = e[0], B = e[1], C = e[2], D = e[3];
                    u32 coef = T.coefficient(rep.ring()->monomial({0, A, B, C, D}));
                    if (k == 0 && C + 2 * B + 3 * A < p - 1) {
                        ++na;
                        if (coef) {
                            a.pass = false;
                            a.detail += "i=" + std::to_string(i) + " ";
                        }
                    }
                    if (int(i) - int(D) + int(B) + 2 * int(A) < int(p) - 1) {
                        ++nb;
                        if (coef) {
                            b.pass = false;
                            b.detail += "k=" + std::to_string(k) + ",i=" + std::to_string(i) + " ";
                        }
                    }
                }
            }
        if (a.pass) a.detail = std::to_string(na) + " coefficients";
        if (b.pass) b.detail = std::to_string(nb) + " coefficients";
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

}  // namespace coinv

#endif
