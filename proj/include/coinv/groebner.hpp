#ifndef COINV_GROEBNER_HPP
#define COINV_GROEBNER_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "poly.hpp"

namespace coinv {

// Full reduction of f by the list G (every term is reduced, not only the leading one).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
    if (f.is_zero() || G.empty()) return f;
    const PrimeField& F = f.F();
    std::vector<u32> inv_lc;
    for (const auto& g : G) {
        if (g.is_zero()) throw std::invalid_argument("zero polynomial in a reducer list");
        inv_lc.push_back(F.inv(g.leading_coeff()));
    }
    std::map<Monomial, u32, GrevlexGreater> acc;
    for (const auto& t : f.terms()) acc.emplace(t.m, t.c);
    std::vector<Term> rem;
    while (!acc.empty()) {
        auto it = acc.begin();
        const Monomial m = it->first;
        const u32 c = it->second;
        acc.erase(it);
        std::size_t k = 0;
        while (k < G.size() && !G[k].leading_monomial().divides(m)) ++k;
        if (k == G.size()) {
            rem.push_back({m, c});
            continue;
        }
        const Monomial q = m / G[k].leading_monomial();
        const u32 coef = F.neg(F.mul(c, inv_lc[k]));
        const auto& gt = G[k].terms();
        for (std::size_t s = 1; s < gt.size(); ++s) {
            Monomial mm = gt[s].m * q;
            u32 add = F.mul(gt[s].c, coef);
            auto [pos, inserted] = acc.emplace(mm, add);
            if (!inserted) {
                pos->second = F.add(pos->second, add);
                if (!pos->second) acc.erase(pos);
            }
        }
    }
    return Polynomial::from_sorted(f.ring(), std::move(rem));
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const auto& R = *f.ring();
    const Monomial l = R.lcm(f.leading_monomial(), g.leading_monomial());
    const PrimeField& F = f.F();
    Polynomial a = f.mul_term(l / f.leading_monomial(), F.inv(f.leading_coeff()));
    return a.add_scaled(g, l / g.leading_monomial(), F.neg(F.inv(g.leading_coeff())));
}

// A reduced Groebner basis: monic, minimal, tail-reduced and sorted by increasing leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(RingPtr R, std::vector<Polynomial> elems) : R_(std::move(R)), g_(std::move(elems)) {}

    const RingPtr& ring() const { return R_; }
    const std::vector<Polynomial>& elements() const { return g_; }
    std::size_t size() const { return g_.size(); }
    const Polynomial& operator[](std::size_t i) const { return g_[i]; }

    Polynomial normal_form(const Polynomial& f) const { return coinv::normal_form(f, g_); }
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        for (const auto& g : g_) out.push_back(g.leading_monomial());
        return out;
    }
    int max_degree() const {
        int d = -1;
        for (const auto& g : g_) d = std::max(d, g.total_degree());
        return d;
    }
    bool is_monomial_ideal() const {
        return std::all_of(g_.begin(), g_.end(), [](const Polynomial& g) { return g.size() == 1; });
    }
    bool operator==(const GroebnerBasis& o) const { return g_ == o.g_; }

private:
    RingPtr R_;
    std::vector<Polynomial> g_;
};

// Interreduces a Groebner basis given as an arbitrary generating list of its leading ideal.
inline GroebnerBasis make_reduced(const RingPtr& R, const std::vector<Polynomial>& G) {
    std::vector<Polynomial> mono;
    for (const auto& g : G)
        if (!g.is_zero()) mono.push_back(g.monic());
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < mono.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < mono.size() && !drop; ++j) {
            if (i == j) continue;
            const Monomial &a = mono[i].leading_monomial(), &b = mono[j].leading_monomial();
            if (b.divides(a) && (!(a == b) || j < i)) drop = true;
        }
        if (!drop) minimal.push_back(mono[i]);
    }
    std::vector<Polynomial> red;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const auto& lt = minimal[i].terms().front();
        Polynomial tail = minimal[i] - Polynomial::term(R, lt.m, lt.c);
        red.push_back(Polynomial::term(R, lt.m, lt.c) + normal_form(tail, others));
    }
    std::sort(red.begin(), red.end(), [](const Polynomial& a, const Polynomial& b) {
        return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return GroebnerBasis(R, std::move(red));
}

// Incremental Buchberger with the normal selection strategy, the coprime criterion and the
// chain criterion. Pairs can be processed up to a degree bound, which for homogeneous input
// yields a basis that is correct in all degrees up to that bound.
class GroebnerBuilder {
public:
    explicit GroebnerBuilder(RingPtr R) : R_(std::move(R)) {}

    const std::vector<Polynomial>& current() const { return G_; }
    std::size_t pending_pairs() const { return pending_.size(); }

    // Returns true when f contributes something new.
    bool add(const Polynomial& f) {
        Polynomial h = normal_form(f, G_);
        if (h.is_zero()) return false;
        insert(h.monic());
        return true;
    }

    void complete_to_degree(unsigned maxdeg) { run(maxdeg); }
    void complete() { run(~0u); }

    GroebnerBasis reduced() const { return make_reduced(R_, G_); }

    std::size_t s_polynomials_reduced() const { return spolys_; }

private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };

    void insert(Polynomial h) {
        const std::size_t n = G_.size();
        G_.push_back(std::move(h));
        for (std::size_t i = 0; i < n; ++i)
            pending_.emplace(std::make_pair(i, n), R_->lcm(G_[i].leading_monomial(), G_[n].leading_monomial()));
    }

    static bool less(const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) < 0; }

    bool is_pending(std::size_t a, std::size_t b) const {
        return pending_.count(std::minmax(a, b)) > 0;
    }

    void run(unsigned maxdeg) {
        while (true) {
            auto best = pending_.end();
            for (auto it = pending_.begin(); it != pending_.end(); ++it) {
                if (it->second.deg > maxdeg) continue;
                if (best == pending_.end() || less(it->second, best->second)) best = it;
            }
            if (best == pending_.end()) return;
            const auto [i, j] = best->first;
            const Monomial l = best->second;
            pending_.erase(best);
            const Monomial &li = G_[i].leading_monomial(), &lj = G_[j].leading_monomial();
            if (li.coprime(lj)) continue;
            bool chain = false;
            for (std::size_t k = 0; k < G_.size() && !chain; ++k) {
                if (k == i || k == j) continue;
                if (G_[k].leading_monomial().divides(l) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
            }
            if (chain) continue;
            ++spolys_;
            Polynomial h = normal_form(s_polynomial(G_[i], G_[j]), G_);
            if (!h.is_zero()) insert(h.monic());
        }
    }

    RingPtr R_;
    std::vector<Polynomial> G_;
    std::map<std::pair<std::size_t, std::size_t>, Monomial> pending_;
    std::size_t spolys_ = 0;
};

// Every S-polynomial of G reduces to zero modulo G.
inline bool satisfies_buchberger_criterion(const std::vector<Polynomial>& G) {
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            if (G[i].leading_monomial().coprime(G[j].leading_monomial())) continue;
            if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) return false;
        }
    return true;
}

inline GroebnerBasis reduced_gb(const RingPtr& R, const std::vector<Polynomial>& gens) {
    GroebnerBuilder b(R);
    for (const auto& f : gens)
        if (!f.is_zero()) b.add(f);
    b.complete();
    GroebnerBasis G = b.reduced();
    if (!satisfies_buchberger_criterion(G.elements()))
        throw std::logic_error("Buchberger postcondition failed");
    return G;
}

inline bool ideal_equal(const RingPtr& R, const std::vector<Polynomial>& A, const std::vector<Polynomial>& B) {
    return reduced_gb(R, A) == reduced_gb(R, B);
}

// Standard monomials of a zero-dimensional ideal, graded by degree.
class QuotientBasis {
public:
    QuotientBasis() = default;

    explicit QuotientBasis(const GroebnerBasis& G) : R_(G.ring()) {
        const auto lms = G.leading_monomials();
        for (std::size_t v = 0; v < R_->nvars(); ++v) {
            bool ok = false;
            for (const auto& m : lms) {
                bool pure = m.e[v] > 0 && m.deg == m.e[v];
                if (pure) ok = true;
            }
            if (!ok)
                throw std::domain_error("quotient is infinite: no leading monomial is a power of " +
                                        R_->names()[v]);
        }
        auto standard = [&](const Monomial& m) {
            for (const auto& l : lms)
                if (l.divides(m)) return false;
            return true;
        };
        std::vector<Monomial> cur;
        if (standard(R_->one())) cur.push_back(R_->one());
        while (!cur.empty()) {
            by_degree_.push_back(cur);
            std::vector<Monomial> next;
            for (const auto& m : cur)
                for (std::size_t v = 0; v < R_->nvars(); ++v) {
                    Monomial x = m * R_->var(v);
                    if (standard(x)) next.push_back(x);
                }
            std::sort(next.begin(), next.end(), GrevlexGreater{});
            next.erase(std::unique(next.begin(), next.end()), next.end());
            cur = std::move(next);
        }
        for (const auto& layer : by_degree_) {
            std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
            for (std::size_t i = 0; i < layer.size(); ++i) idx.emplace(layer[i], i);
            index_.push_back(std::move(idx));
        }
    }

    const RingPtr& ring() const { return R_; }
    // Highest degree with a nonzero piece; -1 for the zero quotient.
    int top_degree() const { return static_cast<int>(by_degree_.size()) - 1; }
    const std::vector<Monomial>& degree(unsigned d) const {
        static const std::vector<Monomial> empty;
        return d < by_degree_.size() ? by_degree_[d] : empty;
    }
    std::size_t dim(unsigned d) const { return degree(d).size(); }
    std::size_t total_dim() const {
        std::size_t s = 0;
        for (const auto& l : by_degree_) s += l.size();
        return s;
    }
    // Position of a standard monomial within its degree, or -1.
    long index_of(const Monomial& m) const {
        if (m.deg >= index_.size()) return -1;
        auto it = index_[m.deg].find(m);
        return it == index_[m.deg].end() ? -1 : static_cast<long>(it->second);
    }
    std::vector<u64> hilbert_series() const {
        std::vector<u64> h;
        for (const auto& l : by_degree_) h.push_back(l.size());
        return h;
    }

private:
    RingPtr R_;
    std::vector<std::vector<Monomial>> by_degree_;
    std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index_;
};

inline QuotientBasis standard_monomials(const GroebnerBasis& G) { return QuotientBasis(G); }
inline std::vector<u64> hilbert_series(const QuotientBasis& Q) { return Q.hilbert_series(); }

}  // namespace coinv

#endif
