#ifndef COINV_REP_HPP
#define COINV_REP_HPP

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "poly.hpp"

namespace coinv {

// A direct sum of indecomposable Z/p-modules V_{n_1} + ... + V_{n_k}.
// Block b owns consecutive variables x_{b,1} < ... < x_{b,n_b}; the generator acts by
// x_{b,j} -> x_{b,j} + x_{b,j-1} and fixes x_{b,1}.
class RepSpec {
public:
    RepSpec(u64 p, std::vector<unsigned> blocks, std::vector<std::string> names = {})
        : F_(p), blocks_(std::move(blocks)) {
        if (blocks_.empty()) throw std::invalid_argument("representation has no summands");
        unsigned off = 0;
        std::vector<unsigned> levels;
        for (unsigned n : blocks_) {
            if (n < 1) throw std::invalid_argument("summand V_0 is not allowed");
            if (n > F_.p())
                throw std::invalid_argument("summand V_" + std::to_string(n) + " does not exist for p = " +
                                            std::to_string(F_.p()) + " (need n <= p)");
            offsets_.push_back(off);
            for (unsigned j = 1; j <= n; ++j) {
                levels.push_back(j);
                block_of_.push_back(static_cast<unsigned>(offsets_.size() - 1));
            }
            off += n;
        }
        if (off > kMaxVars) throw std::invalid_argument("too many variables");
        if (names.empty())
            for (unsigned v = 0; v < off; ++v) names.push_back("x" + std::to_string(v + 1));
        ring_ = std::make_shared<const PolyRing>(F_, levels, std::move(names));
    }

    const PrimeField& field() const { return F_; }
    u32 p() const { return F_.p(); }
    const std::vector<unsigned>& blocks() const { return blocks_; }
    std::size_t nblocks() const { return blocks_.size(); }
    std::size_t nvars() const { return ring_->nvars(); }
    const RingPtr& ring() const { return ring_; }

    // Flat index of x_{b,j}, with b 0-based and j in 1..n_b.
    std::size_t var(std::size_t b, unsigned j) const {
        if (b >= blocks_.size() || j < 1 || j > blocks_[b]) throw std::out_of_range("no such block variable");
        return offsets_[b] + j - 1;
    }
    unsigned offset(std::size_t b) const { return offsets_[b]; }
    unsigned block_of(std::size_t v) const { return block_of_[v]; }
    unsigned level(std::size_t v) const { return ring_->level(v); }

    bool all_blocks_in(std::initializer_list<unsigned> sizes) const {
        for (unsigned n : blocks_)
            if (std::find(sizes.begin(), sizes.end(), n) == sizes.end()) return false;
        return true;
    }
    unsigned count(unsigned n) const {
        return static_cast<unsigned>(std::count(blocks_.begin(), blocks_.end(), n));
    }

    // Degree of a monomial restricted to each block.
    std::vector<unsigned> multidegree(const Monomial& m) const {
        std::vector<unsigned> md(blocks_.size(), 0);
        for (std::size_t v = 0; v < nvars(); ++v) md[block_of_[v]] += m.e[v];
        return md;
    }

    std::string label() const {
        std::string s;
        std::size_t i = 0;
        while (i < blocks_.size()) {
            std::size_t j = i;
            while (j < blocks_.size() && blocks_[j] == blocks_[i]) ++j;
            if (!s.empty()) s += "+";
            if (j - i > 1) s += std::to_string(j - i);
            s += "V" + std::to_string(blocks_[i]);
            i = j;
        }
        return s;
    }

    Polynomial x(std::size_t b, unsigned j) const { return Polynomial::variable(ring_, var(b, j)); }
    Polynomial constant(i64 c) const { return Polynomial::constant(ring_, c); }

private:
    PrimeField F_;
    std::vector<unsigned> blocks_;
    std::vector<unsigned> offsets_;
    std::vector<unsigned> block_of_;
    RingPtr ring_;
};

namespace detail {

// Substitutes a linear form for every variable.
inline Polynomial substitute_linear(const Polynomial& f, const std::vector<Polynomial>& images) {
    const RingPtr& R = f.ring();
    std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
    auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
        unsigned k = e;
        while (k > 1 && !powers.count({v, k})) --k;
        if (k == 1) powers.try_emplace({v, 1}, images[v]);
        for (; k < e; ++k) powers.emplace(std::make_pair(v, k + 1), powers.at({v, k}) * images[v]);
        return powers.at({v, e});
    };
    Polynomial out(R);
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(R, t.c);
        for (std::size_t v = R->nvars(); v-- > 0;)
            if (t.m.e[v]) prod = prod * power(v, t.m.e[v]);
        out += prod;
    }
    return out;
}

}  // namespace detail

// sigma^m(x_{b,j}) = sum_{t<j} C(m, t) x_{b,j-t}
inline Polynomial sigma_image_of_variable(const RepSpec& rep, u64 m, std::size_t v) {
    const unsigned b = rep.block_of(v), j = rep.level(v);
    std::vector<Term> terms;
    for (unsigned t = 0; t < j; ++t) {
        u32 c = rep.field().binomial(m, t);
        if (c) terms.push_back({rep.ring()->var(rep.var(b, j - t)), c});
    }
    return Polynomial::from_terms(rep.ring(), std::move(terms));
}

inline Polynomial sigma(const RepSpec& rep, u64 m, const Polynomial& f) {
    if (m % rep.p() == 0) return f;
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v < rep.nvars(); ++v) images.push_back(sigma_image_of_variable(rep, m, v));
    return detail::substitute_linear(f, images);
}

inline Polynomial delta(const RepSpec& rep, const Polynomial& f) { return sigma(rep, 1, f) - f; }

inline Polynomial delta_power(const RepSpec& rep, const Polynomial& f, unsigned k) {
    Polynomial g = f;
    for (unsigned i = 0; i < k && !g.is_zero(); ++i) g = delta(rep, g);
    return g;
}

// Sum of sigma^m(f) over m = 0..p-1.
inline Polynomial transfer(const RepSpec& rep, const Polynomial& f) {
    Polynomial out(rep.ring());
    for (u32 m = 0; m < rep.p(); ++m) out += sigma(rep, m, f);
    return out;
}

// Orbit product of f, formed as a balanced product tree.
inline Polynomial norm(const RepSpec& rep, const Polynomial& f) {
    std::vector<Polynomial> layer;
    for (u32 m = 0; m < rep.p(); ++m) layer.push_back(sigma(rep, m, f));
    while (layer.size() > 1) {
        std::vector<Polynomial> next;
        for (std::size_t i = 0; i + 1 < layer.size(); i += 2) next.push_back(layer[i] * layer[i + 1]);
        if (layer.size() % 2) next.push_back(layer.back());
        layer = std::move(next);
    }
    return layer.front();
}

struct NamedPolynomial {
    std::string name;
    Polynomial poly;
};

namespace detail {
inline void require_v2_v3(const RepSpec& rep) {
    if (!rep.all_blocks_in({2, 3}))
        throw std::invalid_argument("representation " + rep.label() + " is not a sum of V2 and V3 summands");
}
}  // namespace detail

// u_ij for all pairs of summands, d_i for V3 summands and w_ij for pairs of V3 summands.
// In block i, X_i, Y_i, Z_i are the variables of level 1, 2, 3.
inline std::vector<NamedPolynomial> bilinear_invariants(const RepSpec& rep) {
    detail::require_v2_v3(rep);
    std::vector<NamedPolynomial> out;
    const std::size_t k = rep.nblocks();
    auto X = [&](std::size_t i) { return rep.x(i, 1); };
    auto Y = [&](std::size_t i) { return rep.x(i, 2); };
    auto Z = [&](std::size_t i) { return rep.x(i, 3); };
    auto tag = [](const char* s, std::size_t i, std::size_t j) {
        return std::string(s) + "_" + std::to_string(i + 1) + std::to_string(j + 1);
    };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) out.push_back({tag("u", i, j), X(j) * Y(i) - X(i) * Y(j)});
    for (std::size_t i = 0; i < k; ++i)
        if (rep.blocks()[i] == 3)
            out.push_back({"d_" + std::to_string(i + 1), Y(i) * Y(i) - X(i) * (Y(i) + rep.constant(2) * Z(i))});
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (rep.blocks()[i] == 3 && rep.blocks()[j] == 3)
                out.push_back({tag("w", i, j), Z(i) * X(j) - Y(i) * Y(j) + X(i) * Z(j) + X(i) * Y(j)});
    return out;
}

// The representation with every V3 summand replaced by V2.
inline RepSpec rho_target(const RepSpec& rep) {
    detail::require_v2_v3(rep);
    return RepSpec(rep.p(), std::vector<unsigned>(rep.nblocks(), 2));
}

// Ring map Z_i -> Y_i, Y_i -> X_i, X_i -> 0 on V3 summands and the identity on V2 summands.
inline Polynomial rho_projection(const RepSpec& rep, const RepSpec& target, const Polynomial& f) {
    detail::require_v2_v3(rep);
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        std::vector<unsigned> e(target.nvars(), 0);
        bool zero = false;
        for (std::size_t b = 0; b < rep.nblocks(); ++b) {
            if (rep.blocks()[b] == 2) {
                e[target.var(b, 1)] += t.m.e[rep.var(b, 1)];
                e[target.var(b, 2)] += t.m.e[rep.var(b, 2)];
            } else {
                if (t.m.e[rep.var(b, 1)]) zero = true;
                e[target.var(b, 1)] += t.m.e[rep.var(b, 2)];
                e[target.var(b, 2)] += t.m.e[rep.var(b, 3)];
            }
        }
        if (!zero) terms.push_back({target.ring()->monomial(e), t.c});
    }
    return Polynomial::from_terms(target.ring(), std::move(terms));
}

}  // namespace coinv

#endif
