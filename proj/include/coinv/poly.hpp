#ifndef COINV_POLY_HPP
#define COINV_POLY_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ff.hpp"

namespace coinv {

inline constexpr std::size_t kMaxVars = 32;
inline constexpr unsigned kMaxExponent = 255;

// Dense exponent vector. Variable 0 is the smallest variable in the order.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint16_t deg = 0;
    std::uint16_t wt = 0;
    std::uint8_t n = 0;

    unsigned operator[](std::size_t i) const { return e[i]; }
    unsigned degree() const { return deg; }
    unsigned weight() const { return wt; }
    std::size_t nvars() const { return n; }

    bool operator==(const Monomial& o) const {
        return n == o.n && std::equal(e.begin(), e.begin() + n, o.e.begin());
    }

    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
};

inline void check_same_nvars(const Monomial& a, const Monomial& b) {
    if (a.n != b.n)
        throw std::invalid_argument("monomials over different numbers of variables");
}

// Graded reverse lexicographic comparison: -1, 0, 1. Ties in degree are broken at the smallest
// variable whose exponents differ; the monomial with the smaller exponent there is larger.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    check_same_nvars(a, b);
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (std::size_t i = 0; i < a.n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < m.n; ++i) h = (h ^ m.e[i]) * 1099511628211ull;
        return static_cast<std::size_t>(h);
    }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_nvars(a, b);
    Monomial r = a;
    for (std::size_t i = 0; i < a.n; ++i) {
        unsigned s = unsigned{a.e[i]} + b.e[i];
        if (s > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
    r.wt = static_cast<std::uint16_t>(a.wt + b.wt);
    return r;
}

// a / b, assuming b divides a.
inline Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < a.n; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    r.deg = static_cast<std::uint16_t>(a.deg - b.deg);
    r.wt = static_cast<std::uint16_t>(a.wt - b.wt);
    return r;
}

// Field, variable names and per-variable weights (levels) shared by the polynomials of a ring.
class PolyRing {
public:
    PolyRing(PrimeField F, std::vector<unsigned> levels, std::vector<std::string> names)
        : F_(F), levels_(std::move(levels)), names_(std::move(names)) {
        if (levels_.size() > kMaxVars)
            throw std::invalid_argument("too many variables (at most " + std::to_string(kMaxVars) + ")");
        if (names_.size() != levels_.size())
            throw std::invalid_argument("variable name count does not match variable count");
    }

    static std::shared_ptr<const PolyRing> make(PrimeField F, std::size_t nvars) {
        std::vector<unsigned> lv(nvars, 1);
        std::vector<std::string> nm;
        for (std::size_t i = 0; i < nvars; ++i) nm.push_back("x" + std::to_string(i + 1));
        return std::make_shared<const PolyRing>(F, std::move(lv), std::move(nm));
    }

    const PrimeField& field() const { return F_; }
    std::size_t nvars() const { return levels_.size(); }
    unsigned level(std::size_t i) const { return levels_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    bool same_as(const PolyRing& o) const {
        return this == &o || (F_ == o.F_ && levels_ == o.levels_);
    }

    Monomial one() const {
        Monomial m;
        m.n = static_cast<std::uint8_t>(nvars());
        return m;
    }
    Monomial var(std::size_t i, unsigned e = 1) const {
        if (i >= nvars()) throw std::out_of_range("variable index out of range");
        if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
        Monomial m = one();
        m.e[i] = static_cast<std::uint8_t>(e);
        m.deg = static_cast<std::uint16_t>(e);
        m.wt = static_cast<std::uint16_t>(e * levels_[i]);
        return m;
    }
    Monomial monomial(std::span<const unsigned> exps) const {
        if (exps.size() != nvars())
            throw std::invalid_argument("exponent vector has " + std::to_string(exps.size()) +
                                        " entries, ring has " + std::to_string(nvars()) + " variables");
        Monomial m = one();
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
            m.e[i] = static_cast<std::uint8_t>(exps[i]);
            m.deg = static_cast<std::uint16_t>(m.deg + exps[i]);
            m.wt = static_cast<std::uint16_t>(m.wt + exps[i] * levels_[i]);
        }
        return m;
    }
    Monomial monomial(std::initializer_list<unsigned> exps) const {
        return monomial(std::span<const unsigned>(exps.begin(), exps.size()));
    }
    Monomial lcm(const Monomial& a, const Monomial& b) const {
        Monomial m = one();
        for (std::size_t i = 0; i < nvars(); ++i) {
            m.e[i] = std::max(a.e[i], b.e[i]);
            m.deg = static_cast<std::uint16_t>(m.deg + m.e[i]);
            m.wt = static_cast<std::uint16_t>(m.wt + m.e[i] * levels_[i]);
        }
        return m;
    }

private:
    PrimeField F_;
    std::vector<unsigned> levels_;
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

// All monomials of total degree d, in decreasing grevlex order.
inline std::vector<Monomial> monomials_of_degree(const PolyRing& R, unsigned d) {
    std::vector<Monomial> out;
    const std::size_t n = R.nvars();
    if (n == 0) {
        if (d == 0) out.push_back(R.one());
        return out;
    }
    std::vector<unsigned> e(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == n) {
            e[i] = left;
            out.push_back(R.monomial(e));
            return;
        }
        for (unsigned a = 0; a <= left; ++a) {
            e[i] = a;
            rec(i + 1, left - a);
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = m.n; i-- > 0;) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += '*';
        s += names[i];
        if (m.e[i] > 1) s += '^' + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

struct Term {
    Monomial m;
    u32 c;
};

// Sparse polynomial; terms kept in strictly decreasing grevlex order with nonzero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr R) : R_(std::move(R)) {}

    static Polynomial constant(RingPtr R, i64 c) {
        Polynomial f(R);
        u32 v = f.F().reduce(c);
        if (v) f.t_.push_back({f.R_->one(), v});
        return f;
    }
    static Polynomial term(RingPtr R, const Monomial& m, u32 c = 1) {
        Polynomial f(R);
        c %= f.F().p();
        if (c) f.t_.push_back({m, c});
        return f;
    }
    static Polynomial variable(RingPtr R, std::size_t i) {
        auto m = R->var(i);
        return term(std::move(R), m, 1);
    }
    // Accepts terms in any order with repeats; combines and sorts them.
    static Polynomial from_terms(RingPtr R, std::vector<Term> terms) {
        Polynomial f(R);
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return grevlex_cmp(a.m, b.m) > 0; });
        const PrimeField& F = f.F();
        for (auto& t : terms) {
            u32 c = t.c % F.p();
            if (!f.t_.empty() && f.t_.back().m == t.m) {
                f.t_.back().c = F.add(f.t_.back().c, c);
                if (!f.t_.back().c) f.t_.pop_back();
            } else if (c) {
                f.t_.push_back({t.m, c});
            }
        }
        return f;
    }
    // Terms already strictly decreasing with nonzero coefficients.
    static Polynomial from_sorted(RingPtr R, std::vector<Term> terms) {
        Polynomial f(std::move(R));
        f.t_ = std::move(terms);
        return f;
    }

    const RingPtr& ring() const { return R_; }
    const PrimeField& F() const { return R_->field(); }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    const Monomial& leading_monomial() const {
        if (t_.empty()) throw std::domain_error("leading monomial of the zero polynomial");
        return t_.front().m;
    }
    u32 leading_coeff() const { return t_.empty() ? 0 : t_.front().c; }

    // Degree of the zero polynomial is reported as -1.
    int total_degree() const {
        int d = -1;
        for (const auto& t : t_) d = std::max(d, int(t.m.deg));
        return d;
    }
    bool is_homogeneous() const {
        for (const auto& t : t_)
            if (t.m.deg != t_.front().m.deg) return false;
        return true;
    }

    u32 coefficient(const Monomial& m) const {
        auto it = std::lower_bound(t_.begin(), t_.end(), m,
                                   [](const Term& a, const Monomial& b) { return grevlex_cmp(a.m, b) > 0; });
        return (it != t_.end() && it->m == m) ? it->c : 0;
    }

    Polynomial monic() const {
        if (t_.empty()) return *this;
        u32 inv = F().inv(leading_coeff());
        return scaled(inv);
    }
    Polynomial scaled(u32 c) const {
        Polynomial r(R_);
        c %= F().p();
        if (!c) return r;
        r.t_.reserve(t_.size());
        for (const auto& t : t_) r.t_.push_back({t.m, F().mul(t.c, c)});
        return r;
    }
    Polynomial mul_term(const Monomial& m, u32 c) const {
        Polynomial r(R_);
        c %= F().p();
        if (!c) return r;
        r.t_.reserve(t_.size());
        for (const auto& t : t_) r.t_.push_back({t.m * m, F().mul(t.c, c)});
        return r;
    }

    // *this + c * m * g, the workhorse of reduction.
    Polynomial add_scaled(const Polynomial& g, const Monomial& m, u32 c) const {
        check_ring(g);
        Polynomial r(R_);
        const PrimeField& Fd = F();
        c %= Fd.p();
        if (!c) return *this;
        r.t_.reserve(t_.size() + g.t_.size());
        std::size_t i = 0, j = 0;
        while (i < t_.size() || j < g.t_.size()) {
            if (j == g.t_.size()) {
                r.t_.push_back(t_[i++]);
                continue;
            }
            Monomial gm = g.t_[j].m * m;
            int cmp = i == t_.size() ? -1 : grevlex_cmp(t_[i].m, gm);
            if (cmp > 0) {
                r.t_.push_back(t_[i++]);
            } else if (cmp < 0) {
                r.t_.push_back({gm, Fd.mul(g.t_[j++].c, c)});
            } else {
                u32 v = Fd.add(t_[i].c, Fd.mul(g.t_[j].c, c));
                if (v) r.t_.push_back({gm, v});
                ++i;
                ++j;
            }
        }
        return r;
    }

    Polynomial operator+(const Polynomial& g) const { return add_scaled(g, R_->one(), 1); }
    Polynomial operator-(const Polynomial& g) const { return add_scaled(g, R_->one(), F().p() - 1); }
    Polynomial operator-() const { return scaled(F().p() - 1); }
    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

    Polynomial operator*(const Polynomial& g) const {
        check_ring(g);
        if (t_.empty() || g.t_.empty()) return Polynomial(R_);
        if (g.t_.size() == 1) return mul_term(g.t_[0].m, g.t_[0].c);
        if (t_.size() == 1) return g.mul_term(t_[0].m, t_[0].c);
        std::unordered_map<Monomial, u32, MonomialHash> acc;
        acc.reserve(t_.size() * g.t_.size() / 2 + 16);
        const PrimeField& Fd = F();
        for (const auto& a : t_)
            for (const auto& b : g.t_) {
                u32& slot = acc[a.m * b.m];
                slot = Fd.add(slot, Fd.mul(a.c, b.c));
            }
        std::vector<Term> terms;
        terms.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c) terms.push_back({m, c});
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return grevlex_cmp(a.m, b.m) > 0; });
        return from_sorted(R_, std::move(terms));
    }
    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

    Polynomial pow(unsigned k) const {
        Polynomial r = constant(R_, 1), b = *this;
        while (k) {
            if (k & 1) r = r * b;
            k >>= 1;
            if (k) b = b * b;
        }
        return r;
    }

    // Terms of a given total degree, or of a given weight.
    Polynomial degree_part(unsigned d) const {
        Polynomial r(R_);
        for (const auto& t : t_)
            if (t.m.deg == d) r.t_.push_back(t);
        return r;
    }
    Polynomial weight_part(unsigned w) const {
        Polynomial r(R_);
        for (const auto& t : t_)
            if (t.m.wt == w) r.t_.push_back(t);
        return r;
    }

    bool operator==(const Polynomial& g) const {
        if (t_.size() != g.t_.size()) return false;
        if (R_ && g.R_ && !R_->same_as(*g.R_)) return false;
        for (std::size_t i = 0; i < t_.size(); ++i)
            if (!(t_[i].m == g.t_[i].m) || t_[i].c != g.t_[i].c) return false;
        return true;
    }

    std::string to_string() const { return to_string(R_->names()); }
    std::string to_string(const std::vector<std::string>& names) const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& t : t_) {
            if (!s.empty()) s += " + ";
            bool unit = t.m.deg == 0;
            if (t.c != 1 || unit) {
                s += std::to_string(t.c);
                if (!unit) s += '*';
            }
            if (!unit) s += monomial_to_string(t.m, names);
        }
        return s;
    }

private:
    void check_ring(const Polynomial& g) const {
        if (!R_ || !g.R_ || !R_->same_as(*g.R_))
            throw std::invalid_argument("polynomials from different rings");
    }

    RingPtr R_;
    std::vector<Term> t_;
};

// Parses "c*x^e*y + ..." as produced by Polynomial::to_string; '-' between terms is also accepted.
inline Polynomial parse_polynomial(const RingPtr& R, const std::string& text,
                                   const std::vector<std::string>* names = nullptr) {
    const auto& nm = names ? *names : R->names();
    const PrimeField& F = R->field();
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& why) -> void {
        throw std::invalid_argument("cannot parse polynomial at offset " + std::to_string(i) + ": " + why);
    };
    auto number = [&]() -> u64 {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a number");
        u64 v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + static_cast<u64>(text[i] - '0');
            if (v > (u64{1} << 40)) fail("number too large");
            ++i;
        }
        return v;
    };
    std::vector<Term> terms;
    bool negate = false;
    skip();
    if (i < text.size() && text[i] == '-') {
        negate = true;
        ++i;
    }
    while (true) {
        skip();
        u32 c = 1;
        std::vector<unsigned> e(R->nvars(), 0);
        while (true) {
            skip();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                c = F.mul(c, static_cast<u32>(number() % F.p()));
            } else {
                std::size_t j = i;
                while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
                std::string id = text.substr(i, j - i);
                auto it = std::find(nm.begin(), nm.end(), id);
                if (id.empty() || it == nm.end()) fail("unknown variable '" + id + "'");
                i = j;
                skip();
                unsigned ex = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    skip();
                    ex = static_cast<unsigned>(number());
                }
                e[static_cast<std::size_t>(it - nm.begin())] += ex;
            }
            skip();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (negate) c = F.neg(c);
        terms.push_back({R->monomial(e), c});
        skip();
        if (i == text.size()) break;
        if (text[i] == '+' || text[i] == '-') {
            negate = text[i] == '-';
            ++i;
            continue;
        }
        fail("unexpected character");
    }
    return Polynomial::from_terms(R, std::move(terms));
}

}  // namespace coinv

#endif
