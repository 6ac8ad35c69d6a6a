#ifndef COINV_NORMFORM_HPP
#define COINV_NORMFORM_HPP

#include <string>
#include <vector>

#include "check.hpp"
#include "rep.hpp"

namespace coinv {

// Brute-force sums over subsets of F_p. Subsets are bitmasks, so p is capped.
namespace subsets {

inline constexpr u32 kMaxPrime = 13;

inline void require_small(const PrimeField& F) {
    if (F.p() > kMaxPrime)
        throw std::domain_error("subset enumeration is limited to p <= " + std::to_string(kMaxPrime));
}

inline unsigned size(u32 mask) { return static_cast<unsigned>(__builtin_popcount(mask)); }

inline u32 elementary(const PrimeField& F, u32 mask, unsigned j) {
    std::vector<u32> e(j + 1, 0);
    e[0] = 1;
    for (u32 t = 0; t < F.p(); ++t) {
        if (!(mask >> t & 1)) continue;
        for (unsigned k = j; k >= 1; --k) e[k] = F.add(e[k], F.mul(e[k - 1], t));
    }
    return e[j];
}

inline u32 product(const PrimeField& F, u32 mask) { return elementary(F, mask, size(mask)); }

template <class Fn>
void for_each_of_size(const PrimeField& F, unsigned k, u32 excluded, Fn&& fn) {
    const u32 full = (u32{1} << F.p()) - 1;
    for (u32 m = 0; m <= full; ++m)
        if (size(m) == k && !(m & excluded)) fn(m);
}

}  // namespace subsets

// b_{k,j}(t) = sum over (k-1)-subsets alpha not containing t of t * pi(alpha) * sigma_j(alpha + {t}).
inline u32 b_kj(const PrimeField& F, unsigned k, unsigned j, u32 t) {
    subsets::require_small(F);
    if (k == 0) return 0;
    u32 s = 0;
    subsets::for_each_of_size(F, k - 1, u32{1} << t, [&](u32 a) {
        u32 v = F.mul(t, F.mul(subsets::product(F, a), subsets::elementary(F, a | (u32{1} << t), j)));
        s = F.add(s, v);
    });
    return s;
}

// d_{k,j} = sum over k-subsets alpha of pi(alpha) * sigma_j(alpha).
inline u32 d_kj(const PrimeField& F, unsigned k, unsigned j) {
    subsets::require_small(F);
    u32 s = 0;
    subsets::for_each_of_size(F, k, 0, [&](u32 a) {
        s = F.add(s, F.mul(subsets::product(F, a), subsets::elementary(F, a, j)));
    });
    return s;
}

inline u32 sign(const PrimeField& F, i64 e) { return (e % 2 == 0) ? 1 % F.p() : F.p() - 1; }

// xi_{ik} = (-1)^i / (2^i (p-k)) * C(p-2k+1, i-k+1) * C(p-k, k-1)
inline u32 xi(const PrimeField& F, unsigned i, unsigned k) {
    const unsigned p = F.p();
    if (p < 3) throw std::domain_error("xi is defined for odd primes");
    if (i < 1 || i > p - 2) throw std::out_of_range("xi: need 1 <= i <= p-2");
    const unsigned kmax = 2 * i <= p - 1 ? i + 1 : p - i;
    if (k < 1 || k > kmax) throw std::out_of_range("xi: k out of range for this i");
    u32 num = F.mul(F.binomial(p - 2 * k + 1, i - k + 1), F.binomial(p - k, k - 1));
    u32 den = F.mul(F.pow(2, i), p - k);
    return F.mul(sign(F, i), F.div(num, den));
}

// Coefficient of X^c Y^b Z^(p-b-c) in the orbit product of Z for V3, from the closed form.
inline u32 A_bc(const PrimeField& F, unsigned b, unsigned c) {
    const unsigned p = F.p();
    if (p < 3) throw std::domain_error("V3 requires p >= 3");
    if (b + c > p) throw std::out_of_range("A_bc: need b + c <= p");
    if (c == 0) {
        if (b == 0) return 1;
        if (b == p - 1) return p - 1;
        return 0;
    }
    if (c >= p - 1) return 0;
    if (b + c > p - 1) return 0;
    const unsigned j = p - 1 - b - c;
    if (j > c) return 0;
    u32 num = F.mul(F.binomial(b + c - j, c - j), F.binomial(b + c, j));
    u32 den = F.mul(F.pow(2, c), (b + c) % p);
    return F.mul(sign(F, i64(b) + 2 * i64(c) - i64(j)), F.div(num, den));
}

// The orbit product of Z for V3 assembled from the xi coefficients.
inline Polynomial closed_form_norm_v3(u64 p) {
    if (p == 2) throw std::domain_error("V3 does not exist for p = 2");
    RepSpec rep(p, {3});
    const PrimeField& F = rep.field();
    const auto& R = rep.ring();
    std::vector<Term> terms;
    auto mono = [&](unsigned x, unsigned y, unsigned z) { return R->monomial({x, y, z}); };
    terms.push_back({mono(0, 0, static_cast<unsigned>(p)), 1});
    terms.push_back({mono(0, static_cast<unsigned>(p - 1), 1), F.neg(1)});
    for (unsigned i = 1; i + 2 <= p; ++i) {
        const unsigned kmax = 2 * i <= p - 1 ? i + 1 : static_cast<unsigned>(p) - i;
        for (unsigned k = 1; k <= kmax; ++k)
            terms.push_back({mono(i, static_cast<unsigned>(p) - i - k, k), xi(F, i, k)});
    }
    return Polynomial::from_terms(R, std::move(terms));
}

inline Polynomial orbit_product_v3(u64 p) {
    RepSpec rep(p, {3});
    return norm(rep, rep.x(0, 3));
}

namespace detail {
// Coefficients (low to high) of the polynomial of degree < p interpolating values on F_p.
inline std::vector<u32> interpolate(const PrimeField& F, const std::vector<u32>& vals) {
    const u32 p = F.p();
    std::vector<u32> out(p, 0);
    for (u32 a = 0; a < p; ++a) {
        if (!vals[a]) continue;
        // Lagrange basis: prod_{s != a} (t - s) / (a - s)
        std::vector<u32> basis{1};
        u32 den = 1;
        for (u32 s = 0; s < p; ++s) {
            if (s == a) continue;
            std::vector<u32> nb(basis.size() + 1, 0);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                nb[i + 1] = F.add(nb[i + 1], basis[i]);
                nb[i] = F.sub(nb[i], F.mul(basis[i], s));
            }
            basis = std::move(nb);
            den = F.mul(den, F.sub(a, s));
        }
        u32 scale = F.div(vals[a], den);
        for (std::size_t i = 0; i < basis.size() && i < p; ++i) out[i] = F.add(out[i], F.mul(basis[i], scale));
    }
    return out;
}

inline int degree_of(const std::vector<u32>& coeffs) {
    for (std::size_t i = coeffs.size(); i-- > 0;)
        if (coeffs[i]) return static_cast<int>(i);
    return -1;
}
}  // namespace detail

// Criterion: closed form of the V3 orbit product against the product of the orbit.
inline CheckResult check_norm_expansion(u64 p) {
    CheckResult r{"norm-expansion p=" + std::to_string(p),
                  "orbit product of Z for V3 equals Z^p - Z Y^(p-1) + sum_i A_i X^i with A_i = sum_k xi_ik Z^k Y^(p-i-k)",
                  false, ""};
    Polynomial closed = closed_form_norm_v3(p), direct = orbit_product_v3(p);
    bool coeffs_ok = true;
    PrimeField F(p);
    RepSpec rep(p, {3});
    for (unsigned c = 0; c <= p; ++c)
        for (unsigned b = 0; b + c <= p; ++b) {
            u32 got = direct.coefficient(rep.ring()->monomial({c, b, static_cast<unsigned>(p) - b - c}));
            if (got != A_bc(F, b, c)) {
                coeffs_ok = false;
                r.detail += "A_{" + std::to_string(b) + "," + std::to_string(c) + "} mismatch; ";
            }
        }
    r.pass = closed == direct && coeffs_ok;
    if (closed != direct) r.detail += "closed form differs from orbit product";
    if (r.pass) r.detail = std::to_string(direct.size()) + " terms agree";
    return r;
}

inline CheckResult check_power_sums(u64 p) {
    PrimeField F(p);
    CheckResult r{"power-sums p=" + std::to_string(p), "sum over F_p of t^l is -1 when (p-1) | l and 0 otherwise",
                  true, ""};
    for (u64 l = 1; l <= 3 * p; ++l) {
        u32 s = 0;
        for (u32 t = 0; t < p; ++t) s = F.add(s, F.pow(t, l));
        u32 want = l % (p - 1) == 0 ? F.neg(1) : 0;
        if (s != want || F.power_sum(l) != want) {
            r.pass = false;
            r.detail += "l=" + std::to_string(l) + " ";
        }
    }
    if (r.pass) r.detail = "l = 1.." + std::to_string(3 * p);
    return r;
}

// Every b/d identity on subsets of F_p. p must be small.
inline std::vector<CheckResult> check_subset_lemmas(u64 p) {
    PrimeField F(p);
    const unsigned P = static_cast<unsigned>(p);
    std::vector<CheckResult> out;
    auto tag = [&](const std::string& s) { return s + " p=" + std::to_string(p); };
    auto fail = [](CheckResult& c, const std::string& why) {
        c.pass = false;
        if (c.detail.size() < 200) c.detail += why + "; ";
    };
    auto kj = [](unsigned k, unsigned j) { return "k=" + std::to_string(k) + ",j=" + std::to_string(j); };

    std::vector<std::vector<u32>> d(P + 1, std::vector<u32>(P + 1, 0));
    std::vector<std::vector<std::vector<u32>>> b(P + 1, std::vector<std::vector<u32>>(P + 1));
    for (unsigned k = 0; k <= P; ++k)
        for (unsigned j = 0; j <= k; ++j) {
            d[k][j] = d_kj(F, k, j);
            for (u32 t = 0; t < P; ++t) b[k][j].push_back(b_kj(F, k, j, t));
        }

    CheckResult sum{tag("b-sum"), "sum over t of b_kj(t) equals k d_kj", true, ""};
    CheckResult split{tag("b-split"), "d_kj = b_kj(t) + sum over k-subsets avoiding t of pi sigma_j", true, ""};
    for (unsigned k = 1; k <= P; ++k)
        for (unsigned j = 0; j <= k; ++j) {
            u32 s = 0;
            for (u32 t = 0; t < P; ++t) s = F.add(s, b[k][j][t]);
            if (s != F.mul(k % P, d[k][j])) fail(sum, kj(k, j));
            for (u32 t = 0; t < P; ++t) {
                u32 rest = 0;
                subsets::for_each_of_size(F, k, u32{1} << t, [&](u32 a) {
                    rest = F.add(rest, F.mul(subsets::product(F, a), subsets::elementary(F, a, j)));
                });
                if (d[k][j] != F.add(b[k][j][t], rest)) fail(split, kj(k, j) + ",t=" + std::to_string(t));
            }
        }
    out.push_back(sum);
    out.push_back(split);

    CheckResult j0{tag("j0-forms"),
                   "b_k0(t) = (-1)^(k+1) t^k for k < p, d_k0 = 0 for k < p-1, d_(p-1)0 = -1, b_p0(t) = t^p - t, d_p0 = 0",
                   true, ""};
    for (unsigned k = 1; k < P; ++k) {
        for (u32 t = 0; t < P; ++t)
            if (b[k][0][t] != F.mul(sign(F, k + 1), F.pow(t, k))) fail(j0, kj(k, 0) + " b");
        u32 want = k < P - 1 ? 0 : F.neg(1);
        if (d[k][0] != want) fail(j0, kj(k, 0) + " d");
    }
    for (u32 t = 0; t < P; ++t)
        if (b[P][0][t] != F.sub(F.pow(t, P), t)) fail(j0, "b_p0");
    if (d[P][0] != 0) fail(j0, "d_p0");
    out.push_back(j0);

    CheckResult low{tag("low-forms"),
                    "for 1 <= k+j < p: b_kj(t) = (-1)^(k+1) C(k,j) t^(k+j), d_kj = 0 below p-1 and (-1)^k C(k,j)/k at p-1",
                    true, ""};
    CheckResult high{tag("high-forms"),
                     "for p-1 < k+j < 2p-2: d_kj = 0 and b_kj(t) - (-1)^(k+1) C(k,j) t^(k+j) has degree <= k+j-(p-1)",
                     true, ""};
    for (unsigned k = 0; k <= P; ++k)
        for (unsigned j = 0; j <= k; ++j) {
            const unsigned s = k + j;
            if (s >= 1 && s < P) {
                if (k == 0) continue;
                for (u32 t = 0; t < P; ++t)
                    if (b[k][j][t] != F.mul(F.mul(sign(F, k + 1), F.binomial(k, j)), F.pow(t, s)))
                        fail(low, kj(k, j) + " b");
                u32 want = s < P - 1 ? 0 : F.div(F.mul(sign(F, k), F.binomial(k, j)), k % P);
                if (d[k][j] != want) fail(low, kj(k, j) + " d");
            } else if (s > P - 1 && s < 2 * P - 2) {
                if (d[k][j] != 0) fail(high, kj(k, j) + " d");
                std::vector<u32> f(P);
                for (u32 t = 0; t < P; ++t)
                    f[t] = F.sub(b[k][j][t], F.mul(F.mul(sign(F, k + 1), F.binomial(k, j)), F.pow(t, s)));
                if (detail::degree_of(detail::interpolate(F, f)) > int(s) - int(P - 1)) fail(high, kj(k, j) + " f");
            }
        }
    out.push_back(low);
    out.push_back(high);

    CheckResult count{tag("counting"),
                      "sum over c-subsets gamma and disjoint b-subsets alpha of sigma_j(gamma) pi(gamma) pi(alpha) = C(b+c-j, b) d_(b+c),j",
                      true, ""};
    for (unsigned c = 0; c <= P; ++c)
        for (unsigned bb = 0; bb + c <= P; ++bb)
            for (unsigned j = 0; j <= c; ++j) {
                u32 s = 0;
                subsets::for_each_of_size(F, c, 0, [&](u32 g) {
                    u32 pg = F.mul(subsets::elementary(F, g, j), subsets::product(F, g));
                    if (!pg) return;
                    subsets::for_each_of_size(F, bb, g, [&](u32 a) { s = F.add(s, F.mul(pg, subsets::product(F, a))); });
                });
                u32 want = F.mul(F.binomial(bb + c - j, bb), d[bb + c][j]);
                if (s != want) fail(count, "b=" + std::to_string(bb) + ",c=" + std::to_string(c) + ",j=" + std::to_string(j));
            }
    out.push_back(count);

    CheckResult coef{tag("norm-coefficients"),
                     "coefficient of X^c Y^b Z^(p-b-c) in the V3 orbit product of Z is given by the A_bc closed form",
                     true, ""};
    Polynomial N = orbit_product_v3(p);
    RepSpec rep(p, {3});
    for (unsigned c = 0; c <= P; ++c)
        for (unsigned bb = 0; bb + c <= P; ++bb)
            if (N.coefficient(rep.ring()->monomial({c, bb, P - bb - c})) != A_bc(F, bb, c))
                fail(coef, "b=" + std::to_string(bb) + ",c=" + std::to_string(c));
    out.push_back(coef);
    for (auto& c : out)
        if (c.pass && c.detail.empty()) c.detail = "all index ranges";
    return out;
}

}  // namespace coinv

#endif
