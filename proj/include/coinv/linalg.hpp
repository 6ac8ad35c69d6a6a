#ifndef COINV_LINALG_HPP
#define COINV_LINALG_HPP

#include <cblas.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "ff.hpp"

namespace coinv {

// Dense row-major matrix over F_p. Matrices act on column vectors.
class Matrix {
public:
    Matrix(const PrimeField& F, std::size_t rows, std::size_t cols)
        : F_(F), r_(rows), c_(cols), a_(rows * cols, 0) {}

    static Matrix identity(const PrimeField& F, std::size_t n) {
        Matrix I(F, n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = 1 % F.p();
        return I;
    }

    const PrimeField& field() const { return F_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    u32& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    u32 operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    u32* row(std::size_t i) { return a_.data() + i * c_; }
    const u32* row(std::size_t i) const { return a_.data() + i * c_; }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](u32 v) { return v == 0; });
    }
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    Matrix operator*(const Matrix& B) const {
        if (c_ != B.r_) throw std::invalid_argument("matrix dimension mismatch");
        Matrix C(F_, r_, B.c_);
        std::vector<u64> acc(B.c_);
        for (std::size_t i = 0; i < r_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < c_; ++k) {
                u64 v = (*this)(i, k);
                if (!v) continue;
                const u32* b = B.row(k);
                for (std::size_t j = 0; j < B.c_; ++j) acc[j] = (acc[j] + v * b[j]) % F_.p();
            }
            for (std::size_t j = 0; j < B.c_; ++j) C(i, j) = static_cast<u32>(acc[j]);
        }
        return C;
    }
    Matrix operator-(const Matrix& B) const {
        Matrix C = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) C.a_[i] = F_.sub(a_[i], B.a_[i]);
        return C;
    }
    Matrix transpose() const {
        Matrix T(F_, c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) T(j, i) = (*this)(i, j);
        return T;
    }
    Matrix pow(unsigned k) const {
        Matrix R = identity(F_, r_), B = *this;
        while (k) {
            if (k & 1) R = R * B;
            k >>= 1;
            if (k) B = B * B;
        }
        return R;
    }
    std::vector<u32> apply(const std::vector<u32>& v) const {
        std::vector<u32> out(r_, 0);
        for (std::size_t i = 0; i < r_; ++i) {
            u64 s = 0;
            for (std::size_t j = 0; j < c_; ++j) s = (s + u64{(*this)(i, j)} * v[j]) % F_.p();
            out[i] = static_cast<u32>(s);
        }
        return out;
    }

    // In-place reduced row echelon form; returns the pivot columns. Rows past the rank are zero.
    std::vector<std::size_t> rref() {
        const u64 p = F_.p();
        const u64 q = std::max<u64>((p - 1) * (p - 1), 1);
        if (q <= (0xFFFFFFFFull - p) / 2) return rref_lazy(a_.data(), (0xFFFFFFFFull - p) / q);
        std::vector<u64> wide(a_.begin(), a_.end());
        auto piv = rref_lazy(wide.data(), (~u64{0} - p) / q);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = static_cast<u32>(wide[i]);
        return piv;
    }

    std::size_t rank() const {
        Matrix t = *this;
        return t.rref().size();
    }

    // Rows span the null space {v : A v = 0}, in reduced echelon form.
    Matrix kernel() const {
        Matrix t = *this;
        auto piv = t.rref();
        std::vector<char> is_piv(c_, 0);
        for (auto c : piv) is_piv[c] = 1;
        std::vector<std::size_t> free;
        for (std::size_t j = 0; j < c_; ++j)
            if (!is_piv[j]) free.push_back(j);
        Matrix K(F_, free.size(), c_);
        for (std::size_t k = 0; k < free.size(); ++k) {
            K(k, free[k]) = 1;
            for (std::size_t r = 0; r < piv.size(); ++r) K(k, piv[r]) = F_.neg(t(r, free[k]));
        }
        K.rref();
        return K;
    }

    // Sub-matrix made of the first k rows.
    Matrix top_rows(std::size_t k) const {
        Matrix R(F_, k, c_);
        std::copy(a_.begin(), a_.begin() + static_cast<std::ptrdiff_t>(k * c_), R.a_.begin());
        return R;
    }

private:
    // Row operations accumulate without reduction; a row is reduced after `limit` updates.
    template <class T>
    std::vector<std::size_t> rref_lazy(T* a, u64 limit) {
        const T p = static_cast<T>(F_.p());
        std::vector<u64> cnt(r_, 0);
        auto reduce_row = [&](std::size_t i) {
            T* ri = a + i * c_;
            for (std::size_t j = 0; j < c_; ++j) ri[j] %= p;
            cnt[i] = 0;
        };
        std::vector<std::size_t> piv;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < c_ && rank < r_; ++col) {
            std::size_t sel = r_;
            for (std::size_t i = rank; i < r_; ++i) {
                T& x = a[i * c_ + col];
                x %= p;
                if (x) {
                    sel = i;
                    break;
                }
            }
            if (sel == r_) continue;
            if (sel != rank) {
                std::swap_ranges(a + sel * c_, a + sel * c_ + c_, a + rank * c_);
                std::swap(cnt[sel], cnt[rank]);
            }
            reduce_row(rank);
            T* pr = a + rank * c_;
            const u64 inv = F_.inv(static_cast<u32>(pr[col]));
            for (std::size_t j = col; j < c_; ++j) pr[j] = static_cast<T>(u64{pr[j]} * inv % p);
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == rank) continue;
                T* ri = a + i * c_;
                ri[col] %= p;
                if (!ri[col]) continue;
                if (cnt[i] >= limit) reduce_row(i);
                const T nf = p - ri[col];
                for (std::size_t j = col; j < c_; ++j) ri[j] += nf * pr[j];
                ++cnt[i];
            }
            piv.push_back(col);
            ++rank;
        }
        for (std::size_t i = 0; i < r_; ++i) reduce_row(i);
        return piv;
    }

    PrimeField F_;
    std::size_t r_, c_;
    std::vector<u32> a_;
};

// Row space of the rows given as vectors, as an echelon basis (leading entry 1).
inline Matrix row_span(const PrimeField& F, const std::vector<std::vector<u32>>& rows, std::size_t ncols) {
    Matrix M(F, rows.size(), ncols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j) M(i, j) = rows[i][j];
    std::size_t r = M.rref().size();
    return M.top_rows(r);
}

inline bool same_row_space(const Matrix& A, const Matrix& B) {
    if (A.cols() != B.cols()) return false;
    Matrix a = A, b = B;
    std::size_t ra = a.rref().size(), rb = b.rref().size();
    return ra == rb && a.top_rows(ra) == b.top_rows(rb);
}

// Jordan type of a nilpotent matrix from ranks of its powers: block size -> multiplicity.
inline std::vector<std::pair<unsigned, unsigned>> nilpotent_jordan_type(const Matrix& D) {
    const std::size_t n = D.rows();
    std::vector<std::size_t> r{n};
    Matrix P = Matrix::identity(D.field(), n);
    while (r.back() > 0) {
        P = P * D;
        std::size_t rk = P.rank();
        if (rk == r.back()) throw std::domain_error("matrix is not nilpotent");
        r.push_back(rk);
    }
    r.push_back(0);
    std::vector<std::pair<unsigned, unsigned>> out;
    for (std::size_t k = 1; k + 1 < r.size(); ++k) {
        std::size_t mult = r[k - 1] - 2 * r[k] + r[k + 1];
        if (mult) out.emplace_back(static_cast<unsigned>(k), static_cast<unsigned>(mult));
    }
    return out;
}

// A cyclic generator g of length k: g, Dg, ..., D^{k-1}g are part of a Jordan basis.
struct JordanChain {
    std::vector<std::vector<u32>> vectors;  // vectors[t] = D^t g
    std::size_t length() const { return vectors.size(); }
};

// Explicit Jordan basis for a nilpotent matrix.
inline std::vector<JordanChain> jordan_chains(const Matrix& D) {
    const PrimeField& F = D.field();
    const std::size_t n = D.rows();
    std::vector<Matrix> kernels;  // kernels[k] = ker D^k
    kernels.push_back(Matrix(F, 0, n));
    Matrix P = Matrix::identity(F, n);
    while (kernels.back().rows() < n) {
        P = P * D;
        kernels.push_back(P.kernel());
        if (kernels.size() > n + 1) throw std::domain_error("matrix is not nilpotent");
    }
    std::vector<JordanChain> chains;
    for (std::size_t k = kernels.size() - 1; k >= 1; --k) {
        std::vector<std::vector<u32>> span;
        for (std::size_t i = 0; i < kernels[k - 1].rows(); ++i)
            span.emplace_back(kernels[k - 1].row(i), kernels[k - 1].row(i) + n);
        for (const auto& ch : chains) span.push_back(ch.vectors[ch.length() - k]);
        std::size_t base = row_span(F, span, n).rows();
        for (std::size_t i = 0; i < kernels[k].rows(); ++i) {
            std::vector<u32> g(kernels[k].row(i), kernels[k].row(i) + n);
            span.push_back(g);
            std::size_t r = row_span(F, span, n).rows();
            if (r == base) {
                span.pop_back();
                continue;
            }
            base = r;
            JordanChain ch;
            ch.vectors.push_back(g);
            for (std::size_t t = 1; t < k; ++t) ch.vectors.push_back(D.apply(ch.vectors.back()));
            chains.push_back(std::move(ch));
        }
    }
    return chains;
}

// Decides whether every one of the trailing rows lies in the span of the leading `main_rows` rows.
// Entries are residues mod p stored as floats; trailing updates go through sgemm, which is exact
// as long as every accumulated dot product stays below 2^24.
class RowSpaceTest {
public:
    RowSpaceTest(const PrimeField& F, std::size_t main_rows, std::size_t extra_rows, std::size_t cols)
        : F_(F), m_main_(main_rows), m_(main_rows + extra_rows), n_(cols), a_(m_ * n_, 0.0f) {}

    static std::size_t max_panel(u32 p) {
        double q = double(p - 1) * double(p - 1);
        double lim = (16777216.0 - p) / std::max(q, 1.0);
        return static_cast<std::size_t>(std::min(256.0, lim));
    }
    static bool supported(u32 p) { return max_panel(p) >= 8; }

    float* row(std::size_t i) { return a_.data() + i * n_; }
    void set(std::size_t i, std::size_t j, u32 v) { a_[i * n_ + j] = static_cast<float>(v); }

    std::size_t rank() const { return rank_; }

    bool run() {
        const u32 p = F_.p();
        const float fp = static_cast<float>(p);
        const float inv_p = 1.0f / fp;
        const std::size_t b = max_panel(p);
        if (b < 8) throw std::domain_error("prime too large for the float elimination path");
        std::vector<float> L(m_ * b, 0.0f);
        auto reduce = [&](float* x, std::size_t len) {
            for (std::size_t j = 0; j < len; ++j) {
                float q = std::floor(x[j] * inv_p);
                float r = x[j] - q * fp;
                r = r < 0.0f ? r + fp : r;
                r = r >= fp ? r - fp : r;
                x[j] = r;
            }
        };
        rank_ = 0;
        for (std::size_t c0 = 0; c0 < n_; c0 += b) {
            const std::size_t c1 = std::min(n_, c0 + b);
            const std::size_t start = rank_;
            std::fill(L.begin(), L.end(), 0.0f);
            for (std::size_t c = c0; c < c1; ++c) {
                std::size_t sel = m_main_;
                for (std::size_t i = rank_; i < m_main_; ++i)
                    if (a_[i * n_ + c] != 0.0f) {
                        sel = i;
                        break;
                    }
                if (sel == m_main_) {
                    for (std::size_t i = m_main_; i < m_; ++i)
                        if (a_[i * n_ + c] != 0.0f) return false;
                    continue;
                }
                if (sel != rank_) {
                    std::swap_ranges(row(sel), row(sel) + n_, row(rank_));
                    std::swap_ranges(L.begin() + sel * b, L.begin() + sel * b + b, L.begin() + rank_ * b);
                }
                const float* pr = row(rank_);
                const u32 inv = F_.inv(static_cast<u32>(pr[c]));
                const std::size_t k = rank_ - start;
                for (std::size_t i = rank_ + 1; i < m_; ++i) {
                    float* ri = row(i);
                    if (ri[c] == 0.0f) continue;
                    const float f = static_cast<float>(F_.mul(static_cast<u32>(ri[c]), inv));
                    L[i * b + k] = f;
                    ri[c] = 0.0f;
                    for (std::size_t j = c + 1; j < c1; ++j) ri[j] -= f * pr[j];
                    reduce(ri + c + 1, c1 - c - 1);
                }
                ++rank_;
            }
            const std::size_t k = rank_ - start;
            if (k == 0 || c1 == n_) continue;
            const std::size_t w = n_ - c1;
            for (std::size_t t = 1; t < k; ++t) {
                float* rt = row(start + t) + c1;
                for (std::size_t s = 0; s < t; ++s) {
                    const float f = L[(start + t) * b + s];
                    if (f == 0.0f) continue;
                    const float* rs = row(start + s) + c1;
                    for (std::size_t j = 0; j < w; ++j) rt[j] -= f * rs[j];
                    reduce(rt, w);
                }
            }
            if (rank_ < m_) {
                cblas_sgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(m_ - rank_),
                            static_cast<int>(w), static_cast<int>(k), -1.0f, L.data() + rank_ * b,
                            static_cast<int>(b), row(start) + c1, static_cast<int>(n_), 1.0f, row(rank_) + c1,
                            static_cast<int>(n_));
                for (std::size_t i = rank_; i < m_; ++i) reduce(row(i) + c1, w);
            }
        }
        for (std::size_t i = m_main_; i < m_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (a_[i * n_ + j] != 0.0f) return false;
        return true;
    }

private:
    PrimeField F_;
    std::size_t m_main_, m_, n_;
    std::vector<float> a_;
    std::size_t rank_ = 0;
};

// Same question answered with exact integer elimination; used for large primes and as a cross-check.
inline bool rows_in_span(const Matrix& main, const Matrix& extra) {
    Matrix a = main;
    std::size_t r = a.rref().size();
    Matrix both(main.field(), r + extra.rows(), main.cols());
    for (std::size_t i = 0; i < r; ++i) std::copy(a.row(i), a.row(i) + a.cols(), both.row(i));
    for (std::size_t i = 0; i < extra.rows(); ++i) std::copy(extra.row(i), extra.row(i) + extra.cols(), both.row(r + i));
    return both.rank() == r;
}

}  // namespace coinv

#endif
