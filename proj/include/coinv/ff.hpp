#ifndef COINV_FF_HPP
#define COINV_FF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coinv {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Arithmetic in F_p for a prime p < 2^32. Elements are plain residues in [0, p).
class PrimeField {
public:
    explicit PrimeField(u64 p) : p_(static_cast<u32>(p)) {
        if (p >= (u64{1} << 32))
            throw std::invalid_argument("prime " + std::to_string(p) + " does not fit in 32 bits");
        if (!is_prime(p))
            throw std::invalid_argument(std::to_string(p) + " is not prime");
    }

    u32 p() const noexcept { return p_; }

    u32 reduce(i64 x) const noexcept {
        i64 r = x % static_cast<i64>(p_);
        return static_cast<u32>(r < 0 ? r + p_ : r);
    }
    u32 add(u32 a, u32 b) const noexcept {
        u64 s = u64{a} + b;
        return static_cast<u32>(s >= p_ ? s - p_ : s);
    }
    u32 sub(u32 a, u32 b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    u32 neg(u32 a) const noexcept { return a == 0 ? 0 : p_ - a; }
    u32 mul(u32 a, u32 b) const noexcept { return static_cast<u32>(u64{a} * b % p_); }

    u32 pow(u32 a, u64 e) const noexcept {
        u32 r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u32 inv(u32 a) const {
        if (a % p_ == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }
    u32 div(u32 a, u32 b) const { return mul(a, inv(b)); }

    // n! for n < p; zero otherwise.
    u32 factorial(u64 n) const noexcept {
        if (n >= p_) return 0;
        u32 r = 1;
        for (u64 i = 2; i <= n; ++i) r = mul(r, static_cast<u32>(i));
        return r;
    }

    // C(n, k) mod p by Lucas' theorem.
    u32 binomial(u64 n, u64 k) const noexcept {
        if (k > n) return 0;
        u32 r = 1;
        while (k > 0 || n > 0) {
            u64 ni = n % p_, ki = k % p_;
            if (ki > ni) return 0;
            r = mul(r, small_binomial(ni, ki));
            n /= p_;
            k /= p_;
        }
        return r;
    }

    // C(n, k) for signed n, zero when k < 0 or (n >= 0 and k > n).
    u32 binomial_signed(i64 n, i64 k) const noexcept {
        if (k < 0) return 0;
        if (n >= 0) return binomial(static_cast<u64>(n), static_cast<u64>(k));
        // C(n, k) = (-1)^k C(k - n - 1, k)
        u32 b = binomial(static_cast<u64>(k - n - 1), static_cast<u64>(k));
        return (k & 1) ? neg(b) : b;
    }

    // Sum of t^l over t in F_p, with 0^0 = 1.
    u32 power_sum(u64 l) const noexcept {
        if (l == 0) return 0;
        return l % (p_ - 1) == 0 ? p_ - 1 : 0;
    }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

private:
    u32 small_binomial(u64 n, u64 k) const noexcept {
        if (k > n - k) k = n - k;
        u32 num = 1, den = 1;
        for (u64 i = 0; i < k; ++i) {
            num = mul(num, static_cast<u32>((n - i) % p_));
            den = mul(den, static_cast<u32>((i + 1) % p_));
        }
        return mul(num, pow(den, p_ - 2));
    }

    u32 p_;
};

inline u32 binomial_mod_p(const PrimeField& F, u64 n, u64 k) { return F.binomial(n, k); }

}  // namespace coinv

#endif
