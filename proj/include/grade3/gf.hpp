#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grade3 {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline constexpr u32 kDefaultPrime = 32003;

inline bool is_prime_u32(u32 n) {
    if (n < 2) return false;
    for (u32 d = 2; u64(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Unchecked modular helpers; callers guarantee 0 <= a,b < p.
inline u32 fp_add(u32 a, u32 b, u32 p) {
    u32 s = a + b;
    return s >= p ? s - p : s;
}
inline u32 fp_sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 fp_neg(u32 a, u32 p) { return a == 0 ? 0 : p - a; }
inline u32 fp_mul(u32 a, u32 b, u32 p) { return u32(u64(a) * b % p); }

inline u32 fp_from_ll(long long v, u32 p) {
    long long r = v % (long long)p;
    if (r < 0) r += p;
    return u32(r);
}

inline u32 fp_pow(u32 a, u64 e, u32 p) {
    u32 r = 1 % p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u32 fp_inv(u32 a, u32 p) {
    if (a == 0) throw std::domain_error("fp_inv: division by zero");
    // extended Euclid
    i64 t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        i64 q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += p;
    return u32(t);
}

/// Arithmetic context for GF(p). Requires an odd prime: the alternating-matrix
/// sign conventions used throughout assume characteristic != 2.
struct PrimeField {
    u32 p;

    explicit PrimeField(u32 prime) : p(prime) {
        if (prime <= 2 || !is_prime_u32(prime))
            throw std::invalid_argument("PrimeField: modulus must be a prime > 2, got " +
                                        std::to_string(prime));
    }

    u32 add(u32 a, u32 b) const { return fp_add(a, b, p); }
    u32 sub(u32 a, u32 b) const { return fp_sub(a, b, p); }
    u32 neg(u32 a) const { return fp_neg(a, p); }
    u32 mul(u32 a, u32 b) const { return fp_mul(a, b, p); }
    u32 inv(u32 a) const { return fp_inv(a, p); }
    u32 from_ll(long long v) const { return fp_from_ll(v, p); }
};

inline void require_same_prime(u32 a, u32 b, const char* where) {
    if (a != b) throw std::invalid_argument(std::string(where) + ": mixed prime moduli");
}

}  // namespace grade3
