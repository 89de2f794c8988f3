#pragma once

#include <cstdint>

#include "grade3/alt_matrix.hpp"
#include "grade3/dual.hpp"

namespace grade3 {

/// Counter-based splittable generator (splitmix64 core). Sub-streams are
/// derived from (seed, stream) pairs so trials are order-independent and can
/// run in parallel without shared state.
class Rng {
public:
    explicit Rng(u64 seed) : state_(seed) {}
    Rng(u64 seed, u64 stream) : state_(mix(seed ^ 0x9e3779b97f4a7c15ULL, stream)) {}

    u64 next() {
        u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static u64 mix(u64 a, u64 b) {
        Rng r(a + 0x632be59bd9b4e019ULL * (b + 1));
        return r.next();
    }

    u32 uniform_fp(u32 p) { return u32(next() % p); }

    u32 nonzero_fp(u32 p) {
        u32 v = uniform_fp(p);
        while (v == 0) v = uniform_fp(p);
        return v;
    }

    /// Uniform coefficients over the full dual strand basis; resampled until
    /// nonzero.
    DualForm random_dual(u32 p, int degree) {
        while (true) {
            DualForm f(p, degree);
            for (const auto& m : strand_basis(degree)) f.add_term(m, uniform_fp(p));
            if (!f.is_zero()) return f;
        }
    }

    Poly random_linear_form(u32 p) {
        while (true) {
            Poly f = Poly::zero(p);
            for (int v = 0; v < 3; ++v)
                f = f + Poly::term(p, Monomial::var(v), uniform_fp(p));
            if (!f.is_zero()) return f;
        }
    }

    Poly random_form(u32 p, int degree) {
        Poly f = Poly::zero(p);
        for (const auto& m : strand_basis(degree)) f = f + Poly::term(p, m, uniform_fp(p));
        return f;
    }

    /// Alternating matrix with independent uniform linear entries.
    AltMatrix random_linear_alternating(u32 p, int n) {
        AltMatrix m(p, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) m.set_upper(i, j, random_form(p, 1));
        return m;
    }

    /// Alternating matrix with uniform scalar entries.
    AltMatrix random_scalar_alternating(u32 p, int n) {
        AltMatrix m(p, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                m.set_upper(i, j, Poly::constant(p, uniform_fp(p)));
        return m;
    }

private:
    u64 state_;
};

}  // namespace grade3
