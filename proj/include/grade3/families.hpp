#pragma once

#include <stdexcept>
#include <string>

#include "grade3/alt_matrix.hpp"

namespace grade3 {

enum class FamilyKind { Hev, Hodd, Uev, Uodd, Uj, Vev, Vodd, Vj };

inline const char* family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Hev: return "Hev";
        case FamilyKind::Hodd: return "Hodd";
        case FamilyKind::Uev: return "Uev";
        case FamilyKind::Uodd: return "Uodd";
        case FamilyKind::Uj: return "Uj";
        case FamilyKind::Vev: return "Vev";
        case FamilyKind::Vodd: return "Vodd";
        case FamilyKind::Vj: return "Vj";
    }
    return "?";
}

inline FamilyKind family_from_name(const std::string& s) {
    if (s == "Hev") return FamilyKind::Hev;
    if (s == "Hodd") return FamilyKind::Hodd;
    if (s == "Uev") return FamilyKind::Uev;
    if (s == "Uodd") return FamilyKind::Uodd;
    if (s == "Uj") return FamilyKind::Uj;
    if (s == "Vev") return FamilyKind::Vev;
    if (s == "Vodd") return FamilyKind::Vodd;
    if (s == "Vj") return FamilyKind::Vj;
    throw std::invalid_argument("unknown family '" + s + "'");
}

namespace detail {

inline Poly var_sq(u32 p, int v) { return Poly::term(p, Monomial::var(v) * Monomial::var(v), 1); }
inline Poly var_lin(u32 p, int v) { return Poly::variable(p, v); }

}  // namespace detail

/// The m x m three-diagonal square family: row i carries an x-entry at column
/// m-i, a z-entry at m-i+1 and a y-entry at m-i+2 (1-based, entries outside
/// the matrix dropped). Rows up to quad_rows use squared variables, the rest
/// are linear.
inline PolyMatrix banded_u_matrix(u32 p, int m, int quad_rows) {
    PolyMatrix u(p, m, m);
    for (int i = 1; i <= m; ++i) {
        bool quad = i <= quad_rows;
        auto put = [&](int col, int v) {
            if (col >= 1 && col <= m)
                u.at(i - 1, col - 1) = quad ? detail::var_sq(p, v) : detail::var_lin(p, v);
        };
        put(m - i, 0);      // x
        put(m - i + 1, 2);  // z
        put(m - i + 2, 1);  // y
    }
    return u;
}

/// Square families: Uev(m), Uodd(m), Uj(m, j). Uodd coincides with Uj at j=1.
inline PolyMatrix family_square(FamilyKind kind, int m, int j, u32 p = kDefaultPrime) {
    if (m < 1) throw std::invalid_argument("family_square: m must be >= 1");
    switch (kind) {
        case FamilyKind::Uev: return banded_u_matrix(p, m, m);
        case FamilyKind::Uodd: return banded_u_matrix(p, m, m - 1);
        case FamilyKind::Uj:
            if (j < 1 || j > m) throw std::invalid_argument("family_square: need 1 <= j <= m");
            return banded_u_matrix(p, m, m - j);
        default:
            throw std::invalid_argument("family_square: not a square-matrix family");
    }
}

namespace detail {

/// (2m+1) x (2m+1) alternating block matrix with corner blocks O_{x^2} (an x^2
/// in the lower-right corner of the m x 1 block) and a y-corner row, and the
/// transpose of u as the top-right m x m block.
inline AltMatrix v_block_matrix(u32 p, int m, const PolyMatrix& u, bool corner_linear) {
    int n = 2 * m + 1;
    AltMatrix v(p, n);
    v.set_upper(m - 1, m, var_sq(p, 0));  // x^2 at the bottom of the middle column block
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < m; ++c) {
            const Poly& e = u.at(c, i);  // transpose of u
            if (!e.is_zero()) v.set_upper(i, m + 1 + c, e);
        }
    v.set_upper(m, m + 1, corner_linear ? var_lin(p, 1) : var_sq(p, 1));
    return v;
}

}  // namespace detail

/// Alternating families.
///   Hev(s), s even:  (s+1)x(s+1), quadratic entries.
///   Hodd(s), s odd:  (s+2)x(s+2), quadratic entries with linear z and y corners.
///   Vev(m), Vodd(m): (2m+1)x(2m+1) block matrices over Uev/Uodd.
///   Vj(m, j), j<=m:  block matrix over Uj(m, j); the j=m case uses a linear
///                    y corner, as does Vodd at m=1.
inline AltMatrix family_alt(FamilyKind kind, int param, int j = -1, u32 p = kDefaultPrime) {
    switch (kind) {
        case FamilyKind::Hev: {
            int s = param;
            if (s < 2 || s % 2 != 0)
                throw std::invalid_argument("family Hev: s must be even and >= 2");
            int n = s + 1;
            AltMatrix m(p, n);
            for (int i = 1; i < n; ++i)
                m.set_upper(i - 1, i, detail::var_sq(p, i % 2 == 1 ? 0 : 1));
            for (int i = 1; 2 * i < n + 1; ++i) m.set_upper(i - 1, n - i, detail::var_sq(p, 2));
            return m;
        }
        case FamilyKind::Hodd: {
            int s = param;
            if (s < 1 || s % 2 != 1)
                throw std::invalid_argument("family Hodd: s must be odd and >= 1");
            int n = s + 2;
            AltMatrix m(p, n);
            for (int i = 1; i < n; ++i) {
                int v = i % 2 == 1 ? 0 : 1;
                m.set_upper(i - 1, i,
                            i == n - 1 ? detail::var_lin(p, 1) : detail::var_sq(p, v));
            }
            for (int i = 1; 2 * i < n + 1; ++i)
                m.set_upper(i - 1, n - i,
                            i == 1 ? detail::var_lin(p, 2) : detail::var_sq(p, 2));
            return m;
        }
        case FamilyKind::Vev: {
            int m = param;
            if (m < 1) throw std::invalid_argument("family Vev: m must be >= 1");
            return detail::v_block_matrix(p, m, family_square(FamilyKind::Uev, m, -1, p), false);
        }
        case FamilyKind::Vodd: {
            int m = param;
            if (m < 1) throw std::invalid_argument("family Vodd: m must be >= 1");
            // identical to Vj(m, 1); at m=1 the y corner degenerates to linear
            return detail::v_block_matrix(p, m, family_square(FamilyKind::Uodd, m, -1, p),
                                          m == 1);
        }
        case FamilyKind::Vj: {
            int m = param;
            if (m < 1) throw std::invalid_argument("family Vj: m must be >= 1");
            if (j < 1 || j > m) throw std::invalid_argument("family Vj: need 1 <= j <= m");
            return detail::v_block_matrix(p, m, family_square(FamilyKind::Uj, m, j, p), j == m);
        }
        default:
            throw std::invalid_argument("family_alt: not an alternating family");
    }
}

}  // namespace grade3
