#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "grade3/gf.hpp"

namespace grade3 {

inline constexpr int kNumVars = 3;
inline constexpr const char* kVarNames = "xyz";
inline constexpr const char* kDualVarNames = "XYZ";

/// Monomial in the three variables x, y, z (exponent vector).
struct Monomial {
    std::array<int, 3> e{0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2]; }

    static Monomial one() { return Monomial{}; }
    static Monomial var(int i) {
        Monomial m;
        m.e[i] = 1;
        return m;
    }
    static Monomial of(int a, int b, int c) { return Monomial{{a, b, c}}; }

    Monomial operator*(const Monomial& o) const {
        return Monomial{{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}};
    }
    bool divides(const Monomial& o) const {
        return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
    }
    /// Componentwise quotient o / this; requires divides(o).
    Monomial quotient_of(const Monomial& o) const {
        return Monomial{{o.e[0] - e[0], o.e[1] - e[1], o.e[2] - e[2]}};
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

/// Graded reverse lexicographic comparison with x > y > z.
/// Returns +1 if a > b, 0 if equal, -1 if a < b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    for (int i = 2; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

/// Orders map keys so that iteration visits terms in decreasing grevlex order.
struct GrevlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

inline int strand_dim(int d) { return d < 0 ? 0 : (d + 1) * (d + 2) / 2; }

/// All monomials of total degree d, in strictly decreasing grevlex order.
inline std::vector<Monomial> strand_basis(int d) {
    if (d < 0) throw std::invalid_argument("strand_basis: negative degree");
    std::vector<Monomial> out;
    out.reserve(strand_dim(d));
    for (int c = 0; c <= d; ++c)
        for (int b = 0; b + c <= d; ++b) out.push_back(Monomial::of(d - b - c, b, c));
    return out;
}

/// Position of m within strand_basis(m.degree()).
inline int strand_index(const Monomial& m) {
    int d = m.degree(), b = m.e[1], c = m.e[2];
    return c * (d + 1) - c * (c - 1) / 2 + b;
}

inline std::string monomial_str(const Monomial& m, bool dual = false) {
    const char* names = dual ? kDualVarNames : kVarNames;
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace grade3
