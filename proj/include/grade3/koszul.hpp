#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grade3/graded_ideal.hpp"
#include "grade3/inverse_system.hpp"

namespace grade3 {

inline long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Graded Betti numbers beta_{i,j} with finite support.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;

    long long get(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    void set(int i, int j, long long b) {
        if (b != 0) entries[{i, j}] = b;
    }
    long long total(int i) const {
        long long t = 0;
        for (const auto& [ij, b] : entries)
            if (ij.first == i) t += b;
        return t;
    }
    int max_row() const {
        int r = 0;
        for (const auto& [ij, b] : entries) r = std::max(r, ij.second - ij.first);
        return r;
    }
    bool operator==(const BettiTable& o) const { return entries == o.entries; }

    /// Aligned text layout with rows indexed by j - i, matching the usual
    /// computer-algebra display of graded Betti tables.
    std::string to_text() const {
        int rmax = max_row();
        std::vector<std::array<long long, 4>> rows(rmax + 1, {0, 0, 0, 0});
        for (const auto& [ij, b] : entries) rows[ij.second - ij.first][ij.first] = b;
        std::vector<std::size_t> width(5, 1);
        auto cell = [&](int r, int i) -> std::string {
            long long v = rows[r][i];
            return v == 0 ? "." : std::to_string(v);
        };
        for (int r = 0; r <= rmax; ++r) {
            width[0] = std::max(width[0], std::to_string(r).size());
            for (int i = 0; i < 4; ++i) width[i + 1] = std::max(width[i + 1], cell(r, i).size());
        }
        std::ostringstream os;
        auto pad = [&](const std::string& s, std::size_t w) {
            for (std::size_t k = s.size(); k < w; ++k) os << ' ';
            os << s;
        };
        pad("", width[0]);
        for (int i = 0; i < 4; ++i) {
            os << "  ";
            pad(std::to_string(i), width[i + 1]);
        }
        os << '\n';
        for (int r = 0; r <= rmax; ++r) {
            pad(std::to_string(r), width[0]);
            for (int i = 0; i < 4; ++i) {
                os << "  ";
                pad(cell(r, i), width[i + 1]);
            }
            os << '\n';
        }
        return os.str();
    }
};

/// Strand data of an Artinian quotient A = R/I up to a degree bound: monomial
/// bases of each graded piece and the multiplication-by-variable maps, which
/// is everything Koszul-strand homology needs.
class QuotientRing {
public:
    QuotientRing(const GradedIdeal& ideal, int dmax) : p_(ideal.prime()), dmax_(dmax) {
        basis_.resize(dmax + 1);
        reduce_.resize(dmax + 1);
        compl_index_.resize(dmax + 1);
        pivot_row_.resize(dmax + 1);
        for (int d = 0; d <= dmax; ++d) {
            basis_[d] = ideal.quotient_basis(d);
            const RowSpace& rs = ideal.strand(d);
            compl_index_[d].assign(strand_dim(d), -1);
            std::vector<bool> is_pivot(strand_dim(d), false);
            for (int c : rs.pivots()) is_pivot[c] = true;
            int k = 0;
            for (int c = 0; c < strand_dim(d); ++c)
                if (!is_pivot[c]) compl_index_[d][c] = k++;
            // row r of the strand rref, restricted to complement columns
            reduce_[d].assign(rs.dim(), std::vector<u32>(k, 0));
            pivot_row_[d].assign(strand_dim(d), -1);
            for (int r = 0; r < rs.dim(); ++r) {
                pivot_row_[d][rs.pivots()[r]] = r;
                for (int c = 0; c < strand_dim(d); ++c)
                    if (compl_index_[d][c] >= 0) reduce_[d][r][compl_index_[d][c]] = rs.row(r)[c];
            }
        }
        if (!basis_[dmax].empty())
            throw std::domain_error("QuotientRing: quotient not Artinian within degree bound");
        var_mult_.resize(3);
        for (int v = 0; v < 3; ++v) {
            var_mult_[v].reserve(dmax);
            for (int d = 0; d < dmax; ++d) {
                FpMat m(p_, dim(d + 1), dim(d));
                for (int c = 0; c < dim(d); ++c) {
                    auto img = reduce_monomial(basis_[d][c] * Monomial::var(v));
                    for (int r = 0; r < dim(d + 1); ++r) m.at(r, c) = img[r];
                }
                var_mult_[v].push_back(std::move(m));
            }
        }
    }

    u32 prime() const { return p_; }
    int dmax() const { return dmax_; }
    int dim(int d) const { return (d < 0 || d > dmax_) ? 0 : int(basis_[d].size()); }
    int top_degree() const {
        for (int d = dmax_; d >= 0; --d)
            if (dim(d)) return d;
        return -1;
    }
    const std::vector<Monomial>& basis(int d) const { return basis_[d]; }

    /// Coordinates of the residue class of a monomial over basis(degree).
    std::vector<u32> reduce_monomial(const Monomial& m) const {
        int d = m.degree();
        std::vector<u32> out(dim(d), 0);
        int col = strand_index(m);
        if (compl_index_[d][col] >= 0) {
            out[compl_index_[d][col]] = 1;
            return out;
        }
        int r = pivot_row_[d][col];
        for (int k = 0; k < dim(d); ++k) out[k] = fp_neg(reduce_[d][r][k], p_);
        return out;
    }

    std::vector<u32> reduce(const Poly& f, int d) const {
        std::vector<u32> out(dim(d), 0);
        for (const auto& [m, c] : f.terms()) {
            if (m.degree() != d) throw std::invalid_argument("QuotientRing::reduce: degree mix");
            auto img = reduce_monomial(m);
            for (int k = 0; k < dim(d); ++k)
                out[k] = u32((out[k] + u64(c) * img[k]) % p_);
        }
        return out;
    }

    /// Multiplication A_d -> A_{d+1} by variable v.
    const FpMat& var_mult(int v, int d) const { return var_mult_[v][d]; }

private:
    u32 p_;
    int dmax_;
    std::vector<std::vector<Monomial>> basis_;
    std::vector<std::vector<std::vector<u32>>> reduce_;  // [d][row][compl col]
    std::vector<std::vector<int>> compl_index_;          // [d][strand col] -> compl col or -1
    std::vector<std::vector<int>> pivot_row_;            // [d][strand col] -> row or -1
    std::vector<std::vector<FpMat>> var_mult_;
};

inline constexpr int kWedgeDim[4] = {1, 3, 3, 1};

/// Index subsets for the exterior powers of the rank-3 Koszul module, in the
/// fixed basis order used everywhere: (), (x),(y),(z), (xy),(xz),(yz), (xyz).
inline const std::vector<std::vector<int>>& wedge_sets(int i) {
    static const std::vector<std::vector<int>> w[4] = {
        {{}},
        {{0}, {1}, {2}},
        {{0, 1}, {0, 2}, {1, 2}},
        {{0, 1, 2}},
    };
    return w[i];
}

/// Position of S \ {S[t]} in wedge_sets(i-1) together with the Koszul sign
/// (-1)^t for removing the t-th smallest element.
inline int wedge_remove(int i, int set_index, int t, int& sign) {
    const auto& s = wedge_sets(i)[set_index];
    std::vector<int> rest;
    for (int k = 0; k < i; ++k)
        if (k != t) rest.push_back(s[k]);
    sign = (t % 2 == 0) ? 1 : -1;
    const auto& lower = wedge_sets(i - 1);
    for (int idx = 0; idx < int(lower.size()); ++idx)
        if (lower[idx] == rest) return idx;
    throw std::logic_error("wedge_remove: subset not found");
}

/// Koszul strand differential wedge^i V (x) A_d -> wedge^{i-1} V (x) A_{d+1}
/// as a dense matrix. Column blocks follow wedge_sets order.
inline FpMat koszul_strand(const QuotientRing& A, int i, int d) {
    const u32 p = A.prime();
    int rows = kWedgeDim[i - 1] * A.dim(d + 1);
    int cols = kWedgeDim[i] * A.dim(d);
    FpMat m(p, rows, cols);
    if (rows == 0 || cols == 0) return m;
    for (int si = 0; si < kWedgeDim[i]; ++si) {
        const auto& s = wedge_sets(i)[si];
        for (int t = 0; t < i; ++t) {
            int sign = 1;
            int ti = wedge_remove(i, si, t, sign);
            const FpMat& mult = A.var_mult(s[t], d);
            for (int r = 0; r < A.dim(d + 1); ++r)
                for (int c = 0; c < A.dim(d); ++c) {
                    u32 v = mult.at(r, c);
                    if (!v) continue;
                    u32 cur = m.at(ti * A.dim(d + 1) + r, si * A.dim(d) + c);
                    m.at(ti * A.dim(d + 1) + r, si * A.dim(d) + c) =
                        sign > 0 ? fp_add(cur, v, p) : fp_sub(cur, v, p);
                }
        }
    }
    return m;
}

/// Graded Betti numbers of R/I from Koszul strand homology:
/// beta_{i,j} = dim ker(strand out) - rank(strand in), exact over GF(p).
inline BettiTable betti(const QuotientRing& A) {
    int top = A.top_degree();
    if (A.dmax() < top + 1) throw std::invalid_argument("betti: degree bound too small");
    BettiTable b;
    // ranks[i][d] = rank of wedge^i V (x) A_d -> wedge^{i-1} V (x) A_{d+1}
    std::map<std::pair<int, int>, int> ranks;
    auto rank_of = [&](int i, int d) -> int {
        if (i < 1 || i > 3 || d < 0 || d > top) return 0;
        auto key = std::make_pair(i, d);
        auto it = ranks.find(key);
        if (it != ranks.end()) return it->second;
        int r = fp_rank(koszul_strand(A, i, d));
        ranks[key] = r;
        return r;
    };
    for (int i = 0; i <= 3; ++i)
        for (int d = 0; d <= top; ++d) {
            int j = i + d;
            long long dim = (long long)kWedgeDim[i] * A.dim(d);
            long long beta = dim - rank_of(i, d) - rank_of(i + 1, d - 1);
            b.set(i, j, beta);
        }
    return b;
}

inline BettiTable betti(const GradedIdeal& ideal, int dmax) {
    return betti(QuotientRing(ideal, dmax));
}

/// Initial degree of the annihilator of a dual form: least t with a nonzero
/// kernel of the contraction map on S_t.
inline int initial_degree_of_ann(const DualForm& phi) {
    if (phi.is_zero()) throw std::invalid_argument("initial_degree_of_ann: zero form");
    InverseSystem sys(phi.prime(), {phi});
    for (int t = 1; t <= phi.degree() + 1; ++t) {
        int dom = strand_dim(t);
        if (sys.phi_rank(t) < dom) return t;
    }
    throw std::logic_error("initial_degree_of_ann: not found");
}

/// Rank of the composite map wedge^i V (x) S_{t-1} -> wedge^{i-1} V (x) D_{c-t}
/// built from the Koszul differential followed by contraction against phi,
/// where t is the initial degree of the annihilator of phi. The rank defect
/// of this matrix computes dim Tor_i at internal degree i + t - 1.
inline int theta_rank(const DualForm& phi, int i, int t) {
    if (i < 2 || i > 3) throw std::invalid_argument("theta_rank: i must be 2 or 3");
    const u32 p = phi.prime();
    int c = phi.degree();
    if (t < 1 || t > c + 1) throw std::invalid_argument("theta_rank: bad initial degree");
    const auto dom = strand_basis(t - 1);
    int dtarget = c - t;
    int rows = kWedgeDim[i - 1] * strand_dim(dtarget);
    int cols = kWedgeDim[i] * int(dom.size());
    FpMat m(p, rows, cols);
    for (int si = 0; si < kWedgeDim[i]; ++si) {
        const auto& s = wedge_sets(i)[si];
        for (std::size_t a = 0; a < dom.size(); ++a) {
            for (int tt = 0; tt < i; ++tt) {
                int sign = 1;
                int ti = wedge_remove(i, si, tt, sign);
                if (dtarget < 0) continue;
                Poly mono = Poly::term(p, dom[a] * Monomial::var(s[tt]), 1);
                DualForm img = contract(mono, phi);
                for (const auto& [mm, cc] : img.terms()) {
                    int r = ti * strand_dim(dtarget) + strand_index(mm);
                    int col = si * int(dom.size()) + int(a);
                    u32 cur = m.at(r, col);
                    m.at(r, col) = sign > 0 ? fp_add(cur, cc, p) : fp_sub(cur, cc, p);
                }
            }
        }
    }
    return fp_rank(std::move(m));
}

inline int theta_rank(const DualForm& phi, int i) {
    return theta_rank(phi, i, initial_degree_of_ann(phi));
}

/// dim Tor_i(R/ann(phi), k)_{i+t-1} from the closed-form count of Koszul
/// cycles minus the contraction rank (three variables).
inline long long tor_dim_via_theta(const DualForm& phi, int i, int t) {
    return binomial(t - 1 + i - 1, i - 1) * binomial(t - 1 + 3, 3 - i) - theta_rank(phi, i, t);
}

inline long long tor_dim_via_theta(const DualForm& phi, int i) {
    return tor_dim_via_theta(phi, i, initial_degree_of_ann(phi));
}

/// Strand dimension difference for compressed level algebras:
/// dim Tor_i(..)_{t+i-1} - dim Tor_{i-1}(..)_{t+i-1} in embedding dimension r,
/// socle degree c, socle dimension m, initial degree t.
inline long long compressed_level_strand(long long r, long long c, long long m, long long t,
                                         long long i) {
    return binomial(t - 1 + i - 1, i - 1) * binomial(t - 1 + r, r - i) -
           m * binomial(c - t + r - i, r - i) * binomial(c - t + r, i - 1);
}

/// Exact rational number with normalized sign and lowest terms.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool negative() const { return num < 0; }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

/// Coefficients of the three pure diagrams in the decomposition of the
/// generic-socle Betti table with first-syzygy defect b; the middle
/// coefficient is nonnegative exactly when b <= s.
inline std::array<Rational, 3> bs_coefficients(long long s, long long b) {
    if (s < 2 || b < 0) throw std::invalid_argument("bs_coefficients: need s >= 2, b >= 0");
    long long sq = (s + 1) * (s + 1);
    return {Rational(b, 2 * sq - 2), Rational(sq - 1 - (s + 1) * b, sq - 1),
            Rational(b, 2 * sq - 2)};
}

}  // namespace grade3
