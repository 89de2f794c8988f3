#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grade3/alt_matrix.hpp"
#include "grade3/koszul.hpp"

namespace grade3 {

/// Trimming data: an odd-size alternating matrix presenting a grade-3
/// Gorenstein ideal through its submaximal Pfaffians, and the index (1-based)
/// of the Pfaffian generator to be trimmed. The map U -> R is fixed to send
/// the three Koszul generators to x, y, z.
struct TrimInput {
    AltMatrix M;
    int v0_index;  // 1-based row/column of the trimmed generator
};

/// Splits f in R_+ as x*a + y*b + z*c by routing every monomial through its
/// first available variable in the fixed order x, y, z.
inline std::array<Poly, 3> lift_through_x(const Poly& f) {
    const u32 p = f.prime();
    if (f.constant_coeff() != 0)
        throw std::invalid_argument("lift_through_x: nonzero constant term");
    std::array<Poly, 3> out{Poly::zero(p), Poly::zero(p), Poly::zero(p)};
    for (const auto& [m, c] : f.terms()) {
        for (int v = 0; v < 3; ++v) {
            if (m.e[v] > 0) {
                out[v] = out[v] + Poly::term(p, Monomial::var(v).quotient_of(m), c);
                break;
            }
        }
    }
    return out;
}

/// Free module described by its list of twists; slot l is R(-shifts[l]).
struct FreeModule {
    std::vector<int> shifts;
    int rank() const { return int(shifts.size()); }
    int dim_at(int d) const {
        int total = 0;
        for (int a : shifts) total += strand_dim(d - a);
        return total;
    }
};

/// The length-3 free complex resolving the trimmed Pfaffian ideal
///   I = (pf_j : j != i0) + (x, y, z) * pf_{i0},
/// assembled as the mapping cone of the comparison between the truncated
/// Koszul complex on x, y, z (scaled into the trimmed generator) and the
/// Pfaffian resolution of the full ideal.
class TrimComplex {
public:
    TrimInput input;
    int n_size = 0;       // matrix size, odd
    int socle_degree = 0;  // socle degree of R/K
    std::vector<Poly> pf;          // signed Pfaffian generators of K
    std::vector<int> pf_degree;
    std::vector<Poly> v0_prime;    // row i0 of M: coefficients of e_k, k != i0
    PolyMatrix q;                  // 3 x N lift with x o q = v0'
    std::array<Poly, 3> B;         // coordinates over e_xy, e_xz, e_yz
    FreeModule F0, F1, F2, F3;
    PolyMatrix d1, d2, d3;

    TrimComplex(TrimInput in, PolyMatrix q_, PolyMatrix d1_, PolyMatrix d2_, PolyMatrix d3_)
        : input(std::move(in)),
          q(std::move(q_)),
          B{Poly::zero(input.M.prime()), Poly::zero(input.M.prime()),
            Poly::zero(input.M.prime())},
          d1(std::move(d1_)),
          d2(std::move(d2_)),
          d3(std::move(d3_)) {}

    u32 prime() const { return input.M.prime(); }

    std::vector<Poly> trimmed_generators() const {
        std::vector<Poly> gens;
        for (int j = 0; j < n_size; ++j)
            if (j != input.v0_index - 1) gens.push_back(pf[j]);
        for (int v = 0; v < 3; ++v)
            gens.push_back(Poly::variable(prime(), v) * pf[input.v0_index - 1]);
        return gens;
    }
    GradedIdeal trimmed_ideal() const { return GradedIdeal(prime(), trimmed_generators()); }
    GradedIdeal pfaffian_ideal() const { return GradedIdeal(prime(), pf); }
};

namespace detail {

/// Strand matrix of a graded map of free modules at internal degree d.
/// Row/column blocks follow the slot order; within a slot, monomials follow
/// strand_basis of the complementary degree.
inline FpMat graded_strand(const PolyMatrix& map, const FreeModule& target,
                           const FreeModule& source, int d) {
    const u32 p = map.prime();
    FpMat m(p, target.dim_at(d), source.dim_at(d));
    int col0 = 0;
    for (int sl = 0; sl < source.rank(); ++sl) {
        int sdeg = d - source.shifts[sl];
        if (sdeg < 0) continue;
        const auto dom = strand_basis(sdeg);
        int row0 = 0;
        for (int tl = 0; tl < target.rank(); ++tl) {
            int tdeg = d - target.shifts[tl];
            if (tdeg < 0) continue;
            const Poly& e = map.at(tl, sl);
            if (!e.is_zero()) {
                int want = source.shifts[sl] - target.shifts[tl];
                for (std::size_t c = 0; c < dom.size(); ++c)
                    for (const auto& [mm, cc] : e.terms()) {
                        if (mm.degree() != want)
                            throw std::logic_error("graded_strand: entry degree mismatch");
                        Monomial prod = mm * dom[c];
                        m.at(row0 + strand_index(prod), col0 + int(c)) = cc;
                    }
            }
            row0 += strand_dim(tdeg);
        }
        col0 += strand_dim(sdeg);
    }
    return m;
}

}  // namespace detail

/// The complement part v0' of the splitting phi = phi' + v0 ^ v0' determined
/// by trimming generator v0_index: the entries of that row of the matrix,
/// read as coefficients of the remaining basis vectors (zero at v0_index).
inline std::vector<Poly> decompose_v0_prime(const TrimInput& input) {
    const int i0 = input.v0_index - 1;
    if (i0 < 0 || i0 >= input.M.size())
        throw std::invalid_argument("decompose_v0_prime: index out of range");
    std::vector<Poly> row;
    row.reserve(input.M.size());
    for (int k = 0; k < input.M.size(); ++k) row.push_back(input.M.entry(i0, k));
    return row;
}

/// Splitting strategy used for the lift of v0' through (x, y, z). The default
/// is the deterministic first-variable routing; tests may supply randomized
/// alternatives, since every reported invariant is lift-independent.
using LiftFn = std::function<std::array<Poly, 3>(const Poly&)>;

/// Builds the whole complex. Validates the structural preconditions: odd
/// size, nonzero trimmed Pfaffian, positive-degree row entries, and a
/// consistent degree profile.
inline TrimComplex build_complex(const TrimInput& input, const LiftFn& lift = {}) {
    const AltMatrix& M = input.M;
    const u32 p = M.prime();
    const int N = M.size();
    if (N % 2 == 0) throw std::invalid_argument("build_complex: matrix size must be odd");
    const int i0 = input.v0_index - 1;
    if (i0 < 0 || i0 >= N) throw std::invalid_argument("build_complex: index out of range");

    PfaffianSystem sys = sub_pfaffians(M);
    std::vector<int> pdeg(N);
    for (int i = 0; i < N; ++i) {
        if (sys.pf[i].is_zero() || !sys.pf[i].is_homogeneous())
            throw std::domain_error("build_complex: Pfaffian generators must be nonzero and homogeneous");
        pdeg[i] = sys.pf[i].degree();
    }

    // socle degree from the degree profile: deg M[a][b] = c + 3 - p_a - p_b
    int c = -1;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            const Poly e = M.entry(a, b);
            if (e.is_zero()) continue;
            if (!e.is_homogeneous())
                throw std::domain_error("build_complex: entries must be homogeneous");
            int cc = e.degree() + pdeg[a] + pdeg[b] - 3;
            if (c < 0) c = cc;
            if (c != cc) throw std::domain_error("build_complex: inconsistent degree profile");
            if (e.degree() < 1)
                throw std::domain_error("build_complex: entries must lie in the irrelevant ideal");
        }
    if (c < 0) throw std::domain_error("build_complex: zero matrix");

    // v0' = row i0 and its lift q through (x, y, z)
    std::vector<Poly> v0p = decompose_v0_prime(input);
    PolyMatrix q(p, 3, N);
    for (int k = 0; k < N; ++k) {
        if (k == i0 || v0p[k].is_zero()) continue;
        auto abc = lift ? lift(v0p[k]) : lift_through_x(v0p[k]);
        Poly check = Poly::zero(p);
        for (int v = 0; v < 3; ++v) check = check + Poly::variable(p, v) * abc[v];
        if (check != v0p[k]) throw std::domain_error("build_complex: lift does not split v0'");
        for (int v = 0; v < 3; ++v) q.at(v, k) = std::move(abc[v]);
    }

    // t = q(phi^(n)(omega)) must be a Koszul 1-cycle; B is a preimage of t
    // under the Koszul differential on wedge^2 U.
    std::array<Poly, 3> t{Poly::zero(p), Poly::zero(p), Poly::zero(p)};
    for (int k = 0; k < N; ++k)
        for (int v = 0; v < 3; ++v) t[v] = t[v] + sys.pf[k] * q.at(v, k);
    {
        Poly cycle = Poly::zero(p);
        for (int v = 0; v < 3; ++v) cycle = cycle + Poly::variable(p, v) * t[v];
        if (!cycle.is_zero())
            throw std::domain_error("build_complex: q o phi^(n) is not a Koszul cycle");
    }
    std::array<Poly, 3> B{Poly::zero(p), Poly::zero(p), Poly::zero(p)};
    bool t_zero = t[0].is_zero() && t[1].is_zero() && t[2].is_zero();
    if (!t_zero) {
        int tdeg = -1;
        for (const auto& f : t)
            if (!f.is_zero()) {
                if (!f.is_homogeneous())
                    throw std::domain_error("build_complex: inhomogeneous cycle");
                if (tdeg >= 0 && f.degree() != tdeg)
                    throw std::domain_error("build_complex: inhomogeneous cycle");
                tdeg = f.degree();
            }
        int bdeg = tdeg - 1;
        // strand system: wedge^2 U -> U at coordinate degree bdeg
        PolyMatrix kos(p, 3, 3);
        // columns e_xy, e_xz, e_yz; rows e_x, e_y, e_z
        kos.at(0, 0) = -Poly::variable(p, 1);
        kos.at(1, 0) = Poly::variable(p, 0);
        kos.at(0, 1) = -Poly::variable(p, 2);
        kos.at(2, 1) = Poly::variable(p, 0);
        kos.at(1, 2) = -Poly::variable(p, 2);
        kos.at(2, 2) = Poly::variable(p, 1);
        FreeModule bmod{{1, 1, 1}}, tmod{{0, 0, 0}};
        FpMat sys_mat = detail::graded_strand(kos, tmod, bmod, tdeg);
        std::vector<u32> rhs;
        rhs.reserve(3 * strand_dim(tdeg));
        for (int v = 0; v < 3; ++v) {
            auto part = poly_to_strand(t[v], tdeg);
            rhs.insert(rhs.end(), part.begin(), part.end());
        }
        auto sol = fp_solve(sys_mat, rhs);
        if (!sol) throw std::domain_error("build_complex: Koszul preimage system inconsistent");
        for (int k = 0; k < 3; ++k) {
            std::vector<u32> part(sol->begin() + k * strand_dim(bdeg),
                                  sol->begin() + (k + 1) * strand_dim(bdeg));
            B[k] = strand_to_poly(part, bdeg, p);
        }
        // re-verify the defining identity x o B = t
        std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
        for (int v = 0; v < 3; ++v) {
            Poly acc = Poly::zero(p);
            for (int k = 0; k < 3; ++k) {
                // x(e_a ^ e_b) = x_a e_b - x_b e_a
                if (pairs[k][0] == v) acc = acc - Poly::variable(p, pairs[k][1]) * B[k];
                if (pairs[k][1] == v) acc = acc + Poly::variable(p, pairs[k][0]) * B[k];
            }
            if (acc != t[v]) throw std::logic_error("build_complex: x o B != q o phi^(n)");
        }
    }

    // differentials
    PolyMatrix d1(p, 1, N + 2);
    {
        int col = 0;
        for (int j = 0; j < N; ++j)
            if (j != i0) d1.at(0, col++) = sys.pf[j];
        for (int v = 0; v < 3; ++v) d1.at(0, col++) = Poly::variable(p, v) * sys.pf[i0];
    }
    PolyMatrix d2(p, N + 2, N + 3);
    {
        for (int k = 0; k < N; ++k) {
            int row = 0;
            for (int j = 0; j < N; ++j) {
                if (j == i0) continue;
                Poly e = M.entry(k, j);
                if (!e.is_zero()) d2.at(row, k) = std::move(e);
                ++row;
            }
            for (int v = 0; v < 3; ++v)
                if (!q.at(v, k).is_zero()) d2.at(N - 1 + v, k) = -q.at(v, k);
        }
        // Koszul block wedge^2 U -> U
        d2.at(N - 1 + 0, N + 0) = -Poly::variable(p, 1);
        d2.at(N - 1 + 1, N + 0) = Poly::variable(p, 0);
        d2.at(N - 1 + 0, N + 1) = -Poly::variable(p, 2);
        d2.at(N - 1 + 2, N + 1) = Poly::variable(p, 0);
        d2.at(N - 1 + 1, N + 2) = -Poly::variable(p, 2);
        d2.at(N - 1 + 2, N + 2) = Poly::variable(p, 1);
    }
    PolyMatrix d3(p, N + 3, 2);
    {
        for (int k = 0; k < N; ++k) d3.at(k, 0) = sys.pf[k];
        d3.at(N + 0, 0) = B[0];
        d3.at(N + 1, 0) = B[1];
        d3.at(N + 2, 0) = B[2];
        // x(e_xyz) = z e_xy - y e_xz + x e_yz
        d3.at(N + 0, 1) = Poly::variable(p, 2);
        d3.at(N + 1, 1) = -Poly::variable(p, 1);
        d3.at(N + 2, 1) = Poly::variable(p, 0);
    }

    TrimComplex C(input, std::move(q), std::move(d1), std::move(d2), std::move(d3));
    C.n_size = N;
    C.socle_degree = c;
    C.pf = std::move(sys.pf);
    C.pf_degree = pdeg;
    C.v0_prime = std::move(v0p);
    C.B = std::move(B);
    C.F0 = FreeModule{{0}};
    {
        FreeModule f1;
        for (int j = 0; j < N; ++j)
            if (j != i0) f1.shifts.push_back(pdeg[j]);
        for (int v = 0; v < 3; ++v) f1.shifts.push_back(pdeg[i0] + 1);
        C.F1 = std::move(f1);
        FreeModule f2;
        for (int k = 0; k < N; ++k) f2.shifts.push_back(c + 3 - pdeg[k]);
        for (int v = 0; v < 3; ++v) f2.shifts.push_back(pdeg[i0] + 2);
        C.F2 = std::move(f2);
        C.F3 = FreeModule{{c + 3, pdeg[i0] + 3}};
    }
    return C;
}

/// Exact symbolic complex check: d1 d2 = 0 and d2 d3 = 0 as polynomial
/// identities.
inline bool complex_property(const TrimComplex& C) {
    return (C.d1 * C.d2).is_zero() && (C.d2 * C.d3).is_zero();
}

struct ExactnessReport {
    bool exact = true;
    bool complex_ok = true;
    bool hilbert_ok = true;
    int dmax = 0;
    std::vector<std::string> failures;
};

/// Degree-by-degree homology check of the strands: ker(d_k)_d must match
/// rank(d_{k+1})_d for k = 1..3, and coker(d_1)_d must match the Hilbert
/// function of the trimmed quotient.
inline ExactnessReport verify_exactness(const TrimComplex& C, int dmax) {
    ExactnessReport rep;
    rep.dmax = dmax;
    rep.complex_ok = complex_property(C);
    if (!rep.complex_ok) {
        rep.exact = false;
        rep.failures.push_back("complex property fails");
        return rep;
    }
    GradedIdeal I = C.trimmed_ideal();
    HilbertData h = I.hilbert(dmax);
    for (int d = 0; d <= dmax; ++d) {
        int r1 = fp_rank(detail::graded_strand(C.d1, C.F0, C.F1, d));
        int r2 = fp_rank(detail::graded_strand(C.d2, C.F1, C.F2, d));
        int r3 = fp_rank(detail::graded_strand(C.d3, C.F2, C.F3, d));
        int f1 = C.F1.dim_at(d), f2 = C.F2.dim_at(d), f3 = C.F3.dim_at(d);
        auto fail = [&](const std::string& what) {
            rep.exact = false;
            rep.failures.push_back("degree " + std::to_string(d) + ": " + what);
        };
        if (f1 - r1 != r2) fail("H1 strand nonzero");
        if (f2 - r2 != r3) fail("H2 strand nonzero");
        if (f3 - r3 != 0) fail("H3 strand nonzero");
        if (strand_dim(d) - r1 != h.hf[d]) {
            rep.hilbert_ok = false;
            fail("H0 strand does not match the quotient Hilbert function");
        }
    }
    return rep;
}

/// rank of the degree-zero part of q; the number of unit entries the mapping
/// cone can cancel against the trimmed generators.
inline int rank_q_mod_m(const TrimComplex& C) {
    FpMat m(C.prime(), 3, C.n_size);
    for (int v = 0; v < 3; ++v)
        for (int k = 0; k < C.n_size; ++k) m.at(v, k) = C.q.at(v, k).constant_coeff();
    return fp_rank(std::move(m));
}

/// Predicted minimal number of generators of the trimmed ideal:
/// mu(K) + 2 - rank(q (x) k).
inline long long predicted_mu(const TrimComplex& C) {
    return C.pfaffian_ideal().min_gens().total + 2 - rank_q_mod_m(C);
}

/// A graded free complex is minimal exactly when no differential entry has a
/// unit (degree-zero) part.
inline bool is_minimal(const TrimComplex& C) {
    auto clean = [](const PolyMatrix& m) {
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                if (m.at(r, c).constant_coeff() != 0) return false;
        return true;
    };
    return clean(C.d1) && clean(C.d2) && clean(C.d3);
}

/// Colon containment (K' : pf_{i0}) into the irrelevant ideal, verified
/// strand by strand: the colon strand in degree d must lie inside (x,y,z)_d,
/// which pins down degree zero (the trimmed Pfaffian must stay outside K').
inline bool colon_into_irrelevant(const TrimComplex& C, int dmax) {
    const u32 p = C.prime();
    std::vector<Poly> rest;
    for (int k = 0; k < C.n_size; ++k)
        if (k != C.input.v0_index - 1) rest.push_back(C.pf[k]);
    GradedIdeal Kprime(p, rest);
    const Poly& g = C.pf[C.input.v0_index - 1];
    int pg = g.degree();
    for (int d = 0; d <= dmax; ++d) {
        const RowSpace& target = Kprime.strand(d + pg);
        const auto dom = strand_basis(d);
        FpMat m(p, strand_dim(d + pg), int(dom.size()));
        for (std::size_t c = 0; c < dom.size(); ++c) {
            Poly prod = g.shifted(dom[c]);
            auto nf = target.reduce(poly_to_strand(prod, d + pg));
            for (int r = 0; r < strand_dim(d + pg); ++r) m.at(r, int(c)) = nf[r];
        }
        int colon_dim = int(dom.size()) - fp_rank(std::move(m));
        int irrelevant_dim = d == 0 ? 0 : strand_dim(d);
        if (colon_dim > irrelevant_dim) return false;
    }
    return true;
}

/// Graded Betti numbers after maximal cancellation of unit entries: the
/// homology of the complex tensored down to the residue field, computed per
/// twist. Agrees with the Betti table of the trimmed ideal whenever the
/// complex is a resolution.
inline BettiTable betti_after_cancellation(const TrimComplex& C) {
    const u32 p = C.prime();
    const FreeModule* mods[4] = {&C.F0, &C.F1, &C.F2, &C.F3};
    const PolyMatrix* maps[3] = {&C.d1, &C.d2, &C.d3};
    auto const_rank_at = [&](int k, int a) -> int {
        // rank of the unit block of d_k between twist-a slots
        if (k < 1 || k > 3) return 0;
        const FreeModule& tgt = *mods[k - 1];
        const FreeModule& src = *mods[k];
        std::vector<int> tr, sc;
        for (int i = 0; i < tgt.rank(); ++i)
            if (tgt.shifts[i] == a) tr.push_back(i);
        for (int i = 0; i < src.rank(); ++i)
            if (src.shifts[i] == a) sc.push_back(i);
        if (tr.empty() || sc.empty()) return 0;
        FpMat m(p, int(tr.size()), int(sc.size()));
        for (std::size_t r = 0; r < tr.size(); ++r)
            for (std::size_t c = 0; c < sc.size(); ++c)
                m.at(int(r), int(c)) = maps[k - 1]->at(tr[r], sc[c]).constant_coeff();
        return fp_rank(std::move(m));
    };
    BettiTable b;
    for (int k = 0; k <= 3; ++k) {
        std::map<int, int> slots;
        for (int a : mods[k]->shifts) slots[a]++;
        for (const auto& [a, cnt] : slots)
            b.set(k, a, cnt - const_rank_at(k, a) - const_rank_at(k + 1, a));
    }
    return b;
}

}  // namespace grade3
