#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "grade3/koszul.hpp"

namespace grade3 {

/// Classification invariants of the multiplication on Tor = Koszul homology.
///   p = dim span(T1 . T1),  q = dim span(T1 . T2),
///   r = rank of the pairing T2 -> Hom(T1, T3).
/// The label is G(r) exactly when p = 0, q = 1 and r >= 2; everything else is
/// reported as other(p,q,r) with the raw invariants.
struct TorInvariants {
    long long mu = 0;  // minimal number of generators of I
    int type = 0;      // dim T3
    int p = 0, q = 0, r = 0;
    bool is_class_g = false;

    std::string label() const {
        if (is_class_g) return "G(" + std::to_string(r) + ")";
        return "other(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) +
               ")";
    }
};

/// Koszul homology of an Artinian quotient with explicit cycle representatives
/// and multiplication. Representatives are chosen deterministically: boundary
/// rows first, then kernel rows in grevlex-pivot order.
class TorAlgebra {
public:
    TorAlgebra(const GradedIdeal& ideal, int dmax) : A_(ideal, dmax), betti_(betti(A_)) {
        for (const auto& [ij, b] : betti_.entries) {
            if (b == 0) continue;
            auto [i, j] = ij;
            offsets_[{i, j}] = total_dim_.count(i) ? total_dim_[i] : 0;
            total_dim_[i] = offsets_[{i, j}] + int(b);
            build_strand(i, j);
        }
    }

    const QuotientRing& quotient() const { return A_; }
    const BettiTable& betti_table() const { return betti_; }

    int dim(int i) const {
        auto it = total_dim_.find(i);
        return it == total_dim_.end() ? 0 : it->second;
    }
    int dim(int i, int j) const { return int(betti_.get(i, j)); }

    /// Internal degrees j with nonzero homology in homological position i.
    std::vector<int> degrees(int i) const {
        std::vector<int> out;
        for (const auto& [ij, b] : betti_.entries)
            if (ij.first == i && b != 0) out.push_back(ij.second);
        return out;
    }

    /// Cycle representative of the idx-th basis class of Tor_{i,j}, as
    /// coordinates over wedge^i V (x) A_{j-i}.
    const std::vector<u32>& rep(int i, int j, int idx) const {
        return strands_.at({i, j}).reps.at(idx);
    }

    /// Product of two basis classes, as coordinates in the global basis of
    /// T_{i1+i2}. Returns the zero vector when the product lands outside
    /// homological degrees 0..3.
    std::vector<u32> multiply_basis(int i1, int j1, int a, int i2, int j2, int b) const {
        int i = i1 + i2, j = j1 + j2;
        std::vector<u32> out(dim(i), 0);
        if (i > 3) return out;
        auto cycle = wedge_cycle(i1, j1, rep(i1, j1, a), i2, j2, rep(i2, j2, b));
        if (dim(i, j) == 0) return out;  // every cycle is a boundary there
        auto h = strands_.at({i, j}).solver->express(std::move(cycle));
        int off = offsets_.at({i, j});
        for (int k = 0; k < int(h.size()); ++k) out[off + k] = h[k];
        return out;
    }

    /// Full multiplication invariants for the classification.
    TorInvariants invariants() const {
        const u32 p = A_.prime();
        TorInvariants inv;
        inv.mu = betti_.total(1);
        inv.type = dim(3);
        // span of T1 . T1 inside T2
        {
            RowSpace span(p, std::max(dim(2), 1));
            for (const auto& [x1, x2] : basis_pairs(1, 1))
                span.insert(pad(multiply_basis(1, x1.first, x1.second, 1, x2.first, x2.second),
                                std::max(dim(2), 1)));
            inv.p = span.dim();
        }
        // span of T1 . T2 inside T3
        {
            RowSpace span(p, std::max(dim(3), 1));
            for (int j1 : degrees(1))
                for (int a = 0; a < dim(1, j1); ++a)
                    for (int j2 : degrees(2))
                        for (int b = 0; b < dim(2, j2); ++b)
                            span.insert(pad(multiply_basis(1, j1, a, 2, j2, b),
                                            std::max(dim(3), 1)));
            inv.q = span.dim();
        }
        // rank of T2 -> Hom(T1, T3), flattened
        {
            int cols = std::max(dim(1) * dim(3), 1);
            FpMat m(p, std::max(dim(2), 1), cols);
            int row = 0;
            for (int j2 : degrees(2))
                for (int b = 0; b < dim(2, j2); ++b, ++row) {
                    int col0 = 0;
                    for (int j1 : degrees(1))
                        for (int a = 0; a < dim(1, j1); ++a, col0 += dim(3)) {
                            auto prod = multiply_basis(2, j2, b, 1, j1, a);
                            for (int k = 0; k < dim(3); ++k) m.at(row, col0 + k) = prod[k];
                        }
                }
            inv.r = fp_rank(std::move(m));
        }
        inv.is_class_g = inv.p == 0 && inv.q == 1 && inv.r >= 2;
        return inv;
    }

private:
    struct Strand {
        std::vector<std::vector<u32>> reps;
        std::unique_ptr<TrackedRowSpace> solver;  // boundaries + reps, payload = rep coords
    };

    void build_strand(int i, int j) {
        const u32 p = A_.prime();
        int d = j - i;
        int n = kWedgeDim[i] * A_.dim(d);
        int count = dim(i, j);
        Strand st;
        st.solver = std::make_unique<TrackedRowSpace>(p, n, count);
        // boundaries: images of the incoming differential
        if (i + 1 <= 3 && d - 1 >= 0 && A_.dim(d - 1) > 0) {
            FpMat in = koszul_strand(A_, i + 1, d - 1);
            for (int c = 0; c < in.cols(); ++c) {
                std::vector<u32> v(n, 0);
                for (int r = 0; r < n; ++r) v[r] = in.at(r, c);
                st.solver->insert(std::move(v), std::vector<u32>(count, 0));
            }
        }
        // cycles: kernel of the outgoing differential (everything at i = 0 top)
        std::vector<std::vector<u32>> kernel;
        if (i >= 1) {
            kernel = fp_nullspace(koszul_strand(A_, i, d));
        } else {
            kernel.resize(n);
            for (int k = 0; k < n; ++k) {
                kernel[k].assign(n, 0);
                kernel[k][k] = 1;
            }
        }
        for (auto& v : kernel) {
            std::vector<u32> payload(count, 0);
            int idx = int(st.reps.size());
            if (idx < count) payload[idx] = 1;
            auto copy = v;
            if (st.solver->insert(std::move(v), std::move(payload))) {
                st.reps.push_back(std::move(copy));
                if (int(st.reps.size()) > count)
                    throw std::logic_error("TorAlgebra: homology dimension mismatch");
            }
        }
        if (int(st.reps.size()) != count)
            throw std::logic_error("TorAlgebra: homology dimension mismatch");
        strands_[{i, j}] = std::move(st);
    }

    /// Wedge product of two cycles in wedge V (x) A, landing in position
    /// i1+i2 and internal degree j1+j2.
    std::vector<u32> wedge_cycle(int i1, int j1, const std::vector<u32>& z1, int i2, int j2,
                                 const std::vector<u32>& z2) const {
        const u32 p = A_.prime();
        int d1 = j1 - i1, d2 = j2 - i2, i = i1 + i2, d = d1 + d2;
        std::vector<u32> out(size_t(kWedgeDim[i]) * A_.dim(d), 0);
        const auto& b1 = A_.basis(d1);
        const auto& b2 = A_.basis(d2);
        for (int s1 = 0; s1 < kWedgeDim[i1]; ++s1)
            for (int a = 0; a < A_.dim(d1); ++a) {
                u32 c1 = z1[s1 * A_.dim(d1) + a];
                if (!c1) continue;
                for (int s2 = 0; s2 < kWedgeDim[i2]; ++s2) {
                    int sign = 1;
                    int si = wedge_merge(i1, s1, i2, s2, sign);
                    if (si < 0) continue;
                    for (int b = 0; b < A_.dim(d2); ++b) {
                        u32 c2 = z2[s2 * A_.dim(d2) + b];
                        if (!c2) continue;
                        u32 c = fp_mul(c1, c2, p);
                        if (sign < 0) c = fp_neg(c, p);
                        auto img = A_.reduce_monomial(b1[a] * b2[b]);
                        for (int k = 0; k < A_.dim(d); ++k)
                            if (img[k])
                                out[si * A_.dim(d) + k] =
                                    u32((out[si * A_.dim(d) + k] + u64(c) * img[k]) % p);
                    }
                }
            }
        return out;
    }

    /// Index of the merged wedge subset and the shuffle sign; -1 on overlap.
    static int wedge_merge(int i1, int s1, int i2, int s2, int& sign) {
        const auto& a = wedge_sets(i1)[s1];
        const auto& b = wedge_sets(i2)[s2];
        std::vector<int> merged = a;
        sign = 1;
        for (int x : b) {
            int pos = 0;
            while (pos < int(merged.size()) && merged[pos] < x) ++pos;
            if (pos < int(merged.size()) && merged[pos] == x) return -1;
            // moving x past the remaining elements of merged flips the sign
            if ((int(merged.size()) - pos) % 2 == 1) sign = -sign;
            merged.insert(merged.begin() + pos, x);
        }
        const auto& target = wedge_sets(i1 + i2);
        for (int idx = 0; idx < int(target.size()); ++idx)
            if (target[idx] == merged) return idx;
        return -1;
    }

    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> basis_pairs(int i1,
                                                                                 int i2) const {
        std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
        for (int j1 : degrees(i1))
            for (int a = 0; a < dim(i1, j1); ++a)
                for (int j2 : degrees(i2))
                    for (int b = 0; b < dim(i2, j2); ++b)
                        out.push_back({{j1, a}, {j2, b}});
        return out;
    }

    static std::vector<u32> pad(std::vector<u32> v, int n) {
        v.resize(n, 0);
        return v;
    }

    QuotientRing A_;
    BettiTable betti_;
    std::map<std::pair<int, int>, Strand> strands_;
    std::map<std::pair<int, int>, int> offsets_;
    std::map<int, int> total_dim_;
};

inline TorInvariants tor_invariants(const GradedIdeal& ideal, int dmax) {
    return TorAlgebra(ideal, dmax).invariants();
}

/// Classification check for trimmed-socle quotients: requires the socle to be
/// k(-s) (+) k(-2s+1) with s >= 3 and a compressed Hilbert function, then
/// tests whether the Tor class is G(mu - 3).
inline bool check_tormins(const GradedIdeal& ideal, int s, int dmax) {
    if (s < 3) throw std::invalid_argument("check_tormins: requires s >= 3");
    HilbertData h = ideal.hilbert(dmax);
    if (!h.artinian) throw std::domain_error("check_tormins: quotient not Artinian");
    std::map<int, int> expected{{s, 1}, {2 * s - 1, 1}};
    if (h.socle_spec() != expected)
        throw std::domain_error("check_tormins: socle is not k(-s) (+) k(-2s+1)");
    if (!ideal.is_compressed(expected, dmax))
        throw std::domain_error("check_tormins: quotient is not compressed");
    TorInvariants inv = tor_invariants(ideal, dmax);
    return inv.is_class_g && inv.r == inv.mu - 3;
}

}  // namespace grade3
