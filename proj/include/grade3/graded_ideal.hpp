#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "grade3/linalg.hpp"
#include "grade3/poly.hpp"

namespace grade3 {

/// Coordinates of a homogeneous polynomial over strand_basis(d).
inline std::vector<u32> poly_to_strand(const Poly& f, int d) {
    std::vector<u32> v(strand_dim(d), 0);
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() != d) throw std::invalid_argument("poly_to_strand: degree mismatch");
        v[strand_index(m)] = c;
    }
    return v;
}

inline Poly strand_to_poly(const std::vector<u32>& v, int d, u32 p) {
    Poly f(p);
    const auto basis = strand_basis(d);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) f = f + Poly::term(p, basis[i], v[i]);
    return f;
}

/// Exact Hilbert data of an Artinian (or potentially Artinian) quotient R/I.
struct HilbertData {
    std::vector<int> hf;     // dim (R/I)_d for d = 0..dmax
    std::vector<int> socle;  // dim Soc(R/I)_d for d = 0..dmax
    bool artinian = false;   // hf vanished within the computed range
    int top_degree = -1;     // largest d with hf(d) != 0 (valid when artinian)

    std::map<int, int> socle_spec() const {
        std::map<int, int> s;
        for (std::size_t d = 0; d < socle.size(); ++d)
            if (socle[d]) s[int(d)] = socle[d];
        return s;
    }
    int socle_dim() const {
        int t = 0;
        for (int c : socle) t += c;
        return t;
    }
    std::string to_text() const {
        std::string out = "d    hf   socle\n";
        for (std::size_t d = 0; d < hf.size(); ++d) {
            out += std::to_string(d);
            out.resize(out.size() + (5 - std::to_string(d).size()), ' ');
            std::string h = std::to_string(hf[d]);
            out += h;
            out.resize(out.size() + (5 - h.size()), ' ');
            out += std::to_string(socle[d]) + "\n";
        }
        return out;
    }
};

struct MinimalGenerators {
    std::vector<Poly> gens;       // deterministic representatives, by degree then pivot
    std::map<int, int> by_degree;
    long long total = 0;
};

/// Homogeneous ideal of GF(p)[x,y,z] presented by generators, with lazily
/// computed row-reduced strand bases. Strand computation is incremental:
/// I_d = R_1 * I_{d-1} + (degree-d generators). The cache behaves as a
/// write-once map guarded by a mutex, so concurrent readers are safe.
class GradedIdeal {
public:
    GradedIdeal(u32 p, std::vector<Poly> gens) : p_(PrimeField(p).p), gens_(std::move(gens)) {
        for (const auto& g : gens_) {
            require_same_prime(g.prime(), p_, "GradedIdeal");
            if (g.is_zero()) throw std::invalid_argument("GradedIdeal: zero generator");
            if (!g.is_homogeneous())
                throw std::invalid_argument("GradedIdeal: generators must be homogeneous");
        }
    }

    GradedIdeal(const GradedIdeal& o) : p_(o.p_), gens_(o.gens_) {}
    GradedIdeal& operator=(const GradedIdeal& o) {
        p_ = o.p_;
        gens_ = o.gens_;
        std::lock_guard<std::mutex> lk(mtx_);
        strands_.clear();
        return *this;
    }

    u32 prime() const { return p_; }
    const std::vector<Poly>& gens() const { return gens_; }

    int max_gen_degree() const {
        int d = 0;
        for (const auto& g : gens_) d = std::max(d, g.degree());
        return d;
    }

    const RowSpace& strand(int d) const {
        if (d < 0) throw std::invalid_argument("GradedIdeal::strand: negative degree");
        std::lock_guard<std::mutex> lk(mtx_);
        return strand_locked(d);
    }

    int strand_dim_at(int d) const { return d < 0 ? 0 : strand(d).dim(); }
    int quotient_dim(int d) const { return strand_dim(d) - strand_dim_at(d); }

    bool contains(const Poly& f) const {
        if (f.is_zero()) return true;
        if (!f.is_homogeneous()) throw std::invalid_argument("GradedIdeal::contains: not homogeneous");
        int d = f.degree();
        return strand(d).contains(poly_to_strand(f, d));
    }

    /// Monomials of degree d spanning a complement of I_d (the non-pivot
    /// columns of the strand basis).
    std::vector<Monomial> quotient_basis(int d) const {
        const RowSpace& rs = strand(d);
        std::vector<bool> is_pivot(strand_dim(d), false);
        for (int c : rs.pivots()) is_pivot[c] = true;
        std::vector<Monomial> out;
        const auto basis = strand_basis(d);
        for (int c = 0; c < strand_dim(d); ++c)
            if (!is_pivot[c]) out.push_back(basis[c]);
        return out;
    }

    /// Hilbert function and graded socle of R/I up to dmax. The socle in
    /// degree d is the kernel of multiplication by (x, y, z) into degree d+1.
    HilbertData hilbert(int dmax) const {
        if (dmax < 0) throw std::invalid_argument("hilbert: dmax must be >= 0");
        HilbertData h;
        h.hf.resize(dmax + 1);
        h.socle.resize(dmax + 1, 0);
        for (int d = 0; d <= dmax; ++d) h.hf[d] = quotient_dim(d);
        for (int d = 0; d <= dmax; ++d) {
            if (h.hf[d] == 0) continue;
            h.top_degree = d;
            h.socle[d] = socle_dim_at(d);
        }
        h.artinian = h.hf[dmax] == 0;
        if (!h.artinian) h.top_degree = -1;
        return h;
    }

    /// Minimal number of generators per degree with deterministic
    /// representatives: pivot rows of I_d not already in R_1 * I_{d-1}.
    MinimalGenerators min_gens() const {
        MinimalGenerators mg;
        int dmax = max_gen_degree();
        for (int d = 0; d <= dmax; ++d) {
            const RowSpace& cur = strand(d);
            if (cur.dim() == 0) continue;
            RowSpace grown = one_step_growth(d);
            int fresh = 0;
            for (int r = 0; r < cur.dim(); ++r) {
                if (grown.insert(cur.row(r))) {
                    mg.gens.push_back(strand_to_poly(cur.row(r), d, p_));
                    ++fresh;
                }
            }
            if (fresh) mg.by_degree[d] = fresh;
            mg.total += fresh;
        }
        return mg;
    }

    /// Replaces the index-th generator g (1-based) by x g, y g, z g.
    GradedIdeal trim(int index) const {
        if (index < 1 || index > int(gens_.size()))
            throw std::invalid_argument("trim: generator index out of range");
        std::vector<Poly> gens;
        for (int i = 0; i < int(gens_.size()); ++i)
            if (i != index - 1) gens.push_back(gens_[i]);
        const Poly& g = gens_[index - 1];
        for (int v = 0; v < 3; ++v) gens.push_back(Poly::variable(p_, v) * g);
        return GradedIdeal(p_, std::move(gens));
    }

    /// Compressedness against a prescribed socle polynomial: the Hilbert
    /// function must attain min(dim S_d, sum_l c_l dim D_{l-d}) in every
    /// degree. Embedding dimension 3 is assumed throughout.
    bool is_compressed(const std::map<int, int>& socle_spec, int dmax_hint = -1) const {
        int top = 0;
        for (const auto& [l, c] : socle_spec) top = std::max(top, l);
        int dmax = std::max(dmax_hint, top + 1);
        HilbertData h = hilbert(dmax);
        if (!h.artinian)
            throw std::domain_error("is_compressed: quotient not Artinian within range");
        for (int d = 0; d <= dmax; ++d) {
            long long bound = 0;
            for (const auto& [l, c] : socle_spec)
                if (l >= d) bound += (long long)c * strand_dim(l - d);
            long long expected = std::min((long long)strand_dim(d), bound);
            if (h.hf[d] != expected) return false;
        }
        return true;
    }

private:
    const RowSpace& strand_locked(int d) const {
        if (int(strands_.size()) <= d) strands_.resize(d + 1);
        for (int e = 0; e <= d; ++e) {
            if (strands_[e]) continue;
            auto rs = std::make_unique<RowSpace>(p_, strand_dim(e));
            if (e > 0 && strands_[e - 1]) {
                const RowSpace& prev = *strands_[e - 1];
                const auto below = strand_basis(e - 1);
                for (int v = 0; v < 3; ++v) {
                    std::vector<int> shift(below.size());
                    for (std::size_t i = 0; i < below.size(); ++i)
                        shift[i] = strand_index(below[i] * Monomial::var(v));
                    for (int r = 0; r < prev.dim(); ++r) {
                        std::vector<u32> w(strand_dim(e), 0);
                        const auto& src = prev.row(r);
                        for (std::size_t i = 0; i < src.size(); ++i)
                            if (src[i]) w[shift[i]] = src[i];
                        rs->insert(std::move(w));
                    }
                }
            }
            for (const auto& g : gens_)
                if (g.degree() == e) rs->insert(poly_to_strand(g, e));
            strands_[e] = std::move(rs);
        }
        return *strands_[d];
    }

    /// R_1 * I_{d-1} as a row space inside S_d.
    RowSpace one_step_growth(int d) const {
        RowSpace rs(p_, strand_dim(d));
        if (d == 0) return rs;
        const RowSpace& prev = strand(d - 1);
        const auto below = strand_basis(d - 1);
        for (int v = 0; v < 3; ++v) {
            std::vector<int> shift(below.size());
            for (std::size_t i = 0; i < below.size(); ++i)
                shift[i] = strand_index(below[i] * Monomial::var(v));
            for (int r = 0; r < prev.dim(); ++r) {
                std::vector<u32> w(strand_dim(d), 0);
                const auto& src = prev.row(r);
                for (std::size_t i = 0; i < src.size(); ++i)
                    if (src[i]) w[shift[i]] = src[i];
                rs.insert(std::move(w));
            }
        }
        return rs;
    }

    int socle_dim_at(int d) const {
        // kernel of (R/I)_d -> (R/I)_{d+1}^3
        const auto qb = quotient_basis(d);
        if (qb.empty()) return 0;
        const RowSpace& up = strand(d + 1);
        const auto up_basis = strand_basis(d + 1);
        std::vector<int> compl_index(strand_dim(d + 1), -1);
        int nc = 0;
        {
            std::vector<bool> is_pivot(strand_dim(d + 1), false);
            for (int c : up.pivots()) is_pivot[c] = true;
            for (int c = 0; c < strand_dim(d + 1); ++c)
                if (!is_pivot[c]) compl_index[c] = nc++;
        }
        FpMat m(p_, 3 * nc, int(qb.size()));
        for (int col = 0; col < int(qb.size()); ++col) {
            for (int v = 0; v < 3; ++v) {
                std::vector<u32> w(strand_dim(d + 1), 0);
                w[strand_index(qb[col] * Monomial::var(v))] = 1;
                w = up.reduce(std::move(w));
                for (int c = 0; c < strand_dim(d + 1); ++c)
                    if (w[c]) m.at(v * nc + compl_index[c], col) = w[c];
            }
        }
        return int(qb.size()) - fp_rank(std::move(m));
    }

    u32 p_;
    std::vector<Poly> gens_;
    mutable std::mutex mtx_;
    mutable std::vector<std::unique_ptr<RowSpace>> strands_;
};

}  // namespace grade3
