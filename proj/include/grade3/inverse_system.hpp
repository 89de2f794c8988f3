#pragma once

#include <stdexcept>
#include <vector>

#include "grade3/dual.hpp"
#include "grade3/graded_ideal.hpp"

namespace grade3 {

/// Coordinates of a dual form over the dual strand basis of its degree.
inline std::vector<u32> dual_to_strand(const DualForm& f) {
    std::vector<u32> v(strand_dim(f.degree()), 0);
    for (const auto& [m, c] : f.terms()) v[strand_index(m)] = c;
    return v;
}

inline DualForm strand_to_dual(const std::vector<u32>& v, int d, u32 p) {
    DualForm f(p, d);
    const auto basis = strand_basis(d);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) f.add_term(basis[i], v[i]);
    return f;
}

/// Finitely generated inverse system: a list of dual forms. The annihilator
/// ideal and the contraction maps are computed strand by strand.
class InverseSystem {
public:
    InverseSystem(u32 p, std::vector<DualForm> forms)
        : p_(PrimeField(p).p), forms_(std::move(forms)) {
        if (forms_.empty()) throw std::invalid_argument("InverseSystem: no forms");
        for (const auto& f : forms_) {
            require_same_prime(f.prime(), p_, "InverseSystem");
            if (f.is_zero()) throw std::invalid_argument("InverseSystem: zero form");
        }
        check_independent();
    }

    u32 prime() const { return p_; }
    const std::vector<DualForm>& forms() const { return forms_; }
    int max_degree() const {
        int s = 0;
        for (const auto& f : forms_) s = std::max(s, f.degree());
        return s;
    }

    /// Matrix of the contraction map S_d -> (+)_j D_{s_j - d} in the monomial
    /// and dual-monomial bases; columns follow strand_basis(d), row blocks
    /// follow the forms in order.
    FpMat phi_map(int d) const {
        const auto dom = strand_basis(d);
        int rows = 0;
        for (const auto& f : forms_) rows += strand_dim(f.degree() - d);
        FpMat m(p_, rows, int(dom.size()));
        for (std::size_t c = 0; c < dom.size(); ++c) {
            Poly mono = Poly::term(p_, dom[c], 1);
            int off = 0;
            for (const auto& f : forms_) {
                int target = f.degree() - d;
                if (target >= 0) {
                    DualForm img = contract(mono, f);
                    for (const auto& [mm, cc] : img.terms())
                        m.at(off + strand_index(mm), int(c)) = cc;
                    off += strand_dim(target);
                }
            }
        }
        return m;
    }

    int phi_rank(int d) const { return fp_rank(phi_map(d)); }

    bool phi_surjective(int d) const {
        int codim = 0;
        for (const auto& f : forms_) codim += strand_dim(f.degree() - d);
        return phi_rank(d) == codim;
    }

    /// Least degree at which the contraction map becomes surjective. Only
    /// defined for a single form, where surjectivity is eventually automatic.
    int tipping_point() const {
        if (forms_.size() != 1)
            throw std::invalid_argument("tipping_point: defined for a single form");
        int s = forms_[0].degree();
        for (int d = 0; d <= s; ++d)
            if (phi_surjective(d)) return d;
        throw std::domain_error("tipping_point: no surjective degree found");
    }

    /// Annihilator ideal, with generators collected degree by degree up to
    /// dmax via the kernels of the contraction maps.
    GradedIdeal ann(int dmax) const {
        if (dmax < max_degree() + 1)
            throw std::invalid_argument("ann: dmax must exceed the largest form degree");
        std::vector<Poly> gens;
        RowSpace prev(p_, 1);  // kernel strand of the previous degree
        for (int d = 0; d <= dmax; ++d) {
            auto kernel = fp_nullspace(phi_map(d));
            if (kernel.empty()) {
                prev = RowSpace(p_, strand_dim(d));
                continue;
            }
            // span of R_1 * (previous kernel) inside this strand
            RowSpace grown(p_, strand_dim(d));
            if (d > 0 && prev.dim() > 0) {
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
                        grown.insert(std::move(w));
                    }
                }
            }
            RowSpace cur(p_, strand_dim(d));
            for (auto& row : kernel) cur.insert(std::move(row));
            for (int r = 0; r < cur.dim(); ++r)
                if (grown.insert(cur.row(r))) gens.push_back(strand_to_poly(cur.row(r), d, p_));
            prev = std::move(cur);
        }
        return GradedIdeal(p_, std::move(gens));
    }

private:
    void check_independent() const {
        // forms of distinct degrees are independent; check each degree block
        std::map<int, std::vector<const DualForm*>> by_degree;
        for (const auto& f : forms_) by_degree[f.degree()].push_back(&f);
        for (const auto& [d, fs] : by_degree) {
            if (fs.size() == 1) continue;
            FpMat m(p_, int(fs.size()), strand_dim(d));
            for (std::size_t r = 0; r < fs.size(); ++r) {
                auto v = dual_to_strand(*fs[r]);
                for (int c = 0; c < int(v.size()); ++c) m.at(int(r), c) = v[c];
            }
            if (fp_rank(std::move(m)) != int(fs.size()))
                throw std::invalid_argument("InverseSystem: forms are linearly dependent");
        }
    }

    u32 p_;
    std::vector<DualForm> forms_;
};

/// Dual socle generator of a Gorenstein quotient: the one-dimensional space of
/// degree-c dual forms annihilated by every generator of K. Normalized so the
/// first nonzero coordinate is 1. Throws unless the solution space is a line.
inline DualForm dual_socle_generator(const GradedIdeal& K, int socle_degree) {
    const u32 p = K.prime();
    int rows = 0;
    std::vector<std::pair<const Poly*, int>> blocks;  // generator, codomain degree
    for (const auto& g : K.gens()) {
        int t = socle_degree - g.degree();
        if (t < 0) continue;
        blocks.emplace_back(&g, t);
        rows += strand_dim(t);
    }
    const auto dom = strand_basis(socle_degree);
    FpMat m(p, rows, int(dom.size()));
    for (std::size_t c = 0; c < dom.size(); ++c) {
        DualForm unit = DualForm::term(p, dom[c], 1);
        int off = 0;
        for (const auto& [g, t] : blocks) {
            DualForm img = contract(*g, unit);
            for (const auto& [mm, cc] : img.terms()) m.at(off + strand_index(mm), int(c)) = cc;
            off += strand_dim(t);
        }
    }
    auto kernel = fp_nullspace(std::move(m));
    if (kernel.size() != 1)
        throw std::domain_error("dual_socle_generator: socle is not one-dimensional in degree " +
                                std::to_string(socle_degree));
    auto& v = kernel[0];
    u32 lead = 0;
    for (u32 x : v)
        if (x) {
            lead = x;
            break;
        }
    u32 inv = fp_inv(lead, p);
    for (auto& x : v) x = fp_mul(x, inv, p);
    return strand_to_dual(v, socle_degree, p);
}

}  // namespace grade3
