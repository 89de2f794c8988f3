#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grade3/poly.hpp"

namespace grade3 {

/// Dense matrix with polynomial entries.
class PolyMatrix {
public:
    PolyMatrix(u32 p, int rows, int cols)
        : p_(p), rows_(rows), cols_(cols), a_(size_t(rows) * cols, Poly::zero(p)) {}

    u32 prime() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Poly& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Poly& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    PolyMatrix operator*(const PolyMatrix& o) const {
        require_same_prime(p_, o.p_, "PolyMatrix::*");
        if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix::*: shape mismatch");
        PolyMatrix r(p_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
                }
            }
        return r;
    }

    bool is_zero() const {
        for (const auto& f : a_)
            if (!f.is_zero()) return false;
        return true;
    }

    bool operator==(const PolyMatrix& o) const {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    u32 p_;
    int rows_, cols_;
    std::vector<Poly> a_;
};

/// Determinant by cofactor expansion along the first row. Exponential, but the
/// matrices in this library never exceed single digits in size; kept separate
/// from the Pfaffian recursion so the two can check each other.
inline Poly det_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_cofactor: not square");
    int n = m.rows();
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;

    struct Rec {
        const PolyMatrix& m;
        Poly run(std::vector<int>& rows, std::vector<int>& cols) {
            int k = int(rows.size());
            if (k == 0) return Poly::constant(m.prime(), 1);
            if (k == 1) return m.at(rows[0], cols[0]);
            Poly acc = Poly::zero(m.prime());
            int r0 = rows[0];
            std::vector<int> sub_rows(rows.begin() + 1, rows.end());
            for (int t = 0; t < k; ++t) {
                const Poly& e = m.at(r0, cols[t]);
                if (e.is_zero()) continue;
                std::vector<int> sub_cols;
                sub_cols.reserve(k - 1);
                for (int s = 0; s < k; ++s)
                    if (s != t) sub_cols.push_back(cols[s]);
                Poly minor = run(sub_rows, sub_cols);
                Poly term = e * minor;
                acc = (t % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        }
    } rec{m};
    std::vector<int> rows = idx, cols = idx;
    return rec.run(rows, cols);
}

/// Alternating matrix over the polynomial ring: zero diagonal, lower triangle
/// the negated transpose of the upper triangle. Only the upper triangle is
/// stored, so skewness holds by construction.
class AltMatrix {
public:
    AltMatrix(u32 p, int n) : p_(p), n_(n), upper_(size_t(n) * n, Poly::zero(p)) {
        if (n <= 0) throw std::invalid_argument("AltMatrix: size must be positive");
    }

    u32 prime() const { return p_; }
    int size() const { return n_; }

    void set_upper(int i, int j, Poly f) {
        check(i, j);
        if (i >= j) throw std::invalid_argument("AltMatrix::set_upper: need i < j");
        upper_[size_t(i) * n_ + j] = std::move(f);
    }

    /// Signed entry view: entry(i,j) = -entry(j,i), entry(i,i) = 0.
    Poly entry(int i, int j) const {
        check(i, j);
        if (i == j) return Poly::zero(p_);
        if (i < j) return upper_[size_t(i) * n_ + j];
        return -upper_[size_t(j) * n_ + i];
    }

    PolyMatrix full() const {
        PolyMatrix m(p_, n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m.at(i, j) = entry(i, j);
        return m;
    }

    /// Principal submatrix on the given (strictly increasing) index subset.
    AltMatrix principal(const std::vector<int>& idx) const {
        AltMatrix s(p_, int(idx.size()));
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                s.set_upper(int(a), int(b), entry(idx[a], idx[b]));
        return s;
    }

    AltMatrix delete_index(int i) const {
        check(i, 0);
        std::vector<int> idx;
        idx.reserve(n_ - 1);
        for (int k = 0; k < n_; ++k)
            if (k != i) idx.push_back(k);
        return principal(idx);
    }

    bool operator==(const AltMatrix& o) const {
        return p_ == o.p_ && n_ == o.n_ && upper_ == o.upper_;
    }

private:
    void check(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("AltMatrix: index out of range");
    }

    u32 p_;
    int n_;
    std::vector<Poly> upper_;
};

namespace detail {

inline Poly pfaffian_expand(const AltMatrix& m, const std::vector<int>& idx) {
    int k = int(idx.size());
    if (k == 0) return Poly::constant(m.prime(), 1);
    Poly acc = Poly::zero(m.prime());
    int i0 = idx[0];
    // expansion along the first row: sign (-1)^j on column j (2-based)
    for (int t = 1; t < k; ++t) {
        Poly e = m.entry(i0, idx[t]);
        if (e.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(k - 2);
        for (int s = 1; s < k; ++s)
            if (s != t) rest.push_back(idx[s]);
        Poly term = e * pfaffian_expand(m, rest);
        acc = (t % 2 == 1) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace detail

/// Pfaffian of an even-size alternating matrix; Pf(M)^2 = det(M).
inline Poly pfaffian(const AltMatrix& m) {
    if (m.size() % 2 != 0) throw std::invalid_argument("pfaffian: matrix size must be even");
    std::vector<int> idx(m.size());
    for (int i = 0; i < m.size(); ++i) idx[i] = i;
    return detail::pfaffian_expand(m, idx);
}

/// Principal submaximal Pfaffians of an odd-size alternating matrix, together
/// with the signed generators pf_i = (-1)^(i+1) Pf_i satisfying M . pf = 0.
struct PfaffianSystem {
    AltMatrix source;
    std::vector<Poly> pf;         // signed: pf[i] = (-1)^i * phi_n_row[i] (0-based)
    std::vector<Poly> phi_n_row;  // Pf of the principal submatrix omitting index i
};

inline PfaffianSystem sub_pfaffians(const AltMatrix& m) {
    if (m.size() % 2 == 0)
        throw std::invalid_argument("sub_pfaffians: matrix size must be odd");
    PfaffianSystem sys{m, {}, {}};
    for (int i = 0; i < m.size(); ++i) {
        Poly raw = pfaffian(m.delete_index(i));
        sys.pf.push_back(i % 2 == 0 ? raw : -raw);
        sys.phi_n_row.push_back(std::move(raw));
    }
    return sys;
}

/// Entries of the full wedge-power map out of the top exterior power: index i
/// carries the Pfaffian of the principal submatrix omitting i. Restricting to
/// single-index deletions this is exactly phi_n_row of sub_pfaffians.
inline std::vector<Poly> phi_power_row(const AltMatrix& m) {
    if (m.size() % 2 == 0)
        throw std::invalid_argument("phi_power_row: matrix size must be odd");
    std::vector<Poly> row;
    row.reserve(m.size());
    for (int i = 0; i < m.size(); ++i) row.push_back(pfaffian(m.delete_index(i)));
    return row;
}

/// M . pf as a column of polynomials; identically zero for correct signs.
inline std::vector<Poly> syzygy_residual(const PfaffianSystem& sys) {
    const AltMatrix& m = sys.source;
    std::vector<Poly> out;
    out.reserve(m.size());
    for (int i = 0; i < m.size(); ++i) {
        Poly s = Poly::zero(m.prime());
        for (int j = 0; j < m.size(); ++j) s = s + m.entry(i, j) * sys.pf[j];
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace grade3
