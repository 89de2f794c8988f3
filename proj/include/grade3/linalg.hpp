#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "grade3/gf.hpp"

namespace grade3 {

/// Dense row-major matrix over GF(p).
class FpMat {
public:
    FpMat() : p_(3), rows_(0), cols_(0) {}
    FpMat(u32 p, int rows, int cols) : p_(p), rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    u32 prime() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    u32& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    u32 at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
    u32* row_ptr(int r) { return a_.data() + size_t(r) * cols_; }
    const u32* row_ptr(int r) const { return a_.data() + size_t(r) * cols_; }

    bool operator==(const FpMat& o) const = default;

private:
    u32 p_;
    int rows_, cols_;
    std::vector<u32> a_;
};

/// In-place forward elimination with deterministic pivoting (leftmost column,
/// topmost unused row). Returns the pivot columns; the matrix is left in row
/// echelon form with unit pivots.
inline std::vector<int> fp_echelon(FpMat& m) {
    const u32 p = m.prime();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = c; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pr, j));
        u32 inv = fp_inv(m.at(r, c), p);
        if (inv != 1)
            for (int j = c; j < m.cols(); ++j) m.at(r, j) = fp_mul(m.at(r, j), inv, p);
        for (int i = r + 1; i < m.rows(); ++i) {
            u32 f = m.at(i, c);
            if (f == 0) continue;
            u32 fn = p - f;  // row_i += fn * row_r
            const u32* src = m.row_ptr(r);
            u32* dst = m.row_ptr(i);
            for (int j = c; j < m.cols(); ++j)
                dst[j] = u32((u64(dst[j]) + u64(fn) * src[j]) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int fp_rank(FpMat m) { return int(fp_echelon(m).size()); }

/// Reduced row echelon form (pivots 1, pivot columns cleared above as well).
inline std::vector<int> fp_rref(FpMat& m) {
    const u32 p = m.prime();
    std::vector<int> pivots = fp_echelon(m);
    for (int r = int(pivots.size()) - 1; r >= 0; --r) {
        int c = pivots[r];
        for (int i = 0; i < r; ++i) {
            u32 f = m.at(i, c);
            if (f == 0) continue;
            u32 fn = p - f;
            const u32* src = m.row_ptr(r);
            u32* dst = m.row_ptr(i);
            for (int j = c; j < m.cols(); ++j)
                dst[j] = u32((u64(dst[j]) + u64(fn) * src[j]) % p);
        }
    }
    return pivots;
}

/// Basis of the right kernel {v : M v = 0}, one row per free column, in
/// column order. Deterministic.
inline std::vector<std::vector<u32>> fp_nullspace(FpMat m) {
    const u32 p = m.prime();
    const int n = m.cols();
    std::vector<int> pivots = fp_rref(m);
    std::vector<int> pivot_of_col(n, -1);
    for (int r = 0; r < int(pivots.size()); ++r) pivot_of_col[pivots[r]] = r;
    std::vector<std::vector<u32>> basis;
    for (int c = 0; c < n; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<u32> v(n, 0);
        v[c] = 1;
        for (int r = 0; r < int(pivots.size()); ++r) v[pivots[r]] = fp_neg(m.at(r, c), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of M x = b with free variables set to zero, or nullopt when
/// the system is inconsistent.
inline std::optional<std::vector<u32>> fp_solve(const FpMat& m, const std::vector<u32>& b) {
    if (int(b.size()) != m.rows()) throw std::invalid_argument("fp_solve: size mismatch");
    const u32 p = m.prime();
    FpMat aug(p, m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<int> pivots = fp_rref(aug);
    std::vector<u32> x(m.cols(), 0);
    for (int r = 0; r < int(pivots.size()); ++r) {
        if (pivots[r] == m.cols()) return std::nullopt;  // pivot in the constant column
        x[pivots[r]] = aug.at(r, m.cols());
    }
    return x;
}

/// Incrementally maintained reduced row echelon basis of a subspace of
/// GF(p)^n. Insertion order never changes the resulting row space; pivot
/// choice is always the leftmost nonzero column, so representatives are
/// reproducible.
class RowSpace {
public:
    RowSpace(u32 p, int n) : p_(p), n_(n) {}

    u32 prime() const { return p_; }
    int ambient() const { return n_; }
    int dim() const { return int(rows_.size()); }
    const std::vector<int>& pivots() const { return pivots_; }
    const std::vector<u32>& row(int i) const { return rows_[i]; }

    /// Normal form: v minus its projection onto the row space; zero exactly on
    /// members. The result vanishes on all pivot columns.
    std::vector<u32> reduce(std::vector<u32> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            u32 f = v[pivots_[r]];
            if (f == 0) continue;
            axpy(v, p_ - f, rows_[r], pivots_[r]);
        }
        return v;
    }

    bool contains(const std::vector<u32>& v) const {
        std::vector<u32> nf = reduce(v);
        for (u32 x : nf)
            if (x) return false;
        return true;
    }

    /// Adds v to the space. Returns true when v was independent of the current
    /// rows (and records its normal form as a new basis row).
    bool insert(std::vector<u32> v) {
        if (int(v.size()) != n_) throw std::invalid_argument("RowSpace::insert: wrong length");
        v = reduce(std::move(v));
        int piv = -1;
        for (int j = 0; j < n_; ++j)
            if (v[j]) {
                piv = j;
                break;
            }
        if (piv < 0) return false;
        u32 inv = fp_inv(v[piv], p_);
        if (inv != 1)
            for (int j = piv; j < n_; ++j) v[j] = fp_mul(v[j], inv, p_);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            u32 f = rows_[r][piv];
            if (f) axpy(rows_[r], p_ - f, v, piv);
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, piv);
        return true;
    }

private:
    void axpy(std::vector<u32>& dst, u32 f, const std::vector<u32>& src, int from) const {
        for (std::size_t j = from; j < dst.size(); ++j)
            dst[j] = u32((u64(dst[j]) + u64(f) * src[j]) % p_);
    }

    u32 p_;
    int n_;
    std::vector<std::vector<u32>> rows_;
    std::vector<int> pivots_;
};

/// Echelon basis that additionally tracks, for each stored row, a payload
/// vector of coefficients. Querying a vector in the span returns the induced
/// payload combination. Used to express cycles in terms of a chosen set of
/// homology representatives modulo boundaries.
class TrackedRowSpace {
public:
    TrackedRowSpace(u32 p, int n, int payload_len)
        : p_(p), n_(n), m_(payload_len) {}

    int dim() const { return int(rows_.size()); }

    bool insert(std::vector<u32> v, std::vector<u32> payload) {
        if (int(v.size()) != n_ || int(payload.size()) != m_)
            throw std::invalid_argument("TrackedRowSpace::insert: wrong length");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            u32 f = v[pivots_[r]];
            if (f == 0) continue;
            u32 fn = p_ - f;
            axpy(v, fn, rows_[r], pivots_[r]);
            axpy(payload, fn, payloads_[r], 0);
        }
        int piv = -1;
        for (int j = 0; j < n_; ++j)
            if (v[j]) {
                piv = j;
                break;
            }
        if (piv < 0) return false;
        u32 inv = fp_inv(v[piv], p_);
        if (inv != 1) {
            for (int j = piv; j < n_; ++j) v[j] = fp_mul(v[j], inv, p_);
            for (int j = 0; j < m_; ++j) payload[j] = fp_mul(payload[j], inv, p_);
        }
        rows_.push_back(std::move(v));
        payloads_.push_back(std::move(payload));
        pivots_.push_back(piv);
        return true;
    }

    /// Expresses v as a combination of stored rows and returns the matching
    /// payload combination; throws when v is outside the span.
    std::vector<u32> express(std::vector<u32> v) const {
        std::vector<u32> acc(m_, 0);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            u32 f = v[pivots_[r]];
            if (f == 0) continue;
            axpy(v, p_ - f, rows_[r], pivots_[r]);
            axpy(acc, f, payloads_[r], 0);
        }
        for (u32 x : v)
            if (x) throw std::domain_error("TrackedRowSpace::express: vector outside span");
        return acc;
    }

private:
    void axpy(std::vector<u32>& dst, u32 f, const std::vector<u32>& src, int from) const {
        for (std::size_t j = from; j < dst.size(); ++j)
            dst[j] = u32((u64(dst[j]) + u64(f) * src[j]) % p_);
    }

    u32 p_;
    int n_, m_;
    std::vector<std::vector<u32>> rows_;
    std::vector<std::vector<u32>> payloads_;
    std::vector<int> pivots_;
};

}  // namespace grade3
