#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radcube/field.hpp"

namespace radcube {

using KVector = std::vector<Residue>;

/// Dense matrix over F_p, row-major.
class KMatrix {
public:
    KMatrix() = default;
    KMatrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    /// Builds from signed integer rows; entries are reduced mod p.
    static KMatrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
        std::size_t ncols = rows.empty() ? 0 : rows.front().size();
        KMatrix m(field, rows.size(), ncols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != ncols) throw InputError("ragged matrix rows");
            for (std::size_t c = 0; c < ncols; ++c) m(r, c) = field.reduce(rows[r][c]);
        }
        return m;
    }

    static KMatrix identity(PrimeField field, std::size_t n) {
        KMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static KMatrix from_columns(PrimeField field, std::size_t rows, const std::vector<KVector>& cols) {
        KMatrix m(field, rows, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != rows) throw InputError("column length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
        }
        return m;
    }

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] KVector column(std::size_t c) const {
        KVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    [[nodiscard]] KVector row(std::size_t r) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
    }

    [[nodiscard]] KMatrix transpose() const {
        KMatrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const KMatrix&, const KMatrix&) = default;

    friend KMatrix operator*(const KMatrix& a, const KMatrix& b) {
        require_same_field(a.field_, b.field_);
        if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
        const auto p = std::uint64_t{a.field_.modulus()};
        KMatrix out(a.field_, a.rows_, b.cols_);
        std::vector<std::uint64_t> acc(b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const std::uint64_t f = a(i, k);
                if (f == 0) continue;
                const Residue* brow = &b.data_[k * b.cols_];
                for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + f * brow[j]) % p;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = static_cast<Residue>(acc[j]);
        }
        return out;
    }

    friend KMatrix operator+(const KMatrix& a, const KMatrix& b) {
        require_same_field(a.field_, b.field_);
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum shape mismatch");
        KMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
        return out;
    }

    [[nodiscard]] KMatrix scaled(Residue f) const {
        KMatrix out = *this;
        for (auto& v : out.data_) v = field_.mul(v, f);
        return out;
    }

    [[nodiscard]] KVector apply(const KVector& v) const {
        if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
        const auto p = std::uint64_t{field_.modulus()};
        KVector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            std::uint64_t acc = 0;
            const Residue* row = &data_[r * cols_];
            for (std::size_t c = 0; c < cols_; ++c) acc = (acc + std::uint64_t{row[c]} * v[c]) % p;
            out[r] = static_cast<Residue>(acc);
        }
        return out;
    }

    /// [A | B]
    [[nodiscard]] static KMatrix hstack(const std::vector<KMatrix>& blocks, PrimeField field, std::size_t rows) {
        std::size_t cols = 0;
        for (const auto& b : blocks) {
            require_same_field(field, b.field_);
            if (b.rows_ != rows) throw InputError("hstack row mismatch");
            cols += b.cols_;
        }
        KMatrix out(field, rows, cols);
        std::size_t off = 0;
        for (const auto& b : blocks) {
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < b.cols_; ++c) out(r, off + c) = b(r, c);
            off += b.cols_;
        }
        return out;
    }

    /// [A ; B]
    [[nodiscard]] static KMatrix vstack(const std::vector<KMatrix>& blocks, PrimeField field, std::size_t cols) {
        std::size_t rows = 0;
        for (const auto& b : blocks) {
            require_same_field(field, b.field_);
            if (b.cols_ != cols) throw InputError("vstack column mismatch");
            rows += b.rows_;
        }
        KMatrix out(field, rows, cols);
        std::size_t off = 0;
        for (const auto& b : blocks) {
            std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(off * cols));
            off += b.rows_;
        }
        return out;
    }

private:
    PrimeField field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Residue> data_;
};

struct RrefResult {
    KMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
};

namespace detail {

/// row_a[j] -= f * row_b[j] for the listed columns j only.
inline void axpy_sparse(Residue* row_a, const Residue* row_b, Residue f, const std::vector<std::size_t>& cols,
                        std::uint64_t p) {
    const std::uint64_t nf = (p - f) % p;
    for (auto j : cols) row_a[j] = static_cast<Residue>((row_a[j] + nf * row_b[j]) % p);
}

inline void nonzero_columns(const Residue* row, std::size_t from, std::size_t n, std::vector<std::size_t>& out) {
    out.clear();
    for (std::size_t j = from; j < n; ++j)
        if (row[j] != 0) out.push_back(j);
}

}  // namespace detail

/// Reduced row echelon form (Gauss-Jordan).
inline RrefResult rref(KMatrix m) {
    const auto& F = m.field();
    const std::uint64_t p = F.modulus();
    const std::size_t R = m.rows(), C = m.cols();
    RrefResult out;
    std::vector<std::size_t> nz;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < C && prow < R; ++c) {
        std::size_t sel = prow;
        while (sel < R && m(sel, c) == 0) ++sel;
        if (sel == R) continue;
        if (sel != prow)
            for (std::size_t j = c; j < C; ++j) std::swap(m(sel, j), m(prow, j));
        const Residue inv = F.inv(m(prow, c));
        for (std::size_t j = c; j < C; ++j) m(prow, j) = F.mul(m(prow, j), inv);
        const Residue* pr = &m(prow, 0);
        detail::nonzero_columns(pr, c, C, nz);
        for (std::size_t r = 0; r < R; ++r) {
            if (r == prow || m(r, c) == 0) continue;
            detail::axpy_sparse(&m(r, 0), pr, m(r, c), nz, p);
        }
        out.pivots.push_back(c);
        ++prow;
    }
    out.rank = prow;
    out.reduced = std::move(m);
    return out;
}

/// Rank by forward elimination only.
inline std::size_t rank(KMatrix m) {
    const auto& F = m.field();
    const std::uint64_t p = F.modulus();
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> nz;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < C && prow < R; ++c) {
        std::size_t sel = prow;
        while (sel < R && m(sel, c) == 0) ++sel;
        if (sel == R) continue;
        if (sel != prow)
            for (std::size_t j = c; j < C; ++j) std::swap(m(sel, j), m(prow, j));
        const Residue inv = F.inv(m(prow, c));
        for (std::size_t j = c; j < C; ++j) m(prow, j) = F.mul(m(prow, j), inv);
        const Residue* pr = &m(prow, 0);
        detail::nonzero_columns(pr, c, C, nz);
        for (std::size_t r = prow + 1; r < R; ++r) {
            if (m(r, c) == 0) continue;
            detail::axpy_sparse(&m(r, 0), pr, m(r, c), nz, p);
        }
        ++prow;
    }
    return prow;
}

inline std::size_t nullity(const KMatrix& m) { return m.cols() - rank(m); }

/// Canonical kernel basis read off the RREF: one column per free variable in
/// increasing index order, with that free variable set to 1.
inline KMatrix nullspace_basis(const KMatrix& m) {
    const auto& F = m.field();
    const auto rr = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < C; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    KMatrix basis(F, C, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis(f, k) = 1;
        for (std::size_t i = 0; i < rr.rank; ++i) basis(rr.pivots[i], k) = F.neg(rr.reduced(i, f));
    }
    return basis;
}

/// Some x with m x = b (free variables zero), or nullopt when inconsistent.
inline std::optional<KVector> solve(const KMatrix& m, const KVector& b) {
    if (b.size() != m.rows()) {
        throw InputError("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                         std::to_string(m.rows()));
    }
    const auto& F = m.field();
    KMatrix aug(F, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = F.reduce(b[r]);
    }
    const auto rr = rref(std::move(aug));
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
    KVector x(m.cols(), 0);
    for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.reduced(i, m.cols());
    return x;
}

/// Incrementally built echelon basis of a subspace of F_p^n.  Each stored row
/// is monic at its pivot and vanishes at the pivots of all earlier rows.
class SubspaceBasis {
public:
    SubspaceBasis(PrimeField field, std::size_t ambient) : field_(field), n_(ambient) {}

    [[nodiscard]] std::size_t dim() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t ambient() const noexcept { return n_; }

    /// Reduces v against the stored rows in place; zero iff v was in the span.
    void reduce(KVector& v) const {
        const std::uint64_t p = field_.modulus();
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Residue f = v[pivots_[k]];
            if (f != 0) detail::axpy_sparse(v.data(), rows_[k].data(), f, support_[k], p);
        }
    }

    [[nodiscard]] bool contains(KVector v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
    }

    /// Coefficients f with v = sum f_k row_k + remainder; v becomes the remainder.
    [[nodiscard]] KVector coordinates(KVector& v) const {
        const std::uint64_t p = field_.modulus();
        KVector f(rows_.size(), 0);
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            f[k] = v[pivots_[k]];
            if (f[k] != 0) detail::axpy_sparse(v.data(), rows_[k].data(), f[k], support_[k], p);
        }
        return f;
    }

    [[nodiscard]] const std::vector<KVector>& rows() const noexcept { return rows_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Adds v; returns true iff it enlarged the span.
    bool add(KVector v) {
        if (v.size() != n_) throw InputError("subspace vector length mismatch");
        reduce(v);
        std::size_t piv = 0;
        while (piv < n_ && v[piv] == 0) ++piv;
        if (piv == n_) return false;
        const Residue inv = field_.inv(v[piv]);
        for (std::size_t j = piv; j < n_; ++j) v[j] = field_.mul(v[j], inv);
        support_.emplace_back();
        detail::nonzero_columns(v.data(), piv, n_, support_.back());
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

private:
    PrimeField field_;
    std::size_t n_;
    std::vector<KVector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::size_t>> support_;  // nonzero columns of each row
};

}  // namespace radcube
