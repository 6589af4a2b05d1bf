#pragma once

// Dense matrices over a finite field. Entries are stored as element
// indices; all mutating algebra goes through the owning Field.

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "codist/field.hpp"

namespace codist {

class FMatrix {
public:
    FMatrix() = default;
    FMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), v_(rows * cols, 0) {
        if (!field_) throw std::invalid_argument("null field");
    }

    static FMatrix identity(const FieldPtr& field, std::size_t n) {
        FMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set_raw(i, i, 1);
        return m;
    }

    static FMatrix from_rows(const FieldPtr& field,
                             const std::vector<std::vector<std::uint32_t>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows[0].size();
        FMatrix m(field, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.set_raw(i, j, rows[i][j]);
        }
        return m;
    }

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint32_t raw(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }
    void set_raw(std::size_t i, std::size_t j, std::uint32_t idx) {
        if (idx >= field_->order()) throw std::invalid_argument("element index out of range");
        v_[i * cols_ + j] = idx;
    }

    FieldElement operator()(std::size_t i, std::size_t j) const {
        return field_->element(raw(i, j));
    }
    void set(std::size_t i, std::size_t j, const FieldElement& e) {
        if (!field_->same(*e.field())) throw std::invalid_argument("entry from different field");
        v_[i * cols_ + j] = e.index();
    }

    bool is_zero() const {
        for (auto x : v_)
            if (x != 0) return false;
        return true;
    }

    FMatrix transpose() const {
        FMatrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.set_raw(j, i, raw(i, j));
        return t;
    }

    FMatrix select_columns(const std::vector<std::size_t>& idx) const {
        FMatrix out(field_, rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] >= cols_) throw std::invalid_argument("column index out of range");
            for (std::size_t i = 0; i < rows_; ++i) out.set_raw(i, j, raw(i, idx[j]));
        }
        return out;
    }

    FMatrix select_rows(const std::vector<std::size_t>& idx) const {
        FMatrix out(field_, idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= rows_) throw std::invalid_argument("row index out of range");
            for (std::size_t j = 0; j < cols_; ++j) out.set_raw(i, j, raw(idx[i], j));
        }
        return out;
    }

    friend FMatrix operator+(const FMatrix& a, const FMatrix& b) {
        a.require_shape(b);
        const Field& f = *a.field_;
        FMatrix out = a;
        for (std::size_t i = 0; i < out.v_.size(); ++i) out.v_[i] = f.add(out.v_[i], b.v_[i]);
        return out;
    }

    friend FMatrix operator-(const FMatrix& a, const FMatrix& b) {
        a.require_shape(b);
        const Field& f = *a.field_;
        FMatrix out = a;
        for (std::size_t i = 0; i < out.v_.size(); ++i) out.v_[i] = f.sub(out.v_[i], b.v_[i]);
        return out;
    }

    friend FMatrix operator*(const FMatrix& a, const FMatrix& b) {
        if (!a.field_->same(*b.field_)) throw std::invalid_argument("mixed fields");
        if (a.cols_ != b.rows_) throw std::invalid_argument("inner dimension mismatch");
        const Field& f = *a.field_;
        FMatrix out(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const std::uint32_t aik = a.raw(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    out.v_[i * out.cols_ + j] =
                        f.add(out.v_[i * out.cols_ + j], f.mul(aik, b.raw(k, j)));
                }
            }
        return out;
    }

    FMatrix scaled(std::uint32_t c) const {
        const Field& f = *field_;
        FMatrix out = *this;
        for (auto& x : out.v_) x = f.mul(c, x);
        return out;
    }

    friend bool operator==(const FMatrix& a, const FMatrix& b) {
        return a.field_->same(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.v_ == b.v_;
    }
    friend bool operator!=(const FMatrix& a, const FMatrix& b) { return !(a == b); }

    // In-place row operations used by the eliminators below.
    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(v_[i * cols_ + c], v_[j * cols_ + c]);
    }
    void scale_row(std::size_t i, std::uint32_t c) {
        const Field& f = *field_;
        for (std::size_t k = 0; k < cols_; ++k) v_[i * cols_ + k] = f.mul(c, v_[i * cols_ + k]);
    }
    // row i -= c * row j
    void axpy_row(std::size_t i, std::size_t j, std::uint32_t c) {
        const Field& f = *field_;
        for (std::size_t k = 0; k < cols_; ++k)
            v_[i * cols_ + k] = f.sub(v_[i * cols_ + k], f.mul(c, v_[j * cols_ + k]));
    }

private:
    void require_shape(const FMatrix& o) const {
        if (!field_->same(*o.field_)) throw std::invalid_argument("mixed fields");
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    }

    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> v_;
};

inline FMatrix operator*(const FieldElement& c, const FMatrix& m) {
    if (!c.field()->same(*m.field())) throw std::invalid_argument("mixed fields");
    return m.scaled(c.index());
}

struct RrefResult {
    FMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

// Gauss-Jordan reduced row-echelon form.
inline RrefResult rref(FMatrix a) {
    const Field& f = *a.field();
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t sel = r;
        while (sel < a.rows() && a.raw(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        a.swap_rows(sel, r);
        a.scale_row(r, f.inv(a.raw(r, col)));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            const std::uint32_t c = a.raw(i, col);
            if (c != 0) a.axpy_row(i, r, c);
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

inline std::size_t rank(const FMatrix& a) { return rref(a).rank; }

// Basis of {x : Ax = 0}; one column per basis vector.
inline FMatrix nullspace(const FMatrix& a) {
    const auto rr = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    const Field& f = *a.field();
    FMatrix basis(a.field(), n, free_cols.size());
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        const std::size_t fc = free_cols[b];
        basis.set_raw(fc, b, 1);
        for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            basis.set_raw(rr.pivots[r], b, f.neg(rr.reduced.raw(r, fc)));
    }
    return basis;
}

struct SolveResult {
    bool feasible = false;
    FMatrix particular;       // cols(A) x cols(B)
    FMatrix nullspace_basis;  // cols(A) x nullity
};

// Solves A X = B column by column in a single elimination pass; B may
// have any number of right-hand-side columns.
inline SolveResult solve(const FMatrix& a, const FMatrix& b) {
    if (!a.field()->same(*b.field())) throw std::invalid_argument("mixed fields");
    if (a.rows() != b.rows()) throw std::invalid_argument("row count mismatch");
    const std::size_t n = a.cols(), rhs = b.cols();
    FMatrix aug(a.field(), a.rows(), n + rhs);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set_raw(i, j, a.raw(i, j));
        for (std::size_t j = 0; j < rhs; ++j) aug.set_raw(i, n + j, b.raw(i, j));
    }
    // Eliminate on the A-part only.
    const Field& f = *a.field();
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < n && r < aug.rows(); ++col) {
        std::size_t sel = r;
        while (sel < aug.rows() && aug.raw(sel, col) == 0) ++sel;
        if (sel == aug.rows()) continue;
        aug.swap_rows(sel, r);
        aug.scale_row(r, f.inv(aug.raw(r, col)));
        for (std::size_t i = 0; i < aug.rows(); ++i) {
            if (i == r) continue;
            const std::uint32_t c = aug.raw(i, col);
            if (c != 0) aug.axpy_row(i, r, c);
        }
        pivots.push_back(col);
        ++r;
    }
    SolveResult out;
    for (std::size_t i = r; i < aug.rows(); ++i)
        for (std::size_t j = 0; j < rhs; ++j)
            if (aug.raw(i, n + j) != 0) return out;  // inconsistent
    out.feasible = true;
    out.particular = FMatrix(a.field(), n, rhs);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
        for (std::size_t j = 0; j < rhs; ++j)
            out.particular.set_raw(pivots[pr], j, aug.raw(pr, n + j));
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    out.nullspace_basis = FMatrix(a.field(), n, free_cols.size());
    for (std::size_t bcol = 0; bcol < free_cols.size(); ++bcol) {
        const std::size_t fc = free_cols[bcol];
        out.nullspace_basis.set_raw(fc, bcol, 1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            out.nullspace_basis.set_raw(pivots[pr], bcol, f.neg(aug.raw(pr, fc)));
    }
    return out;
}

}  // namespace codist
