#include "gtrskit/linalg.hpp"

#include <algorithm>

namespace gtrskit {

Matrix::Matrix(const FieldCtx& F, size_t rows, size_t cols)
    : ctx_(&F), r_(rows), c_(cols), a_(rows * cols, 0) {}

Matrix Matrix::from_rows(const FieldCtx& F, const std::vector<std::vector<FieldElem>>& rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix M(F, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (size_t j = 0; j < cols; ++j) {
            if (&rows[i][j].ctx() != &F)
                throw FieldMismatchError("matrix entry from another field");
            M.vset(i, j, rows[i][j].value());
        }
    }
    return M;
}

Matrix Matrix::from_value_rows(const FieldCtx& F,
                               const std::vector<std::vector<uint32_t>>& rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix M(F, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (size_t j = 0; j < cols; ++j) {
            if (rows[i][j] >= F.q()) throw std::invalid_argument("entry index out of range");
            M.vset(i, j, rows[i][j]);
        }
    }
    return M;
}

Matrix Matrix::identity(const FieldCtx& F, size_t n) {
    Matrix M(F, n, n);
    for (size_t i = 0; i < n; ++i) M.vset(i, i, 1);
    return M;
}

FieldElem Matrix::at(size_t i, size_t j) const { return ctx_->elem(vat(i, j)); }

void Matrix::set(size_t i, size_t j, FieldElem v) {
    if (&v.ctx() != ctx_) throw FieldMismatchError("matrix entry from another field");
    vset(i, j, v.value());
}

std::vector<FieldElem> Matrix::row(size_t i) const {
    std::vector<FieldElem> out;
    out.reserve(c_);
    for (size_t j = 0; j < c_; ++j) out.push_back(at(i, j));
    return out;
}

std::vector<std::vector<uint32_t>> Matrix::value_rows() const {
    std::vector<std::vector<uint32_t>> out(r_);
    for (size_t i = 0; i < r_; ++i)
        out[i].assign(a_.begin() + i * c_, a_.begin() + (i + 1) * c_);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix M(*ctx_, c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) M.vset(j, i, vat(i, j));
    return M;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (ctx_ != o.ctx_) throw FieldMismatchError("matrices from different fields");
    if (c_ != o.r_) throw std::invalid_argument("inner dimensions differ");
    Matrix M(*ctx_, r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t l = 0; l < c_; ++l) {
            uint32_t v = vat(i, l);
            if (!v) continue;
            for (size_t j = 0; j < o.c_; ++j)
                M.vset(i, j, ctx_->vadd(M.vat(i, j), ctx_->vmul(v, o.vat(l, j))));
        }
    return M;
}

bool Matrix::operator==(const Matrix& o) const {
    if (ctx_ != o.ctx_) throw FieldMismatchError("matrices from different fields");
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](uint32_t v) { return v == 0; });
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (ctx_ != o.ctx_) throw FieldMismatchError("matrices from different fields");
    if (c_ != o.c_) throw std::invalid_argument("column counts differ");
    Matrix M(*ctx_, r_ + o.r_, c_);
    std::copy(a_.begin(), a_.end(), M.a_.begin());
    std::copy(o.a_.begin(), o.a_.end(), M.a_.begin() + a_.size());
    return M;
}

Matrix rref(const Matrix& M) {
    const FieldCtx& F = M.ctx();
    auto rows = M.value_rows();
    const size_t nc = M.cols();
    size_t pr = 0;  // pivot row
    for (size_t col = 0; col < nc && pr < rows.size(); ++col) {
        size_t sel = pr;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pr], rows[sel]);
        uint32_t inv = F.vinv(rows[pr][col]);
        for (size_t j = col; j < nc; ++j) rows[pr][j] = F.vmul(rows[pr][j], inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == pr) continue;
            uint32_t f = rows[i][col];
            if (!f) continue;
            for (size_t j = col; j < nc; ++j)
                rows[i][j] = F.vsub(rows[i][j], F.vmul(f, rows[pr][j]));
        }
        ++pr;
    }
    Matrix out(F, pr, nc);  // explicit shape so zero row spaces keep their width
    for (size_t i = 0; i < pr; ++i)
        for (size_t j = 0; j < nc; ++j) out.vset(i, j, rows[i][j]);
    return out;
}

size_t rank(const Matrix& M) { return rref(M).rows(); }

Matrix nullspace(const Matrix& M) {
    const FieldCtx& F = M.ctx();
    const size_t nc = M.cols();
    Matrix R = rref(M);
    std::vector<size_t> pivot_col;
    std::vector<bool> is_pivot(nc, false);
    for (size_t i = 0; i < R.rows(); ++i)
        for (size_t j = 0; j < nc; ++j)
            if (R.vat(i, j) != 0) {
                pivot_col.push_back(j);
                is_pivot[j] = true;
                break;
            }
    std::vector<std::vector<uint32_t>> basis;
    for (size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<uint32_t> v(nc, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = F.vneg(R.vat(i, f));
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Matrix(F, 0, nc);
    return Matrix::from_value_rows(F, basis);
}

Matrix gram(const Matrix& M) { return M * M.transpose(); }

bool row_space_equal(const Matrix& A, const Matrix& B) {
    if (&A.ctx() != &B.ctx()) throw FieldMismatchError("matrices from different fields");
    if (A.cols() != B.cols()) return false;
    return rref(A) == rref(B);
}

AffineSolution solve_affine(const Matrix& A, const std::vector<FieldElem>& b) {
    const FieldCtx& F = A.ctx();
    if (b.size() != A.rows()) throw std::invalid_argument("rhs length must match row count");
    const size_t nc = A.cols();
    Matrix aug(F, A.rows(), nc + 1);
    for (size_t i = 0; i < A.rows(); ++i) {
        for (size_t j = 0; j < nc; ++j) aug.vset(i, j, A.vat(i, j));
        if (&b[i].ctx() != &F) throw FieldMismatchError("rhs entry from another field");
        aug.vset(i, nc, b[i].value());
    }
    Matrix R = rref(aug);
    AffineSolution sol;
    std::vector<size_t> pivot_col;
    for (size_t i = 0; i < R.rows(); ++i) {
        size_t j = 0;
        while (j < nc + 1 && R.vat(i, j) == 0) ++j;
        if (j == nc) {  // row (0 ... 0 | 1): contradiction
            sol.feasible = false;
            sol.witness_row = i;
            return sol;
        }
        if (j < nc) pivot_col.push_back(j);
    }
    sol.feasible = true;
    sol.x.assign(nc, F.zero());
    for (size_t i = 0; i < pivot_col.size(); ++i) sol.x[pivot_col[i]] = R.at(i, nc);
    sol.kernel = nullspace(A);
    return sol;
}

}  // namespace gtrskit
