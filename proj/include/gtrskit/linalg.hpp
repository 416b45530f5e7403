#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gtrskit/gf.hpp"

namespace gtrskit {

// Dense matrix over one field context, stored row-major as canonical element
// values.
class Matrix {
public:
    Matrix(const FieldCtx& F, size_t rows, size_t cols);
    static Matrix from_rows(const FieldCtx& F,
                            const std::vector<std::vector<FieldElem>>& rows);
    static Matrix from_value_rows(const FieldCtx& F,
                                  const std::vector<std::vector<uint32_t>>& rows);
    static Matrix identity(const FieldCtx& F, size_t n);

    const FieldCtx& ctx() const { return *ctx_; }
    size_t rows() const { return r_; }
    size_t cols() const { return c_; }

    FieldElem at(size_t i, size_t j) const;
    void set(size_t i, size_t j, FieldElem v);
    uint32_t vat(size_t i, size_t j) const { return a_[i * c_ + j]; }
    void vset(size_t i, size_t j, uint32_t v) { a_[i * c_ + j] = v; }

    std::vector<FieldElem> row(size_t i) const;
    std::vector<std::vector<uint32_t>> value_rows() const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;

    // Stack rows of `o` under this matrix (column counts must match).
    Matrix vstack(const Matrix& o) const;

private:
    const FieldCtx* ctx_;
    size_t r_, c_;
    std::vector<uint32_t> a_;
};

// Canonical reduced row echelon form with zero rows dropped: the unique
// basis of the row space with pivot columns reduced to unit vectors.  Two
// matrices have equal row spaces iff their rref() results are identical.
Matrix rref(const Matrix& M);
size_t rank(const Matrix& M);

// Basis of the right nullspace {x : M x = 0}, one basis vector per row,
// built from the free columns of rref(M) in ascending column order (hence
// deterministic).  Zero-dimensional nullspace gives a 0 x cols matrix.
Matrix nullspace(const Matrix& M);

// Gram matrix M * M^T; the code spanned by M's rows is self-orthogonal iff
// this is the zero matrix.
Matrix gram(const Matrix& M);

bool row_space_equal(const Matrix& A, const Matrix& B);

// Outcome of solving A x = b.  When feasible, `x` is the particular solution
// with free variables set to zero and `kernel` the nullspace basis of A.
// When infeasible, `witness_row` is the index of the contradictory row
// (0 ... 0 | c != 0) in rref([A | b]), a checkable certificate.
struct AffineSolution {
    bool feasible = false;
    std::vector<FieldElem> x;
    std::optional<Matrix> kernel;
    size_t witness_row = 0;
};

AffineSolution solve_affine(const Matrix& A, const std::vector<FieldElem>& b);

}  // namespace gtrskit
