#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "corestar/scalar.hpp"

namespace corestar {

// Dense matrix of exact scalars over a single field. Zero rows or columns
// are legal: an m x 0 by 0 x n product is the m x n zero matrix, and the
// 0 x 0 matrix is invertible with itself as inverse.
class Matrix {
public:
    // Zero-filled.
    Matrix(const Field& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& field, std::size_t n);
    // Builds from canonical scalar texts; every row must have the same length.
    static Matrix from_texts(const Field& field,
                             const std::vector<std::vector<std::string>>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const;
    Scalar& at(std::size_t i, std::size_t j);

    // Entrywise star of the plain transpose.
    Matrix star() const;
    Matrix transposed() const;
    // A^k for square A; A^0 is the identity.
    Matrix pow(unsigned k) const;

    bool is_zero() const;
    bool is_identity() const;
    bool is_hermitian() const { return rows_ == cols_ && *this == star(); }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_; // row-major
};

Matrix conjugate_transpose(const Matrix& m);

struct RrefResult {
    Matrix r;
    std::vector<std::size_t> pivots; // pivot columns, ascending
};

// Unique reduced row echelon form. Pivoting is deterministic: scan columns
// left to right, take the topmost unused nonzero entry.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Particular solution of A X = B with all free parameters set to zero,
// or absent when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// X with X M = I_cols(M), present iff M has full column rank.
std::optional<Matrix> left_inverse(const Matrix& m);
// X with M X = I_rows(M), present iff M has full row rank.
std::optional<Matrix> right_inverse(const Matrix& m);
// Two-sided inverse of a square matrix; throws on non-square input.
std::optional<Matrix> inverse(const Matrix& m);

struct SubspaceReport {
    Matrix row_basis;       // spans {x M : x}, RREF canonical rows
    Matrix left_null_basis; // spans {x : x M = 0}, RREF canonical rows
};

SubspaceReport subspace_report(const Matrix& m);

// Rows of both arguments span the same subspace (bases in any form).
bool same_row_space(const Matrix& a, const Matrix& b);

// Rows of a and rows of b intersect trivially and jointly span the full
// ambient row space of dimension dim.
bool is_direct_sum(const Matrix& a, const Matrix& b, std::size_t dim);

} // namespace corestar
