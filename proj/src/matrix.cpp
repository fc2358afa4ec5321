#include "corestar/matrix.hpp"

#include <stdexcept>

namespace corestar {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
    entries_.reserve(rows * cols);
    for (std::size_t k = 0; k < rows * cols; ++k) entries_.push_back(Scalar::zero(field));
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_texts(const Field& field,
                          const std::vector<std::vector<std::string>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::parse(rows[i][j], field);
    }
    return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return entries_[i * cols_ + j];
}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return entries_[i * cols_ + j];
}

Matrix Matrix::star() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix Matrix::pow(unsigned k) const {
    if (rows_ != cols_) throw std::invalid_argument("pow requires a square matrix");
    Matrix acc = identity(field_, rows_);
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : entries_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("matrix field mismatch: " + a.field().name() + " vs " +
                                    b.field().name());
}

} // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows())
        throw std::invalid_argument("dimension mismatch in matrix product: " +
                                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                    " * " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar sum = Scalar::zero(a.field());
            for (std::size_t k = 0; k < a.cols(); ++k) sum += a.at(i, k) * b.at(k, j);
            out.at(i, j) = sum;
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch in matrix sum");
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch in matrix difference");
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field() || a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

Matrix conjugate_transpose(const Matrix& m) { return m.star(); }

RrefResult rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        // Topmost unused nonzero entry in this column.
        std::size_t sel = r.rows();
        for (std::size_t i = pivot_row; i < r.rows(); ++i) {
            if (!r.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel == r.rows()) continue;
        for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(pivot_row, j), r.at(sel, j));
        const Scalar inv_pivot = Scalar::one(r.field()) / r.at(pivot_row, col);
        for (std::size_t j = col; j < r.cols(); ++j)
            r.at(pivot_row, j) = r.at(pivot_row, j) * inv_pivot;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row || r.at(i, col).is_zero()) continue;
            const Scalar factor = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) = r.at(i, j) - factor * r.at(pivot_row, j);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows())
        throw std::invalid_argument("dimension mismatch in solve");
    // Eliminate on [A | B]; a pivot landing in the B block means inconsistency.
    Matrix aug(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    const RrefResult red = rref(aug);
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t k = 0; k < red.pivots.size(); ++k) {
        const std::size_t col = red.pivots[k];
        if (col >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(col, j) = red.r.at(k, a.cols() + j);
    }
    return x;
}

std::optional<Matrix> left_inverse(const Matrix& m) {
    // X M = I  <=>  M^T X^T = I under the plain transpose.
    const Matrix mt = m.transposed();
    std::optional<Matrix> xt = solve(mt, Matrix::identity(m.field(), m.cols()));
    if (!xt) return std::nullopt;
    return xt->transposed();
}

std::optional<Matrix> right_inverse(const Matrix& m) {
    return solve(m, Matrix::identity(m.field(), m.rows()));
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse requires a square matrix");
    return right_inverse(m);
}

SubspaceReport subspace_report(const Matrix& m) {
    const RrefResult red = rref(m);
    const std::size_t r = red.pivots.size();
    Matrix row_basis(m.field(), r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) row_basis.at(i, j) = red.r.at(i, j);

    // Left null space of M is the null space of M^T; one generator per
    // free column of rref(M^T), then canonicalized to RREF rows.
    const Matrix mt = m.transposed();
    const RrefResult tred = rref(mt);
    std::vector<bool> is_pivot(mt.cols(), false);
    for (std::size_t c : tred.pivots) is_pivot[c] = true;
    Matrix gens(m.field(), mt.cols() - tred.pivots.size(), mt.cols());
    std::size_t g = 0;
    for (std::size_t free_col = 0; free_col < mt.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        gens.at(g, free_col) = Scalar::one(m.field());
        for (std::size_t k = 0; k < tred.pivots.size(); ++k)
            gens.at(g, tred.pivots[k]) = -tred.r.at(k, free_col);
        ++g;
    }
    const RrefResult canon = rref(gens);
    Matrix null_basis(m.field(), canon.pivots.size(), mt.cols());
    for (std::size_t i = 0; i < canon.pivots.size(); ++i)
        for (std::size_t j = 0; j < mt.cols(); ++j) null_basis.at(i, j) = canon.r.at(i, j);
    return {std::move(row_basis), std::move(null_basis)};
}

namespace {

Matrix stack_rows(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("stack_rows: column mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

Matrix rref_rows(const Matrix& m) {
    const RrefResult red = rref(m);
    Matrix out(m.field(), red.pivots.size(), m.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = red.r.at(i, j);
    return out;
}

} // namespace

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || a.field() != b.field()) return false;
    return rref_rows(a) == rref_rows(b);
}

bool is_direct_sum(const Matrix& a, const Matrix& b, std::size_t dim) {
    const std::size_t da = rank(a);
    const std::size_t db = rank(b);
    return da + db == dim && rank(stack_rows(a, b)) == dim;
}

} // namespace corestar
