#include "corestar/factorization.hpp"

#include <stdexcept>

namespace corestar {

RankFactorization full_rank_factorize(const Matrix& a) {
    const RrefResult red = rref(a);
    const std::size_t r = red.pivots.size();
    Matrix c(a.field(), r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = red.r.at(i, j);
    Matrix b(a.field(), a.rows(), r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) b.at(i, k) = a.at(i, red.pivots[k]);
    return {a, std::move(b), std::move(c), r};
}

std::optional<UniquenessWitness> link_factorizations(const Matrix& target, const Matrix& left1,
                                                     const Matrix& right1, const Matrix& left2,
                                                     const Matrix& right2) {
    const std::size_t r1 = left1.cols();
    const std::size_t r2 = left2.cols();
    if (right1.rows() != r1 || right2.rows() != r2) return std::nullopt;
    if (left1.rows() != target.rows() || left2.rows() != target.rows()) return std::nullopt;
    if (right1.cols() != target.cols() || right2.cols() != target.cols()) return std::nullopt;

    if (left1 * right1 != target || left2 * right2 != target) return std::nullopt;
    // Epic and monic claims are checked, not assumed.
    if (rank(left1) != r1 || rank(left2) != r2) return std::nullopt;
    if (rank(right1) != r1 || rank(right2) != r2) return std::nullopt;

    // left1 has full column rank, so left1 nu = left2 has at most one
    // solution; solve() finds it when it exists.
    std::optional<Matrix> nu = solve(left1, left2);
    if (!nu) return std::nullopt;
    std::optional<Matrix> nu_inv = nu->rows() == nu->cols() ? inverse(*nu) : std::nullopt;
    if (!nu_inv) return std::nullopt;
    if (*nu * right2 != right1) return std::nullopt;
    return UniquenessWitness{std::move(*nu), std::move(*nu_inv)};
}

std::optional<UniquenessWitness> uniqueness_witness(const RankFactorization& f,
                                                    const RankFactorization& g) {
    if (f.a.field() != g.a.field())
        throw std::invalid_argument("uniqueness_witness: field mismatch");
    if (f.a != g.a)
        throw std::invalid_argument("uniqueness_witness: factorizations of different matrices");
    return link_factorizations(f.a, f.b, f.c, g.b, g.c);
}

} // namespace corestar
