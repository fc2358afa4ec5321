#pragma once

#include <optional>

#include "corestar/matrix.hpp"

namespace corestar {

// Full-rank factorization A = B C through the inner dimension r = rank(A).
// Under the row-vector action B (m x r, full column rank) is the epic
// factor and C (r x n, full row rank) the monic one. Rank 0 yields empty
// B and C, which keeps every downstream Gram and C*B formula total.
struct RankFactorization {
    Matrix a;
    Matrix b;
    Matrix c;
    std::size_t rank;
};

// Deterministic construction: C = nonzero rows of rref(A), B = columns of
// A at the pivot positions.
RankFactorization full_rank_factorize(const Matrix& a);

// Invertible nu linking two factorizations of the same matrix:
// B nu = B' and nu C' = C.
struct UniquenessWitness {
    Matrix nu;
    Matrix nu_inverse;
};

// Builds the witness between (left1, right1) and (left2, right2) as
// candidate factorizations of target. Validates rather than trusts:
// products, epic/monic ranks and the witness equations are all checked,
// and absent is returned on any failure.
std::optional<UniquenessWitness> link_factorizations(const Matrix& target, const Matrix& left1,
                                                     const Matrix& right1, const Matrix& left2,
                                                     const Matrix& right2);

// Witness between two factorizations of the same matrix. Throws
// std::invalid_argument when the underlying matrices (or fields) differ.
std::optional<UniquenessWitness> uniqueness_witness(const RankFactorization& f,
                                                    const RankFactorization& g);

} // namespace corestar
