#pragma once

#include <optional>

#include "corestar/factorization.hpp"
#include "corestar/matrix.hpp"

namespace corestar {

// Generalized inverses built on the full-rank factorization A = B C.
// Existence is always decided structurally (rank conditions / solver
// success), never by attempting a formula and catching failure; each
// constructor validates its output against the defining equations and
// throws std::logic_error if they fail, which no reachable input does.

// {1,3}-inverse: A X A = A and (A X)* = A X. Present iff A*B has a left
// inverse; the deterministic witness mu1 gives X = (B mu1)*.
std::optional<Matrix> inv13(const Matrix& a);

// {1,4}-inverse: A X A = A and (X A)* = X A. Present iff C A* has a right
// inverse nu1; X = (nu1 C)*.
std::optional<Matrix> inv14(const Matrix& a);

// Group inverse: A X A = A, X A X = X, A X = X A. Present iff C B is
// invertible; X = B (C B)^-2 C. Throws on non-square input.
std::optional<Matrix> group_inverse(const Matrix& a);

// Moore-Penrose inverse. Present iff B*B and C C* are both invertible;
// X = C* (C C*)^-1 (B*B)^-1 B*.
std::optional<Matrix> mp_inverse(const Matrix& a);

// Core inverse: the unique X with A X A = A, X A X = X, (A X)* = A X,
// A X^2 = X, X A^2 = A. Present iff A*B is left invertible and C B is
// invertible; X = B (C B)^-1 (B*B)^-1 B*. Throws on non-square input.
std::optional<Matrix> core_inverse(const Matrix& a);

// Dual core inverse: (X A)* = X A, X^2 A = X, A^2 X = A (plus A X A = A,
// X A X = X). Present iff C A* is right invertible and C B is invertible;
// X = C* (C C*)^-1 (C B)^-1 C.
std::optional<Matrix> dual_core_inverse(const Matrix& a);

enum class InverseRoute { Core, DualCore };

// Cross-route computation: group # A # {1,3}-inverse composed in that
// order for the core route, and {1,4}-inverse # A # group for the dual
// route. Must agree exactly with core_inverse / dual_core_inverse.
std::optional<Matrix> core_via_composition(const Matrix& a, InverseRoute route);

struct InverseBundle {
    Matrix core;
    Matrix dual_core;
    Matrix mp;
    Matrix group;
};

// All four inverses from the coexistence witnesses mu, nu with
// mu (A*)^n B = I_r = C (A*)^n nu:
//   core      = A^(n-1) mu* B*
//   dual core = C* nu* A^(n-1)
//   mp        = nu C A^(2n-1) mu* B*
//   group     = (A^(n-1) mu* B*)^2 A  ( = A (C* nu* A^(n-1))^2 )
// Absent when either witness does not exist. Outputs do not depend on n
// or on the witness choice. Requires square A and n >= 2.
std::optional<InverseBundle> coexistence_bundle(const Matrix& a, int n);

// Same formulas with caller-supplied witnesses; validates the witness
// identities first. Used to exercise witness-choice invariance.
InverseBundle bundle_from_witnesses(const Matrix& a, int n, const Matrix& mu, const Matrix& nu);

// Boolean outcome of every factorization predicate for one matrix and
// exponent, each evaluated independently.
struct ExistenceProfile {
    int n = 2;
    bool has13 = false;          // A*B left invertible
    bool has14 = false;          // C A* right invertible
    bool has_group = false;      // C B invertible
    bool has_mp = false;         // B*B and C C* invertible
    bool has_core = false;       // has13 && has_group
    bool has_dual_core = false;  // has14 && has_group
    bool cb_invertible = false;
    std::optional<Matrix> mu;    // left inverse of (A*)^n B
    std::optional<Matrix> nu;    // right inverse of C (A*)^n
    bool power_cstar_left_invertible = false;  // A^n C*
    bool bstar_power_right_invertible = false; // B* A^n
};

// Requires square A and n >= 2.
ExistenceProfile existence_profile(const Matrix& a, int n);

} // namespace corestar
