#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corestar/geninv.hpp"
#include "corestar/matrix.hpp"

namespace corestar {

enum class SystemKind { PenroseSubset, CoreFive, CoreThree, DualFive, DualThree, GroupSystem };

// Selects one of the defining equation systems:
//   penrose subset of (1) A X A = A, (2) X A X = X, (3) (A X)* = A X,
//                     (4) (X A)* = X A
//   core5  = (1),(2),(3), A X^2 = X, X A^2 = A
//   core3  = (3), A X^2 = X, X A^2 = A          (the reduced system)
//   dual5  = (1),(2),(4), X^2 A = X, A^2 X = A
//   dual3  = (4), X^2 A = X, A^2 X = A
//   group  = (1),(2), A X = X A
class EquationSpec {
public:
    // Subset must be a nonempty subset of {1,2,3,4}.
    static EquationSpec penrose(std::set<int> equations);
    static EquationSpec core_five() { return EquationSpec(SystemKind::CoreFive); }
    static EquationSpec core_three() { return EquationSpec(SystemKind::CoreThree); }
    static EquationSpec dual_five() { return EquationSpec(SystemKind::DualFive); }
    static EquationSpec dual_three() { return EquationSpec(SystemKind::DualThree); }
    static EquationSpec group_system() { return EquationSpec(SystemKind::GroupSystem); }
    // "penrose" (uses equations), "core5", "core3", "dual5", "dual3", "group".
    static EquationSpec from_name(std::string_view name, const std::set<int>& equations = {});

    SystemKind system() const { return system_; }
    const std::set<int>& penrose_set() const { return penrose_; }
    // Whether the system constrains X to be square-compatible (X and A square).
    bool needs_square() const { return system_ != SystemKind::PenroseSubset; }
    std::string name() const;

private:
    explicit EquationSpec(SystemKind system) : system_(system) {}

    SystemKind system_;
    std::set<int> penrose_;
};

struct EquationCheck {
    std::string name;
    bool pass = false;
    std::optional<Matrix> residual; // left side minus right side, on failure
    std::vector<std::pair<std::string, Matrix>> bases; // named witness/basis matrices
};

struct VerificationReport {
    std::vector<EquationCheck> checks;

    bool overall() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Checks each equation of the system by exact matrix equality. X must be
// n x m for an m x n A (and A square for the core/dual/group systems);
// throws std::invalid_argument otherwise.
VerificationReport check_equations(const Matrix& a, const Matrix& x, const EquationSpec& spec);

// Builds the three candidate factorizations of (A*)^2 A (core route) or
// A (A*)^2 (dual route) from the standard factorization A = B C, checks
// products, epic/monic ranks, and pairwise uniqueness witnesses. The
// overall verdict is true exactly when the core (resp. dual core) inverse
// exists. Throws on non-square input.
VerificationReport check_factorization_triples(const Matrix& a, InverseRoute route);

// Row-vector action throughout: im = row space, ker = left null space.
struct DecompositionReport {
    int n = 1;
    std::vector<EquationCheck> checks;
    bool verdict = false;      // conjunction of all checks
    bool geninv_flag = false;  // the flag named below, for comparison
    std::string flag_name;     // "has_core && has_dual_core" (n >= 2) or "has_mp" (n == 1)
};

// Subspace equalities and direct-sum decompositions for the given
// exponent. n >= 2 ties the verdict to core/dual-core coexistence; n = 1
// is allowed solely for the Moore-Penrose case. Direct-summand conditions
// are vacuous over a field and are reported as such.
DecompositionReport check_decompositions(const Matrix& a, int n);

} // namespace corestar
