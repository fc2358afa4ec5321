#include "corestar/verify.hpp"

#include <stdexcept>

namespace corestar {

EquationSpec EquationSpec::penrose(std::set<int> equations) {
    if (equations.empty()) throw std::invalid_argument("penrose subset must be nonempty");
    for (int e : equations)
        if (e < 1 || e > 4) throw std::invalid_argument("penrose equations are numbered 1..4");
    EquationSpec s(SystemKind::PenroseSubset);
    s.penrose_ = std::move(equations);
    return s;
}

EquationSpec EquationSpec::from_name(std::string_view name, const std::set<int>& equations) {
    if (name == "penrose") return penrose(equations.empty() ? std::set<int>{1, 2, 3, 4} : equations);
    if (name == "core5") return core_five();
    if (name == "core3") return core_three();
    if (name == "dual5") return dual_five();
    if (name == "dual3") return dual_three();
    if (name == "group") return group_system();
    throw std::invalid_argument("unknown equation system '" + std::string(name) + "'");
}

std::string EquationSpec::name() const {
    switch (system_) {
    case SystemKind::PenroseSubset: {
        std::string out = "penrose{";
        bool first = true;
        for (int e : penrose_) {
            if (!first) out += ',';
            out += std::to_string(e);
            first = false;
        }
        return out + "}";
    }
    case SystemKind::CoreFive: return "core5";
    case SystemKind::CoreThree: return "core3";
    case SystemKind::DualFive: return "dual5";
    case SystemKind::DualThree: return "dual3";
    case SystemKind::GroupSystem: return "group";
    }
    return "?";
}

namespace {

EquationCheck equal_check(std::string name, const Matrix& lhs, const Matrix& rhs) {
    EquationCheck c;
    c.name = std::move(name);
    c.pass = lhs == rhs;
    if (!c.pass) c.residual = lhs - rhs;
    return c;
}

} // namespace

VerificationReport check_equations(const Matrix& a, const Matrix& x, const EquationSpec& spec) {
    if (a.field() != x.field())
        throw std::invalid_argument("check_equations: field mismatch");
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw std::invalid_argument("check_equations: X must be " + std::to_string(a.cols()) +
                                    "x" + std::to_string(a.rows()));
    if (spec.needs_square() && a.rows() != a.cols())
        throw std::invalid_argument("check_equations: system '" + spec.name() +
                                    "' requires a square matrix");

    VerificationReport rep;
    auto add = [&](std::string name, const Matrix& lhs, const Matrix& rhs) {
        rep.checks.push_back(equal_check(std::move(name), lhs, rhs));
    };
    const Matrix ax = a * x;
    const Matrix xa = x * a;

    switch (spec.system()) {
    case SystemKind::PenroseSubset:
        for (int e : spec.penrose_set()) {
            switch (e) {
            case 1: add("A X A = A", ax * a, a); break;
            case 2: add("X A X = X", xa * x, x); break;
            case 3: add("(A X)* = A X", ax.star(), ax); break;
            case 4: add("(X A)* = X A", xa.star(), xa); break;
            }
        }
        break;
    case SystemKind::CoreFive:
        add("A X A = A", ax * a, a);
        add("X A X = X", xa * x, x);
        add("(A X)* = A X", ax.star(), ax);
        add("A X^2 = X", ax * x, x);
        add("X A^2 = A", xa * a, a);
        break;
    case SystemKind::CoreThree:
        add("(A X)* = A X", ax.star(), ax);
        add("A X^2 = X", ax * x, x);
        add("X A^2 = A", xa * a, a);
        break;
    case SystemKind::DualFive:
        add("A X A = A", ax * a, a);
        add("X A X = X", xa * x, x);
        add("(X A)* = X A", xa.star(), xa);
        add("X^2 A = X", x * xa, x);
        add("A^2 X = A", a * ax, a);
        break;
    case SystemKind::DualThree:
        add("(X A)* = X A", xa.star(), xa);
        add("X^2 A = X", x * xa, x);
        add("A^2 X = A", a * ax, a);
        break;
    case SystemKind::GroupSystem:
        add("A X A = A", ax * a, a);
        add("X A X = X", xa * x, x);
        add("A X = X A", ax, xa);
        break;
    }
    return rep;
}

VerificationReport check_factorization_triples(const Matrix& a, InverseRoute route) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("check_factorization_triples requires a square matrix");
    const RankFactorization f = full_rank_factorize(a);
    const Matrix a_star = a.star();
    const std::size_t r = f.rank;

    struct Candidate {
        std::string label;
        Matrix left;
        Matrix right;
    };
    Matrix target(a.field(), a.rows(), a.cols());
    std::vector<Candidate> cand;
    if (route == InverseRoute::Core) {
        target = a_star * a_star * a;
        cand.push_back({"(A*)^2 B | C", a_star * a_star * f.b, f.c});
        cand.push_back({"C* | B* A* A", f.c.star(), f.b.star() * a_star * a});
        cand.push_back({"A* C* | B* A", a_star * f.c.star(), f.b.star() * a});
    } else {
        target = a * a_star * a_star;
        cand.push_back({"B | C (A*)^2", f.b, f.c * a_star * a_star});
        cand.push_back({"A A* C* | B*", a * a_star * f.c.star(), f.b.star()});
        cand.push_back({"A C* | B* A*", a * f.c.star(), f.b.star() * a_star});
    }

    VerificationReport rep;
    for (const Candidate& k : cand) {
        rep.checks.push_back(equal_check("product[" + k.label + "] = target", k.left * k.right, target));
        EquationCheck epic;
        epic.name = "epic[" + k.label + "]";
        epic.pass = rank(k.left) == r && k.left.cols() == r;
        rep.checks.push_back(std::move(epic));
        EquationCheck monic;
        monic.name = "monic[" + k.label + "]";
        monic.pass = rank(k.right) == r && k.right.rows() == r;
        rep.checks.push_back(std::move(monic));
    }
    for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
            EquationCheck w;
            w.name = "witness[" + cand[i].label + " ~ " + cand[j].label + "]";
            std::optional<UniquenessWitness> nu =
                link_factorizations(target, cand[i].left, cand[i].right, cand[j].left, cand[j].right);
            w.pass = nu.has_value();
            if (nu) {
                w.bases.emplace_back("nu", nu->nu);
                w.bases.emplace_back("nu_inverse", nu->nu_inverse);
            }
            rep.checks.push_back(std::move(w));
        }
    return rep;
}

namespace {

Matrix row_space_basis(const Matrix& m) { return subspace_report(m).row_basis; }
Matrix left_null_basis(const Matrix& m) { return subspace_report(m).left_null_basis; }
// Column-action subspaces carried to row form through the involution.
Matrix col_space_basis(const Matrix& m) { return row_space_basis(m.star()); }
Matrix right_null_basis(const Matrix& m) { return left_null_basis(m.star()); }

} // namespace

DecompositionReport check_decompositions(const Matrix& a, int n) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("check_decompositions requires a square matrix");
    if (n < 1) throw std::invalid_argument("check_decompositions requires n >= 1");
    const std::size_t m = a.rows();
    const unsigned un = static_cast<unsigned>(n);
    const Matrix a_star = a.star();
    const Matrix pow_n = a.pow(un);
    const Matrix star_pow = a_star.pow(un);

    DecompositionReport rep;
    rep.n = n;

    auto add_equal = [&](std::string name, const Matrix& lhs_mat, const Matrix& rhs_mat,
                         bool null_side) {
        EquationCheck c;
        c.name = std::move(name);
        const Matrix lhs = null_side ? left_null_basis(lhs_mat) : row_space_basis(lhs_mat);
        const Matrix rhs = null_side ? left_null_basis(rhs_mat) : row_space_basis(rhs_mat);
        c.pass = lhs == rhs; // both RREF-canonical
        c.bases.emplace_back("lhs", lhs);
        c.bases.emplace_back("rhs", rhs);
        rep.checks.push_back(std::move(c));
    };
    auto add_vacuous = [&](std::string name, const Matrix& basis) {
        EquationCheck c;
        c.name = std::move(name);
        c.pass = true; // every subspace of a vector space is a direct summand
        c.bases.emplace_back("subspace", basis);
        rep.checks.push_back(std::move(c));
    };
    auto add_sum = [&](std::string name, const Matrix& first, const Matrix& second) {
        EquationCheck c;
        c.name = std::move(name);
        c.pass = is_direct_sum(first, second, m);
        c.bases.emplace_back("first", first);
        c.bases.emplace_back("second", second);
        rep.checks.push_back(std::move(c));
    };

    add_equal("im((A*)^n A) = im(A)", star_pow * a, a, false);
    add_equal("ker(A (A*)^n) = ker(A)", a * star_pow, a, true);
    add_vacuous("ker((A*)^n A) is a direct summand (automatic over a field)",
                left_null_basis(star_pow * a));
    add_vacuous("im(A (A*)^n) is a direct summand (automatic over a field)",
                row_space_basis(a * star_pow));

    add_equal("im(A^n A*) = im(A*)", pow_n * a_star, a_star, false);
    add_equal("ker(A* A^n) = ker(A*)", a_star * pow_n, a_star, true);
    add_vacuous("ker(A^n A*) is a direct summand (automatic over a field)",
                left_null_basis(pow_n * a_star));
    add_vacuous("im(A* A^n) is a direct summand (automatic over a field)",
                row_space_basis(a_star * pow_n));

    add_sum("ker(A) (+) im((A*)^n) = M", left_null_basis(a), row_space_basis(star_pow));
    add_sum("ker((A*)^n) (+) im(A) = M", left_null_basis(star_pow), row_space_basis(a));
    add_sum("ker(A*) (+) im(A^n) = M", left_null_basis(a_star), row_space_basis(pow_n));
    add_sum("ker(A^n) (+) im(A*) = M", left_null_basis(pow_n), row_space_basis(a_star));

    // Ring form: left/right annihilators and one-sided ideals of a matrix
    // ring element, realized on row vectors through the involution.
    add_sum("leftann(A) (+) row((A*)^n) = R", left_null_basis(a), row_space_basis(star_pow));
    add_sum("leftann((A*)^n) (+) row(A) = R", left_null_basis(star_pow), row_space_basis(a));
    add_sum("rightann(A*) (+) col(A^n) = R", right_null_basis(a_star), col_space_basis(pow_n));
    add_sum("rightann(A^n) (+) col(A*) = R", right_null_basis(pow_n), col_space_basis(a_star));
    add_sum("leftann(A*) (+) row(A^n) = R", left_null_basis(a_star), row_space_basis(pow_n));
    add_sum("leftann(A^n) (+) row(A*) = R", left_null_basis(pow_n), row_space_basis(a_star));
    add_sum("rightann(A) (+) col((A*)^n) = R", right_null_basis(a), col_space_basis(star_pow));
    add_sum("rightann((A*)^n) (+) col(A) = R", right_null_basis(star_pow), col_space_basis(a));

    bool verdict = true;
    for (const auto& c : rep.checks) verdict = verdict && c.pass;
    rep.verdict = verdict;

    if (n >= 2) {
        const ExistenceProfile p = existence_profile(a, n);
        rep.geninv_flag = p.has_core && p.has_dual_core;
        rep.flag_name = "has_core && has_dual_core";
    } else {
        rep.geninv_flag = mp_inverse(a).has_value();
        rep.flag_name = "has_mp";
    }
    return rep;
}

} // namespace corestar
