#include "corestar/geninv.hpp"

#include <stdexcept>

namespace corestar {

namespace {

void require_square(const Matrix& a, const char* op) {
    if (a.rows() != a.cols())
        throw std::invalid_argument(std::string(op) + " requires a square matrix");
}

void require_exponent(int n, const char* op) {
    if (n < 2) throw std::invalid_argument(std::string(op) + " requires n >= 2");
}

void must(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal consistency failure: ") + what);
}

} // namespace

std::optional<Matrix> inv13(const Matrix& a) {
    const RankFactorization f = full_rank_factorize(a);
    const Matrix star_b = a.star() * f.b;
    const std::optional<Matrix> mu1 = left_inverse(star_b);
    if (!mu1) return std::nullopt;
    const Matrix x = (f.b * *mu1).star();
    must(x.star() * a.star() * a == a, "{1,3}: X* A* A = A");
    must((a * x).is_hermitian(), "{1,3}: A X Hermitian");
    must(a * x * a == a, "{1,3}: A X A = A");
    return x;
}

std::optional<Matrix> inv14(const Matrix& a) {
    const RankFactorization f = full_rank_factorize(a);
    const Matrix c_star = f.c * a.star();
    const std::optional<Matrix> nu1 = right_inverse(c_star);
    if (!nu1) return std::nullopt;
    const Matrix x = (*nu1 * f.c).star();
    must(a * a.star() * x.star() == a, "{1,4}: A A* X* = A");
    must((x * a).is_hermitian(), "{1,4}: X A Hermitian");
    must(a * x * a == a, "{1,4}: A X A = A");
    return x;
}

std::optional<Matrix> group_inverse(const Matrix& a) {
    require_square(a, "group_inverse");
    const RankFactorization f = full_rank_factorize(a);
    const std::optional<Matrix> cb_inv = inverse(f.c * f.b);
    if (!cb_inv) return std::nullopt;
    const Matrix x = f.b * *cb_inv * *cb_inv * f.c;
    must(a * x * a == a, "group: A X A = A");
    must(x * a * x == x, "group: X A X = X");
    must(a * x == x * a, "group: A X = X A");
    return x;
}

std::optional<Matrix> mp_inverse(const Matrix& a) {
    const RankFactorization f = full_rank_factorize(a);
    const std::optional<Matrix> gram_b_inv = inverse(f.b.star() * f.b);
    if (!gram_b_inv) return std::nullopt;
    const std::optional<Matrix> gram_c_inv = inverse(f.c * f.c.star());
    if (!gram_c_inv) return std::nullopt;
    const Matrix x = f.c.star() * *gram_c_inv * *gram_b_inv * f.b.star();
    must(a * x * a == a, "mp: A X A = A");
    must(x * a * x == x, "mp: X A X = X");
    must((a * x).is_hermitian(), "mp: A X Hermitian");
    must((x * a).is_hermitian(), "mp: X A Hermitian");
    return x;
}

std::optional<Matrix> core_inverse(const Matrix& a) {
    require_square(a, "core_inverse");
    const RankFactorization f = full_rank_factorize(a);
    if (!left_inverse(a.star() * f.b)) return std::nullopt;
    const std::optional<Matrix> cb_inv = inverse(f.c * f.b);
    if (!cb_inv) return std::nullopt;
    // A*B left invertible forces the Gram matrix B*B to be invertible.
    const std::optional<Matrix> gram_b_inv = inverse(f.b.star() * f.b);
    must(gram_b_inv.has_value(), "core: B*B invertible");
    const Matrix x = f.b * *cb_inv * *gram_b_inv * f.b.star();
    must(a * x * a == a, "core: A X A = A");
    must(x * a * x == x, "core: X A X = X");
    must((a * x).is_hermitian(), "core: A X Hermitian");
    must(a * x * x == x, "core: A X^2 = X");
    must(x * a * a == a, "core: X A^2 = A");
    return x;
}

std::optional<Matrix> dual_core_inverse(const Matrix& a) {
    require_square(a, "dual_core_inverse");
    const RankFactorization f = full_rank_factorize(a);
    if (!right_inverse(f.c * a.star())) return std::nullopt;
    const std::optional<Matrix> cb_inv = inverse(f.c * f.b);
    if (!cb_inv) return std::nullopt;
    const std::optional<Matrix> gram_c_inv = inverse(f.c * f.c.star());
    must(gram_c_inv.has_value(), "dual core: C C* invertible");
    const Matrix x = f.c.star() * *gram_c_inv * *cb_inv * f.c;
    must(a * x * a == a, "dual core: A X A = A");
    must(x * a * x == x, "dual core: X A X = X");
    must((x * a).is_hermitian(), "dual core: X A Hermitian");
    must(x * x * a == x, "dual core: X^2 A = X");
    must(a * a * x == a, "dual core: A^2 X = A");
    return x;
}

std::optional<Matrix> core_via_composition(const Matrix& a, InverseRoute route) {
    require_square(a, "core_via_composition");
    const std::optional<Matrix> group = group_inverse(a);
    if (!group) return std::nullopt;
    if (route == InverseRoute::Core) {
        const std::optional<Matrix> x13 = inv13(a);
        if (!x13) return std::nullopt;
        return *group * a * *x13;
    }
    const std::optional<Matrix> x14 = inv14(a);
    if (!x14) return std::nullopt;
    return *x14 * a * *group;
}

InverseBundle bundle_from_witnesses(const Matrix& a, int n, const Matrix& mu, const Matrix& nu) {
    require_square(a, "bundle_from_witnesses");
    require_exponent(n, "bundle_from_witnesses");
    const RankFactorization f = full_rank_factorize(a);
    const Matrix star_pow = a.star().pow(static_cast<unsigned>(n));
    const Matrix id_r = Matrix::identity(a.field(), f.rank);
    if (mu * (star_pow * f.b) != id_r)
        throw std::invalid_argument("bundle_from_witnesses: mu is not a left inverse of (A*)^n B");
    if ((f.c * star_pow) * nu != id_r)
        throw std::invalid_argument("bundle_from_witnesses: nu is not a right inverse of C (A*)^n");

    const Matrix pow_n1 = a.pow(static_cast<unsigned>(n - 1));
    const Matrix core = pow_n1 * mu.star() * f.b.star();
    const Matrix dual_core = f.c.star() * nu.star() * pow_n1;
    const Matrix mp = nu * f.c * a.pow(static_cast<unsigned>(2 * n - 1)) * mu.star() * f.b.star();
    const Matrix group = core * core * a;
    must(group == a * dual_core * dual_core, "bundle: the two group-inverse routes agree");
    return InverseBundle{core, dual_core, mp, group};
}

std::optional<InverseBundle> coexistence_bundle(const Matrix& a, int n) {
    require_square(a, "coexistence_bundle");
    require_exponent(n, "coexistence_bundle");
    const RankFactorization f = full_rank_factorize(a);
    const Matrix star_pow = a.star().pow(static_cast<unsigned>(n));
    const std::optional<Matrix> mu = left_inverse(star_pow * f.b);
    if (!mu) return std::nullopt;
    const std::optional<Matrix> nu = right_inverse(f.c * star_pow);
    if (!nu) return std::nullopt;
    return bundle_from_witnesses(a, n, *mu, *nu);
}

ExistenceProfile existence_profile(const Matrix& a, int n) {
    require_square(a, "existence_profile");
    require_exponent(n, "existence_profile");
    const RankFactorization f = full_rank_factorize(a);
    const Matrix a_star = a.star();
    const Matrix star_pow = a_star.pow(static_cast<unsigned>(n));
    const Matrix pow_n = a.pow(static_cast<unsigned>(n));

    ExistenceProfile p;
    p.n = n;
    p.has13 = left_inverse(a_star * f.b).has_value();
    p.has14 = right_inverse(f.c * a_star).has_value();
    p.cb_invertible = inverse(f.c * f.b).has_value();
    p.has_group = p.cb_invertible;
    p.has_mp = inverse(f.b.star() * f.b).has_value() && inverse(f.c * f.c.star()).has_value();
    p.has_core = p.has13 && p.has_group;
    p.has_dual_core = p.has14 && p.has_group;
    p.mu = left_inverse(star_pow * f.b);
    p.nu = right_inverse(f.c * star_pow);
    p.power_cstar_left_invertible = left_inverse(pow_n * f.c.star()).has_value();
    p.bstar_power_right_invertible = right_inverse(f.b.star() * pow_n).has_value();
    return p;
}

} // namespace corestar
