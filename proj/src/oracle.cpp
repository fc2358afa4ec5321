#include "corestar/oracle.hpp"

#include <stdexcept>

#include "corestar/geninv.hpp"

namespace corestar {

namespace {

// p^k with an overflow-safe budget comparison.
bool within_budget(std::uint64_t p, std::size_t k, std::uint64_t budget, std::uint64_t* out) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (v > budget / p) return false;
        v *= p;
    }
    *out = v;
    return true;
}

// Writes the base-p digits of index into the entries of an e-entry
// matrix, row-major, first entry most significant.
Matrix matrix_from_index(const Field& field, std::size_t rows, std::size_t cols,
                         std::uint64_t index) {
    const std::uint64_t p = field.modulus();
    Matrix m(field, rows, cols);
    for (std::size_t k = rows * cols; k-- > 0;) {
        const std::uint64_t digit = index % p;
        index /= p;
        m.at(k / cols, k % cols) = Scalar::from_integer(field, static_cast<long>(digit));
    }
    return m;
}

bool satisfies(const Matrix& a, const Matrix& x, const EquationSpec& spec) {
    return check_equations(a, x, spec).overall();
}

} // namespace

std::vector<Matrix> enumerate_inverses(const OracleQuery& q) {
    if (q.a.field().kind() != FieldKind::PrimeField)
        throw std::invalid_argument("enumerate_inverses requires a prime-field matrix");
    const std::uint64_t p = q.a.field().modulus();
    const std::size_t entries = q.a.rows() * q.a.cols();
    std::uint64_t count = 0;
    if (!within_budget(p, entries, q.budget, &count))
        throw std::invalid_argument("oracle budget exceeded: p^" + std::to_string(entries) +
                                    " candidates > " + std::to_string(q.budget));
    std::vector<Matrix> found;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Matrix x = matrix_from_index(q.a.field(), q.a.cols(), q.a.rows(), idx);
        if (satisfies(q.a, x, q.spec)) found.push_back(std::move(x));
    }
    return found;
}

namespace {

struct SweepChecks {
    bool ok = true;

    void compare(KindTally& tally, bool predicate, bool oracle) {
        if (predicate) ++tally.predicate_true;
        if (oracle) ++tally.oracle_nonempty;
        if (predicate != oracle) {
            ++tally.disagreements;
            ok = false;
        }
    }
};

enum TallyRow {
    kRow13 = 0,
    kRow14,
    kRowGroup,
    kRowMp,
    kRowCore,
    kRowDualCore,
    kRowDecompositions,
    kRowTriplesCore,
    kRowTriplesDual,
    kRowCount
};

std::vector<KindTally> empty_tallies() {
    static const char* names[kRowCount] = {"13",   "14",          "group",
                                           "mp",   "core",        "dual_core",
                                           "decompositions", "triples_core", "triples_dual"};
    std::vector<KindTally> rows(kRowCount);
    for (int i = 0; i < kRowCount; ++i) rows[i].kind = names[i];
    return rows;
}

} // namespace

AgreementReport exhaustive_agreement_range(std::uint64_t p, std::size_t m, int n,
                                           std::uint64_t lo, std::uint64_t hi,
                                           std::uint64_t budget) {
    const Field field = Field::prime(p);
    const std::size_t entries = m * m;
    std::uint64_t matrices = 0;
    std::uint64_t candidates = 0;
    // Precondition: the full sweep (matrices x candidates) fits the budget.
    if (!within_budget(p, entries, budget, &matrices) ||
        !within_budget(p, entries, budget / matrices, &candidates))
        throw std::invalid_argument("oracle budget exceeded for p=" + std::to_string(p) +
                                    ", m=" + std::to_string(m));
    if (hi > matrices) throw std::invalid_argument("sweep range beyond matrix count");

    AgreementReport rep;
    rep.p = p;
    rep.size = m;
    rep.n = n;
    rep.kinds = empty_tallies();

    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const Matrix a = matrix_from_index(field, m, m, idx);
        ++rep.total;

        const ExistenceProfile prof = existence_profile(a, n);
        auto solutions = [&](const EquationSpec& spec) {
            return enumerate_inverses({a, spec, budget});
        };
        const bool o13 = !solutions(EquationSpec::penrose({1, 3})).empty();
        const bool o14 = !solutions(EquationSpec::penrose({1, 4})).empty();
        const bool ogroup = !solutions(EquationSpec::group_system()).empty();
        const bool omp = !solutions(EquationSpec::penrose({1, 2, 3, 4})).empty();
        const std::vector<Matrix> core3 = solutions(EquationSpec::core_three());
        const std::vector<Matrix> core5 = solutions(EquationSpec::core_five());
        const std::vector<Matrix> dual3 = solutions(EquationSpec::dual_three());
        const std::vector<Matrix> dual5 = solutions(EquationSpec::dual_five());

        SweepChecks checks;
        checks.compare(rep.kinds[kRow13], prof.has13, o13);
        checks.compare(rep.kinds[kRow14], prof.has14, o14);
        checks.compare(rep.kinds[kRowGroup], prof.has_group, ogroup);
        checks.compare(rep.kinds[kRowMp], prof.has_mp, omp);
        checks.compare(rep.kinds[kRowCore], prof.has_core, !core3.empty());
        checks.compare(rep.kinds[kRowDualCore], prof.has_dual_core, !dual3.empty());

        // Ground-truth facts about the solution sets themselves: the
        // five- and three-equation systems agree, and solutions are
        // unique and equal to the formula outputs.
        bool sets_ok = core3 == core5 && dual3 == dual5 && core3.size() <= 1 && dual3.size() <= 1;
        if (!core3.empty()) {
            const std::optional<Matrix> formula = core_inverse(a);
            sets_ok = sets_ok && formula && *formula == core3.front();
        }
        if (!dual3.empty()) {
            const std::optional<Matrix> formula = dual_core_inverse(a);
            sets_ok = sets_ok && formula && *formula == dual3.front();
        }
        if (!sets_ok) {
            ++rep.kinds[kRowCore].disagreements;
            checks.ok = false;
        }

        const bool coexist = prof.has_core && prof.has_dual_core;
        checks.compare(rep.kinds[kRowDecompositions], check_decompositions(a, n).verdict, coexist);
        checks.compare(rep.kinds[kRowTriplesCore],
                       check_factorization_triples(a, InverseRoute::Core).overall(), prof.has_core);
        checks.compare(rep.kinds[kRowTriplesDual],
                       check_factorization_triples(a, InverseRoute::DualCore).overall(),
                       prof.has_dual_core);

        if (!checks.ok) rep.disagreeing.push_back(a);
    }
    return rep;
}

AgreementReport exhaustive_agreement(std::uint64_t p, std::size_t m, int n,
                                     std::uint64_t budget) {
    std::uint64_t matrices = 0;
    if (!within_budget(p, m * m, budget, &matrices))
        throw std::invalid_argument("oracle budget exceeded for p=" + std::to_string(p) +
                                    ", m=" + std::to_string(m));
    return exhaustive_agreement_range(p, m, n, 0, matrices, budget);
}

AgreementReport merge_agreement(AgreementReport base, const AgreementReport& next) {
    if (base.p != next.p || base.size != next.size || base.n != next.n)
        throw std::invalid_argument("merge_agreement: mismatched sweep parameters");
    if (base.kinds.size() != next.kinds.size())
        throw std::invalid_argument("merge_agreement: mismatched tallies");
    base.total += next.total;
    for (std::size_t i = 0; i < base.kinds.size(); ++i) {
        if (base.kinds[i].kind != next.kinds[i].kind)
            throw std::invalid_argument("merge_agreement: mismatched tally order");
        base.kinds[i].predicate_true += next.kinds[i].predicate_true;
        base.kinds[i].oracle_nonempty += next.kinds[i].oracle_nonempty;
        base.kinds[i].disagreements += next.kinds[i].disagreements;
    }
    base.disagreeing.insert(base.disagreeing.end(), next.disagreeing.begin(),
                            next.disagreeing.end());
    return base;
}

} // namespace corestar
