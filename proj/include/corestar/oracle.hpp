#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corestar/matrix.hpp"
#include "corestar/verify.hpp"

namespace corestar {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// Exhaustive search query: all candidate inverses of a (the candidate
// shape is cols(a) x rows(a)) against one equation system. The matrix
// must live in a prime field and p^(candidate entries) must stay within
// the budget; both are enforced.
struct OracleQuery {
    Matrix a;
    EquationSpec spec;
    std::uint64_t budget = kDefaultOracleBudget;
};

// Every candidate satisfying the system, in lexicographic order of the
// row-major entry tuple. Deterministic.
std::vector<Matrix> enumerate_inverses(const OracleQuery& q);

struct KindTally {
    std::string kind;
    std::uint64_t predicate_true = 0;
    std::uint64_t oracle_nonempty = 0;
    std::uint64_t disagreements = 0;
};

struct AgreementReport {
    std::uint64_t p = 0;
    std::size_t size = 0;
    int n = 2;
    std::uint64_t total = 0;      // matrices swept
    std::vector<KindTally> kinds; // fixed order, one row per comparison
    std::vector<Matrix> disagreeing;
};

// Sweeps every m x m matrix over GF(p), comparing each existence
// predicate against oracle existence, the decomposition and
// factorization-triple verdicts against the coexistence flags, and the
// core / dual-core oracle solution sets (which must be singletons equal
// to the formula outputs, and identical between the five- and
// three-equation systems). The disagreement list must come back empty.
AgreementReport exhaustive_agreement(std::uint64_t p, std::size_t m, int n,
                                     std::uint64_t budget = kDefaultOracleBudget);

// Partition of the sweep over matrix indices [lo, hi); merging ranges in
// index order reproduces the full report exactly.
AgreementReport exhaustive_agreement_range(std::uint64_t p, std::size_t m, int n,
                                           std::uint64_t lo, std::uint64_t hi,
                                           std::uint64_t budget = kDefaultOracleBudget);

AgreementReport merge_agreement(AgreementReport base, const AgreementReport& next);

} // namespace corestar
