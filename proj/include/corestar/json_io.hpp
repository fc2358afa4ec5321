#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "corestar/factorization.hpp"
#include "corestar/geninv.hpp"
#include "corestar/matrix.hpp"
#include "corestar/oracle.hpp"
#include "corestar/verify.hpp"

namespace corestar {

// Matrix wire format:
//   {"field": "Q" | "Qi" | "GF", "modulus": p (GF only),
//    "rows": m, "cols": n, "entries": [[scalar texts, row-major]]}
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json factorization_to_json(const RankFactorization& f);
nlohmann::json witness_to_json(const UniquenessWitness& w);
nlohmann::json bundle_to_json(const InverseBundle& b);
nlohmann::json profile_to_json(const ExistenceProfile& p);
nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json decomposition_report_to_json(const DecompositionReport& r);
nlohmann::json agreement_report_to_json(const AgreementReport& r);

// Sorted keys, two-space indent, trailing newline: the byte-deterministic
// form used by the CLI and golden files.
std::string dump_canonical(const nlohmann::json& j);

} // namespace corestar
