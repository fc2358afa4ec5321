#include "corestar/json_io.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace corestar {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
    json j;
    switch (m.field().kind()) {
    case FieldKind::Rationals: j["field"] = "Q"; break;
    case FieldKind::GaussianRationals: j["field"] = "Qi"; break;
    case FieldKind::PrimeField:
        j["field"] = "GF";
        j["modulus"] = m.field().modulus();
        break;
    }
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("matrix JSON must be an object");
    const std::string field_tag = j.at("field").get<std::string>();
    Field field = Field::rationals();
    if (field_tag == "Q") {
        field = Field::rationals();
    } else if (field_tag == "Qi") {
        field = Field::gaussian_rationals();
    } else if (field_tag == "GF") {
        field = Field::prime(j.at("modulus").get<std::uint64_t>());
    } else {
        throw std::invalid_argument("unknown field tag '" + field_tag + "'");
    }
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw std::invalid_argument("matrix JSON: entries must hold one array per row");
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix JSON: row " + std::to_string(i) +
                                        " must hold " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = Scalar::parse(row[k].get<std::string>(), field);
    }
    return m;
}

json factorization_to_json(const RankFactorization& f) {
    return json{{"B", matrix_to_json(f.b)}, {"C", matrix_to_json(f.c)}};
}

json witness_to_json(const UniquenessWitness& w) {
    return json{{"nu", matrix_to_json(w.nu)}, {"nu_inverse", matrix_to_json(w.nu_inverse)}};
}

json bundle_to_json(const InverseBundle& b) {
    return json{{"core", matrix_to_json(b.core)},
                {"dual_core", matrix_to_json(b.dual_core)},
                {"mp", matrix_to_json(b.mp)},
                {"group", matrix_to_json(b.group)}};
}

json profile_to_json(const ExistenceProfile& p) {
    json j;
    j["n"] = p.n;
    j["has13"] = p.has13;
    j["has14"] = p.has14;
    j["has_group"] = p.has_group;
    j["has_mp"] = p.has_mp;
    j["has_core"] = p.has_core;
    j["has_dual_core"] = p.has_dual_core;
    j["cb_invertible"] = p.cb_invertible;
    j["mu"] = p.mu ? matrix_to_json(*p.mu) : json(nullptr);
    j["nu"] = p.nu ? matrix_to_json(*p.nu) : json(nullptr);
    j["power_cstar_left_invertible"] = p.power_cstar_left_invertible;
    j["bstar_power_right_invertible"] = p.bstar_power_right_invertible;
    return j;
}

namespace {

json check_to_json(const EquationCheck& c) {
    json j;
    j["check"] = c.name;
    j["pass"] = c.pass;
    if (c.residual) j["residual"] = matrix_to_json(*c.residual);
    if (!c.bases.empty()) {
        json b;
        for (const auto& [name, mat] : c.bases) b[name] = matrix_to_json(mat);
        j["bases"] = std::move(b);
    }
    return j;
}

} // namespace

json report_to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    return json{{"checks", std::move(checks)}, {"overall", r.overall()}};
}

json decomposition_report_to_json(const DecompositionReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    return json{{"n", r.n},
                {"checks", std::move(checks)},
                {"verdict", r.verdict},
                {"flag", r.geninv_flag},
                {"flag_name", r.flag_name}};
}

json agreement_report_to_json(const AgreementReport& r) {
    json kinds = json::array();
    for (const auto& k : r.kinds)
        kinds.push_back(json{{"kind", k.kind},
                             {"predicate_true", k.predicate_true},
                             {"oracle_nonempty", k.oracle_nonempty},
                             {"disagreements", k.disagreements}});
    json disagreeing = json::array();
    for (const auto& m : r.disagreeing) disagreeing.push_back(matrix_to_json(m));
    return json{{"p", r.p},        {"m", r.size},
                {"n", r.n},        {"total", r.total},
                {"kinds", kinds},  {"disagreeing", disagreeing}};
}

std::string dump_canonical(const json& j) {
    return j.dump(2) + "\n";
}

} // namespace corestar
