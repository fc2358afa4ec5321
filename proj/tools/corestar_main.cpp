// corestar: exact generalized inverses over Q, Q(i) and GF(p).
//
// Exit codes: 0 success, 1 operational failure (bad input, bad flags),
// 2 requested inverse does not exist (reported as JSON, not an error).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "corestar/json_io.hpp"

namespace {

using corestar::EquationSpec;
using corestar::InverseRoute;
using corestar::Matrix;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitAbsent = 2;

Matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
    return corestar::matrix_from_json(j);
}

void emit(const json& j, const std::string& out_path) {
    const std::string text = corestar::dump_canonical(j);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << text;
    }
}

std::set<int> parse_eqs(const std::string& eqs) {
    std::set<int> out;
    std::stringstream ss(eqs);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() != 1 || item[0] < '1' || item[0] > '4')
            throw std::invalid_argument("--eqs expects a comma list drawn from 1,2,3,4");
        out.insert(item[0] - '0');
    }
    return out;
}

std::uint64_t oracle_budget() {
    if (const char* env = std::getenv("CORESTAR_ORACLE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw std::invalid_argument("CORESTAR_ORACLE_BUDGET must be a positive integer");
        return v;
    }
    return corestar::kDefaultOracleBudget;
}

struct Absent {
    std::string reason;
};

// Names the first failing predicate for the requested kind, mirroring the
// structural existence tests.
json invert_json(const Matrix& a, const std::string& kind, int n) {
    auto result = [](const std::optional<Matrix>& x, const std::string& reason) {
        if (!x) throw Absent{reason};
        return json{{"exists", true}, {"inverse", corestar::matrix_to_json(*x)}};
    };
    const corestar::RankFactorization f = corestar::full_rank_factorize(a);
    if (kind == "13")
        return result(corestar::inv13(a), "A*B not left invertible");
    if (kind == "14")
        return result(corestar::inv14(a), "C A* not right invertible");
    if (kind == "group")
        return result(corestar::group_inverse(a), "CB singular");
    if (kind == "mp") {
        if (!corestar::inverse(f.b.star() * f.b)) throw Absent{"B*B singular"};
        return result(corestar::mp_inverse(a), "CC* singular");
    }
    if (kind == "core") {
        if (!corestar::left_inverse(a.star() * f.b)) throw Absent{"A*B not left invertible"};
        return result(corestar::core_inverse(a), "CB singular");
    }
    if (kind == "dualcore") {
        if (!corestar::right_inverse(f.c * a.star())) throw Absent{"C A* not right invertible"};
        return result(corestar::dual_core_inverse(a), "CB singular");
    }
    if (kind == "bundle") {
        if (!corestar::left_inverse(a.star().pow(static_cast<unsigned>(n)) * f.b))
            throw Absent{"(A*)^n B not left invertible"};
        const std::optional<corestar::InverseBundle> b = corestar::coexistence_bundle(a, n);
        if (!b) throw Absent{"C (A*)^n not right invertible"};
        json out = corestar::bundle_to_json(*b);
        out["exists"] = true;
        return out;
    }
    throw std::invalid_argument("unknown inverse kind '" + kind + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generalized inverses over Q, Q(i) and GF(p)"};
    app.require_subcommand(1);

    std::string in_path, x_path, out_path;
    std::string kind = "core", system = "penrose", eqs, mode = "core";
    int n = 2;
    std::uint64_t p = 2;
    std::size_t m = 2;
    bool do_enumerate = false;

    CLI::App* factorize = app.add_subcommand("factorize", "full-rank factorization A = B C");
    factorize->add_option("input", in_path, "matrix JSON file")->required();
    factorize->add_option("-o,--output", out_path, "write result here instead of stdout");

    CLI::App* invert = app.add_subcommand("invert", "compute one generalized inverse");
    invert->add_option("--kind", kind, "13|14|group|mp|core|dualcore|bundle")->required();
    invert->add_option("--n", n, "exponent for the bundle (>= 2)");
    invert->add_option("input", in_path, "matrix JSON file")->required();
    invert->add_option("-o,--output", out_path, "write result here instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "check an equation system on (A, X)");
    verify->add_option("--system", system, "penrose|core5|core3|dual5|dual3|group");
    verify->add_option("--eqs", eqs, "penrose subset, e.g. 1,3 (default 1,2,3,4)");
    verify->add_option("input", in_path, "matrix A JSON file")->required();
    verify->add_option("candidate", x_path, "matrix X JSON file")->required();
    verify->add_option("-o,--output", out_path, "write result here instead of stdout");

    CLI::App* decompose = app.add_subcommand("decompose", "kernel/image decomposition report");
    decompose->add_option("--n", n, "exponent (>= 1)");
    decompose->add_option("input", in_path, "matrix JSON file")->required();
    decompose->add_option("-o,--output", out_path, "write result here instead of stdout");

    CLI::App* triples = app.add_subcommand("triples", "factorization-triple report");
    triples->add_option("--mode", mode, "core|dual")->required();
    triples->add_option("input", in_path, "matrix JSON file")->required();
    triples->add_option("-o,--output", out_path, "write result here instead of stdout");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force ground truth over GF(p)");
    oracle->add_option("--p", p, "field modulus (prime)");
    oracle->add_option("--m", m, "matrix size for the sweep");
    oracle->add_option("--n", n, "exponent (>= 2)");
    oracle->add_flag("--enumerate", do_enumerate, "enumerate inverses of one matrix instead");
    oracle->add_option("--system", system, "equation system for --enumerate");
    oracle->add_option("--eqs", eqs, "penrose subset for --enumerate");
    oracle->add_option("input", in_path, "matrix JSON file (--enumerate only)");
    oracle->add_option("-o,--output", out_path, "write result here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (factorize->parsed()) {
            emit(corestar::factorization_to_json(corestar::full_rank_factorize(load_matrix(in_path))),
                 out_path);
        } else if (invert->parsed()) {
            if (kind == "bundle" && n < 2)
                throw std::invalid_argument("--n must be >= 2 for the bundle");
            emit(invert_json(load_matrix(in_path), kind, n), out_path);
        } else if (verify->parsed()) {
            const EquationSpec spec = EquationSpec::from_name(system, parse_eqs(eqs));
            const Matrix a = load_matrix(in_path);
            const Matrix x = load_matrix(x_path);
            emit(corestar::report_to_json(corestar::check_equations(a, x, spec)), out_path);
        } else if (decompose->parsed()) {
            emit(corestar::decomposition_report_to_json(
                     corestar::check_decompositions(load_matrix(in_path), n)),
                 out_path);
        } else if (triples->parsed()) {
            if (mode != "core" && mode != "dual")
                throw std::invalid_argument("--mode must be core or dual");
            const InverseRoute route = mode == "core" ? InverseRoute::Core : InverseRoute::DualCore;
            emit(corestar::report_to_json(
                     corestar::check_factorization_triples(load_matrix(in_path), route)),
                 out_path);
        } else if (oracle->parsed()) {
            const std::uint64_t budget = oracle_budget();
            if (do_enumerate) {
                if (in_path.empty())
                    throw std::invalid_argument("--enumerate needs a matrix JSON file");
                const EquationSpec spec = EquationSpec::from_name(system, parse_eqs(eqs));
                const std::vector<Matrix> found =
                    corestar::enumerate_inverses({load_matrix(in_path), spec, budget});
                json solutions = json::array();
                for (const Matrix& s : found) solutions.push_back(corestar::matrix_to_json(s));
                emit(json{{"solutions", solutions}}, out_path);
            } else {
                if (n < 2) throw std::invalid_argument("--n must be >= 2 for the sweep");
                emit(corestar::agreement_report_to_json(
                         corestar::exhaustive_agreement(p, m, n, budget)),
                     out_path);
            }
        }
    } catch (const Absent& absent) {
        emit(json{{"exists", false}, {"reason", absent.reason}}, out_path);
        return kExitAbsent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}
