// Command-line front end: compute super Macdonald polynomials, apply charges
// and Hamiltonians, run verification suites, enumerate labels, and exchange
// fixtures as JSON.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "supermac/charges.hpp"
#include "supermac/fixtures.hpp"
#include "supermac/hamiltonians.hpp"
#include "supermac/json_io.hpp"
#include "supermac/verify.hpp"

using namespace supermac;

namespace {

int parse_level2(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) return 2 * std::stoi(text);
    if (text.substr(slash + 1) != "2") throw CLI::ValidationError("level must be n or n/2");
    return std::stoi(text.substr(0, slash));
}

SuperPartition parse_partition(const std::string& text, bool doubled) {
    if (!doubled) return SuperPartition::parse(text);
    std::vector<int> parts2;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty() && tok != "0") parts2.push_back(std::stoi(tok));
    return SuperPartition::validate(std::move(parts2));
}

struct OpSpec {
    bool is_hamiltonian = false;
    int i = 0;
    int mode = 0;  // mode for charges, sign for Hamiltonians
    ChargeId charge_id{Side::E, 1, 0};
};

OpSpec parse_op(const std::string& text) {
    if (text.size() < 4) throw CLI::ValidationError("op spec like E2,0 or H1,-1 expected");
    OpSpec spec;
    char kind = text[0];
    size_t comma = text.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("op spec needs a comma");
    spec.i = std::stoi(text.substr(1, comma - 1));
    spec.mode = std::stoi(text.substr(comma + 1));
    if (kind == 'H' || kind == 'h') {
        spec.is_hamiltonian = true;
        if (spec.mode != 1 && spec.mode != -1)
            throw CLI::ValidationError("Hamiltonians have modes +1 / -1");
    } else if (kind == 'E' || kind == 'e') {
        spec.charge_id = {Side::E, spec.i, spec.mode};
    } else if (kind == 'F' || kind == 'f') {
        spec.charge_id = {Side::F, spec.i, spec.mode};
    } else {
        throw CLI::ValidationError("op spec must start with E, F or H");
    }
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"super Macdonald polynomials and the shifted toroidal charges"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string level_str = "4";
    bool as_json = false;
    bool doubled = false;
    bool quiet = false;
    unsigned seed = 20240916;
    app.add_flag("--json", as_json, "JSON output");
    app.add_flag("--quiet", quiet, "suppress per-item output");
    app.add_option("--max-level", level_str, "level window (n or n/2)");
    app.add_option("--seed", seed, "seed for randomized property checks");

    auto* mac = app.add_subcommand("mac", "print a super Macdonald polynomial");
    std::string mac_part;
    mac->add_option("partition", mac_part, "e.g. 3/2,1/2")->required();
    mac->add_flag("--doubled", doubled, "partition given as doubled integers");

    auto* apply = app.add_subcommand("apply", "apply a charge or Hamiltonian");
    std::string op_spec, on_part;
    bool eigen = false, mac_basis = false;
    apply->add_option("op", op_spec, "E2,0 / F1,1 / H2,-1 ...")->required();
    apply->add_option("--on", on_part, "partition label of M")->required();
    apply->add_flag("--doubled", doubled, "partition given as doubled integers");
    apply->add_flag("--eigen", eigen, "check proportionality and print the eigenvalue");
    apply->add_flag("--mac-basis", mac_basis, "expand the image in the Macdonald basis");

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string suite = "all";
    std::string report_path;
    verify->add_option("suite", suite, "fixtures|anticommutators|commutativity|conjecture6|"
                                       "pieri-cross|tq|finite-n|characters|all");
    verify->add_option("--report", report_path, "write the JSON report to a file");

    auto* enumerate = app.add_subcommand("enumerate", "list super partitions of a level");
    std::string enum_level;
    enumerate->add_option("level", enum_level, "n or n/2")->required();

    auto* fixtures = app.add_subcommand("fixtures", "reference data exchange");
    auto* fx_export = fixtures->add_subcommand("export", "write reference polynomials");
    auto* fx_import = fixtures->add_subcommand("import", "compare a JSON file against "
                                                         "computed polynomials");
    std::string fx_path;
    fx_export->add_option("--out", fx_path, "output file (default stdout)");
    fx_import->add_option("--in", fx_path, "input file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*mac) {
            SuperPartition lam = parse_partition(mac_part, doubled);
            int win2 = std::max(parse_level2(level_str), lam.level2());
            if (lam.level2() > win2) throw std::invalid_argument("window too small");
            const SuperPolynomial& m = macdonald(lam);
            if (as_json)
                std::cout << poly_to_json(m).dump(2) << "\n";
            else
                std::cout << m.to_string() << "\n";
            return 0;
        }
        if (*apply) {
            SuperPartition lam = parse_partition(on_part, doubled);
            OpSpec spec = parse_op(op_spec);
            int win2 = std::max(parse_level2(level_str), lam.level2() + 1);
            const SuperPolynomial& m = macdonald(lam);
            SuperPolynomial img;
            if (spec.is_hamiltonian) {
                img = hamiltonian(spec.i, spec.mode, win2).apply(m);
            } else {
                img = charge(spec.charge_id, win2).apply(m);
            }
            if (eigen) {
                if (!spec.is_hamiltonian)
                    throw CLI::ValidationError("--eigen applies to Hamiltonians");
                Scalar ev = eigenvalue(spec.i, spec.mode, lam);
                bool prop = img == m * ev;
                std::cout << "eigenvalue: " << ev.to_string() << "\n";
                std::cout << (prop ? "proportional: yes" : "proportional: NO") << "\n";
                return prop ? 0 : 1;
            }
            if (mac_basis) {
                if (img.is_zero()) {
                    std::cout << "0\n";
                    return 0;
                }
                std::string out;
                for (const auto& [p, c] : macdonald_expand(img)) {
                    if (!out.empty()) out += " + ";
                    out += "(" + c.to_string() + ") * M[" + p.to_string() + "]";
                }
                std::cout << out << "\n";
                return 0;
            }
            if (as_json)
                std::cout << poly_to_json(img).dump(2) << "\n";
            else
                std::cout << img.to_string() << "\n";
            return 0;
        }
        if (*verify) {
            VerifyOptions opt;
            opt.max_level2 = parse_level2(level_str);
            opt.window_level2 = std::min(opt.max_level2, 6);
            opt.seed = seed;
            VerifyReport report = verify_suite(suite, opt);
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                out << report.to_json().dump(2) << "\n";
            }
            if (as_json) {
                std::cout << report.to_json().dump(2) << "\n";
            } else {
                for (const auto& item : report.items) {
                    if (quiet && item.status == VerifyItem::Status::pass) continue;
                    std::string tag = item.status == VerifyItem::Status::pass     ? "[PASS]"
                                      : item.status == VerifyItem::Status::fail ? "[FAIL]"
                                                                                 : "[SKIP]";
                    std::cout << tag << (item.conjectural ? " [conjectural]" : "") << " "
                              << item.name << "\n";
                    if (item.status == VerifyItem::Status::fail) {
                        std::cout << "       input:    " << item.input << "\n"
                                  << "       expected: " << item.expected << "\n"
                                  << "       got:      " << item.got << "\n";
                    }
                }
                std::cout << report.summary() << "\n";
            }
            return report.ok() ? 0 : 1;
        }
        if (*enumerate) {
            int l2 = parse_level2(enum_level);
            auto list = enumerate_level(l2);
            if (as_json) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& p : list) arr.push_back(p.parts2());
                std::cout << arr.dump() << "\n";
            } else {
                for (const auto& p : list) std::cout << p.to_string() << "\n";
                std::cout << "count: " << list.size() << "\n";
            }
            return 0;
        }
        if (*fixtures) {
            if (*fx_export) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& [p, f] : reference_macdonald())
                    arr.push_back({{"label", p.parts2()}, {"poly", poly_to_json(f)}});
                if (fx_path.empty()) {
                    std::cout << arr.dump(2) << "\n";
                } else {
                    std::ofstream out(fx_path);
                    out << arr.dump(2) << "\n";
                }
                return 0;
            }
            if (*fx_import) {
                std::ifstream in(fx_path);
                if (!in) throw CLI::ValidationError("cannot open " + fx_path);
                nlohmann::json arr = nlohmann::json::parse(in);
                int mismatches = 0;
                for (const auto& entry : arr) {
                    auto parts = entry.at("label").get<std::vector<int>>();
                    SuperPartition lam = SuperPartition::validate(std::move(parts));
                    SuperPolynomial ref = poly_from_json(entry.at("poly"));
                    const SuperPolynomial& got = macdonald(lam);
                    bool same = got == ref;
                    if (!same) ++mismatches;
                    if (!quiet || !same)
                        std::cout << (same ? "[PASS] " : "[FAIL] ") << lam.to_string() << "\n";
                }
                std::cout << (mismatches == 0 ? "all fixtures match"
                                              : std::to_string(mismatches) + " mismatches")
                          << "\n";
                return mismatches == 0 ? 0 : 1;
            }
            std::cerr << "fixtures: need export or import\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
