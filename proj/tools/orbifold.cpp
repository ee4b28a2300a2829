// Command-line front end for the orbifold library.
//
// Exit codes: 0 when every check passes, 2 for a mathematical failure (a
// PBW condition fails, counts disagree), 1 for usage and I/O errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "orbifold/serialization.hpp"

using namespace orbifold;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;

struct RunConfig {
    int p = 3;
    std::string format = "text";
    unsigned workers = 1;
    std::uint64_t seed = 1;
    int degree = 4;
};

void print_json(Json const& j) { std::cout << j.dump(2) << '\n'; }

std::uint64_t power(int base, int exponent)
{
    std::uint64_t r = 1;
    for (int i = 0; i < exponent; ++i) r *= static_cast<std::uint64_t>(base);
    return r;
}

std::vector<Scalar> parse_d_list(std::string const& text, Prime p)
{
    std::vector<Scalar> d;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (std::exception const&) {
            throw ParseError("d entries must be integers, got \"" + item + "\"", 0);
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw ParseError("d entries must be integers, got \"" + item + "\"", used);
        d.push_back(fp::reduce(value, p.value()));
    }
    return d;
}

int run_enumerate(RunConfig const& cfg, std::string const& mode_name, int spot_checks)
{
    const Prime p(cfg.p);
    EnumerationMode mode;
    if (mode_name == "closed_form")
        mode = EnumerationMode::closed_form;
    else if (mode_name == "brute_force")
        mode = EnumerationMode::brute_force;
    else
        throw Error("--mode must be closed_form or brute_force");

    const auto records = enumerate_solutions(p, mode, cfg.workers);
    const auto rows = census(p);
    const std::size_t total = count_solutions(records);
    const bool count_ok = total == power(p.value(), p.value() + 1);

    bool spot_ok = true;
    std::vector<std::string> spot_failures;
    if (spot_checks > 0) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<std::size_t> pick(0, records.size() - 1);
        for (int s = 0; s < spot_checks; ++s) {
            auto const& r = records[pick(rng)];
            if (r.solutions.empty()) continue;
            std::uniform_int_distribution<std::size_t> which(0, r.solutions.size() - 1);
            auto const& a = r.solutions[which(rng)].a;
            if (!check_all(build_candidate(a, r.b)).passed()) {
                spot_ok = false;
                spot_failures.push_back("b=" + to_string(r.b) + " a=" + to_string(a));
            }
        }
    }

    if (cfg.format == "json") {
        Json j = records_to_json(p, records);
        j["mode"] = mode_name;
        j["census"] = census_to_json(p, rows)["census"];
        j["total"] = total;
        if (spot_checks > 0) j["spot_check"] = Json{{"samples", spot_checks}, {"passed", spot_ok}, {"failures", spot_failures}};
        print_json(j);
    } else if (cfg.format == "csv") {
        write_solutions_csv(std::cout, records);
    } else {
        std::cout << "p = " << p.value() << ", mode = " << mode_name << '\n';
        std::cout << "census (k: b-class size x a-class size per b)\n";
        for (auto const& row : rows)
            std::cout << "  k=" << row.k << ": " << row.b_class_size << " x " << row.a_class_size_per_b << '\n';
        std::cout << "total solutions: " << total << '\n';
        for (auto const& r : records) {
            std::cout << "b = " << to_string(r.b) << " (k=" << r.k << "):";
            for (auto const& s : r.solutions) std::cout << " [" << to_string(s.a) << "]";
            std::cout << '\n';
        }
        if (spot_checks > 0)
            std::cout << "spot check (" << spot_checks << " samples): " << (spot_ok ? "pass" : "FAIL") << '\n';
    }
    return count_ok && spot_ok ? kExitPass : kExitMath;
}

int run_check(RunConfig const& cfg, std::string const& path, bool oracle)
{
    DeformationParams params = [&] {
        if (path == "-") return load_params(std::cin);
        std::ifstream in(path);
        if (!in) throw Error("cannot open " + path);
        return load_params(in);
    }();

    const auto report = check_all(params);
    bool ok = report.passed();
    std::optional<AssociativityResult> assoc;
    std::optional<DimensionResult> dim;
    if (oracle) {
        const auto rules = rules_from_params(params);
        assoc = check_associativity(rules, cfg.degree, cfg.workers);
        dim = check_dimension(rules, cfg.degree);
        ok = ok && assoc->passed && dim->passed;
    }

    if (cfg.format == "json") {
        Json j = to_json(report);
        if (oracle) j["oracle"] = Json{{"degree", cfg.degree}, {"associativity", to_json(*assoc)}, {"dimension", to_json(*dim)}};
        j["passed"] = ok;
        print_json(j);
    } else {
        for (auto const& c : report.conditions) {
            std::cout << "condition " << c.condition << ": " << (c.passed ? "pass" : "FAIL");
            if (!c.note.empty()) std::cout << " (" << c.note << ")";
            std::cout << '\n';
            for (auto const& w : c.witnesses) {
                std::cout << "  witness g^(";
                for (std::size_t t = 0; t < w.group_exponents.size(); ++t) std::cout << (t ? "," : "") << w.group_exponents[t];
                std::cout << ") v(";
                for (std::size_t t = 0; t < w.basis_vectors.size(); ++t) std::cout << (t ? "," : "") << w.basis_vectors[t];
                std::cout << "): residual " << to_string(w.residual) << '\n';
            }
        }
        if (oracle) {
            std::cout << "associativity (D=" << cfg.degree << "): " << (assoc->passed ? "pass" : "FAIL") << ", "
                      << assoc->triples_checked << " triples\n";
            if (assoc->witness)
                std::cout << "  witness (" << to_string(assoc->witness->x) << ")(" << to_string(assoc->witness->y) << ")("
                          << to_string(assoc->witness->z) << "): " << to_string(assoc->witness->left) << " vs "
                          << to_string(assoc->witness->right) << '\n';
            std::cout << "normal-form dimension: " << (dim->passed ? "pass" : "FAIL") << '\n';
        }
        std::cout << (ok ? "PBW: yes" : "PBW: no") << '\n';
    }
    return ok ? kExitPass : kExitMath;
}

int run_table(RunConfig const& cfg)
{
    const Prime p(cfg.p);
    const auto records = enumerate_solutions(p, EnumerationMode::closed_form, cfg.workers);
    const auto rows = solution_table(records);
    if (cfg.format == "json")
        print_json(table_to_json(p, rows));
    else if (cfg.format == "csv")
        write_solutions_csv(std::cout, records);
    else
        write_table_text(std::cout, p, rows);
    return kExitPass;
}

int run_chaincheck(RunConfig const& cfg)
{
    const Prime p(cfg.p);
    const auto report = verify_chain_maps(p, cfg.degree, IotaReading::general, cfg.workers);
    if (cfg.format == "json") {
        print_json(to_json(report));
    } else {
        for (auto const& c : report.checks) {
            std::cout << "n=" << c.degree << "  " << c.identity << ": " << (c.passed ? "pass" : "FAIL");
            if (!c.passed && !c.witness.empty()) {
                std::cout << " at (";
                for (std::size_t t = 0; t < c.witness.size(); ++t) std::cout << (t ? "," : "") << c.witness[t];
                std::cout << ")";
            }
            std::cout << '\n';
        }
        std::cout << (report.passed() ? "all chain-map identities hold" : "chain-map identities FAIL") << '\n';
    }
    return report.passed() ? kExitPass : kExitMath;
}

int run_build(RunConfig const& cfg, std::string const& b_text, std::string const& d_text, std::string const& kappa_c_text,
              std::vector<std::string> const& f_specs)
{
    const Prime p(cfg.p);
    const auto b = parse_element(b_text, p);
    const auto d = parse_d_list(d_text, p);
    const auto kappa_c = parse_element(kappa_c_text, p);
    auto params = closed_form(b, d, kappa_c);
    const auto a = implied_a(b, d);

    CoboundaryData f{GroupAlgebraElement(p), GroupAlgebraElement(p)};
    for (auto const& spec : f_specs) {
        const auto colon = spec.find(':');
        if (colon == std::string::npos) throw Error("--f expects v1:<element> or v2:<element>");
        const std::string which = spec.substr(0, colon);
        const auto value = parse_element(spec.substr(colon + 1), p);
        if (which == "v1")
            f.f1 += value;
        else if (which == "v2")
            f.f2 += value;
        else
            throw Error("--f expects v1:<element> or v2:<element>");
    }
    params = add_coboundary(std::move(params), f);

    if (cfg.format == "json") {
        Json j = to_json(params);
        j["implied_a"] = to_json(a);
        print_json(j);
    } else {
        std::cout << pretty_print(params);
        std::cout << "implied a = " << to_string(a) << '\n';
    }
    return kExitPass;
}

int run_census(RunConfig const& cfg)
{
    const Prime p(cfg.p);
    const auto rows = census(p);
    std::uint64_t total = 0;
    for (auto const& r : rows) total += r.b_class_size * r.a_class_size_per_b;
    if (cfg.format == "json") {
        Json j = census_to_json(p, rows);
        j["total"] = total;
        print_json(j);
    } else if (cfg.format == "csv") {
        std::cout << "k,b_class_size,a_class_size_per_b\n";
        for (auto const& r : rows) std::cout << r.k << ',' << r.b_class_size << ',' << r.a_class_size_per_b << '\n';
    } else {
        for (auto const& r : rows)
            std::cout << "k=" << r.k << ": " << r.b_class_size << " b-values x " << r.a_class_size_per_b << " a-values\n";
        std::cout << "total: " << total << '\n';
    }
    return kExitPass;
}

int run_kernel(RunConfig const& cfg, std::string const& b_text, bool brute)
{
    const Prime p(cfg.p);
    const auto b = parse_element(b_text, p);
    const auto [k, btilde] = gminus1_factor(b);
    const auto basis = kernel_basis(b);
    const auto elements = span(p, basis);
    bool ok = true;
    if (brute) {
        auto sorted = elements;
        std::sort(sorted.begin(), sorted.end());
        ok = sorted == kernel_bruteforce(b);
    }
    if (cfg.format == "json") {
        Json jb = Json::array();
        for (auto const& x : basis) jb.push_back(to_json(x));
        Json je = Json::array();
        for (auto const& x : elements) je.push_back(to_json(x));
        Json j{{"p", p.value()}, {"b", to_json(b)}, {"k", k}, {"btilde", to_json(btilde)}, {"basis", jb}, {"kernel", je}};
        if (brute) j["bruteforce_agrees"] = ok;
        print_json(j);
    } else {
        std::cout << "b = " << to_string(b) << " = (g-1)^" << k << " * (" << to_string(btilde) << ")\n";
        std::cout << "kernel basis:";
        for (auto const& x : basis) std::cout << " [" << to_string(x) << "]";
        std::cout << "\nkernel (" << elements.size() << " elements):";
        for (auto const& x : elements) std::cout << " [" << to_string(x) << "]";
        std::cout << '\n';
        if (brute) std::cout << "brute-force sweep " << (ok ? "agrees" : "DISAGREES") << '\n';
    }
    return ok ? kExitPass : kExitMath;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Drinfeld orbifold algebras for the order-p transvection group"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--p", cfg.p, "odd prime p")->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--workers", cfg.workers, "worker threads for sweeps")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized spot checks")->capture_default_str();
    app.add_option("--degree", cfg.degree, "degree bound (oracle D, chain-map N)")->capture_default_str();

    std::string mode = "closed_form";
    int spot_checks = 0;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate all (a, b) solutions and the class census");
    enumerate->add_option("--mode", mode, "closed_form or brute_force")->capture_default_str();
    enumerate->add_option("--spot-check", spot_checks, "number of random solutions to re-verify with the PBW checker");

    std::string params_path;
    bool oracle = false;
    auto* check = app.add_subcommand("check", "run the PBW conditions on a parameter file");
    check->add_option("params", params_path, "parameter JSON file, or - for stdin")->required();
    check->add_flag("--oracle", oracle, "also run the rewriting oracle up to --degree");

    auto* table = app.add_subcommand("table", "the solution table grouped by b-class");
    auto* chaincheck = app.add_subcommand("chaincheck", "verify the resolution chain maps up to --degree");

    std::string b_text;
    std::string d_text;
    std::string kappa_c_text = "0";
    std::vector<std::string> f_specs;
    auto* build = app.add_subcommand("build", "closed-form parameters from (b, d, kappaC, f)");
    build->add_option("--b", b_text, "b in F_pG, e.g. \"1-g\"")->required();
    build->add_option("--d", d_text, "comma-separated d_1..d_k (k = class of b)");
    build->add_option("--kappaC", kappa_c_text, "kappa^C(v1, v2) in F_pG")->capture_default_str();
    build->add_option("--f", f_specs, "coboundary data v1:<element> or v2:<element> (repeatable)");

    auto* census_cmd = app.add_subcommand("census", "class sizes per (g-1)-adic class");

    bool brute = false;
    std::string kernel_b;
    auto* kernel = app.add_subcommand("kernel", "kernel of phi_b");
    kernel->add_option("--b", kernel_b, "b in F_pG")->required();
    kernel->add_flag("--brute", brute, "cross-check against an exhaustive sweep");

    for (auto* sub : {enumerate, check, table, chaincheck, build, census_cmd, kernel}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enumerate) return run_enumerate(cfg, mode, spot_checks);
        if (*check) return run_check(cfg, params_path, oracle);
        if (*table) return run_table(cfg);
        if (*chaincheck) return run_chaincheck(cfg);
        if (*build) return run_build(cfg, b_text, d_text, kappa_c_text, f_specs);
        if (*census_cmd) return run_census(cfg);
        if (*kernel) return run_kernel(cfg, kernel_b, brute);
    } catch (ParseError const& e) {
        std::cerr << "error: " << e.what() << " (at position " << e.position() << ")\n";
        return kExitUsage;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
