// Command-line front end: every subcommand reads JSON (or CSV point clouds)
// and prints JSON on stdout.

#include <chromgh/cech.hpp>
#include <chromgh/constraints.hpp>
#include <chromgh/error.hpp>
#include <chromgh/fixtures.hpp>
#include <chromgh/gromov_hausdorff.hpp>
#include <chromgh/invariants.hpp>
#include <chromgh/io.hpp>
#include <chromgh/persistence.hpp>
#include <chromgh/stability.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace chromgh;
using io::json;

namespace {

ColorSet parse_color_list(const std::string& s) {
    ColorSet out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            out.insert(static_cast<Color>(v));
        } catch (const std::exception&) {
            throw ParseError(1, "bad color list '" + s + "'");
        }
    }
    return out;
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) std::cout << io::dump(j);
    else io::write_file(out, io::dump(j));
}

json invariants_json(const InvariantRecord& r) {
    json local = json::object(), ecc = json::object(), sep = json::object();
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        const auto key = std::to_string(r.points[i]);
        local[key] = r.local[i];
        ecc[key] = r.ecc[i];
        sep[key] = r.sep[i];
    }
    return {{"sigma", io::color_set_to_json(r.sigma)}, {"tau", io::color_set_to_json(r.tau)},
            {"local", local},       {"distance_set", r.distance_set},
            {"ecc", ecc},           {"sep", sep},
            {"ecc_set", r.ecc_set}, {"sep_set", r.sep_set},
            {"radius", r.radius},   {"dist", r.dist}};
}

json family_json(const ColorFamily& f) {
    json out = json::array();
    for (const auto& s : f) out.push_back(io::color_set_to_json(s));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained Gromov-Hausdorff distances and chromatic persistence"};
    app.require_subcommand(1);
    std::string out;

    auto* validate = app.add_subcommand("validate", "Validate a chromatic pair and summarize it");
    std::string pair_path;
    validate->add_option("pair", pair_path, "Pair file (.json or .csv)")->required()->check(CLI::ExistingFile);
    validate->add_option("--out", out, "Output file");

    auto* constraints = app.add_subcommand("constraints", "Sigma family, topology and strength comparison");
    std::string c_path, compare_path;
    constraints->add_option("--C", c_path, "Constraint set file")->required()->check(CLI::ExistingFile);
    constraints->add_option("--compare", compare_path, "Second constraint set to compare against")
        ->check(CLI::ExistingFile);
    constraints->add_option("--out", out, "Output file");

    auto* invariants = app.add_subcommand("invariants", "Distance invariants of a sigma class against a tau class");
    std::string sigma_s, tau_s;
    invariants->add_option("pair", pair_path, "Pair file")->required()->check(CLI::ExistingFile);
    invariants->add_option("--sigma", sigma_s, "Comma-separated colors")->required();
    invariants->add_option("--tau", tau_s, "Comma-separated colors")->required();
    invariants->add_option("--out", out, "Output file");

    auto* gh = app.add_subcommand("gh", "Bounds and exact value of the constrained distance");
    std::string a_path, b_path;
    std::uint64_t budget = kDefaultNodeBudget;
    gh->add_option("--C", c_path, "Constraint set file (default: universe only)")->check(CLI::ExistingFile);
    gh->add_option("a", a_path, "First pair")->required()->check(CLI::ExistingFile);
    gh->add_option("b", b_path, "Second pair")->required()->check(CLI::ExistingFile);
    gh->add_option("--budget", budget, "Node budget of the exact search");
    gh->add_option("--out", out, "Output file");

    auto* cech = app.add_subcommand("cech", "Ambient Cech filtration or its gamma-subfiltration");
    int max_dim = 1;
    std::string gamma_path, lambda_path;
    cech->add_option("pair", pair_path, "Pair file")->required()->check(CLI::ExistingFile);
    cech->add_option("--max-dim", max_dim, "Largest simplex dimension");
    cech->add_option("--gamma", gamma_path, "Pattern complex file")->check(CLI::ExistingFile);
    cech->add_option("--out", out, "Output file");

    auto* six = app.add_subcommand("sixpack", "Six persistence diagrams of lambda inside gamma");
    int degree = 0;
    six->add_option("pair", pair_path, "Pair file")->required()->check(CLI::ExistingFile);
    six->add_option("--lambda", lambda_path, "Subcomplex file")->required()->check(CLI::ExistingFile);
    six->add_option("--gamma", gamma_path, "Complex file")->required()->check(CLI::ExistingFile);
    six->add_option("--degree", degree, "Homological degree")->required();
    six->add_option("--out", out, "Directory for dom/cod/img/ker/cok/rel .json files");

    auto* bn = app.add_subcommand("bottleneck", "Bottleneck distance between two diagrams");
    bn->add_option("d1", a_path, "First diagram")->required()->check(CLI::ExistingFile);
    bn->add_option("d2", b_path, "Second diagram")->required()->check(CLI::ExistingFile);
    bn->add_option("--out", out, "Output file");

    auto* gen = app.add_subcommand("gen-example", "Emit a discretized example pair");
    std::string name;
    ExampleParams params;
    gen->add_option("name", name, "Example name")->required();
    gen->add_option("--r", params.r, "Length scale");
    gen->add_option("--eps", params.eps, "Offset of the negative point");
    gen->add_option("--step", params.step, "Discretization step");
    gen->add_option("--N", params.truncation, "Truncation of the natural numbers");
    gen->add_option("--a", params.a, "Ellipse major semi-axis");
    gen->add_option("--b", params.b, "Ellipse minor semi-axis");
    gen->add_option("--out", out, "Output file");

    auto* stab = app.add_subcommand("stability-test", "Randomized stability trials");
    RunConfig config;
    stab->add_option("--seed", config.seed, "Seed");
    stab->add_option("--trials", config.trials, "Number of trials");
    stab->add_option("--eta", config.perturbation, "Largest point displacement");
    stab->add_option("--max-points", config.max_points, "Largest cloud size");
    stab->add_option("--budget", config.node_budget, "Node budget per exact distance");
    stab->add_option("--step", config.step, "Discretization step");
    stab->add_option("--out", out, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) {
            const auto p = io::parse_pair(pair_path);
            emit({{"points", p.size()},
                  {"colored", p.colored_points().size()},
                  {"universe", io::color_set_to_json(p.universe())},
                  {"diameter", p.ambient().diameter()},
                  {"pseudo", p.ambient().is_pseudo()}},
                 out);
        } else if (*constraints) {
            const auto spec = io::parse_constraints_text(io::read_file(c_path));
            const auto c = ConstraintSet::from_spec(spec, {});
            json sigma = json::object();
            for (const auto& [n, s] : sigma_family(c)) sigma[std::to_string(n)] = io::color_set_to_json(s);
            const auto t = topology(c);
            json result = {{"constraints", io::constraints_to_json(c)},
                           {"sigma", sigma},
                           {"topology", {{"opens", family_json(t.opens)}, {"base", family_json(t.base)}}}};
            if (!compare_path.empty()) {
                const auto other = ConstraintSet::from_spec(io::parse_constraints_text(io::read_file(compare_path)), {});
                result["compare"] = to_string(compare_strength(c, other));
            }
            emit(result, out);
        } else if (*invariants) {
            const auto p = io::parse_pair(pair_path);
            emit(invariants_json(chromatic_invariants(p, parse_color_list(sigma_s), parse_color_list(tau_s))), out);
        } else if (*gh) {
            const auto p1 = io::parse_pair(a_path);
            const auto p2 = io::parse_pair(b_path);
            const ConstraintSpec spec = c_path.empty() ? ConstraintSpec{} : io::parse_constraints_text(io::read_file(c_path));
            const auto c = resolve(spec, p1, p2);
            const double lower = gh_lower(p1, p2, c);
            json result = {{"lower", io::number(lower)}};
            try {
                const auto r = gh_search(p1, p2, c, budget);
                result["exact"] = io::number(r.value);
                result["upper"] = io::number(r.value);
                result["certified"] = true;
                if (!r.f.empty()) result["witness"] = {{"f", r.f}, {"g", r.g}};
            } catch (const BudgetExceeded& e) {
                result["exact"] = nullptr;
                result["upper"] = io::number(e.best_upper());
                result["certified"] = false;
            }
            emit(result, out);
        } else if (*cech) {
            const auto p = io::parse_pair(pair_path);
            Filtration f;
            if (gamma_path.empty()) {
                f = cech_filtration(p, max_dim);
            } else {
                f = chromatic_filtration(p, io::parse_complex_text(io::read_file(gamma_path)), max_dim);
                if (!f.dropped_vertices.empty())
                    std::cerr << "warning: " << f.dropped_vertices.size()
                              << " vertices have colors outside gamma and were dropped\n";
            }
            emit(io::filtration_to_json(f), out);
        } else if (*six) {
            const auto p = io::parse_pair(pair_path);
            const auto lambda = io::parse_complex_text(io::read_file(lambda_path));
            const auto gamma = io::parse_complex_text(io::read_file(gamma_path));
            const SixPack s = sixpack(p, lambda, gamma, degree);
            if (out.empty()) {
                json all = json::object();
                for (ModuleKind k : kAllKinds) all[to_string(k)] = io::diagram_to_json(s[k]);
                std::cout << io::dump(all);
            } else {
                fs::create_directories(out);
                for (ModuleKind k : kAllKinds)
                    io::write_file(fs::path(out) / (std::string(to_string(k)) + ".json"), io::dump(io::diagram_to_json(s[k])));
            }
        } else if (*bn) {
            const auto d1 = io::parse_diagram_text(io::read_file(a_path));
            const auto d2 = io::parse_diagram_text(io::read_file(b_path));
            emit({{"bottleneck", io::number(bottleneck(d1, d2))}}, out);
        } else if (*gen) {
            emit(io::pair_to_json(gen_example(name, params)), out);
        } else if (*stab) {
            const auto report = stability_trial(config);
            emit(report_to_json(report), out);
            if (report.failures > 0) return 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::UnknownExample || e.code() == ErrorCode::BadParams ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
