#include <chromgh/error.hpp>
#include <chromgh/io.hpp>
#include <chromgh/persistence.hpp>
#include <chromgh/rng.hpp>
#include <chromgh/stability.hpp>

#include <cmath>
#include <numbers>

namespace chromgh {

namespace {

const std::vector<ComplexSpec>& gamma_choices() {
    static const std::vector<ComplexSpec> choices{ComplexSpec(ColorFamily{ColorSet{0, 1}}),
                                                  ComplexSpec(ColorFamily{ColorSet{0}, ColorSet{1}})};
    return choices;
}

const std::vector<ComplexSpec>& lambda_choices() {
    static const std::vector<ComplexSpec> choices{
        ComplexSpec(ColorFamily{}), ComplexSpec(ColorFamily{ColorSet{0}}), ComplexSpec(ColorFamily{ColorSet{1}}),
        ComplexSpec(ColorFamily{ColorSet{0}, ColorSet{1}}), ComplexSpec(ColorFamily{ColorSet{0, 1}})};
    return choices;
}

ConstraintSet trial_constraints(const ComplexSpec& lambda, const ComplexSpec& gamma) {
    ColorFamily members = gamma.maximal_faces();
    for (const auto& f : lambda.maximal_faces()) members.push_back(f);
    return ConstraintSet::of(ColorSet{0, 1}, std::move(members));
}

}  // namespace

TrialReport run_trial(const RunConfig& config, int index) {
    if (config.max_points < 2) throw Error(ErrorCode::BadParams, "trials need at least two points");
    SplitMix64 rng = trial_rng(config.seed, static_cast<std::uint64_t>(index));
    TrialReport report;
    report.index = index;

    const auto n = static_cast<std::size_t>(2 + rng.below(static_cast<std::uint64_t>(config.max_points - 1)));
    std::vector<std::vector<double>> cloud(n), moved(n);
    std::vector<std::optional<Color>> colors(n);
    for (std::size_t i = 0; i < n; ++i) {
        cloud[i] = {rng.uniform(), rng.uniform()};
        // One point in six stays in the ambient set only; the first is always colored.
        if (i == 0 || rng.below(6) != 0) colors[i] = static_cast<Color>(rng.below(2));
        const double radius = config.perturbation * rng.uniform();
        const double angle = 2 * std::numbers::pi * rng.uniform();
        moved[i] = {cloud[i][0] + radius * std::cos(angle), cloud[i][1] + radius * std::sin(angle)};
    }
    const ChromaticPair p1(validate_metric(point_distances(cloud, Norm::Euclidean)), colors);
    const ChromaticPair p2(validate_metric(point_distances(moved, Norm::Euclidean)), colors);

    report.degree = static_cast<int>(rng.below(2));
    report.gamma = gamma_choices()[rng.below(gamma_choices().size())];
    std::vector<ComplexSpec> admissible;
    for (const auto& l : lambda_choices())
        if (l.is_subcomplex_of(report.gamma)) admissible.push_back(l);
    report.lambda = admissible[rng.below(admissible.size())];
    const ConstraintSet c = trial_constraints(report.lambda, report.gamma);

    try {
        report.gh = gh_exact(p1, p2, c, config.node_budget);
    } catch (const BudgetExceeded& e) {
        report.skipped = true;
        report.skip_reason = e.what();
        return report;
    }

    const double tol = config.tolerance;
    auto check = [&](std::string name, double lhs, double rhs) {
        report.checks.push_back({std::move(name), lhs, rhs, lhs <= rhs + tol});
    };
    // The identity map pair moves every distance by at most twice the displacement.
    check("gh <= eta", report.gh, config.perturbation);

    const SixPack s1 = sixpack(p1, report.lambda, report.gamma, report.degree, config.simplex_cap);
    const SixPack s2 = sixpack(p2, report.lambda, report.gamma, report.degree, config.simplex_cap);
    for (ModuleKind kind : kAllKinds) {
        const double db = bottleneck(s1[kind], s2[kind]);
        const std::string k = to_string(kind);
        check("dB(" + k + ") <= 2 gh", db, 2 * report.gh);
        check("dB(" + k + ") <= 2 eta", db, 2 * config.perturbation);
    }

    for (const auto& ch : report.checks)
        if (!ch.pass) {
            report.witness = {{"source", io::pair_to_json(p1)}, {"perturbed", io::pair_to_json(p2)}};
            for (ModuleKind kind : kAllKinds) {
                report.witness["source_" + std::string(to_string(kind))] = io::diagram_to_json(s1[kind]);
                report.witness["perturbed_" + std::string(to_string(kind))] = io::diagram_to_json(s2[kind]);
            }
            break;
        }
    return report;
}

StabilityReport stability_trial(const RunConfig& config) {
    StabilityReport out;
    out.config = config;
    for (int i = 0; i < config.trials; ++i) {
        out.trials.push_back(run_trial(config, i));
        const auto& t = out.trials.back();
        if (t.skipped) ++out.skipped;
        for (const auto& ch : t.checks) {
            ++out.checks;
            if (!ch.pass) ++out.failures;
        }
    }
    return out;
}

nlohmann::json report_to_json(const StabilityReport& report) {
    using nlohmann::json;
    const auto& c = report.config;
    json trials = json::array();
    for (const auto& t : report.trials) {
        json checks = json::array();
        for (const auto& ch : t.checks)
            checks.push_back({{"name", ch.name}, {"lhs", io::number(ch.lhs)}, {"rhs", io::number(ch.rhs)}, {"pass", ch.pass}});
        json entry = {{"index", t.index}, {"skipped", t.skipped}};
        if (t.skipped) {
            entry["reason"] = t.skip_reason;
        } else {
            entry["degree"] = t.degree;
            entry["lambda"] = io::complex_to_json(t.lambda);
            entry["gamma"] = io::complex_to_json(t.gamma);
            entry["gh"] = io::number(t.gh);
            entry["checks"] = checks;
            if (!t.witness.is_null()) entry["witness"] = t.witness;
        }
        trials.push_back(entry);
    }
    return {{"config",
             {{"seed", c.seed},
              {"trials", c.trials},
              {"tolerance", c.tolerance},
              {"node_budget", c.node_budget},
              {"simplex_cap", c.simplex_cap},
              {"perturbation", c.perturbation},
              {"max_points", c.max_points}}},
            {"summary", {{"checks", report.checks}, {"failures", report.failures}, {"skipped", report.skipped}}},
            {"trials", trials}};
}

}  // namespace chromgh
