#pragma once

#include <chromgh/cech.hpp>
#include <chromgh/gromov_hausdorff.hpp>
#include <chromgh/metric.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace chromgh {

struct RunConfig {
    std::uint64_t seed = 0;
    int trials = 100;
    double tolerance = 1e-9;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::size_t simplex_cap = kDefaultSimplexCap;
    double step = 0.25;
    double perturbation = 0.05;  // largest displacement of a point
    int max_points = 6;
};

struct InequalityCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = true;
};

struct TrialReport {
    int index = 0;
    bool skipped = false;
    std::string skip_reason;
    int degree = 0;
    ComplexSpec lambda;
    ComplexSpec gamma;
    double gh = 0.0;
    std::vector<InequalityCheck> checks;
    nlohmann::json witness;  // both pairs, filled when a check fails
};

struct StabilityReport {
    RunConfig config;
    std::vector<TrialReport> trials;
    int checks = 0;
    int failures = 0;
    int skipped = 0;
};

// One randomized trial: a cloud and its perturbation, compared through
// six-pack bottleneck distances against the constrained distance.
TrialReport run_trial(const RunConfig& config, int index);
StabilityReport stability_trial(const RunConfig& config);

nlohmann::json report_to_json(const StabilityReport& report);

}  // namespace chromgh
