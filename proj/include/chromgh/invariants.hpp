#pragma once

#include <chromgh/constraints.hpp>
#include <chromgh/metric.hpp>

#include <span>
#include <vector>

namespace chromgh {

// Distance profile of the sigma-class against the tau-class of one pair.
// Per-point fields are aligned with `points`; all sets are sorted and unique.
struct InvariantRecord {
    ColorSet sigma;
    ColorSet tau;
    std::vector<Index> points;
    std::vector<std::vector<double>> local;
    std::vector<double> distance_set;
    std::vector<double> ecc;
    std::vector<double> sep;
    std::vector<double> ecc_set;
    std::vector<double> sep_set;
    double radius = 0.0;
    double dist = 0.0;
};

InvariantRecord chromatic_invariants(const ChromaticPair& pair, const ColorSet& sigma, const ColorSet& tau);

// Hausdorff distance between two sorted non-empty sets of reals.
double hausdorff_reals(std::span<const double> a, std::span<const double> b);

double dL(const ChromaticPair& p1, const ChromaticPair& p2, const ColorSet& sigma, const ColorSet& tau);
double dL(const InvariantRecord& r1, const InvariantRecord& r2);

// Largest of the certified lower bounds on gh_exact; infinite when some open
// color set has a non-empty class on one side only.
double gh_lower(const ChromaticPair& p1, const ChromaticPair& p2, const ConstraintSet& c);

}  // namespace chromgh
