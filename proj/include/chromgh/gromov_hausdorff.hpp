#pragma once

#include <chromgh/constraints.hpp>
#include <chromgh/metric.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace chromgh {

// Distances in this module may be +infinity: no admissible map pair exists.
using ExtendedReal = double;
inline constexpr ExtendedReal kInfinity = std::numeric_limits<double>::infinity();

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct GhSearchResult {
    ExtendedReal value = kInfinity;
    // Optimal maps f: A1 -> A2 and g: A2 -> A1; empty when value is infinite.
    std::vector<Index> f;
    std::vector<Index> g;
    std::uint64_t nodes = 0;
};

// Branch and bound over constrained map pairs. Throws BudgetExceeded with the
// best upper bound found and gh_lower when the node budget runs out.
GhSearchResult gh_search(const ChromaticPair& p1, const ChromaticPair& p2, const ConstraintSet& c,
                         std::uint64_t budget = kDefaultNodeBudget);

ExtendedReal gh_exact(const ChromaticPair& p1, const ChromaticPair& p2, const ConstraintSet& c,
                      std::uint64_t budget = kDefaultNodeBudget);

// Half the least distortion over correspondences constrained by sigma sets,
// members of C and the universe. Exhaustive; needs |A1|*|A2| <= 20.
ExtendedReal gh_corr_oracle(const ChromaticPair& p1, const ChromaticPair& p2, const ConstraintSet& c,
                            std::uint64_t budget = kDefaultNodeBudget);

double gh_upper(const MapSpec& f, const MapSpec& g, const ConstraintSet& c);

struct IsomorphismResult {
    bool isomorphic = false;
    std::optional<std::vector<Index>> witness;
};

IsomorphismResult constrained_isomorphic(const ChromaticPair& p1, const ChromaticPair& p2, const ConstraintSet& c);

}  // namespace chromgh
