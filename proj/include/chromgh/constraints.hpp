#pragma once

#include <chromgh/color_set.hpp>
#include <chromgh/metric.hpp>

#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace chromgh {

// Stands for "every color of the universe" in a constraint family.
struct FullUniverse {
    bool operator==(const FullUniverse&) const = default;
};

using ConstraintMember = std::variant<ColorSet, FullUniverse>;

// Constraint family as written in an input file, before the universe is known.
struct ConstraintSpec {
    std::optional<ColorSet> universe;
    std::vector<ConstraintMember> sets;
    bool ambient_only = false;
};

// A normalized constraint family over a finite color universe. The universe
// itself is always an implicit member, except in ambient-only mode where
// there is no constraint at all (not even colored-to-colored).
class ConstraintSet {
public:
    static ConstraintSet from_spec(const ConstraintSpec& spec, const ColorSet& default_universe);
    static ConstraintSet of(ColorSet universe, ColorFamily members);
    static ConstraintSet trivial(ColorSet universe);
    static ConstraintSet discrete(ColorSet universe);
    static ConstraintSet singletons(ColorSet universe);
    static ConstraintSet ambient_only();

    const ColorSet& universe() const { return universe_; }
    // Members written explicitly; the universe appears here only if it was
    // given as a literal set.
    const ColorFamily& members() const { return members_; }
    // Every member including the universe. Empty in ambient-only mode.
    ColorFamily family() const;
    bool is_ambient_only() const { return ambient_only_; }

    // Same family over a larger universe; the implicit universe member grows.
    ConstraintSet over(const ColorSet& universe) const;
    bool covers(const ChromaticPair& pair) const;

    bool operator==(const ConstraintSet&) const = default;

private:
    ColorSet universe_;
    ColorFamily members_;
    bool ambient_only_ = false;
};

std::map<Color, ColorSet> sigma_family(const ConstraintSet& c);

struct ColorTopology {
    ColorSet universe;
    ColorFamily opens;
    ColorFamily base;

    bool is_open(const ColorSet& s) const;
};

ColorTopology topology(const ConstraintSet& c);

// The constraint set whose members are the sigma sets (plus the universe).
ConstraintSet sigma_constraints(const ConstraintSet& c);
// The constraint set whose members are all opens of the generated topology.
ConstraintSet topology_constraints(const ConstraintSet& c);

enum class Strength { Stronger, Weaker, Equal, Incomparable };

const char* to_string(Strength s);

Strength compare_strength(const ConstraintSet& c1, const ConstraintSet& c2);

struct ConstraintViolation {
    ColorSet sigma;
    Index point;
};

std::optional<ConstraintViolation> find_violation(const MapSpec& f, const ConstraintSet& c);
bool is_constrained_map(const MapSpec& f, const ConstraintSet& c);
bool is_constrained_correspondence(const Relation& r, const ChromaticPair& p1, const ChromaticPair& p2,
                                   const ConstraintSet& c);

// Allowed targets of each source point under C: points whose color lies in
// sigma of the source color. Uncolored points may go anywhere.
std::vector<std::vector<Index>> admissible_targets(const ChromaticPair& source, const ChromaticPair& target,
                                                   const ConstraintSet& c);

// Resolves a spec against the colors used by two pairs and checks coverage.
ConstraintSet resolve(const ConstraintSpec& spec, const ChromaticPair& p1, const ChromaticPair& p2);

void require_covers(const ConstraintSet& c, const ChromaticPair& pair);

}  // namespace chromgh
