#pragma once

// Independent brute-force references and random instance generators shared by
// the unit tests and the acceptance binary. Nothing here calls the routine it
// is meant to check.

#include <chromgh/constraints.hpp>
#include <chromgh/metric.hpp>
#include <chromgh/persistence.hpp>
#include <chromgh/rng.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using namespace chromgh;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// ---- random instances -------------------------------------------------------

struct Cloud {
    std::vector<std::vector<double>> points;
    std::vector<std::optional<Color>> colors;

    ChromaticPair pair(Norm norm = Norm::Euclidean) const {
        return ChromaticPair(validate_metric(point_distances(points, norm)), colors);
    }
};

// n points in the unit square; each point colored with probability
// colored_prob (point 0 always colored) by one of `colors` colors.
inline Cloud random_cloud(SplitMix64& rng, std::size_t n, std::uint32_t colors, double colored_prob = 1.0) {
    Cloud c;
    for (std::size_t i = 0; i < n; ++i) {
        c.points.push_back({rng.uniform(), rng.uniform()});
        if (i == 0 || rng.uniform() < colored_prob) c.colors.push_back(static_cast<Color>(rng.below(colors)));
        else c.colors.push_back(std::nullopt);
    }
    return c;
}

// Points on a coarse grid so that distance ties occur often.
inline Cloud random_grid_cloud(SplitMix64& rng, std::size_t n, std::uint32_t colors, double colored_prob = 1.0) {
    Cloud c = random_cloud(rng, n, colors, colored_prob);
    for (auto& p : c.points)
        for (auto& x : p) x = std::floor(x * 4) / 4;
    // Distinct points keep the metric proper.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (c.points[i] == c.points[j]) c.points[i][0] += 1.0 + static_cast<double>(i);
    return c;
}

inline ColorSet random_subset(SplitMix64& rng, std::uint32_t universe_size) {
    ColorSet s;
    for (Color k = 0; k < universe_size; ++k)
        if (rng.below(2)) s.insert(k);
    return s;
}

inline ConstraintSet random_constraints(SplitMix64& rng, std::uint32_t universe_size) {
    ColorSet universe;
    for (Color k = 0; k < universe_size; ++k) universe.insert(k);
    ColorFamily members;
    const auto count = rng.below(4);
    for (std::uint64_t i = 0; i < count; ++i) {
        auto s = random_subset(rng, universe_size);
        if (!s.empty()) members.push_back(s);
    }
    return ConstraintSet::of(universe, members);
}

// Every non-empty subset of {0..k-1}, as bitmask-indexed color sets.
inline std::vector<ColorSet> nonempty_subsets(std::uint32_t k) {
    std::vector<ColorSet> out;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        ColorSet s;
        for (Color c = 0; c < k; ++c)
            if (mask >> c & 1) s.insert(c);
        out.push_back(s);
    }
    return out;
}

// ---- constrained correspondences --------------------------------------------

inline bool color_in(const std::optional<Color>& c, const ColorSet& s) { return c && s.contains(*c); }

// R between point lists y and z of one pair: every y (and every z) whose color
// lies in sigma needs a partner inside sigma, for every sigma of C.
inline bool is_constrained_relation(const ChromaticPair& pair, const std::vector<Index>& y, const std::vector<Index>& z,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& r, const ConstraintSet& c) {
    for (const auto& sigma : c.family()) {
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (!color_in(pair.color(y[i]), sigma)) continue;
            bool ok = false;
            for (auto [a, b] : r) ok = ok || (a == i && color_in(pair.color(z[b]), sigma));
            if (!ok) return false;
        }
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (!color_in(pair.color(z[j]), sigma)) continue;
            bool ok = false;
            for (auto [a, b] : r) ok = ok || (b == j && color_in(pair.color(y[a]), sigma));
            if (!ok) return false;
        }
    }
    return true;
}

// Least largest pair distance over all constrained relations between y and z.
// Adding pairs never breaks the partner condition, so the optimum is attained
// by a threshold relation {(a, b) : d(a, b) <= t} for some pair distance t.
inline double constrained_hausdorff_bruteforce(const ChromaticPair& pair, const std::vector<Index>& y,
                                               const std::vector<Index>& z, const ConstraintSet& c) {
    std::vector<double> thresholds;
    for (Index a : y)
        for (Index b : z) thresholds.push_back(pair.d(a, b));
    std::sort(thresholds.begin(), thresholds.end());
    for (double t : thresholds) {
        std::vector<std::pair<std::size_t, std::size_t>> r;
        for (std::size_t i = 0; i < y.size(); ++i)
            for (std::size_t j = 0; j < z.size(); ++j)
                if (pair.d(y[i], z[j]) <= t) r.emplace_back(i, j);
        if (is_constrained_relation(pair, y, z, r, c)) return t;
    }
    return kInf;
}

// Same value by enumerating every relation; keep |y|*|z| small.
inline double constrained_hausdorff_enumerate(const ChromaticPair& pair, const std::vector<Index>& y,
                                              const std::vector<Index>& z, const ConstraintSet& c) {
    const std::size_t cells = y.size() * z.size();
    double best = kInf;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cells); ++mask) {
        std::vector<std::pair<std::size_t, std::size_t>> r;
        double cost = 0;
        for (std::size_t k = 0; k < cells; ++k)
            if (mask >> k & 1) {
                r.emplace_back(k / z.size(), k % z.size());
                cost = std::max(cost, pair.d(y[k / z.size()], z[k % z.size()]));
            }
        if (cost < best && is_constrained_relation(pair, y, z, r, c)) best = cost;
    }
    return best;
}

// ---- maps and distances ------------------------------------------------------

// Admissible targets computed directly from the definition: x may go to y when
// every member of C containing the color of x also contains the color of y.
inline bool admissible(const std::optional<Color>& from, const std::optional<Color>& to, const ConstraintSet& c) {
    if (c.is_ambient_only() || !from) return true;
    for (const auto& sigma : c.family())
        if (sigma.contains(*from) && !color_in(to, sigma)) return false;
    return true;
}

inline double map_distortion(const ChromaticPair& a, const ChromaticPair& b, const std::vector<Index>& f) {
    double out = 0;
    for (Index i = 0; i < a.size(); ++i)
        for (Index j = 0; j < a.size(); ++j) out = std::max(out, std::abs(a.d(i, j) - b.d(f[i], f[j])));
    return out;
}

inline double map_codistortion(const ChromaticPair& a, const ChromaticPair& b, const std::vector<Index>& f,
                               const std::vector<Index>& g) {
    double out = 0;
    for (Index x = 0; x < a.size(); ++x)
        for (Index y = 0; y < b.size(); ++y) out = std::max(out, std::abs(a.d(x, g[y]) - b.d(f[x], y)));
    return out;
}

inline void for_each_map(const ChromaticPair& a, const ChromaticPair& b, const ConstraintSet& c,
                         const std::function<void(const std::vector<Index>&)>& visit) {
    std::vector<Index> f(a.size(), 0);
    std::function<void(Index)> rec = [&](Index i) {
        if (i == a.size()) return visit(f);
        for (Index y = 0; y < b.size(); ++y)
            if (admissible(a.color(i), b.color(y), c)) {
                f[i] = y;
                rec(i + 1);
            }
    };
    rec(0);
}

// Half the least max(dis f, dis g, codis) over all constrained map pairs.
inline double gh_maps_bruteforce(const ChromaticPair& a, const ChromaticPair& b, const ConstraintSet& c) {
    std::vector<std::vector<Index>> fs, gs;
    for_each_map(a, b, c, [&](const std::vector<Index>& f) { fs.push_back(f); });
    for_each_map(b, a, c, [&](const std::vector<Index>& g) { gs.push_back(g); });
    double best = kInf;
    for (const auto& f : fs) {
        const double df = map_distortion(a, b, f);
        for (const auto& g : gs)
            best = std::min(best, std::max({df, map_distortion(b, a, g), map_codistortion(a, b, f, g)}));
    }
    return best / 2;
}

// ---- diagrams ----------------------------------------------------------------

// Exhaustive partial matching: each finite point of d1 goes to the diagonal or
// to a distinct finite point of d2; essential points are matched by every
// permutation.
inline double bottleneck_bruteforce(const PersistenceDiagram& d1, const PersistenceDiagram& d2) {
    std::vector<DiagramPoint> f1, f2;
    std::vector<double> e1, e2;
    for (const auto& p : d1.points) (p.is_essential() ? e1.push_back(p.birth) : f1.push_back(p));
    for (const auto& p : d2.points) (p.is_essential() ? e2.push_back(p.birth) : f2.push_back(p));
    if (e1.size() != e2.size()) return kInf;

    double essential = kInf;
    std::sort(e2.begin(), e2.end());
    do {
        double worst = 0;
        for (std::size_t i = 0; i < e1.size(); ++i) worst = std::max(worst, std::abs(e1[i] - e2[i]));
        essential = std::min(essential, worst);
    } while (std::next_permutation(e2.begin(), e2.end()));
    if (e1.empty()) essential = 0;

    auto half = [](const DiagramPoint& p) { return (p.death - p.birth) / 2; };
    double best = kInf;
    std::vector<bool> used(f2.size(), false);
    std::function<void(std::size_t, double)> rec = [&](std::size_t i, double worst) {
        if (worst >= best) return;
        if (i == f1.size()) {
            for (std::size_t j = 0; j < f2.size(); ++j)
                if (!used[j]) worst = std::max(worst, half(f2[j]));
            best = std::min(best, worst);
            return;
        }
        rec(i + 1, std::max(worst, half(f1[i])));
        for (std::size_t j = 0; j < f2.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            const double cost = std::max(std::abs(f1[i].birth - f2[j].birth), std::abs(f1[i].death - f2[j].death));
            rec(i + 1, std::max(worst, cost));
            used[j] = false;
        }
    };
    rec(0, 0);
    return std::max(best, essential);
}

inline PersistenceDiagram random_diagram(SplitMix64& rng, std::size_t max_points, int essential) {
    PersistenceDiagram d;
    const auto n = rng.below(max_points + 1);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double b = std::floor(rng.uniform() * 8) / 4;
        const double len = 0.25 + std::floor(rng.uniform() * 8) / 4;
        d.points.push_back({b, b + len});
    }
    for (int i = 0; i < essential; ++i) d.points.push_back({std::floor(rng.uniform() * 8) / 4});
    std::sort(d.points.begin(), d.points.end());
    return d;
}

// Values where any simplex enters, plus one past the end.
inline std::vector<double> critical_values(const Filtration& f) {
    std::vector<double> v;
    for (const auto& s : f.simplices) v.push_back(s.value);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    v.push_back(v.empty() ? 1.0 : v.back() + 1.0);
    return v;
}

}  // namespace oracle
