#include <chromgh/error.hpp>
#include <chromgh/invariants.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace chromgh {

namespace {

void sort_unique(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

double directed_reals(std::span<const double> from, std::span<const double> to) {
    double worst = 0.0;
    for (double a : from) {
        auto it = std::lower_bound(to.begin(), to.end(), a);
        double nearest = std::numeric_limits<double>::infinity();
        if (it != to.end()) nearest = std::abs(*it - a);
        if (it != to.begin()) nearest = std::min(nearest, std::abs(a - *std::prev(it)));
        worst = std::max(worst, nearest);
    }
    return worst;
}

}  // namespace

InvariantRecord chromatic_invariants(const ChromaticPair& pair, const ColorSet& sigma, const ColorSet& tau) {
    InvariantRecord r;
    r.sigma = sigma;
    r.tau = tau;
    r.points = pair.class_of(sigma);
    const auto tau_points = pair.class_of(tau);
    if (r.points.empty()) throw Error(ErrorCode::EmptyColorClass, "sigma = " + sigma.to_string());
    if (tau_points.empty()) throw Error(ErrorCode::EmptyColorClass, "tau = " + tau.to_string());

    for (Index x : r.points) {
        std::vector<double> l;
        l.reserve(tau_points.size());
        for (Index y : tau_points) l.push_back(pair.d(x, y));
        sort_unique(l);
        r.ecc.push_back(l.back());
        r.sep.push_back(l.front());
        r.distance_set.insert(r.distance_set.end(), l.begin(), l.end());
        r.local.push_back(std::move(l));
    }
    sort_unique(r.distance_set);
    r.ecc_set = r.ecc;
    r.sep_set = r.sep;
    sort_unique(r.ecc_set);
    sort_unique(r.sep_set);
    r.radius = r.ecc_set.front();
    r.dist = r.sep_set.front();
    return r;
}

double hausdorff_reals(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySubset, "Hausdorff distance needs non-empty sets");
    return std::max(directed_reals(a, b), directed_reals(b, a));
}

double dL(const InvariantRecord& r1, const InvariantRecord& r2) {
    const std::size_t n1 = r1.points.size(), n2 = r2.points.size();
    std::vector<double> row_min(n1, std::numeric_limits<double>::infinity());
    std::vector<double> col_min(n2, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            const double c = hausdorff_reals(r1.local[i], r2.local[j]);
            row_min[i] = std::min(row_min[i], c);
            col_min[j] = std::min(col_min[j], c);
        }
    return std::max(*std::max_element(row_min.begin(), row_min.end()),
                    *std::max_element(col_min.begin(), col_min.end()));
}

double dL(const ChromaticPair& p1, const ChromaticPair& p2, const ColorSet& sigma, const ColorSet& tau) {
    return dL(chromatic_invariants(p1, sigma, tau), chromatic_invariants(p2, sigma, tau));
}

double gh_lower(const ChromaticPair& p1, const ChromaticPair& p2, const ConstraintSet& c) {
    double best = std::abs(p1.ambient().diameter() - p2.ambient().diameter()) / 2.0;
    if (c.is_ambient_only()) return best;
    require_covers(c, p1);
    require_covers(c, p2);

    std::vector<ColorSet> usable;
    for (const auto& sigma : topology(c).opens) {
        if (sigma.empty()) continue;
        const auto c1 = p1.class_of(sigma);
        const auto c2 = p2.class_of(sigma);
        if (c1.empty() != c2.empty()) return std::numeric_limits<double>::infinity();
        if (c1.empty()) continue;
        best = std::max(best, std::abs(p1.ambient().diameter(c1) - p2.ambient().diameter(c2)) / 2.0);
        usable.push_back(sigma);
    }

    for (const auto& sigma : usable)
        for (const auto& tau : usable) {
            if (sigma == tau) continue;
            const auto r1 = chromatic_invariants(p1, sigma, tau);
            const auto r2 = chromatic_invariants(p2, sigma, tau);
            best = std::max({best,
                             std::abs(r1.radius - r2.radius) / 2.0,
                             std::abs(r1.dist - r2.dist) / 2.0,
                             hausdorff_reals(r1.ecc_set, r2.ecc_set) / 2.0,
                             hausdorff_reals(r1.sep_set, r2.sep_set) / 2.0,
                             hausdorff_reals(r1.distance_set, r2.distance_set) / 2.0,
                             dL(r1, r2) / 2.0});
        }
    return best;
}

}  // namespace chromgh
