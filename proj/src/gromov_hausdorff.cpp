#include <chromgh/error.hpp>
#include <chromgh/gromov_hausdorff.hpp>
#include <chromgh/invariants.hpp>

#include <algorithm>
#include <cmath>

namespace chromgh {

namespace {

// Joint search over the values f(x) and g(y). Every term of the objective
// involves exactly two variables, so forward checking against the incumbent
// prunes domains as soon as a variable is fixed.
class MapPairSearch {
public:
    MapPairSearch(const ChromaticPair& p1, const ChromaticPair& p2, const ConstraintSet& c, std::uint64_t budget,
                  double floor)
        : d1_(p1.ambient()), d2_(p2.ambient()), budget_(budget), floor_(floor) {
        auto fwd = admissible_targets(p1, p2, c);
        auto bwd = admissible_targets(p2, p1, c);
        for (Index x = 0; x < fwd.size(); ++x) vars_.push_back({true, x});
        for (Index y = 0; y < bwd.size(); ++y) vars_.push_back({false, y});
        // Rare color classes first; f before g.
        std::stable_sort(vars_.begin(), vars_.end(), [&](const Var& a, const Var& b) {
            if (a.is_f != b.is_f) return a.is_f;
            const auto& da = a.is_f ? fwd[a.point] : bwd[a.point];
            const auto& db = b.is_f ? fwd[b.point] : bwd[b.point];
            return da.size() < db.size();
        });
        for (const auto& v : vars_) initial_.push_back(v.is_f ? fwd[v.point] : bwd[v.point]);
        values_.assign(vars_.size(), 0);
    }

    GhSearchResult run() {
        GhSearchResult out;
        for (const auto& dom : initial_)
            if (dom.empty()) return out;
        search(0, 0.0, initial_);
        out.nodes = nodes_;
        if (best_ == kInfinity) return out;
        out.value = best_ / 2.0;
        out.f.assign(d1_.size(), 0);
        out.g.assign(d2_.size(), 0);
        for (std::size_t k = 0; k < vars_.size(); ++k) (vars_[k].is_f ? out.f : out.g)[vars_[k].point] = best_values_[k];
        return out;
    }


private:
    struct Var {
        bool is_f;
        Index point;
    };

    double term(const Var& a, Index va, const Var& b, Index vb) const {
        if (a.is_f && b.is_f) return std::abs(d1_(a.point, b.point) - d2_(va, vb));
        if (!a.is_f && !b.is_f) return std::abs(d2_(a.point, b.point) - d1_(va, vb));
        if (a.is_f) return std::abs(d1_(a.point, vb) - d2_(va, b.point));
        return std::abs(d1_(b.point, va) - d2_(vb, a.point));
    }

    void search(std::size_t depth, double cost, const std::vector<std::vector<Index>>& domains) {
        if (done_) return;
        if (depth == vars_.size()) {
            if (cost < best_) {
                best_ = cost;
                best_values_ = values_;
                if (best_ <= floor_) done_ = true;
            }
            return;
        }
        const Var& var = vars_[depth];
        for (Index value : domains[depth]) {
            if (++nodes_ > budget_) throw BudgetExceeded("map-pair search", best_ / 2.0, floor_ / 2.0);
            double c = cost;
            for (std::size_t k = 0; k < depth && c < best_; ++k) c = std::max(c, term(var, value, vars_[k], values_[k]));
            if (c >= best_) continue;
            values_[depth] = value;

            std::vector<std::vector<Index>> next(domains.size());
            bool feasible = true;
            for (std::size_t k = depth + 1; k < vars_.size() && feasible; ++k) {
                for (Index w : domains[k])
                    if (term(var, value, vars_[k], w) < best_) next[k].push_back(w);
                feasible = !next[k].empty();
            }
            if (feasible) search(depth + 1, c, next);
            if (done_) return;
        }
    }

    const FiniteMetricSpace& d1_;
    const FiniteMetricSpace& d2_;
    std::uint64_t budget_;
    double floor_;
    std::vector<Var> vars_;
    std::vector<std::vector<Index>> initial_;
    std::vector<Index> values_;
    std::vector<Index> best_values_;
    double best_ = kInfinity;
    std::uint64_t nodes_ = 0;
    bool done_ = false;
};

}  // namespace

GhSearchResult gh_search(const ChromaticPair& p1, const ChromaticPair& p2, const ConstraintSet& c,
                         std::uint64_t budget) {
    const double lower = gh_lower(p1, p2, c);
    if (lower == kInfinity) return {};
    return MapPairSearch(p1, p2, c, budget, 2.0 * lower).run();
}

ExtendedReal gh_exact(const ChromaticPair& p1, const ChromaticPair& p2, const ConstraintSet& c, std::uint64_t budget) {
    return gh_search(p1, p2, c, budget).value;
}

ExtendedReal gh_corr_oracle(const ChromaticPair& p1, const ChromaticPair& p2, const ConstraintSet& c,
                            std::uint64_t budget) {
    const std::size_t n1 = p1.size(), n2 = p2.size();
    if (n1 * n2 > 20) throw BudgetExceeded("correspondence enumeration needs |A1|*|A2| <= 20", kInfinity, 0.0);
    require_covers(c, p1);
    require_covers(c, p2);

    ConstraintSet augmented = c;
    if (!c.is_ambient_only()) {
        ColorFamily fam = c.members();
        for (const auto& s : topology(c).base) fam.push_back(s);
        augmented = ConstraintSet::of(c.universe(), std::move(fam));
    }

    // Cells are visited row-major so a source point's row closes before the
    // next starts; a row with no chosen cell cannot lead to a correspondence.
    double best = kInfinity;
    std::uint64_t nodes = 0;
    Relation r;
    auto dfs = [&](auto&& self, std::size_t cell, double dis, bool row_hit) -> void {
        if (++nodes > budget) throw BudgetExceeded("correspondence enumeration", best / 2.0, 0.0);
        if (cell == n1 * n2) {
            if (is_constrained_correspondence(r, p1, p2, augmented)) best = dis;
            return;
        }
        const Index a = cell / n2, b = cell % n2;
        const bool row_end = b + 1 == n2;

        double with = dis;
        for (const auto& [x, y] : r.pairs) with = std::max(with, std::abs(p1.d(a, x) - p2.d(b, y)));
        if (with < best) {
            r.pairs.emplace_back(a, b);
            self(self, cell + 1, with, !row_end);
            r.pairs.pop_back();
        }
        if (!(row_end && !row_hit)) self(self, cell + 1, dis, row_end ? false : row_hit);
    };
    if (n1 == 0 || n2 == 0) return n1 == n2 ? 0.0 : kInfinity;
    dfs(dfs, 0, 0.0, false);
    return best / 2.0;
}

double gh_upper(const MapSpec& f, const MapSpec& g, const ConstraintSet& c) {
    if (auto v = find_violation(f, c))
        throw Error(ErrorCode::NotConstrained,
                    "f sends point " + std::to_string(v->point) + " outside sigma " + v->sigma.to_string());
    if (auto v = find_violation(g, c))
        throw Error(ErrorCode::NotConstrained,
                    "g sends point " + std::to_string(v->point) + " outside sigma " + v->sigma.to_string());
    return std::max({distortion(f), distortion(g), codistortion(f, g)}) / 2.0;
}

IsomorphismResult constrained_isomorphic(const ChromaticPair& p1, const ChromaticPair& p2, const ConstraintSet& c) {
    if (p1.size() != p2.size()) return {};
    const std::size_t n = p1.size();
    const auto allowed = admissible_targets(p1, p2, c);
    const auto back = admissible_targets(p2, p1, c);
    const double tol = metric_tolerance(std::max(p1.ambient().diameter(), p2.ambient().diameter()));

    // Candidate y for x must be admissible both ways, so colored classes
    // of every sigma set correspond exactly under the bijection.
    std::vector<std::vector<Index>> candidates(n);
    for (Index x = 0; x < n; ++x)
        for (Index y : allowed[x])
            if (std::binary_search(back[y].begin(), back[y].end(), x)) candidates[x].push_back(y);

    std::vector<Index> assignment(n);
    std::vector<bool> used(n);
    auto place = [&](auto&& self, Index x) -> bool {
        if (x == n) return true;
        for (Index y : candidates[x]) {
            if (used[y]) continue;
            bool ok = true;
            for (Index prev = 0; prev < x && ok; ++prev)
                ok = std::abs(p1.d(x, prev) - p2.d(y, assignment[prev])) <= tol;
            if (!ok) continue;
            assignment[x] = y;
            used[y] = true;
            if (self(self, x + 1)) return true;
            used[y] = false;
        }
        return false;
    };
    if (!place(place, 0)) return {};
    return {true, assignment};
}

}  // namespace chromgh
