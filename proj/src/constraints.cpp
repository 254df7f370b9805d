#include <chromgh/constraints.hpp>
#include <chromgh/error.hpp>

#include <algorithm>
#include <set>

namespace chromgh {

ConstraintSet ConstraintSet::from_spec(const ConstraintSpec& spec, const ColorSet& default_universe) {
    if (spec.ambient_only) {
        if (!spec.sets.empty()) throw Error(ErrorCode::InvalidConstraint, "ambient-only mode takes no sets");
        ConstraintSet c = ambient_only();
        c.universe_ = spec.universe.value_or(default_universe);
        return c;
    }
    ColorFamily members;
    ColorSet mentioned;
    for (const auto& m : spec.sets) {
        if (const auto* s = std::get_if<ColorSet>(&m)) {
            members.push_back(*s);
            mentioned = mentioned | *s;
        }
    }
    ColorSet universe;
    if (spec.universe) {
        universe = *spec.universe;
        if (!mentioned.is_subset_of(universe))
            throw Error(ErrorCode::InvalidConstraint, "member colors outside the universe " + universe.to_string());
    } else {
        universe = default_universe | mentioned;
    }
    return of(std::move(universe), std::move(members));
}

ConstraintSet ConstraintSet::of(ColorSet universe, ColorFamily members) {
    for (const auto& m : members)
        if (!m.is_subset_of(universe))
            throw Error(ErrorCode::InvalidConstraint, m.to_string() + " is not inside " + universe.to_string());
    canonicalize(members);
    ConstraintSet c;
    c.universe_ = std::move(universe);
    c.members_ = std::move(members);
    return c;
}

ConstraintSet ConstraintSet::trivial(ColorSet universe) { return of(std::move(universe), {}); }

ConstraintSet ConstraintSet::discrete(ColorSet universe) {
    const auto& colors = universe.values();
    if (colors.size() > 20) throw Error(ErrorCode::InvalidConstraint, "power set of a universe this large");
    ColorFamily members;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << colors.size()); ++mask) {
        ColorSet s;
        for (std::size_t i = 0; i < colors.size(); ++i)
            if (mask >> i & 1) s.insert(colors[i]);
        members.push_back(std::move(s));
    }
    return of(std::move(universe), std::move(members));
}

ConstraintSet ConstraintSet::singletons(ColorSet universe) {
    ColorFamily members;
    for (Color c : universe) members.push_back(ColorSet{c});
    return of(std::move(universe), std::move(members));
}

ConstraintSet ConstraintSet::ambient_only() {
    ConstraintSet c;
    c.ambient_only_ = true;
    return c;
}

ColorFamily ConstraintSet::family() const {
    if (ambient_only_) return {};
    ColorFamily f = members_;
    f.push_back(universe_);
    canonicalize(f);
    return f;
}

ConstraintSet ConstraintSet::over(const ColorSet& universe) const {
    if (!universe_.is_subset_of(universe))
        throw Error(ErrorCode::UniverseMismatch, "cannot shrink the universe " + universe_.to_string());
    ConstraintSet c = *this;
    c.universe_ = universe;
    return c;
}

bool ConstraintSet::covers(const ChromaticPair& pair) const { return pair.universe().is_subset_of(universe_); }

void require_covers(const ConstraintSet& c, const ChromaticPair& pair) {
    if (c.is_ambient_only()) return;
    if (!c.covers(pair))
        throw Error(ErrorCode::UniverseMismatch,
                    "pair colors " + pair.universe().to_string() + " outside universe " + c.universe().to_string());
}

ConstraintSet resolve(const ConstraintSpec& spec, const ChromaticPair& p1, const ChromaticPair& p2) {
    ConstraintSet c = ConstraintSet::from_spec(spec, p1.universe() | p2.universe());
    require_covers(c, p1);
    require_covers(c, p2);
    return c;
}

std::map<Color, ColorSet> sigma_family(const ConstraintSet& c) {
    const ColorFamily fam = c.family();
    std::map<Color, ColorSet> sigma;
    for (Color n : c.universe()) {
        ColorSet acc = c.universe();
        for (const auto& member : fam)
            if (member.contains(n)) acc = acc & member;
        sigma.emplace(n, std::move(acc));
    }
    return sigma;
}

bool ColorTopology::is_open(const ColorSet& s) const { return std::binary_search(opens.begin(), opens.end(), s); }

ColorTopology topology(const ConstraintSet& c) {
    ColorTopology t;
    t.universe = c.universe();
    for (const auto& [n, s] : sigma_family(c)) t.base.push_back(s);
    canonicalize(t.base);

    std::set<ColorSet> opens{ColorSet{}};
    for (const auto& b : t.base) {
        std::vector<ColorSet> grown;
        for (const auto& o : opens) grown.push_back(o | b);
        opens.insert(grown.begin(), grown.end());
    }
    opens.insert(t.universe);
    t.opens.assign(opens.begin(), opens.end());
    return t;
}

ConstraintSet sigma_constraints(const ConstraintSet& c) {
    if (c.is_ambient_only()) return c;
    return ConstraintSet::of(c.universe(), topology(c).base);
}

ConstraintSet topology_constraints(const ConstraintSet& c) {
    if (c.is_ambient_only()) return c;
    ColorFamily opens = topology(c).opens;
    std::erase(opens, ColorSet{});
    return ConstraintSet::of(c.universe(), std::move(opens));
}

const char* to_string(Strength s) {
    switch (s) {
        case Strength::Stronger: return "stronger";
        case Strength::Weaker: return "weaker";
        case Strength::Equal: return "equal";
        case Strength::Incomparable: return "incomparable";
    }
    return "?";
}

Strength compare_strength(const ConstraintSet& c1, const ConstraintSet& c2) {
    const ColorSet u = c1.universe() | c2.universe();
    const auto t1 = topology(c1.over(u)).opens;
    const auto t2 = topology(c2.over(u)).opens;
    const bool contains12 = std::includes(t1.begin(), t1.end(), t2.begin(), t2.end());
    const bool contains21 = std::includes(t2.begin(), t2.end(), t1.begin(), t1.end());
    if (contains12 && contains21) return Strength::Equal;
    if (contains12) return Strength::Stronger;
    if (contains21) return Strength::Weaker;
    return Strength::Incomparable;
}

std::optional<ConstraintViolation> find_violation(const MapSpec& f, const ConstraintSet& c) {
    if (c.is_ambient_only()) return std::nullopt;
    require_covers(c, f.source());
    require_covers(c, f.target());
    for (const auto& sigma : c.family())
        for (Index x = 0; x < f.source().size(); ++x) {
            const auto cx = f.source().color(x);
            if (!cx || !sigma.contains(*cx)) continue;
            const auto cy = f.target().color(f(x));
            if (!cy || !sigma.contains(*cy)) return ConstraintViolation{sigma, x};
        }
    return std::nullopt;
}

bool is_constrained_map(const MapSpec& f, const ConstraintSet& c) { return !find_violation(f, c).has_value(); }

bool is_constrained_correspondence(const Relation& r, const ChromaticPair& p1, const ChromaticPair& p2,
                                   const ConstraintSet& c) {
    if (!r.is_correspondence(p1.size(), p2.size())) return false;
    for (const auto& sigma : c.family()) {
        std::vector<bool> left(p1.size()), right(p2.size());
        for (const auto& [a, b] : r.pairs) {
            const auto ca = p1.color(a);
            const auto cb = p2.color(b);
            if (ca && cb && sigma.contains(*ca) && sigma.contains(*cb)) left[a] = right[b] = true;
        }
        for (Index a : p1.class_of(sigma))
            if (!left[a]) return false;
        for (Index b : p2.class_of(sigma))
            if (!right[b]) return false;
    }
    return true;
}

std::vector<std::vector<Index>> admissible_targets(const ChromaticPair& source, const ChromaticPair& target,
                                                   const ConstraintSet& c) {
    std::vector<std::vector<Index>> out(source.size());
    std::vector<Index> everything(target.size());
    for (Index y = 0; y < target.size(); ++y) everything[y] = y;
    if (c.is_ambient_only()) {
        std::fill(out.begin(), out.end(), everything);
        return out;
    }
    require_covers(c, source);
    require_covers(c, target);
    const auto sigma = sigma_family(c);
    for (Index x = 0; x < source.size(); ++x) {
        const auto cx = source.color(x);
        out[x] = cx ? target.class_of(sigma.at(*cx)) : everything;
    }
    return out;
}

}  // namespace chromgh
