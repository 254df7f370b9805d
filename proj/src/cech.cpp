#include <chromgh/cech.hpp>
#include <chromgh/error.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace chromgh {

namespace {

double binomial(std::size_t n, std::size_t k) {
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

// Visits every non-empty subset of `vertices` with at most max_size elements
// in lexicographic order.
template <class Fn>
void for_each_subset(std::span<const Index> vertices, std::size_t max_size, Fn&& fn) {
    std::vector<Index> current;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < vertices.size(); ++i) {
            current.push_back(vertices[i]);
            fn(std::as_const(current));
            if (current.size() < max_size) self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
}

Filtration build(const ChromaticPair& pair, std::span<const Index> vertices, int max_dim, std::size_t cap,
                 const ComplexSpec* gamma) {
    if (max_dim < 0) throw Error(ErrorCode::InsufficientDimension, "max_dim must be non-negative");
    const std::size_t max_size = static_cast<std::size_t>(max_dim) + 1;
    double count = 0.0;
    for (std::size_t k = 1; k <= std::min(max_size, vertices.size()); ++k) count += binomial(vertices.size(), k);
    if (count > static_cast<double>(cap))
        throw Error(ErrorCode::SizeBudget, std::to_string(static_cast<long double>(count)) + " simplices exceed cap " +
                                               std::to_string(cap));

    Filtration f;
    f.max_dim = max_dim;
    for_each_subset(vertices, max_size, [&](const std::vector<Index>& s) {
        if (gamma) {
            ColorSet colors;
            for (Index v : s) colors.insert(*pair.color(v));
            if (!gamma->contains(colors)) return;
        }
        f.simplices.push_back({s, circumradius(pair, s)});
    });
    std::sort(f.simplices.begin(), f.simplices.end(), canonical_less);
    return f;
}

}  // namespace

ComplexSpec::ComplexSpec(ColorFamily faces) {
    canonicalize(faces);
    std::erase(faces, ColorSet{});
    for (const auto& face : faces) {
        const bool dominated = std::any_of(faces.begin(), faces.end(), [&](const ColorSet& other) {
            return other != face && face.is_subset_of(other);
        });
        if (!dominated) faces_.push_back(face);
    }
}

bool ComplexSpec::contains(const ColorSet& face) const {
    return std::any_of(faces_.begin(), faces_.end(), [&](const ColorSet& m) { return face.is_subset_of(m); });
}

ColorSet ComplexSpec::vertices() const {
    ColorSet v;
    for (const auto& f : faces_) v = v | f;
    return v;
}

bool ComplexSpec::is_subcomplex_of(const ComplexSpec& other) const {
    return std::all_of(faces_.begin(), faces_.end(), [&](const ColorSet& f) { return other.contains(f); });
}

bool canonical_less(const Simplex& a, const Simplex& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
}

double circumradius(const ChromaticPair& pair, std::span<const Index> simplex) {
    if (simplex.empty()) throw Error(ErrorCode::EmptySimplex, "circumradius of an empty simplex");
    for (Index v : simplex)
        if (v >= pair.size() || !pair.is_colored(v))
            throw Error(ErrorCode::NotColored, "simplex vertex " + std::to_string(v) + " is not in X");
    double best = std::numeric_limits<double>::infinity();
    for (Index a = 0; a < pair.size(); ++a) {
        double worst = 0.0;
        for (Index v : simplex) worst = std::max(worst, pair.d(a, v));
        best = std::min(best, worst);
    }
    return best;
}

Filtration cech_filtration(const ChromaticPair& pair, int max_dim, std::size_t cap) {
    const auto x = pair.colored_points();
    return build(pair, x, max_dim, cap, nullptr);
}

Filtration chromatic_filtration(const ChromaticPair& pair, const ComplexSpec& gamma, int max_dim, std::size_t cap) {
    const ColorSet allowed = gamma.vertices();
    std::vector<Index> kept, dropped;
    for (Index v : pair.colored_points()) (allowed.contains(*pair.color(v)) ? kept : dropped).push_back(v);
    Filtration f = build(pair, kept, max_dim, cap, &gamma);
    f.dropped_vertices = std::move(dropped);
    return f;
}

FilteredSpace::FilteredSpace(std::vector<Index> points, std::size_t max_size,
                             std::unordered_map<std::uint64_t, double> values)
    : points_(std::move(points)), max_size_(max_size), values_(std::move(values)) {
    if (points_.size() > 64) throw Error(ErrorCode::SizeBudget, "filtered spaces hold at most 64 points");
}

double FilteredSpace::value(std::uint64_t mask) const {
    auto it = values_.find(mask);
    if (it == values_.end()) throw Error(ErrorCode::SizeBudget, "subset outside the stored size cap");
    return it->second;
}

FilteredSpace filtered_space(const ChromaticPair& pair, int max_dim) {
    auto points = pair.colored_points();
    if (points.size() > 64) throw Error(ErrorCode::SizeBudget, "filtered spaces hold at most 64 points");
    const std::size_t max_size = static_cast<std::size_t>(max_dim) + 1;
    std::vector<Index> local(points.size());
    for (Index i = 0; i < local.size(); ++i) local[i] = i;
    std::unordered_map<std::uint64_t, double> values;
    std::vector<Index> ambient;
    for_each_subset(local, max_size, [&](const std::vector<Index>& s) {
        std::uint64_t mask = 0;
        ambient.clear();
        for (Index i : s) {
            mask |= std::uint64_t{1} << i;
            ambient.push_back(points[i]);
        }
        values.emplace(mask, circumradius(pair, ambient));
    });
    return FilteredSpace(std::move(points), max_size, std::move(values));
}

double tripod_defect(const FilteredSpace& f1, const FilteredSpace& f2, const Tripod& t) {
    const auto& pairs = t.r.pairs;
    if (!t.r.is_correspondence(f1.size(), f2.size()))
        throw Error(ErrorCode::NotATripod, "tripod relation must cover both sides");
    if (pairs.size() > 22) throw BudgetExceeded("tripod with more than 22 pairs", std::numeric_limits<double>::infinity(), 0.0);

    double worst = 0.0;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << pairs.size()); ++subset) {
        std::uint64_t img1 = 0, img2 = 0;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (subset >> k & 1) {
                img1 |= std::uint64_t{1} << pairs[k].first;
                img2 |= std::uint64_t{1} << pairs[k].second;
            }
        if (static_cast<std::size_t>(std::popcount(img1)) > f1.max_size() ||
            static_cast<std::size_t>(std::popcount(img2)) > f2.max_size())
            continue;
        worst = std::max(worst, std::abs(f1.value(img1) - f2.value(img2)));
    }
    return worst;
}

double dF_bruteforce(const FilteredSpace& f1, const FilteredSpace& f2) {
    const std::size_t n1 = f1.size(), n2 = f2.size();
    if (n1 * n2 > 9) throw BudgetExceeded("dF enumeration needs |X1|*|X2| <= 9", std::numeric_limits<double>::infinity(), 0.0);
    double best = std::numeric_limits<double>::infinity();
    const std::size_t cells = n1 * n2;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cells); ++mask) {
        Tripod t;
        for (std::size_t k = 0; k < cells; ++k)
            if (mask >> k & 1) t.r.pairs.emplace_back(k / n2, k % n2);
        if (!t.r.is_correspondence(n1, n2)) continue;
        best = std::min(best, tripod_defect(f1, f2, t));
    }
    return best;
}

}  // namespace chromgh
