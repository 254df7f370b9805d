#include <chromgh/constraints.hpp>
#include <chromgh/error.hpp>
#include <chromgh/metric.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace chromgh {

namespace {

std::string triple(Index i, Index j, Index k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

void require_index(Index i, std::size_t n) {
    if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " >= " + std::to_string(n));
}

}  // namespace

FiniteMetricSpace validate_metric(const Matrix& matrix, bool allow_pseudo) {
    const std::size_t n = matrix.size();
    double max_entry = 0.0;
    for (const auto& row : matrix) {
        if (row.size() != n) throw Error(ErrorCode::MalformedMatrix, "matrix is not square");
        for (double v : row) {
            if (!std::isfinite(v) || v < 0.0)
                throw Error(ErrorCode::MalformedMatrix, "entries must be finite and non-negative");
            max_entry = std::max(max_entry, v);
        }
    }
    const double tol = metric_tolerance(max_entry);

    // The upper triangle is authoritative once symmetry is confirmed.
    std::vector<double> d(n * n, 0.0);
    for (Index i = 0; i < n; ++i) {
        if (matrix[i][i] > tol) throw Error(ErrorCode::NonzeroDiagonal, "d[" + std::to_string(i) + "][" + std::to_string(i) + "] != 0");
        for (Index j = i + 1; j < n; ++j) {
            if (std::abs(matrix[i][j] - matrix[j][i]) > tol)
                throw Error(ErrorCode::AsymmetricMatrix, "d[" + std::to_string(i) + "][" + std::to_string(j) + "] != d[" +
                                                             std::to_string(j) + "][" + std::to_string(i) + "]");
            if (matrix[i][j] == 0.0 && !allow_pseudo)
                throw Error(ErrorCode::ZeroOffDiagonal, "d[" + std::to_string(i) + "][" + std::to_string(j) + "] = 0");
            d[i * n + j] = d[j * n + i] = matrix[i][j];
        }
    }

    double worst = 0.0;
    Index wi = 0, wj = 0, wk = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            for (Index k = 0; k < n; ++k) {
                const double excess = d[i * n + j] - d[i * n + k] - d[k * n + j];
                if (excess > worst) {
                    worst = excess;
                    wi = i, wj = j, wk = k;
                }
            }
    if (worst > tol)
        throw Error(ErrorCode::TriangleViolation,
                    "worst triple " + triple(wi, wj, wk) + " exceeds by " + std::to_string(worst));

    return FiniteMetricSpace(n, std::move(d), allow_pseudo);
}

double FiniteMetricSpace::diameter() const {
    double best = 0.0;
    for (double v : d_) best = std::max(best, v);
    return best;
}

double FiniteMetricSpace::diameter(std::span<const Index> subset) const {
    double best = 0.0;
    for (Index a : subset)
        for (Index b : subset) best = std::max(best, (*this)(a, b));
    return best;
}

Matrix FiniteMetricSpace::to_matrix() const {
    Matrix m(n_, std::vector<double>(n_));
    for (Index i = 0; i < n_; ++i)
        for (Index j = 0; j < n_; ++j) m[i][j] = (*this)(i, j);
    return m;
}

ChromaticPair::ChromaticPair(FiniteMetricSpace ambient, std::vector<std::optional<Color>> colors)
    : ambient_(std::move(ambient)), colors_(std::move(colors)) {
    if (colors_.size() != ambient_.size())
        throw Error(ErrorCode::IndexOutOfRange, "coloring size does not match the ambient space");
}

ChromaticPair ChromaticPair::from_map(FiniteMetricSpace ambient, const std::map<Index, Color>& colors) {
    std::vector<std::optional<Color>> c(ambient.size());
    for (const auto& [i, color] : colors) {
        require_index(i, ambient.size());
        c[i] = color;
    }
    return ChromaticPair(std::move(ambient), std::move(c));
}

std::vector<Index> ChromaticPair::colored_points() const {
    std::vector<Index> out;
    for (Index i = 0; i < colors_.size(); ++i)
        if (colors_[i]) out.push_back(i);
    return out;
}

std::vector<Index> ChromaticPair::class_of(const ColorSet& sigma) const {
    std::vector<Index> out;
    for (Index i = 0; i < colors_.size(); ++i)
        if (colors_[i] && sigma.contains(*colors_[i])) out.push_back(i);
    return out;
}

ColorSet ChromaticPair::universe() const {
    ColorSet u;
    for (const auto& c : colors_)
        if (c) u.insert(*c);
    return u;
}

Relation Relation::inverse() const {
    Relation r;
    r.pairs.reserve(pairs.size());
    for (const auto& [a, b] : pairs) r.pairs.emplace_back(b, a);
    return r;
}

bool Relation::is_correspondence(std::size_t n_source, std::size_t n_target) const {
    std::vector<bool> left(n_source), right(n_target);
    for (const auto& [a, b] : pairs) {
        if (a >= n_source || b >= n_target) return false;
        left[a] = right[b] = true;
    }
    return std::all_of(left.begin(), left.end(), [](bool v) { return v; }) &&
           std::all_of(right.begin(), right.end(), [](bool v) { return v; });
}

Relation Relation::graph(std::span<const Index> assignment) {
    Relation r;
    for (Index i = 0; i < assignment.size(); ++i) r.pairs.emplace_back(i, assignment[i]);
    return r;
}

MapSpec::MapSpec(const ChromaticPair& source, const ChromaticPair& target, std::vector<Index> assignment)
    : source_(source), target_(target), assignment_(std::move(assignment)) {
    if (assignment_.size() != source.size())
        throw Error(ErrorCode::MismatchedSpaces, "assignment is not total on the source");
    for (Index y : assignment_) require_index(y, target.size());
}

double distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Relation& r) {
    if (r.pairs.empty()) throw Error(ErrorCode::EmptyRelation, "distortion of an empty relation");
    for (const auto& [a, b] : r.pairs) {
        require_index(a, x.size());
        require_index(b, y.size());
    }
    double best = 0.0;
    for (std::size_t i = 0; i < r.pairs.size(); ++i)
        for (std::size_t j = i + 1; j < r.pairs.size(); ++j) {
            const auto& [a, b] = r.pairs[i];
            const auto& [c, e] = r.pairs[j];
            best = std::max(best, std::abs(x(a, c) - y(b, e)));
        }
    return best;
}

double distortion(const MapSpec& f) {
    return distortion(f.source().ambient(), f.target().ambient(), Relation::graph(f.assignment()));
}

double codistortion(const MapSpec& f, const MapSpec& g) {
    if (!(f.source() == g.target()) || !(f.target() == g.source()))
        throw Error(ErrorCode::MismatchedSpaces, "codistortion needs f: A1 -> A2 and g: A2 -> A1");
    const auto& a1 = f.source().ambient();
    const auto& a2 = f.target().ambient();
    double best = 0.0;
    for (Index x = 0; x < a1.size(); ++x)
        for (Index y = 0; y < a2.size(); ++y) best = std::max(best, std::abs(a1(x, g(y)) - a2(f(x), y)));
    return best;
}

double hausdorff(const FiniteMetricSpace& space, std::span<const Index> a, std::span<const Index> b) {
    if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySubset, "Hausdorff distance needs non-empty sets");
    for (Index i : a) require_index(i, space.size());
    for (Index i : b) require_index(i, space.size());
    auto directed = [&](std::span<const Index> from, std::span<const Index> to) {
        double worst = 0.0;
        for (Index p : from) {
            double nearest = std::numeric_limits<double>::infinity();
            for (Index q : to) nearest = std::min(nearest, space(p, q));
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

double constrained_hausdorff(const ChromaticPair& pair, std::span<const Index> y, std::span<const Index> z,
                             const ConstraintSet& c) {
    for (Index i : y)
        if (i >= pair.size() || !pair.is_colored(i)) throw Error(ErrorCode::NotColored, "Y must lie in the colored set");
    for (Index i : z)
        if (i >= pair.size() || !pair.is_colored(i)) throw Error(ErrorCode::NotColored, "Z must lie in the colored set");
    require_covers(c, pair);

    double best = hausdorff(pair.ambient(), y, z);
    auto restrict_to = [&](std::span<const Index> s, const ColorSet& sigma) {
        std::vector<Index> out;
        for (Index i : s)
            if (sigma.contains(*pair.color(i))) out.push_back(i);
        return out;
    };
    for (const ColorSet& sigma : c.family()) {
        const auto ys = restrict_to(y, sigma);
        const auto zs = restrict_to(z, sigma);
        if (ys.empty() && zs.empty()) continue;
        if (ys.empty() || zs.empty()) return std::numeric_limits<double>::infinity();
        best = std::max(best, hausdorff(pair.ambient(), ys, zs));
    }
    return best;
}

FiniteMetricSpace glue_metric(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Relation& r) {
    if (!r.is_correspondence(x.size(), y.size()))
        throw Error(ErrorCode::NotACorrespondence, "gluing needs a correspondence");
    const double eps = distortion(x, y, r) / 2.0;
    const std::size_t n = x.size(), m = y.size(), total = n + m;
    std::vector<double> d(total * total, 0.0);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) d[i * total + j] = x(i, j);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) d[(n + i) * total + n + j] = y(i, j);
    for (Index z = 0; z < n; ++z)
        for (Index w = 0; w < m; ++w) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& [a, b] : r.pairs) best = std::min(best, x(z, a) + eps + y(b, w));
            d[z * total + n + w] = d[(n + w) * total + z] = best;
        }
    return FiniteMetricSpace(total, std::move(d), eps == 0.0 || x.is_pseudo() || y.is_pseudo());
}

ChromaticPair subspace(const ChromaticPair& pair, std::span<const Index> indices) {
    const std::size_t k = indices.size();
    std::vector<bool> seen(pair.size());
    for (Index i : indices) {
        require_index(i, pair.size());
        if (seen[i]) throw Error(ErrorCode::IndexOutOfRange, "duplicate index " + std::to_string(i));
        seen[i] = true;
    }
    std::vector<double> d(k * k);
    std::vector<std::optional<Color>> colors(k);
    for (Index a = 0; a < k; ++a) {
        colors[a] = pair.color(indices[a]);
        for (Index b = 0; b < k; ++b) d[a * k + b] = pair.d(indices[a], indices[b]);
    }
    return ChromaticPair(FiniteMetricSpace(k, std::move(d), pair.ambient().is_pseudo()), std::move(colors));
}

Matrix point_distances(const std::vector<std::vector<double>>& points, Norm norm) {
    const std::size_t n = points.size();
    Matrix m(n, std::vector<double>(n, 0.0));
    for (Index i = 0; i < n; ++i) {
        if (points[i].size() != points[0].size())
            throw Error(ErrorCode::MalformedMatrix, "points have different dimensions");
        for (Index j = i + 1; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < points[i].size(); ++k) {
                const double diff = std::abs(points[i][k] - points[j][k]);
                switch (norm) {
                    case Norm::Euclidean: acc += diff * diff; break;
                    case Norm::L1: acc += diff; break;
                    case Norm::Linf: acc = std::max(acc, diff); break;
                }
            }
            m[i][j] = m[j][i] = norm == Norm::Euclidean ? std::sqrt(acc) : acc;
        }
    }
    return m;
}

}  // namespace chromgh
