#pragma once

#include <chromgh/color_set.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace chromgh {

using Index = std::size_t;
using Matrix = std::vector<std::vector<double>>;

class FiniteMetricSpace;
class ChromaticPair;
class ConstraintSet;
struct Relation;

FiniteMetricSpace validate_metric(const Matrix& matrix, bool allow_pseudo = false);
ChromaticPair subspace(const ChromaticPair& pair, std::span<const Index> indices);
FiniteMetricSpace glue_metric(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Relation& r);

// Relative tolerance used when checking the metric axioms.
inline double metric_tolerance(double max_entry) { return 1e-9 * (1.0 + max_entry); }

// Immutable distance matrix that satisfies the metric axioms. Only
// validate_metric, subspace and glue_metric construct one.
class FiniteMetricSpace {
public:
    FiniteMetricSpace() = default;

    std::size_t size() const { return n_; }
    double operator()(Index i, Index j) const { return d_[i * n_ + j]; }
    bool is_pseudo() const { return pseudo_; }

    double diameter() const;
    double diameter(std::span<const Index> subset) const;
    Matrix to_matrix() const;

    bool operator==(const FiniteMetricSpace&) const = default;

private:
    FiniteMetricSpace(std::size_t n, std::vector<double> d, bool pseudo)
        : n_(n), d_(std::move(d)), pseudo_(pseudo) {}

    friend FiniteMetricSpace validate_metric(const Matrix&, bool);
    friend ChromaticPair subspace(const ChromaticPair&, std::span<const Index>);
    friend FiniteMetricSpace glue_metric(const FiniteMetricSpace&, const FiniteMetricSpace&, const Relation&);

    std::size_t n_ = 0;
    std::vector<double> d_;
    bool pseudo_ = false;
};

// Ambient metric space with a coloring on a subset of its points.
class ChromaticPair {
public:
    ChromaticPair() = default;
    ChromaticPair(FiniteMetricSpace ambient, std::vector<std::optional<Color>> colors);
    static ChromaticPair from_map(FiniteMetricSpace ambient, const std::map<Index, Color>& colors);

    const FiniteMetricSpace& ambient() const { return ambient_; }
    std::size_t size() const { return ambient_.size(); }
    double d(Index i, Index j) const { return ambient_(i, j); }

    std::optional<Color> color(Index i) const { return colors_[i]; }
    bool is_colored(Index i) const { return colors_[i].has_value(); }
    const std::vector<std::optional<Color>>& colors() const { return colors_; }

    std::vector<Index> colored_points() const;
    std::vector<Index> class_of(const ColorSet& sigma) const;
    ColorSet universe() const;

    bool operator==(const ChromaticPair&) const = default;

private:
    FiniteMetricSpace ambient_;
    std::vector<std::optional<Color>> colors_;
};

struct Relation {
    std::vector<std::pair<Index, Index>> pairs;

    Relation inverse() const;
    bool is_correspondence(std::size_t n_source, std::size_t n_target) const;
    static Relation graph(std::span<const Index> assignment);
};

// Non-owning view of a map between the ambient sets of two pairs.
class MapSpec {
public:
    MapSpec(const ChromaticPair& source, const ChromaticPair& target, std::vector<Index> assignment);

    const ChromaticPair& source() const { return source_.get(); }
    const ChromaticPair& target() const { return target_.get(); }
    const std::vector<Index>& assignment() const { return assignment_; }
    Index operator()(Index i) const { return assignment_[i]; }

private:
    std::reference_wrapper<const ChromaticPair> source_;
    std::reference_wrapper<const ChromaticPair> target_;
    std::vector<Index> assignment_;
};

double distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Relation& r);
double distortion(const MapSpec& f);
double codistortion(const MapSpec& f, const MapSpec& g);

double hausdorff(const FiniteMetricSpace& space, std::span<const Index> a, std::span<const Index> b);

// Infinite when some member of C colors points of exactly one of Y, Z.
double constrained_hausdorff(const ChromaticPair& pair, std::span<const Index> y, std::span<const Index> z,
                             const ConstraintSet& c);

enum class Norm { Euclidean, L1, Linf };

Matrix point_distances(const std::vector<std::vector<double>>& points, Norm norm);

}  // namespace chromgh
