#pragma once

#include <chromgh/color_set.hpp>
#include <chromgh/metric.hpp>

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace chromgh {

inline constexpr std::size_t kDefaultSimplexCap = 2'000'000;

// Pattern complex on colors, given by its maximal faces.
class ComplexSpec {
public:
    ComplexSpec() = default;
    explicit ComplexSpec(ColorFamily faces);

    const ColorFamily& maximal_faces() const { return faces_; }
    bool contains(const ColorSet& face) const;
    ColorSet vertices() const;
    bool is_subcomplex_of(const ComplexSpec& other) const;

    bool operator==(const ComplexSpec&) const = default;

private:
    ColorFamily faces_;
};

struct Simplex {
    std::vector<Index> vertices;  // sorted ambient indices
    double value = 0.0;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Simplex&) const = default;
};

// Orders by value, then dimension, then vertex list.
bool canonical_less(const Simplex& a, const Simplex& b);

struct Filtration {
    std::vector<Simplex> simplices;  // canonical order
    int max_dim = 0;
    std::vector<Index> dropped_vertices;
};

double circumradius(const ChromaticPair& pair, std::span<const Index> simplex);

Filtration cech_filtration(const ChromaticPair& pair, int max_dim, std::size_t cap = kDefaultSimplexCap);

// Simplices whose color set lies in a maximal face of gamma. Colored points
// whose color is not a vertex of gamma are dropped and listed.
Filtration chromatic_filtration(const ChromaticPair& pair, const ComplexSpec& gamma, int max_dim,
                                std::size_t cap = kDefaultSimplexCap);

// Monotone set function on a finite set; subsets are bitmasks over `points`.
class FilteredSpace {
public:
    FilteredSpace(std::vector<Index> points, std::size_t max_size, std::unordered_map<std::uint64_t, double> values);

    const std::vector<Index>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    std::size_t max_size() const { return max_size_; }
    double value(std::uint64_t mask) const;

private:
    std::vector<Index> points_;
    std::size_t max_size_;
    std::unordered_map<std::uint64_t, double> values_;
};

FilteredSpace filtered_space(const ChromaticPair& pair, int max_dim);

// Relation between local positions of two filtered spaces, covering both.
struct Tripod {
    Relation r;
};

double tripod_defect(const FilteredSpace& f1, const FilteredSpace& f2, const Tripod& t);
double dF_bruteforce(const FilteredSpace& f1, const FilteredSpace& f2);

}  // namespace chromgh
