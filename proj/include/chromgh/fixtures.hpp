#pragma once

#include <chromgh/metric.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chromgh {

struct ExampleParams {
    double r = 1.0;
    double eps = 0.5;
    double step = 0.25;
    int truncation = 10;  // points 0..N-1 of the natural numbers
    double a = 2.0;       // ellipse semi-axes
    double b = 1.0;
};

// Colored point cloud behind a generated example, kept so callers can build
// maps from coordinates.
struct ExampleCloud {
    std::vector<std::vector<double>> points;
    std::vector<std::optional<Color>> colors;
    Norm norm = Norm::Euclidean;

    ChromaticPair to_pair() const;
    // Index of the point at these coordinates (within 1e-9), if any.
    std::optional<Index> find(const std::vector<double>& coords) const;
};

const std::vector<std::string>& example_names();

ExampleCloud example_cloud(std::string_view name, const ExampleParams& params = {});
ChromaticPair gen_example(std::string_view name, const ExampleParams& params = {});

}  // namespace chromgh
