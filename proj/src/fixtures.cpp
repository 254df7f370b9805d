#include <chromgh/error.hpp>
#include <chromgh/fixtures.hpp>

#include <cmath>
#include <numbers>

namespace chromgh {

namespace {

// Grid points u + k*h of the half-open segment [u, v).
std::vector<double> half_open(double u, double v, double h) {
    std::vector<double> out;
    const auto count = static_cast<long>(std::ceil((v - u) / h - 1e-9));
    for (long k = 0; k < count; ++k) out.push_back(u + static_cast<double>(k) * h);
    return out;
}

// Grid of the closed segment [u, v]; the step must divide its length.
std::vector<double> closed(double u, double v, double h) {
    const double steps = (v - u) / h;
    const auto m = std::lround(steps);
    if (std::abs(steps - static_cast<double>(m)) > 1e-9)
        throw Error(ErrorCode::BadParams, "step must divide the segment length");
    std::vector<double> out;
    for (long k = 0; k <= m; ++k) out.push_back(u + static_cast<double>(k) * h);
    out.back() = v;
    return out;
}

void add_line(ExampleCloud& cloud, const std::vector<double>& xs, std::optional<Color> color) {
    for (double x : xs) {
        cloud.points.push_back({x});
        cloud.colors.push_back(color);
    }
}

ExampleCloud interval_example(std::string_view name, const ExampleParams& p) {
    ExampleCloud c;
    const double r = p.r, h = p.step;
    if (name == "ex-cgh-chi1") {
        add_line(c, half_open(0, 3 * r, h), 0);
    } else if (name == "ex-cgh-chi2") {
        add_line(c, half_open(0, r, h), 1);
        add_line(c, half_open(r, 4 * r, h), 0);
    } else if (name == "ex-cgh-chi3") {
        add_line(c, half_open(0, r, h), 1);
        add_line(c, half_open(r, 4 * r, h), 0);
        add_line(c, half_open(4 * r, 5 * r, h), 1);
    } else {
        add_line(c, half_open(0, 3 * r, h), 1);
    }
    return c;
}

// Two polygonal "V" shapes in the L1 plane; the second is the first shifted
// one unit to the right.
ExampleCloud plane_example(bool swapped, const ExampleParams& p) {
    ExampleCloud c;
    c.norm = Norm::L1;
    const auto ts = closed(0.0, 1.0, p.step);
    for (int shape = 0; shape < 2; ++shape) {
        const double dx = shape;
        const Color color = static_cast<Color>(swapped ? 1 - shape : shape);
        for (double t : ts) {
            c.points.push_back({t + dx, t});
            c.colors.push_back(color);
        }
        for (std::size_t k = ts.size() - 1; k-- > 0;) {
            const double t = ts[k];
            c.points.push_back({t + dx, 2.0 - t});
            c.colors.push_back(color);
        }
    }
    return c;
}

ExampleCloud dist_example(double negative, const ExampleParams& p) {
    if (p.truncation < 1) throw Error(ErrorCode::BadParams, "truncation must be positive");
    ExampleCloud c;
    c.points.push_back({negative});
    c.colors.push_back(1);
    for (int n = 0; n < p.truncation; ++n) {
        c.points.push_back({static_cast<double>(n)});
        c.colors.push_back(0);
    }
    return c;
}

ExampleCloud sixpack_example(bool swapped, const ExampleParams& p) {
    ExampleCloud c;
    const double r = p.r;
    const Color low = swapped ? 1 : 0, high = swapped ? 0 : 1;
    for (double x : closed(0.0, 2 * r, p.step)) {
        c.points.push_back({x});
        c.colors.push_back(x < r || x == 2 * r ? low : high);
    }
    c.points.push_back({3 * r});
    c.colors.push_back(high);
    return c;
}

ExampleCloud ellipse_example(const ExampleParams& p) {
    if (p.a < p.b || p.b <= 0) throw Error(ErrorCode::BadParams, "ellipse needs a >= b > 0");
    ExampleCloud c;
    c.points.push_back({0.0, 0.0});
    c.colors.push_back(0);
    const auto quarter = static_cast<long>(std::ceil(2 * std::numbers::pi * p.a / (4 * p.step)));
    const long m = 4 * quarter;
    for (long k = 0; k < m; ++k) {
        double x = 0.0, y = 0.0;
        switch (k % quarter == 0 ? k / quarter : -1) {
            case 0: x = p.a; break;
            case 1: y = p.b; break;
            case 2: x = -p.a; break;
            case 3: y = -p.b; break;
            default: {
                const double theta = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
                x = p.a * std::cos(theta);
                y = p.b * std::sin(theta);
            }
        }
        c.points.push_back({x, y});
        c.colors.push_back(k == 0 ? 0 : 1);
    }
    return c;
}

}  // namespace

ChromaticPair ExampleCloud::to_pair() const {
    return ChromaticPair(validate_metric(point_distances(points, norm)), colors);
}

std::optional<Index> ExampleCloud::find(const std::vector<double>& coords) const {
    for (Index i = 0; i < points.size(); ++i) {
        bool same = points[i].size() == coords.size();
        for (std::size_t k = 0; same && k < coords.size(); ++k) same = std::abs(points[i][k] - coords[k]) <= 1e-9;
        if (same) return i;
    }
    return std::nullopt;
}

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names{
        "ex-cgh-chi1",   "ex-cgh-chi2",  "ex-cgh-chi3",     "ex-cgh-chi4",     "ex-inv-plane-chi1", "ex-inv-plane-chi2",
        "ex-dist-chi1",  "ex-dist-chi-eps", "ex-sixpack-chi1", "ex-sixpack-chi2", "ex-ellipse"};
    return names;
}

ExampleCloud example_cloud(std::string_view name, const ExampleParams& params) {
    if (!(params.step > 0) || !(params.r > 0)) throw Error(ErrorCode::BadParams, "r and step must be positive");
    if (name.starts_with("ex-cgh-chi") && name.size() == 11 && name[10] >= '1' && name[10] <= '4')
        return interval_example(name, params);
    if (name == "ex-inv-plane-chi1") return plane_example(false, params);
    if (name == "ex-inv-plane-chi2") return plane_example(true, params);
    if (name == "ex-dist-chi1") return dist_example(-1.0, params);
    if (name == "ex-dist-chi-eps") {
        if (!(params.eps > 0 && params.eps < 1)) throw Error(ErrorCode::BadParams, "eps must lie in (0,1)");
        return dist_example(-params.eps, params);
    }
    if (name == "ex-sixpack-chi1") return sixpack_example(false, params);
    if (name == "ex-sixpack-chi2") return sixpack_example(true, params);
    if (name == "ex-ellipse") return ellipse_example(params);
    throw Error(ErrorCode::UnknownExample, std::string(name));
}

ChromaticPair gen_example(std::string_view name, const ExampleParams& params) {
    return example_cloud(name, params).to_pair();
}

}  // namespace chromgh
