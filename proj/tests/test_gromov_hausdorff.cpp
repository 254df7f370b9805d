#include "oracles.hpp"

#include <chromgh/error.hpp>
#include <chromgh/fixtures.hpp>
#include <chromgh/gromov_hausdorff.hpp>
#include <chromgh/invariants.hpp>

#include <doctest.h>

using namespace chromgh;

namespace {

ChromaticPair unit_space(std::vector<std::optional<Color>> colors) {
    Matrix m(colors.size(), std::vector<double>(colors.size(), 1.0));
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = 0;
    return ChromaticPair(validate_metric(m), std::move(colors));
}

ChromaticPair line(const std::vector<double>& xs, std::vector<std::optional<Color>> colors) {
    std::vector<std::vector<double>> pts;
    for (double x : xs) pts.push_back({x});
    return ChromaticPair(validate_metric(point_distances(pts, Norm::Euclidean)), std::move(colors));
}

std::vector<Index> identity(std::size_t n) {
    std::vector<Index> v(n);
    std::iota(v.begin(), v.end(), Index{0});
    return v;
}

struct Instance {
    ChromaticPair a, b;
    ConstraintSet c;
};

Instance random_instance(std::uint64_t seed, std::uint64_t i, std::size_t max_points = 3) {
    auto rng = trial_rng(seed, i);
    const auto colors = static_cast<std::uint32_t>(1 + rng.below(3));
    auto a = oracle::random_grid_cloud(rng, 1 + rng.below(max_points), colors, 0.8).pair();
    auto b = oracle::random_grid_cloud(rng, 1 + rng.below(max_points), colors, 0.8).pair();
    return {std::move(a), std::move(b), oracle::random_constraints(rng, colors)};
}

}  // namespace

TEST_CASE("identical pairs are at distance zero") {
    const auto p = example_cloud("ex-sixpack-chi1").to_pair();
    const auto c = ConstraintSet::of({0, 1}, {ColorSet{0}});
    CHECK(gh_exact(p, p, c) == 0);
    CHECK(gh_lower(p, p, c) == 0);
    CHECK(gh_upper(MapSpec(p, p, identity(p.size())), MapSpec(p, p, identity(p.size())), c) == 0);
    const auto small = unit_space({Color{0}, Color{1}});
    CHECK(gh_corr_oracle(small, small, ConstraintSet::discrete({0, 1})) == 0);
}

TEST_CASE("two uncolored two-point spaces") {
    const auto a = line({0, 2}, {std::nullopt, std::nullopt});
    const auto b = line({0, 4}, {std::nullopt, std::nullopt});
    const auto c = ConstraintSet::trivial({});
    CHECK(gh_exact(a, b, c) == 1);
    CHECK(gh_corr_oracle(a, b, c) == 1);
    CHECK(oracle::gh_maps_bruteforce(a, b, c) == 1);
}

TEST_CASE("no constrained map gives infinity") {
    const auto abc = unit_space({Color{0}, Color{1}, Color{2}});
    const auto xy = unit_space({Color{0}, Color{2}});
    const auto c = ConstraintSet::of({0, 1, 2}, {ColorSet{0, 1}, ColorSet{1, 2}});
    CHECK(std::isinf(gh_exact(abc, xy, c)));
    CHECK(std::isinf(gh_corr_oracle(abc, xy, c)));
    CHECK(std::isinf(gh_lower(abc, xy, c)));
    const auto r = gh_search(abc, xy, c);
    CHECK(r.f.empty());
}

TEST_CASE("gh_upper on the integer line example") {
    ExampleParams params;
    params.eps = 0.5;
    const auto p1 = gen_example("ex-dist-chi1", params), p2 = gen_example("ex-dist-chi-eps", params);
    const auto cd = ConstraintSet::discrete({0, 1});
    const auto id = identity(p1.size());
    CHECK(gh_upper(MapSpec(p1, p2, id), MapSpec(p2, p1, id), cd) == 0.25);
    CHECK(gh_lower(p1, p2, cd) == 0.25);
}

TEST_CASE("gh_upper rejects unconstrained maps") {
    const auto a = unit_space({Color{0}, Color{1}});
    const auto cd = ConstraintSet::discrete({0, 1});
    try {
        gh_upper(MapSpec(a, a, {1, 0}), MapSpec(a, a, {0, 1}), cd);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotConstrained);
        CHECK(std::string(e.what()).find('f') != std::string::npos);
    }
}

TEST_CASE("exact search matches brute force over map pairs") {
    for (std::uint64_t i = 0; i < 60; ++i) {
        const auto in = random_instance(300, i);
        const auto r = gh_search(in.a, in.b, in.c);
        CHECK(r.value == oracle::gh_maps_bruteforce(in.a, in.b, in.c));
        if (!std::isinf(r.value)) {
            // The witness is admissible and attains the value.
            const MapSpec f(in.a, in.b, r.f), g(in.b, in.a, r.g);
            CHECK(gh_upper(f, g, in.c) == r.value);
        }
    }
}

TEST_CASE("sandwich, symmetry and oracle agreement") {
    for (std::uint64_t i = 0; i < 60; ++i) {
        const auto in = random_instance(301, i);
        const double exact = gh_exact(in.a, in.b, in.c);
        CHECK(gh_lower(in.a, in.b, in.c) <= exact);
        CHECK(exact == gh_exact(in.b, in.a, in.c));
        CHECK(exact == gh_corr_oracle(in.a, in.b, in.c));
    }
}

TEST_CASE("larger instances stay within the sandwich") {
    for (std::uint64_t i = 0; i < 20; ++i) {
        const auto in = random_instance(302, i, 6);
        const double exact = gh_exact(in.a, in.b, in.c);
        CHECK(gh_lower(in.a, in.b, in.c) <= exact);
    }
}

TEST_CASE("monotone in constraint strength and invariant under equal strength") {
    for (std::uint64_t i = 0; i < 40; ++i) {
        auto in = random_instance(303, i);
        auto rng = trial_rng(304, i);
        // Adding members can only strengthen.
        ColorFamily more = in.c.members();
        more.push_back(oracle::random_subset(rng, static_cast<std::uint32_t>(in.c.universe().size())));
        if (more.back().empty()) more.pop_back();
        const auto stronger = ConstraintSet::of(in.c.universe(), more);
        CHECK(gh_exact(in.a, in.b, in.c) <= gh_exact(in.a, in.b, stronger));
        CHECK(gh_exact(in.a, in.b, in.c) == gh_exact(in.a, in.b, sigma_constraints(in.c)));
        CHECK(gh_exact(in.a, in.b, in.c) == gh_exact(in.a, in.b, topology_constraints(in.c)));
    }
}

TEST_CASE("ambient-only mode ignores colors") {
    const auto a = line({0, 1}, {Color{0}, std::nullopt});
    const auto b = line({0, 1}, {std::nullopt, Color{0}});
    CHECK(gh_exact(a, b, ConstraintSet::ambient_only()) == 0);
    const auto c = line({0, 3}, {std::nullopt, std::nullopt});
    CHECK(gh_exact(a, c, ConstraintSet::ambient_only()) == 1);
    CHECK(gh_lower(a, c, ConstraintSet::ambient_only()) == 1);
}

TEST_CASE("budget exhaustion reports bounds") {
    const auto p1 = example_cloud("ex-cgh-chi2").to_pair();
    const auto p2 = example_cloud("ex-cgh-chi3").to_pair();
    try {
        gh_exact(p1, p2, ConstraintSet::trivial({0, 1}), 50);
        FAIL("no error");
    } catch (const BudgetExceeded& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
        CHECK(e.lower() <= e.best_upper());
    }
    const auto big = unit_space({Color{0}, Color{0}, Color{0}, Color{0}, Color{0}});
    CHECK_THROWS_AS(gh_corr_oracle(big, big, ConstraintSet::trivial({0})), BudgetExceeded);
}

TEST_CASE("constrained isomorphism") {
    const auto p = example_cloud("ex-inv-plane-chi1").to_pair();
    const auto iso = constrained_isomorphic(p, p, ConstraintSet::discrete({0, 1}));
    CHECK(iso.isomorphic);
    REQUIRE(iso.witness);
    CHECK(*iso.witness == identity(p.size()));
    const auto q = example_cloud("ex-inv-plane-chi2").to_pair();
    CHECK_FALSE(constrained_isomorphic(p, q, ConstraintSet::discrete({0, 1})).isomorphic);
    // With only the universe member the two colorings are interchangeable.
    CHECK(constrained_isomorphic(p, q, ConstraintSet::trivial({0, 1})).isomorphic);
}

TEST_CASE("permuted copies are isomorphic with zero distance") {
    for (std::uint64_t i = 0; i < 20; ++i) {
        auto rng = trial_rng(305, i);
        const auto cloud = oracle::random_grid_cloud(rng, 1 + rng.below(5), 2, 0.8);
        auto shuffled = cloud;
        std::vector<Index> perm = identity(cloud.points.size());
        for (Index k = perm.size(); k > 1; --k) std::swap(perm[k - 1], perm[rng.below(k)]);
        for (Index k = 0; k < perm.size(); ++k) {
            shuffled.points[k] = cloud.points[perm[k]];
            shuffled.colors[k] = cloud.colors[perm[k]];
        }
        const auto c = oracle::random_constraints(rng, 2);
        const auto a = cloud.pair(), b = shuffled.pair();
        const auto iso = constrained_isomorphic(a, b, c);
        CHECK(iso.isomorphic);
        CHECK(gh_exact(a, b, c) == 0);
        REQUIRE(iso.witness);
        CHECK(distortion(MapSpec(a, b, *iso.witness)) <= 1e-12);
    }
}
