#include <chromgh/io.hpp>
#include <chromgh/stability.hpp>

#include <doctest.h>

using namespace chromgh;

TEST_CASE("unperturbed trials have zero bottleneck distances") {
    RunConfig cfg;
    cfg.seed = 11;
    cfg.trials = 15;
    cfg.perturbation = 0;
    const auto report = stability_trial(cfg);
    CHECK(report.failures == 0);
    for (const auto& t : report.trials) {
        if (t.skipped) continue;
        CHECK(t.gh == 0);
        for (const auto& c : t.checks) {
            INFO(c.name);
            CHECK(c.lhs == 0);
        }
    }
}

TEST_CASE("same seed gives identical reports") {
    RunConfig cfg;
    cfg.seed = 12;
    cfg.trials = 10;
    const auto a = io::dump(report_to_json(stability_trial(cfg)));
    CHECK(a == io::dump(report_to_json(stability_trial(cfg))));
    cfg.seed = 13;
    CHECK(a != io::dump(report_to_json(stability_trial(cfg))));
}

TEST_CASE("a trial does not depend on the others") {
    RunConfig cfg;
    cfg.seed = 14;
    cfg.trials = 8;
    const auto report = stability_trial(cfg);
    for (int i = 7; i >= 0; --i) {
        const auto alone = run_trial(cfg, i);
        CHECK(alone.gh == report.trials[i].gh);
        REQUIRE(alone.checks.size() == report.trials[i].checks.size());
        for (std::size_t k = 0; k < alone.checks.size(); ++k) CHECK(alone.checks[k].lhs == report.trials[i].checks[k].lhs);
    }
}

TEST_CASE("small runs pass every inequality") {
    RunConfig cfg;
    cfg.seed = 15;
    cfg.trials = 30;
    cfg.perturbation = 0.2;
    const auto report = stability_trial(cfg);
    CHECK(report.failures == 0);
    CHECK(report.skipped == 0);
    CHECK(report.checks > 0);
    const auto j = report_to_json(report);
    CHECK(j.contains("trials"));
}
