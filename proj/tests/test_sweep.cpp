#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "solenoid/sweep.hpp"

using namespace solenoid;

namespace {
SweepConfig default_cfg() {
    SweepConfig cfg;
    for (int i = 0; i <= 10; ++i) cfg.mu_grid.push_back(i / 10.0);
    return cfg;
}
}  // namespace

TEST_CASE("path endpoints") {
    SweepConfig cfg = default_cfg();
    CHECK(base_for_mu(cfg, 0.0).family == MapFamily::linear);
    CircleMapConfig b = base_for_mu(cfg, 0.6);
    CHECK(b.family == MapFamily::bump);
    CHECK(b.eps == doctest::Approx(0.3));
    CHECK(b.delta == doctest::Approx(0.12));
    CHECK_THROWS_AS(base_for_mu(cfg, 1.5), ConfigError);
}

TEST_CASE("regime detection on the three reference maps") {
    RegimeReport lin = regime_detect(SkewConfig{CircleMapConfig::linear(2), 0.2}, 4, 8);
    CHECK(lin.regime == Regime::expanding_attractor);
    CHECK(lin.n_attracting_orbits == 0);
    CHECK(lin.gap_measure == 0.0);
    CHECK(!lin.sink);

    RegimeReport bmp = regime_detect(SkewConfig{CircleMapConfig::bump(2, 0.5, 0.2), 0.2}, 4, 8);
    CHECK(bmp.regime == Regime::zero_dim_plus_periodic);
    CHECK(bmp.n_attracting_orbits == 1);
    REQUIRE(bmp.sink.has_value());
    CHECK(bmp.sink->t == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(std::abs(bmp.sink->z - std::complex<double>{0.625, 0.0}) < 1e-10);

    RegimeReport sh = regime_detect(SkewConfig{CircleMapConfig::shub(2, 0.2), 0.2}, 4, 8);
    CHECK(sh.regime == Regime::zero_dim_plus_periodic);
    REQUIRE(sh.sink.has_value());
    CHECK(sh.sink->t == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("default sweep: one regime switch at mu = 0+") {
    SweepConfig cfg = default_cfg();
    std::vector<RegimeReport> reps = run_sweep(cfg);
    REQUIRE(reps.size() == 11);
    CHECK(reps[0].regime == Regime::expanding_attractor);
    int switches = 0;
    for (std::size_t i = 1; i < reps.size(); ++i) {
        CHECK(reps[i].error.empty());
        if (reps[i].regime != reps[i - 1].regime) ++switches;
        CHECK(reps[i].regime == Regime::zero_dim_plus_periodic);
        REQUIRE(reps[i].sink.has_value());
        CHECK(std::abs(reps[i].sink->t) < 1e-10);
        CHECK(std::abs(reps[i].sink->z - std::complex<double>{0.625, 0.0}) < 1e-10);
    }
    CHECK(switches == 1);
}

TEST_CASE("sink satisfies the fixed-point equation along the sweep") {
    SweepConfig cfg = default_cfg();
    for (const RegimeReport& rep : run_sweep(cfg)) {
        if (!rep.sink) continue;
        SkewConfig F{base_for_mu(cfg, rep.mu), cfg.lambda};
        TorusPoint q = apply(F, *rep.sink);
        CHECK(circle_dist(q.t, rep.sink->t) + std::abs(q.z - rep.sink->z) < 1e-10);
    }
}

TEST_CASE("gap measure is non-decreasing along the default grid") {
    std::vector<RegimeReport> reps = run_sweep(default_cfg());
    double prev = reps[0].gap_measure;
    CHECK(prev == 0.0);
    for (std::size_t i = 1; i < reps.size(); ++i) {
        CHECK(reps[i].gap_measure >= prev - 1e-12);
        prev = reps[i].gap_measure;
    }
}

TEST_CASE("C0 convergence proxy along the path") {
    double prev_sup = 1.0;
    for (double mu : {0.4, 0.2, 0.1, 0.05}) {
        CircleMapConfig base = base_for_mu(default_cfg(), mu);
        double sup = sup_distance_to_linear(base, 100000);
        CHECK(sup <= base.delta * base.degree);
        CHECK(sup < prev_sup);
        prev_sup = sup;
    }
}

TEST_CASE("sink trace") {
    SweepConfig cfg = default_cfg();
    std::vector<SinkRow> rows = sink_trace(cfg);
    REQUIRE(rows.size() == 10);  // no mu = 0 row
    for (const SinkRow& row : rows) {
        CHECK(row.mu > 0.0);
        CHECK(std::abs(row.sink.t) < 1e-10);
        CHECK(std::abs(row.sink.z - std::complex<double>{0.625, 0.0}) < 1e-10);
    }

    // single-point grid
    SweepConfig one;
    one.mu_grid = {0.0};
    CHECK(run_sweep(one).size() == 1);
    CHECK(sink_trace(one).empty());
}

TEST_CASE("sweep config validation") {
    SweepConfig bad;
    CHECK_THROWS_AS(run_sweep(bad), ConfigError);
    bad.mu_grid = {0.5, 0.1};
    CHECK_THROWS_AS(run_sweep(bad), ConfigError);
}
