#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "solenoid/nonwandering.hpp"
#include "solenoid/rng.hpp"

using namespace solenoid;

namespace {
const CircleMapConfig kLinear2 = CircleMapConfig::linear(2);
const CircleMapConfig kBump = CircleMapConfig::bump(2, 0.5, 0.2);
const CircleMapConfig kShub = CircleMapConfig::shub(2, 0.2);
const SkewConfig kF{kLinear2, 0.2};
const SkewConfig kBumpF{kBump, 0.2};

double total_measure(const std::vector<Interval>& gaps) {
    double m = 0.0;
    for (const Interval& iv : gaps) m += iv.length();
    return m;
}
}  // namespace

TEST_CASE("linear map classifies as the whole circle") {
    NWReport rep = classify_nw(kLinear2, 6, 8);
    CHECK(rep.kind == NWKind::whole_circle);
    CHECK(rep.attracting_orbits.empty());
    CHECK(rep.gaps.empty());
    CHECK(rep.gap_measure == 0.0);
    CHECK(!rep.repelling_orbits.empty());
}

TEST_CASE("bump map classifies as Cantor plus orbits") {
    NWReport rep = classify_nw(kBump, 6, 8);
    CHECK(rep.kind == NWKind::cantor_plus_orbits);
    REQUIRE(rep.attracting_orbits.size() == 1);
    CHECK(rep.attracting_orbits[0].period == 1);
    CHECK(rep.attracting_orbits[0].points[0] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(rep.attracting_orbits[0].multiplier == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rep.gap_measure > 0.0);
    CHECK(rep.gap_measure < 1.0);
    // the base gap is the immediate basin (-x*, x*)
    Interval basin = basin_interval(kBump);
    bool found = false;
    for (const Interval& iv : rep.gaps)
        if (std::abs(iv.lo - basin.lo) < 1e-8 && std::abs(iv.hi - basin.hi) < 1e-8) found = true;
    CHECK(found);
}

TEST_CASE("shub map classifies with the sink at 1/4 and basin (0, 1/2)") {
    NWReport rep = classify_nw(kShub, 4, 6);
    CHECK(rep.kind == NWKind::cantor_plus_orbits);
    REQUIRE(rep.attracting_orbits.size() == 1);
    CHECK(rep.attracting_orbits[0].points[0] == doctest::Approx(0.25).epsilon(1e-9));
    bool found = false;
    for (const Interval& iv : rep.gaps)
        if (std::abs(iv.lo - 0.0) < 1e-8 && std::abs(iv.hi - 0.5) < 1e-8) found = true;
    CHECK(found);
}

TEST_CASE("cantor gap structure of the bump map") {
    std::vector<Interval> g0 = cantor_gaps(kBump, 0);
    REQUIRE(g0.size() == 1);
    Interval basin = basin_interval(kBump);
    CHECK(g0[0].lo == doctest::Approx(basin.lo).epsilon(1e-10));
    CHECK(g0[0].hi == doctest::Approx(basin.hi).epsilon(1e-10));

    // the basin boundary points +-x* are fixed, so the basin is a component
    // of its own preimage: depth k has exactly d^k components
    for (int k = 1; k <= 6; ++k) {
        std::vector<Interval> gk = cantor_gaps(kBump, k);
        CHECK(gk.size() == static_cast<std::size_t>(1) << k);
        bool self = false;
        for (const Interval& iv : gk)
            if (std::abs(iv.lo - basin.lo) < 1e-8 && std::abs(iv.hi - basin.hi) < 1e-8) self = true;
        CHECK(self);
    }
}

TEST_CASE("gap arcs are disjoint, sorted, and each maps into the parent set") {
    std::vector<Interval> prev = cantor_gaps(kBump, 0);
    for (int k = 1; k <= 6; ++k) {
        std::vector<Interval> gaps = cantor_gaps(kBump, k);
        for (std::size_t i = 1; i < gaps.size(); ++i) CHECK(gaps[i].lo > gaps[i - 1].hi);
        // image of each arc midpoint lands in the depth-(k-1) set
        for (const Interval& iv : gaps)
            CHECK(in_any_gap(prev, eval(kBump, wrap_unit(0.5 * (iv.lo + iv.hi)))));
        prev = gaps;
    }
}

TEST_CASE("gap measure increases strictly with depth and stays below 1") {
    double prev = 0.0;
    for (int k = 0; k <= 8; ++k) {
        double m = total_measure(cantor_gaps(kBump, k));
        CHECK(m > prev);
        CHECK(m < 1.0);
        prev = m;
    }
}

TEST_CASE("cantor_gaps requires a genuine basin") {
    CHECK_THROWS_AS(cantor_gaps(kLinear2, 3), NoBasin);
    CHECK_THROWS_AS(cantor_gaps(CircleMapConfig::bump(2, 0.0, 0.0), 3), NoBasin);
}

TEST_CASE("minimum derivative on the gap complement exceeds 1") {
    std::vector<Interval> gaps = cantor_gaps(kBump, 8);
    double m8 = min_derivative_on_complement(kBump, gaps, 10000);
    CHECK(m8 > 1.0);
    // linear map, no gaps: the minimum is the degree
    CHECK(min_derivative_on_complement(kLinear2, {}, 1000) == 2.0);
    // deeper gaps never decrease the reported minimum
    double prev = min_derivative_on_complement(kBump, cantor_gaps(kBump, 2), 10000);
    for (int k = 4; k <= 8; k += 2) {
        double cur = min_derivative_on_complement(kBump, cantor_gaps(kBump, k), 10000);
        CHECK(cur >= prev - 1e-12);
        prev = cur;
    }
}

TEST_CASE("backward invariance proxy: preimages stay outside shallower gaps") {
    std::vector<Interval> g6 = cantor_gaps(kBump, 6);
    std::vector<Interval> g5 = cantor_gaps(kBump, 5);
    SplitMix64 rng(41);
    int tested = 0;
    while (tested < 500) {
        double t = rng.next_double();
        if (in_any_gap(g6, t)) continue;
        ++tested;
        for (double pre : preimages(kBump, t)) CHECK(!in_any_gap(g5, pre));
    }
}

TEST_CASE("lift of the bump sink") {
    PeriodicOrbitRecord sink;
    sink.period = 1;
    sink.points = {0.0};
    sink.multiplier = 0.5;
    sink.stability = Stability::attracting;
    LiftedOrbit lifted = lift_periodic_orbit(kBumpF, sink);
    REQUIRE(lifted.points.size() == 1);
    CHECK(lifted.points[0].t == 0.0);
    CHECK(std::abs(lifted.points[0].z - std::complex<double>{0.625, 0.0}) < 1e-12);
}

TEST_CASE("lift of the linear period-2 orbit") {
    std::vector<PeriodicOrbitRecord> recs = periodic_points(kLinear2, 2);
    REQUIRE(recs.size() == 2);
    LiftedOrbit lifted = lift_periodic_orbit(kF, recs[1]);
    REQUIRE(lifted.points.size() == 2);
    for (const TorusPoint& p : lifted.points) {
        TorusPoint q = apply(kF, apply(kF, p));
        CHECK(circle_dist(q.t, p.t) < 1e-10);
        CHECK(std::abs(q.z - p.z) < 1e-10);
    }
}

TEST_CASE("lifted sink over an arbitrary base fixed point follows the closed form") {
    // a moving fixed point t0 lifts to z = (1/2) e^{2 pi i t0} / (1 - lambda)
    for (double t0 : {0.0, 0.3, 0.77}) {
        PeriodicOrbitRecord rec;
        rec.period = 1;
        rec.points = {t0};
        LiftedOrbit lifted = lift_periodic_orbit(kF, rec);
        std::complex<double> expect = 0.5 * unit_phase(t0) / (1.0 - kF.lambda);
        CHECK(std::abs(lifted.points[0].z - expect) < 1e-12);
    }
}

TEST_CASE("orbit census matches between base and skew product") {
    for (int p = 1; p <= 6; ++p) {
        std::vector<PeriodicOrbitRecord> recs = periodic_points(kLinear2, p);
        std::vector<LiftedOrbit> lifted;
        for (const auto& r : recs) lifted.push_back(lift_periodic_orbit(kF, r));
        CHECK(lifted.size() == recs.size());
        double worst = 0.0;
        for (const LiftedOrbit& orb : lifted)
            for (const TorusPoint& pt : orb.points) {
                TorusPoint q = pt;
                for (int i = 0; i < orb.period; ++i) q = apply(kF, q);
                worst = std::max(worst, circle_dist(q.t, pt.t) + std::abs(q.z - pt.z));
            }
        CHECK(worst <= 1e-10);
        CHECK(nw_projection_check(kF, lifted));
    }
}

TEST_CASE("perturbed orbits are rejected by the residual") {
    std::vector<PeriodicOrbitRecord> recs = periodic_points(kLinear2, 2);
    LiftedOrbit orb = lift_periodic_orbit(kF, recs[1]);
    TorusPoint fake = orb.points[0];
    fake.z += 1e-3;
    TorusPoint q = apply(kF, apply(kF, fake));
    CHECK(std::abs(q.z - fake.z) > 1e-10);
    // and the empty census passes trivially
    CHECK(nw_projection_check(kF, {}));
}

TEST_CASE("classification bounds are enforced") {
    CHECK_THROWS_AS(classify_nw(kBump, 11, 8), ConfigError);
    CHECK_THROWS_AS(classify_nw(kBump, 4, 21), ConfigError);
    CHECK_THROWS_AS(cantor_gaps(kBump, 21), ConfigError);
}
