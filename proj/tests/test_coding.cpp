#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "solenoid/coding.hpp"
#include "solenoid/rng.hpp"

using namespace solenoid;

namespace {
const SkewConfig kF{CircleMapConfig::linear(2), 0.2};
const SkewConfig kShubF{CircleMapConfig::shub(2, 0.2), 0.2};

Itinerary random_itinerary(const SkewConfig& F, int depth, SplitMix64& rng) {
    Itinerary itin;
    itin.coords.push_back(rng.next_double());
    for (int i = 0; i < depth; ++i) {
        std::vector<double> pre = preimages(F.base, itin.coords.back());
        itin.coords.push_back(pre[rng.next_below(pre.size())]);
    }
    return itin;
}
}  // namespace

TEST_CASE("encode the fixed point") {
    Itinerary itin = encode(kF, {0.0, {0.625, 0.0}}, 5);
    REQUIRE(itin.coords.size() == 6);
    for (double c : itin.coords) CHECK(c == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("encode keeps the base coordinate exactly") {
    SplitMix64 rng(2);
    for (int i = 0; i < 50; ++i) {
        Itinerary itin = random_itinerary(kShubF, 12, rng);
        TorusPoint p = decode(itin, kShubF);
        CHECK(encode(kShubF, p, 6).coords[0] == p.t);  // bitwise
    }
}

TEST_CASE("decode the all-zeros itinerary") {
    Itinerary itin;
    itin.coords.assign(31, 0.0);
    TorusPoint p = decode(itin, kF);
    CHECK(p.t == 0.0);
    CHECK(std::abs(p.z - std::complex<double>{0.625, 0.0}) < 1e-15);
}

TEST_CASE("decode a single-step branch") {
    Itinerary itin;
    itin.coords = {0.0, 0.5};
    TorusPoint p = decode(itin, kF);
    CHECK(p.t == 0.0);
    CHECK(p.z.real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(std::abs(p.z.imag()) < 1e-12);
}

TEST_CASE("decode rejects incompatible itineraries") {
    Itinerary bad;
    bad.coords = {0.1, 0.3};  // eval(0.3) = 0.6 != 0.1
    CHECK_THROWS_AS(decode(bad, kF), IncompatibleItinerary);
}

TEST_CASE("round trip on the alternating period-2 itinerary") {
    Itinerary itin;
    for (int i = 0; i <= 20; ++i) itin.coords.push_back(i % 2 ? 2.0 / 3 : 1.0 / 3);
    TorusPoint q = decode(itin, kF);
    Itinerary back = encode(kF, q, 18);
    for (int i = 0; i <= 18; ++i) CHECK(circle_dist(back.coords[i], itin.coords[i]) < 1e-9);
}

TEST_CASE("encode reports the step where membership fails") {
    try {
        encode(kF, {0.0, {0.0, 0.0}}, 5);
        FAIL("expected NotInImage");
    } catch (const NotInImage& e) {
        CHECK(e.step == 1);
    }
    // apply once: now the point survives exactly one backward step
    try {
        encode(kF, apply(kF, {0.0, {0.0, 0.0}}), 5);
        FAIL("expected NotInImage");
    } catch (const NotInImage& e) {
        CHECK(e.step == 2);
    }
}

TEST_CASE("shift prepends the image of the head") {
    Itinerary itin;
    itin.coords = {0.0, 0.0, 0.0};
    Itinerary s = shift_itinerary(kF.base, itin);
    CHECK(s.coords == std::vector<double>{0.0, 0.0, 0.0, 0.0});

    Itinerary ab;
    ab.coords = {1.0 / 3, 2.0 / 3};
    Itinerary sab = shift_itinerary(kF.base, ab);
    REQUIRE(sab.coords.size() == 3);
    CHECK(sab.coords[0] == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK(sab.coords[1] == doctest::Approx(1.0 / 3));
    // shift preserves compatibility
    CHECK_NOTHROW(validate_itinerary(kF.base, sab));
}

TEST_CASE("conjugacy holds on decoded attractor points") {
    SplitMix64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        Itinerary itin = random_itinerary(kShubF, 24, rng);
        TorusPoint p = decode(itin, kShubF);
        CHECK(conjugacy_check(kShubF, p, 20));
    }
}

TEST_CASE("conjugacy check propagates membership errors") {
    CHECK_THROWS_AS(conjugacy_check(kF, {0.0, {0.0, 0.0}}, 5), NotInImage);
}

TEST_CASE("round trip: decode(encode(p, r)) lands within 2 lambda^r") {
    SplitMix64 rng(13);
    for (int r : {5, 10, 20}) {
        double bound = 2.0 * std::pow(kShubF.lambda, r);
        for (int i = 0; i < 200; ++i) {
            Itinerary itin = random_itinerary(kShubF, 25, rng);
            TorusPoint p = decode(itin, kShubF);
            TorusPoint q = decode(encode(kShubF, p, r), kShubF);
            CHECK(circle_dist(p.t, q.t) + std::abs(p.z - q.z) < bound);
        }
    }
}

TEST_CASE("injectivity at depth: equal prefixes force closeness") {
    SplitMix64 rng(19);
    for (int i = 0; i < 100; ++i) {
        Itinerary a = random_itinerary(kShubF, 20, rng);
        // same first 12 coordinates, different tail
        Itinerary b = a;
        for (int j = 13; j <= 20; ++j) {
            std::vector<double> pre = preimages(kShubF.base, b.coords[j - 1]);
            b.coords[j] = pre[rng.next_below(pre.size())];
        }
        TorusPoint pa = decode(a, kShubF);
        TorusPoint pb = decode(b, kShubF);
        CHECK(circle_dist(pa.t, pb.t) + std::abs(pa.z - pb.z) <= 2.0 * std::pow(kShubF.lambda, 12));
    }
}

TEST_CASE("product metric") {
    ProductMetric w{0.5};
    Itinerary a, b;
    a.coords = {0.1, 0.55, 0.775};
    b.coords = a.coords;
    CHECK(product_distance(w, a, b) == 0.0);

    b.coords[2] = wrap_unit(a.coords[2] + 0.1);
    CHECK(product_distance(w, a, b) == doctest::Approx(0.25 * 0.1).epsilon(1e-12));

    Itinerary c;
    c.coords = {0.1, 0.55};
    CHECK_THROWS_AS(product_distance(w, a, c), LengthMismatch);

    // symmetry and the triangle inequality on random triples
    SplitMix64 rng(29);
    for (int i = 0; i < 200; ++i) {
        Itinerary x, y, z;
        for (int j = 0; j < 6; ++j) {
            x.coords.push_back(rng.next_double());
            y.coords.push_back(rng.next_double());
            z.coords.push_back(rng.next_double());
        }
        double xy = product_distance(w, x, y);
        double yx = product_distance(w, y, x);
        CHECK(xy == yx);
        CHECK(xy <= product_distance(w, x, z) + product_distance(w, z, y) + 1e-15);
    }
}

TEST_CASE("metric distance of encodings shrinks for nearby attractor points") {
    // two points sharing a deep branch prefix encode to itineraries that are
    // close in the product metric
    SplitMix64 rng(31);
    ProductMetric w{0.5};
    for (int i = 0; i < 50; ++i) {
        Itinerary a = random_itinerary(kShubF, 18, rng);
        Itinerary b = a;
        std::vector<double> pre = preimages(kShubF.base, b.coords[17]);
        b.coords[18] = pre[b.coords[18] == pre[0] ? 1 : 0];  // flip the last branch
        TorusPoint pa = decode(a, kShubF);
        TorusPoint pb = decode(b, kShubF);
        double coded = product_distance(w, encode(kShubF, pa, 10), encode(kShubF, pb, 10));
        // depth-17 prefix agreement: encodings agree far beyond depth 10
        CHECK(coded < 1e-6);
        CHECK(std::abs(pa.z - pb.z) < 2.0 * std::pow(kShubF.lambda, 17));
    }
}
