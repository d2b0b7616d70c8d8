#pragma once

#include "solenoid/skew.hpp"

namespace solenoid {

// The base dichotomy: NW(g) is the whole circle, or a Cantor set plus
// finitely many isolated periodic orbits (at least one attracting).
enum class NWKind { whole_circle, cantor_plus_orbits };

struct NWReport {
    NWKind kind = NWKind::whole_circle;
    std::vector<PeriodicOrbitRecord> attracting_orbits;
    std::vector<PeriodicOrbitRecord> repelling_orbits;
    std::vector<Interval> gaps;  // depth-limited basin preimages, ascending
    double gap_measure = 0.0;
};

// Classifies by the periodic census up to max_period (<= 10): no attracting
// orbits means the whole circle; otherwise the immediate basins of the
// attracting orbits (bracketed by the adjacent fixed points of g^p) are
// pulled back `depth` (<= 20) times to enumerate the gap structure.
NWReport classify_nw(const CircleMapConfig& map, int max_period, int depth);

// Components of f^{-depth}(-x*, x*) for a bump map: d^depth pairwise
// disjoint open arcs in deterministic ascending order. Throws NoBasin when
// eps or delta vanishes. Arcs shorter than 1e-12 are dropped.
std::vector<Interval> cantor_gaps(const CircleMapConfig& map, int depth);

// One pull-back step: components of g^{-1} of the given disjoint arc set.
std::vector<Interval> gap_preimage_level(const CircleMapConfig& map,
                                         const std::vector<Interval>& gaps);

bool in_any_gap(const std::vector<Interval>& gaps, double t);

// Minimum of deriv over grid samples outside all gaps. Exceeds 1 exactly
// when the complement carries the expanding structure.
double min_derivative_on_complement(const CircleMapConfig& map,
                                    const std::vector<Interval>& gaps, int samples);

// A base periodic orbit lifted to the unique F-periodic orbit over it: the
// fiber return map over one period is the affine contraction
// z -> lambda^p z + c with fixed point c / (1 - lambda^p).
struct LiftedOrbit {
    PeriodicOrbitRecord base;
    std::vector<TorusPoint> points;  // F-orbit in dynamical order
    int period = 1;
};

LiftedOrbit lift_periodic_orbit(const SkewConfig& F, const PeriodicOrbitRecord& orbit);

// Every lifted point projects onto a point of its base orbit within 1e-9.
bool nw_projection_check(const SkewConfig& F, const std::vector<LiftedOrbit>& lifted);

}  // namespace solenoid
