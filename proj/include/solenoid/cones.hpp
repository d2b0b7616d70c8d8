#pragma once

#include "solenoid/coding.hpp"
#include "solenoid/rng.hpp"

namespace solenoid {

// Tangent vector split along T(S^1) + T(D^2).
struct TangentVector {
    double v1 = 0.0;
    std::complex<double> v23{0.0, 0.0};
};

// Unstable cone |v1| >= aperture * |v23|.
struct ConeParam {
    double aperture = 0.0;
};

// The (2d-1)/4 aperture matched to a base whose derivative is 2d-1 on the
// expanding branch.
inline ConeParam expanding_branch_aperture(int d) { return ConeParam{(2.0 * d - 1.0) / 4.0}; }

// Exact block product: (Dg(t) v1, pi i e^{2 pi i t} v1 + lambda v23).
TangentVector push_forward(const SkewConfig& F, const TorusPoint& q, const TangentVector& v);

struct ConeReport {
    bool ok = false;
    double worst_margin = 0.0;  // min over samples of |v1'| - c |v23'|
    long samples = 0;
};

// Pushes boundary rays |v1| = c |v23| at rays_per_q fiber phases (plus the
// horizontal ray) through DF at each sample point and reports the worst
// invariance margin. Sample points should have base coordinates in the
// expanding regime (outside the basin gaps).
ConeReport cone_invariance_check(const SkewConfig& F, const ConeParam& cone,
                                 const std::vector<TorusPoint>& points, int rays_per_q);

// Largest aperture with Dg_min >= c pi + lambda, shrunk by 1%:
// c = 0.99 (Dg_min - lambda) / pi. Throws InvalidRegime when
// Dg_min <= lambda + 1e-9.
double valid_aperture(double dg_min, double lambda);

// Differences |v23/v1 - w23/w1| after 0..k pushes along the backward
// itinerary of q (coords from encode; the vectors live at the depth-k
// preimage). Each step contracts the difference by exactly lambda / Dg(t).
std::vector<double> slope_contraction_rate(const SkewConfig& F, const Itinerary& itin,
                                           const TangentVector& v, const TangentVector& w, int k);

// Unit estimate of the unstable line at the head of the itinerary: an
// arbitrary cone vector pushed forward k steps from the depth-k preimage.
TangentVector estimate_unstable_line(const SkewConfig& F, const Itinerary& itin, int k);

// Attractor points with base coordinate outside the given gaps, built from
// seeded random backward itineraries of the stated depth.
std::vector<TorusPoint> sample_attractor_points(const SkewConfig& F,
                                                const std::vector<Interval>& gaps, int count,
                                                int itinerary_depth, SplitMix64& rng);

}  // namespace solenoid
