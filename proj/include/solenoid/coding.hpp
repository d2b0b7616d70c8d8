#pragma once

#include "solenoid/skew.hpp"

namespace solenoid {

// Finite truncation (t_0, t_1, ..., t_r) of an inverse-limit sequence:
// g(t_{i+1}) = t_i within 1e-9 for all i.
struct Itinerary {
    std::vector<double> coords;

    int depth() const { return static_cast<int>(coords.size()) - 1; }
};

// Throws IncompatibleItinerary if the compatibility invariant fails.
void validate_itinerary(const CircleMapConfig& map, const Itinerary& itin);

// Backward base coordinates of p through r preimage steps: coords[0] = p.t,
// coords[i] the base coordinate of the i-th preimage. Unique by disjointness
// of the fiber-image disks. Throws NotInImage (with the failing step) when p
// leaves the forward image; note the fiber part loses one factor of
// 1/lambda in precision per step, so usable depths are bounded by the double
// mantissa (about 22 steps at lambda = 0.2).
Itinerary encode(const SkewConfig& F, const TorusPoint& p, int r);

// Center of the depth-r nested disk of the branch (t_1..t_r) in fiber t_0;
// within lambda^r of the true inverse-limit point. r = 0 gives (t_0, 0).
TorusPoint decode(const Itinerary& itin, const SkewConfig& F);

// (t_0, ..., t_r) -> (g(t_0), t_0, ..., t_r).
Itinerary shift_itinerary(const CircleMapConfig& map, const Itinerary& itin);

// True iff encode(apply(F,p), depth) equals shift(encode(p, depth-1))
// coordinatewise within 1e-8.
bool conjugacy_check(const SkewConfig& F, const TorusPoint& p, int depth);

// Weighted-sum metric realizing the product topology on truncations.
struct ProductMetric {
    double weight = 0.5;  // in (0,1)
};

double product_distance(const ProductMetric& metric, const Itinerary& a, const Itinerary& b);

}  // namespace solenoid
