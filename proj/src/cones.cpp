#include "solenoid/cones.hpp"

#include <cmath>
#include <numbers>

#include "solenoid/nonwandering.hpp"

namespace solenoid {

TangentVector push_forward(const SkewConfig& F, const TorusPoint& q, const TangentVector& v) {
    JacobianBlock J = jacobian(F, q);
    return {J.dg * v.v1, J.offdiag * v.v1 + J.fiber_scale * v.v23};
}

ConeReport cone_invariance_check(const SkewConfig& F, const ConeParam& cone,
                                 const std::vector<TorusPoint>& points, int rays_per_q) {
    if (cone.aperture <= 0.0) throw ConfigError("cone aperture must be positive");
    if (rays_per_q < 1) throw ConfigError("need at least one ray per point");
    ConeReport rep;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (const TorusPoint& q : points) {
        for (int j = 0; j < rays_per_q; ++j) {
            // boundary ray |v1| = c |v23| at fiber phase j / rays_per_q
            TangentVector v{1.0, (1.0 / cone.aperture) * unit_phase(static_cast<double>(j) / rays_per_q)};
            TangentVector w = push_forward(F, q, v);
            rep.worst_margin =
                std::min(rep.worst_margin, std::abs(w.v1) - cone.aperture * std::abs(w.v23));
            ++rep.samples;
        }
        // horizontal interior ray
        TangentVector w = push_forward(F, q, {1.0, {0.0, 0.0}});
        rep.worst_margin =
            std::min(rep.worst_margin, std::abs(w.v1) - cone.aperture * std::abs(w.v23));
    }
    rep.ok = rep.worst_margin > 0.0;
    return rep;
}

double valid_aperture(double dg_min, double lambda) {
    if (dg_min <= lambda + 1e-9)
        throw InvalidRegime("base derivative does not dominate the fiber contraction");
    return 0.99 * (dg_min - lambda) / std::numbers::pi;
}

std::vector<double> slope_contraction_rate(const SkewConfig& F, const Itinerary& itin,
                                           const TangentVector& v, const TangentVector& w, int k) {
    if (k < 0 || k > itin.depth()) throw ConfigError("contraction steps exceed itinerary depth");
    if (!(v.v1 > 0.0) || !(w.v1 > 0.0))
        throw ConfigError("slope tracking needs cone vectors with positive base component");
    TangentVector a = v, b = w;
    std::vector<double> diffs;
    diffs.reserve(k + 1);
    diffs.push_back(std::abs(a.v23 / a.v1 - b.v23 / b.v1));
    for (int j = 1; j <= k; ++j) {
        TorusPoint q{itin.coords[k - j + 1], {0.0, 0.0}};
        a = push_forward(F, q, a);
        b = push_forward(F, q, b);
        diffs.push_back(std::abs(a.v23 / a.v1 - b.v23 / b.v1));
    }
    return diffs;
}

TangentVector estimate_unstable_line(const SkewConfig& F, const Itinerary& itin, int k) {
    if (k < 0 || k > itin.depth()) throw ConfigError("estimate depth exceeds itinerary depth");
    TangentVector v{1.0, {0.0, 0.0}};
    for (int j = 1; j <= k; ++j) v = push_forward(F, {itin.coords[k - j + 1], {0.0, 0.0}}, v);
    double norm = std::sqrt(v.v1 * v.v1 + std::norm(v.v23));
    double sign = v.v1 < 0.0 ? -1.0 : 1.0;
    return {sign * v.v1 / norm, sign / norm * v.v23};
}

std::vector<TorusPoint> sample_attractor_points(const SkewConfig& F,
                                                const std::vector<Interval>& gaps, int count,
                                                int itinerary_depth, SplitMix64& rng) {
    std::vector<TorusPoint> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        double t0;
        do {
            t0 = rng.next_double();
        } while (in_any_gap(gaps, t0));
        Itinerary itin;
        itin.coords.push_back(t0);
        for (int j = 0; j < itinerary_depth; ++j) {
            std::vector<double> pre = preimages(F.base, itin.coords.back());
            itin.coords.push_back(pre[rng.next_below(pre.size())]);
        }
        out.push_back(decode(itin, F));
    }
    return out;
}

}  // namespace solenoid
