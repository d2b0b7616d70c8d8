#include "solenoid/skew.hpp"

#include <cmath>
#include <numbers>

namespace solenoid {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDiskTol = 1e-12;  // absorbs rounding at the disk boundary
}  // namespace

std::complex<double> unit_phase(double t) {
    double a = kTwoPi * t;
    return {std::cos(a), std::sin(a)};
}

double injectivity_bound(int d) {
    return 0.25 * std::sin(std::numbers::pi / (2.0 * d - 1.0));
}

SkewConfig::SkewConfig(CircleMapConfig base_, double lambda_, bool relaxed_)
    : base(base_), lambda(lambda_), relaxed(relaxed_) {
    base.validate();
    if (!(lambda > 0.0)) throw ConfigError("fiber contraction lambda must be positive");
    if (!(lambda < 0.5))
        throw ConfigError("lambda must stay below 1/2 so fiber images remain in the disk");
    if (!relaxed && lambda >= injectivity_bound(base.degree))
        throw ConfigError("lambda >= (1/4) sin(pi/(2d-1)); pass relaxed to override");
}

TorusPoint apply(const SkewConfig& F, const TorusPoint& p) {
    return {eval(F.base, p.t), F.lambda * p.z + 0.5 * unit_phase(p.t)};
}

Disk fiber_image(const SkewConfig& F, double t) {
    return {eval(F.base, t), 0.5 * unit_phase(t), F.lambda};
}

TorusPoint preimage(const SkewConfig& F, const TorusPoint& p) {
    std::vector<double> ts = preimages(F.base, p.t);
    int hits = 0;
    TorusPoint result;
    for (double ti : ts) {
        std::complex<double> z = (p.z - 0.5 * unit_phase(ti)) / F.lambda;
        if (std::abs(z) <= 1.0 + kDiskTol) {
            ++hits;
            result = {ti, z};
        }
    }
    if (hits == 0) throw NotInImage("point has no preimage in the solid torus", 1);
    if (hits > 1) throw InjectivityViolation("multiple preimage candidates in the fiber disk");
    return result;
}

JacobianBlock jacobian(const SkewConfig& F, const TorusPoint& p) {
    return {deriv(F.base, p.t), std::complex<double>(0.0, std::numbers::pi) * unit_phase(p.t),
            F.lambda};
}

InjectivityReport check_injectivity(const SkewConfig& F, int samples) {
    if (samples < 1000) throw ConfigError("injectivity scan needs at least 1000 samples");
    InjectivityReport rep;
    rep.required = 2.0 * F.lambda;
    rep.min_center_gap = 2.0;  // larger than any center distance
    for (int i = 0; i < samples; ++i) {
        double target = static_cast<double>(i) / samples;
        std::vector<double> ts = preimages(F.base, target);
        for (std::size_t a = 0; a < ts.size(); ++a)
            for (std::size_t b = a + 1; b < ts.size(); ++b) {
                double gap = std::abs(0.5 * unit_phase(ts[a]) - 0.5 * unit_phase(ts[b]));
                if (gap < rep.min_center_gap) {
                    rep.min_center_gap = gap;
                    rep.worst_t = target;
                }
            }
    }
    rep.ok = rep.min_center_gap > rep.required;
    return rep;
}

FiberAffine fiber_affine(const SkewConfig& F, double t, int n) {
    FiberAffine a;
    double cur = wrap_unit(t);
    for (int i = 0; i < n; ++i) {
        a.offset = F.lambda * a.offset + 0.5 * unit_phase(cur);
        a.scale *= F.lambda;
        cur = eval(F.base, cur);
    }
    return a;
}

}  // namespace solenoid
