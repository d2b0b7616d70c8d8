#pragma once

#include <complex>

#include "solenoid/circle_map.hpp"

namespace solenoid {

// Point of the solid torus S^1 x D^2; |z| <= 1 + 1e-12.
struct TorusPoint {
    double t = 0.0;
    std::complex<double> z{0.0, 0.0};
};

// e^{2 pi i t} on the unit circle of the fiber plane.
std::complex<double> unit_phase(double t);

// Contraction bound under which the skew map stays a diffeomorphism onto
// its image:
// lambda < (1/4) sin(pi / (2d-1)).
double injectivity_bound(int d);

// The skew map F(t,z) = (g(t), lambda z + (1/2) e^{2 pi i t}).
//
// Construction rejects lambda outside (0, injectivity_bound(d)) unless
// `relaxed` is set; relaxed mode lifts only the injectivity bound (so tests
// can witness overlapping fiber images) and still requires lambda < 1/2 so
// the image stays inside the fiber disk.
struct SkewConfig {
    CircleMapConfig base;
    double lambda = 0.2;
    bool relaxed = false;

    SkewConfig(CircleMapConfig base_, double lambda_, bool relaxed_ = false);

    int degree() const { return base.degree; }
};

TorusPoint apply(const SkewConfig& F, const TorusPoint& p);

// Fiber-image disk: F({t} x D^2) is exactly the disk of radius lambda about
// (1/2) e^{2 pi i t} in the fiber over g(t).
struct Disk {
    double fiber_t = 0.0;
    std::complex<double> center{0.0, 0.0};
    double radius = 0.0;
};

Disk fiber_image(const SkewConfig& F, double t);

// Inverse of apply. Among the d base preimages of p.t, exactly one candidate
// (t_i, (p.z - (1/2) e^{2 pi i t_i}) / lambda) has fiber part in the disk.
// Throws NotInImage when none does, InjectivityViolation when two do.
TorusPoint preimage(const SkewConfig& F, const TorusPoint& p);

// Block lower-triangular derivative [[dg, 0], [offdiag, lambda Id_2]] with
// offdiag = pi i e^{2 pi i t}.
struct JacobianBlock {
    double dg = 0.0;
    std::complex<double> offdiag{0.0, 0.0};
    double fiber_scale = 0.0;
};

JacobianBlock jacobian(const SkewConfig& F, const TorusPoint& p);

struct InjectivityReport {
    double min_center_gap = 0.0;
    double required = 0.0;  // 2 lambda
    bool ok = false;
    double worst_t = 0.0;  // target fiber where the minimum was attained
};

// Scans `samples` target fibers; for each, measures the pairwise distances
// between the d fiber-image disk centers. ok iff every gap exceeds 2 lambda.
// A failing report is data, not an error.
InjectivityReport check_injectivity(const SkewConfig& F, int samples);

// Composed fiber map of F^n over the forward orbit of t: z -> scale z +
// offset with scale = lambda^n accumulated as a product. diam F^n({t} x D^2)
// equals 2 |scale| exactly.
struct FiberAffine {
    double scale = 1.0;
    std::complex<double> offset{0.0, 0.0};
};

FiberAffine fiber_affine(const SkewConfig& F, double t, int n);

}  // namespace solenoid
