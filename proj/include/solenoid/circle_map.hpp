#pragma once

#include <vector>

#include "solenoid/errors.hpp"

namespace solenoid {

// Points on the circle S^1 = [0,1]/(0~1) are plain doubles kept in [0,1).
// All functions below reduce their results mod 1; callers may pass any real.

// Reduce to [0,1).
double wrap_unit(double x);

// Circle metric: min(|a-b|, 1-|a-b|) in [0, 1/2].
double circle_dist(double a, double b);

// Signed coordinate of t relative to 0: t itself for t < 1/2, t-1 otherwise.
// Lands in [-1/2, 1/2).
double signed_coord(double t);

// ---------------------------------------------------------------------------
// Bump function U_delta. Plateau 1 on [-delta/2, delta/2], support [-delta,
// delta], C^1 cubic smoothstep flanks:
//   U(x) = 1 - s(u),  s(u) = 3u^2 - 2u^3,  u = (|x| - delta/2)/(delta/2).
// ---------------------------------------------------------------------------
double bump_value(double x, double delta);
double bump_deriv(double x, double delta);

// ---------------------------------------------------------------------------
// Circle d-cover families.
//
//   linear:  t -> d t mod 1
//   bump:    t -> d t + (-d + eps) t U_delta(t) mod 1   (t as signed coord)
//            eps = delta = 0 degenerates to linear.
//   shub:    on [0,1/2]: t + beta sin(4 pi t), beta = (1 - lambda_fp)/(4 pi),
//            giving fixed points 0, 1/4, 1/2 with g'(1/4) = lambda_fp < 1;
//            on [1/2,1]: (2d-1) t mod 1. Continuous gluing; the derivative
//            jumps at the gluing points (the map is C^0, piecewise C^1) and
//            deriv() takes the expanding branch at t = 1/2.
//
// Every family is a nonsingular d-cover: derivative > 0 everywhere and the
// lift over [0,1] increases by exactly d.
// ---------------------------------------------------------------------------
enum class MapFamily { linear, shub, bump };

struct CircleMapConfig {
    MapFamily family = MapFamily::linear;
    int degree = 2;
    double eps = 0.0;        // bump: sink multiplier, in [0,1)
    double delta = 0.0;      // bump: support half-width, in [0,1/4)
    double lambda_fp = 0.0;  // shub: multiplier of the attracting fixed point

    static CircleMapConfig linear(int d);
    static CircleMapConfig shub(int d, double lambda_fp);
    static CircleMapConfig bump(int d, double eps, double delta);

    // Throws ConfigError on parameter-range violations.
    void validate() const;

    // Upper bound on the derivative, used to size root-finding grids.
    double max_slope() const;

    bool is_linear_like() const {
        return family == MapFamily::linear ||
               (family == MapFamily::bump && (eps == 0.0 || delta == 0.0));
    }
};

double eval(const CircleMapConfig& map, double t);
double deriv(const CircleMapConfig& map, double t);

// Continuous increasing lift L: [0,1] -> [0, d] with L(0) = 0 (every family
// fixes t = 0 up to the wrap, so the lift is anchored there).
double lift(const CircleMapConfig& map, double x);

// Lift extended to all reals: L(x + k) = L(x) + d k.
double lift_ext(const CircleMapConfig& map, double x);

// The d preimages of t, ascending in [0,1). Each maps back to t within 1e-10.
// Throws RootNotBracketed if branch inversion fails, ConfigError if two
// preimages coincide within 1e-12 (the cover would be singular).
std::vector<double> preimages(const CircleMapConfig& map, double t);

// ---------------------------------------------------------------------------
// Periodic orbits.
// ---------------------------------------------------------------------------
enum class Stability { attracting, repelling };

struct PeriodicOrbitRecord {
    int period = 1;                // minimal period
    std::vector<double> points;    // the orbit, ascending by t
    double multiplier = 0.0;       // derivative of g^period along the orbit
    Stability stability = Stability::repelling;
};

// All fixed points of g^p, grouped into orbits with their minimal periods.
// Found by sign-change bracketing of lift(g^p) - id - m over a scan grid,
// refined by bisection. Orbits sorted by (period, first point). Throws
// NeutralOrbit when |multiplier| falls within 1e-8 of 1, BudgetExceeded when
// the scan grid would exceed the work budget.
std::vector<PeriodicOrbitRecord> periodic_points(const CircleMapConfig& map, int p);

// ---------------------------------------------------------------------------
// Open circle arcs. Stored with hi > lo, hi - lo < 1; arcs covering t = 0
// use a negative lo (e.g. the bump sink basin (-x*, x*)).
// ---------------------------------------------------------------------------
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool contains(double t) const;
};

// Canonical wrap form of the arc starting at `start` (mod 1) of length `len`.
Interval make_arc(double start, double len);

// The d components of g^{-1}(I) for an arc I shorter than the full circle.
std::vector<Interval> preimage_arcs(const CircleMapConfig& map, const Interval& iv);

// Immediate basin (-x*, x*) of the bump sink at 0, where U(x*) = (d-1)/(d-eps)
// on the flank (so delta/2 < x* < delta). Throws NoBasin when eps or delta
// vanishes.
Interval basin_interval(const CircleMapConfig& map);

// sup over a uniform grid of circle_dist(f(t), d t mod 1); bounded by
// delta * d. Requires samples >= 1000.
double sup_distance_to_linear(const CircleMapConfig& map, int samples);

}  // namespace solenoid
