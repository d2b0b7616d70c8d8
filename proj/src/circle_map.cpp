#include "solenoid/circle_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace solenoid {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBracketTol = 1e-12;

// Bisection for an increasing function on [lo, hi], run until the bracket
// collapses to adjacent doubles (max 200 steps). Backward-orbit recovery
// amplifies preimage errors by 1/lambda per step, so roots are resolved to
// the last bit rather than to a residual threshold.
template <typename Fn>
double bisect_increasing(Fn&& f, double lo, double hi, double target) {
    double flo = f(lo) - target;
    double fhi = f(hi) - target;
    if (flo > kBracketTol || fhi < -kBracketTol)
        throw RootNotBracketed("bisection target outside bracket");
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        double fm = f(mid) - target;
        if (fm == 0.0) return mid;
        if (fm < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double wrap_unit(double x) {
    double y = x - std::floor(x);
    if (y >= 1.0) y -= 1.0;  // x just below an integer can round up
    if (y < 0.0) y = 0.0;
    return y;
}

double circle_dist(double a, double b) {
    double d = std::abs(wrap_unit(a) - wrap_unit(b));
    return std::min(d, 1.0 - d);
}

double signed_coord(double t) {
    double u = wrap_unit(t);
    return u < 0.5 ? u : u - 1.0;
}

double bump_value(double x, double delta) {
    double a = std::abs(x);
    if (delta <= 0.0 || a >= delta) return 0.0;
    if (a <= 0.5 * delta) return 1.0;
    double u = (a - 0.5 * delta) / (0.5 * delta);
    return 1.0 - u * u * (3.0 - 2.0 * u);
}

double bump_deriv(double x, double delta) {
    double a = std::abs(x);
    if (delta <= 0.0 || a >= delta || a <= 0.5 * delta) return 0.0;
    double u = (a - 0.5 * delta) / (0.5 * delta);
    double mag = 6.0 * u * (1.0 - u) * (2.0 / delta);
    return x > 0.0 ? -mag : mag;
}

CircleMapConfig CircleMapConfig::linear(int d) {
    CircleMapConfig m;
    m.family = MapFamily::linear;
    m.degree = d;
    m.validate();
    return m;
}

CircleMapConfig CircleMapConfig::shub(int d, double lambda_fp) {
    CircleMapConfig m;
    m.family = MapFamily::shub;
    m.degree = d;
    m.lambda_fp = lambda_fp;
    m.validate();
    return m;
}

CircleMapConfig CircleMapConfig::bump(int d, double eps, double delta) {
    CircleMapConfig m;
    m.family = MapFamily::bump;
    m.degree = d;
    m.eps = eps;
    m.delta = delta;
    m.validate();
    return m;
}

void CircleMapConfig::validate() const {
    if (degree < 2) throw ConfigError("circle map degree must be >= 2");
    switch (family) {
        case MapFamily::linear:
            break;
        case MapFamily::shub:
            if (!(lambda_fp > 0.0 && lambda_fp < 1.0))
                throw ConfigError("shub lambda_fp must lie in (0,1)");
            break;
        case MapFamily::bump:
            if (!(eps >= 0.0 && eps < 1.0)) throw ConfigError("bump eps must lie in [0,1)");
            if (!(delta >= 0.0 && delta < 0.25))
                throw ConfigError("bump delta must lie in [0,1/4)");
            if ((eps == 0.0) != (delta == 0.0))
                throw ConfigError("bump eps and delta must vanish together");
            break;
    }
}

double CircleMapConfig::max_slope() const {
    switch (family) {
        case MapFamily::linear:
            return degree;
        case MapFamily::shub:
            return 2.0 * degree - 1.0;
        case MapFamily::bump:
            // d - (d-eps)(xU)' with (xU)' >= -2 on the smoothstep flank.
            return degree + 2.0 * (degree - eps);
    }
    return degree;
}

double eval(const CircleMapConfig& map, double t) {
    t = wrap_unit(t);
    switch (map.family) {
        case MapFamily::linear:
            return wrap_unit(map.degree * t);
        case MapFamily::bump: {
            double s = signed_coord(t);
            if (map.delta == 0.0 || std::abs(s) >= map.delta)
                return wrap_unit(map.degree * t);  // same arithmetic path as linear
            return wrap_unit(map.degree * s + (map.eps - map.degree) * s * bump_value(s, map.delta));
        }
        case MapFamily::shub: {
            if (t <= 0.5) {
                double beta = (1.0 - map.lambda_fp) / (2.0 * kTwoPi);
                return wrap_unit(t + beta * std::sin(2.0 * kTwoPi * t));
            }
            return wrap_unit((2.0 * map.degree - 1.0) * t);
        }
    }
    throw ConfigError("unknown map family");
}

double deriv(const CircleMapConfig& map, double t) {
    t = wrap_unit(t);
    switch (map.family) {
        case MapFamily::linear:
            return map.degree;
        case MapFamily::bump: {
            double s = signed_coord(t);
            double a = std::abs(s);
            if (map.delta == 0.0 || a >= map.delta) return map.degree;
            if (a <= 0.5 * map.delta) return map.eps;  // plateau: d + (eps-d)*1 exactly
            return map.degree +
                   (map.eps - map.degree) * (s * bump_deriv(s, map.delta) + bump_value(s, map.delta));
        }
        case MapFamily::shub: {
            // slow branch owns the gluing point, so the fixed point 1/2 gets
            // its stated multiplier 2 - lambda_fp
            if (t <= 0.5) return 1.0 + (1.0 - map.lambda_fp) * std::cos(2.0 * kTwoPi * t);
            return 2.0 * map.degree - 1.0;
        }
    }
    throw ConfigError("unknown map family");
}

double lift(const CircleMapConfig& map, double x) {
    switch (map.family) {
        case MapFamily::linear:
            return map.degree * x;
        case MapFamily::bump: {
            double s = x < 0.5 ? x : x - 1.0;
            if (map.delta == 0.0 || std::abs(s) >= map.delta) return map.degree * x;
            return map.degree * x + (map.eps - map.degree) * s * bump_value(s, map.delta);
        }
        case MapFamily::shub: {
            if (x <= 0.5) {
                double beta = (1.0 - map.lambda_fp) / (2.0 * kTwoPi);
                return x + beta * std::sin(2.0 * kTwoPi * x);
            }
            return 0.5 + (2.0 * map.degree - 1.0) * (x - 0.5);
        }
    }
    throw ConfigError("unknown map family");
}

double lift_ext(const CircleMapConfig& map, double x) {
    double k = std::floor(x);
    double frac = x - k;
    return lift(map, frac) + map.degree * k;
}

std::vector<double> preimages(const CircleMapConfig& map, double t) {
    t = wrap_unit(t);
    std::vector<double> out;
    out.reserve(map.degree);
    if (map.is_linear_like()) {
        for (int j = 0; j < map.degree; ++j) out.push_back((t + j) / map.degree);
    } else {
        for (int j = 0; j < map.degree; ++j) {
            double target = t + j;
            double x = bisect_increasing([&](double u) { return lift(map, u); }, 0.0, 1.0, target);
            if (std::abs(lift(map, x) - target) > 1e-10)
                throw RootNotBracketed("branch inversion did not converge");
            if (x >= 1.0) x = 0.0;
            out.push_back(x);
        }
        std::sort(out.begin(), out.end());
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] - out[i - 1] < 1e-12)
            throw ConfigError("coincident preimages: cover is singular");
    return out;
}

namespace {

double lift_pow(const CircleMapConfig& map, double x, int p) {
    for (int i = 0; i < p; ++i) x = lift_ext(map, x);
    return x;
}

// Distinct fixed points of g^p in [0,1), ascending.
std::vector<double> fixed_points_of_power(const CircleMapConfig& map, int p) {
    double span = std::pow(map.max_slope(), p);
    double want = 64.0 * span;
    if (want > 6e6) throw BudgetExceeded("periodic point scan grid too large");
    long n = std::max(4096L, static_cast<long>(want));

    auto h = [&](double x) { return lift_pow(map, x, p) - x; };

    std::vector<double> roots;
    double x0 = 0.0, h0 = h(0.0);
    for (long i = 1; i <= n; ++i) {
        double x1 = static_cast<double>(i) / n;
        double h1 = h(x1);
        long mlo = static_cast<long>(std::ceil(std::min(h0, h1) - 1e-9));
        long mhi = static_cast<long>(std::floor(std::max(h0, h1) + 1e-9));
        for (long m = mlo; m <= mhi; ++m) {
            double g0 = h0 - m, g1 = h1 - m;
            if (g0 == 0.0) {
                roots.push_back(x0);
            } else if (g0 < 0.0 && g1 >= 0.0) {
                roots.push_back(
                    bisect_increasing([&](double u) { return h(u); }, x0, x1, static_cast<double>(m)));
            } else if (g0 > 0.0 && g1 <= 0.0) {
                // decreasing crossing: bisect on the negated function
                roots.push_back(bisect_increasing([&](double u) { return -h(u); }, x0, x1,
                                                  -static_cast<double>(m)));
            }
        }
        x0 = x1;
        h0 = h1;
    }
    for (double& r : roots)
        if (r >= 1.0 - 1e-12) r = 0.0;
    std::sort(roots.begin(), roots.end());
    std::vector<double> uniq;
    for (double r : roots)
        if (uniq.empty() || r - uniq.back() > 2e-9) uniq.push_back(r);
    // circle wrap: a root just below 1 duplicates one at 0
    if (uniq.size() > 1 && uniq.front() < 1e-9 && 1.0 - uniq.back() < 2e-9) uniq.pop_back();
    return uniq;
}

}  // namespace

std::vector<PeriodicOrbitRecord> periodic_points(const CircleMapConfig& map, int p) {
    map.validate();
    if (p < 1 || p > 14) throw ConfigError("period must lie in [1,14]");
    std::vector<double> pts = fixed_points_of_power(map, p);

    std::vector<bool> used(pts.size(), false);
    // pts is sorted: candidates are the two neighbors of the insertion point
    // (indices taken mod size to cover the wrap)
    auto nearest = [&](double t) -> long {
        if (pts.empty()) return -1;
        std::size_t n = pts.size();
        std::size_t hi = std::lower_bound(pts.begin(), pts.end(), t) - pts.begin();
        long best = -1;
        double bd = 1.0;
        for (std::size_t cand : {(hi + n - 1) % n, hi % n}) {
            double d = circle_dist(pts[cand], t);
            if (d < bd) {
                bd = d;
                best = static_cast<long>(cand);
            }
        }
        return bd < 1e-7 ? best : -1;
    };

    std::vector<PeriodicOrbitRecord> records;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (used[i]) continue;
        PeriodicOrbitRecord rec;
        long cur = static_cast<long>(i);
        double mult = 1.0;
        for (int step = 0; step < p; ++step) {
            used[cur] = true;
            rec.points.push_back(pts[cur]);
            mult *= deriv(map, pts[cur]);
            long nxt = nearest(eval(map, pts[cur]));
            if (nxt < 0) throw RootNotBracketed("periodic orbit left the root set");
            if (nxt == static_cast<long>(i)) break;
            cur = nxt;
        }
        rec.period = static_cast<int>(rec.points.size());
        rec.multiplier = mult;
        double am = std::abs(mult);
        if (am > 1.0 - 1e-8 && am < 1.0 + 1e-8)
            throw NeutralOrbit("orbit multiplier within 1e-8 of 1");
        rec.stability = am < 1.0 ? Stability::attracting : Stability::repelling;
        std::sort(rec.points.begin(), rec.points.end());
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        if (a.period != b.period) return a.period < b.period;
        return a.points.front() < b.points.front();
    });
    return records;
}

bool Interval::contains(double t) const {
    double u = t - std::floor(t - lo);  // shift into [lo, lo+1)
    return u > lo && u < hi;
}

Interval make_arc(double start, double len) {
    double s = wrap_unit(start);
    if (s + len > 1.0) s -= 1.0;
    return Interval{s, s + len};
}

std::vector<Interval> preimage_arcs(const CircleMapConfig& map, const Interval& iv) {
    std::vector<double> starts = preimages(map, wrap_unit(iv.lo));
    std::vector<double> ends = preimages(map, wrap_unit(iv.hi));
    std::vector<Interval> out;
    out.reserve(starts.size());
    for (double a : starts) {
        // the component through a ends at the first hi-preimage past a
        double best = 2.0;
        for (double b : ends) {
            double fwd = b - a;
            if (fwd <= 1e-13) fwd += 1.0;
            best = std::min(best, fwd);
        }
        out.push_back(make_arc(a, best));
    }
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return out;
}

Interval basin_interval(const CircleMapConfig& map) {
    if (map.family != MapFamily::bump || map.eps == 0.0 || map.delta == 0.0)
        throw NoBasin("basin interval requires a bump map with eps, delta > 0");
    double target = (map.degree - 1.0) / (map.degree - map.eps);
    // U is decreasing on the flank [delta/2, delta]; bisect on its negation.
    double x = bisect_increasing([&](double u) { return -bump_value(u, map.delta); },
                                 0.5 * map.delta, map.delta, -target);
    if (std::abs(bump_value(x, map.delta) - target) > 1e-10)
        throw RootNotBracketed("basin boundary bisection did not converge");
    return Interval{-x, x};
}

double sup_distance_to_linear(const CircleMapConfig& map, int samples) {
    if (samples < 1000) throw ConfigError("sup distance needs at least 1000 samples");
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        double t = static_cast<double>(i) / samples;
        double lin = wrap_unit(static_cast<double>(map.degree) * t);
        worst = std::max(worst, circle_dist(eval(map, t), lin));
    }
    return worst;
}

}  // namespace solenoid
