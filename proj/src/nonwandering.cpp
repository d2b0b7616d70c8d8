#include "solenoid/nonwandering.hpp"

#include <algorithm>
#include <cmath>

namespace solenoid {

namespace {

// Sort by lo and merge duplicates / overlaps, including across the wrap.
std::vector<Interval> merge_arcs(std::vector<Interval> arcs) {
    if (arcs.empty()) return arcs;
    std::sort(arcs.begin(), arcs.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> out;
    for (const Interval& iv : arcs) {
        if (iv.length() < 1e-12) continue;  // below noise floor
        if (!out.empty() && iv.lo <= out.back().hi + 1e-11)
            out.back().hi = std::max(out.back().hi, iv.hi);
        else
            out.push_back(iv);
    }
    // wrap check: last arc reaching past 1 may continue into the first
    if (out.size() > 1) {
        Interval& first = out.front();
        Interval& last = out.back();
        if (last.hi >= first.lo + 1.0 - 1e-11) {
            first.lo = std::min(first.lo, last.lo - 1.0);
            first.hi = std::max(first.hi, last.hi - 1.0);
            out.pop_back();
        }
    }
    return out;
}

std::vector<Interval> pull_back_to_depth(const CircleMapConfig& map, std::vector<Interval> gaps,
                                         int depth) {
    for (int k = 0; k < depth; ++k) gaps = gap_preimage_level(map, gaps);
    return gaps;
}

}  // namespace

std::vector<Interval> gap_preimage_level(const CircleMapConfig& map,
                                         const std::vector<Interval>& gaps) {
    std::vector<Interval> next;
    next.reserve(gaps.size() * map.degree);
    for (const Interval& iv : gaps)
        for (const Interval& arc : preimage_arcs(map, iv)) next.push_back(arc);
    return merge_arcs(std::move(next));
}

bool in_any_gap(const std::vector<Interval>& gaps, double t) {
    for (const Interval& iv : gaps)
        if (iv.contains(t)) return true;
    return false;
}

NWReport classify_nw(const CircleMapConfig& map, int max_period, int depth) {
    if (max_period < 1 || max_period > 10) throw ConfigError("max_period must lie in [1,10]");
    if (depth < 0 || depth > 20) throw ConfigError("gap depth must lie in [0,20]");

    NWReport rep;
    for (int p = 1; p <= max_period; ++p)
        for (PeriodicOrbitRecord& rec : periodic_points(map, p)) {
            if (rec.period != p) continue;  // already collected at its minimal period
            (rec.stability == Stability::attracting ? rep.attracting_orbits
                                                    : rep.repelling_orbits)
                .push_back(std::move(rec));
        }

    if (rep.attracting_orbits.empty()) {
        rep.kind = NWKind::whole_circle;
        return rep;
    }

    rep.kind = NWKind::cantor_plus_orbits;
    std::vector<Interval> basins;
    for (const PeriodicOrbitRecord& orbit : rep.attracting_orbits) {
        // immediate basin of each orbit point: the arc between its neighbors
        // among all fixed points of g^p
        std::vector<double> all;
        for (const PeriodicOrbitRecord& rec : periodic_points(map, orbit.period))
            all.insert(all.end(), rec.points.begin(), rec.points.end());
        std::sort(all.begin(), all.end());
        for (double s : all) {
            bool is_orbit_point = false;
            for (double q : orbit.points)
                if (circle_dist(q, s) < 1e-9) is_orbit_point = true;
            if (!is_orbit_point) continue;
            auto it = std::lower_bound(all.begin(), all.end(), s - 1e-12);
            std::size_t idx = static_cast<std::size_t>(it - all.begin());
            double left = idx == 0 ? all.back() - 1.0 : all[idx - 1];
            double right = idx + 1 == all.size() ? all.front() + 1.0 : all[idx + 1];
            basins.push_back(make_arc(left, right - left));
        }
    }
    rep.gaps = pull_back_to_depth(map, merge_arcs(std::move(basins)), depth);
    rep.gap_measure = 0.0;
    for (const Interval& iv : rep.gaps) rep.gap_measure += iv.length();
    return rep;
}

std::vector<Interval> cantor_gaps(const CircleMapConfig& map, int depth) {
    if (depth < 0 || depth > 20) throw ConfigError("gap depth must lie in [0,20]");
    if (std::pow(static_cast<double>(map.degree), depth) > 1e7)
        throw BudgetExceeded("gap enumeration exceeds the work budget");
    return pull_back_to_depth(map, {basin_interval(map)}, depth);
}

double min_derivative_on_complement(const CircleMapConfig& map,
                                    const std::vector<Interval>& gaps, int samples) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        double t = static_cast<double>(i) / samples;
        if (in_any_gap(gaps, t)) continue;
        best = std::min(best, deriv(map, t));
    }
    return best;
}

LiftedOrbit lift_periodic_orbit(const SkewConfig& F, const PeriodicOrbitRecord& orbit) {
    if (orbit.points.empty()) throw ConfigError("cannot lift an empty orbit");
    // dynamical order of the base orbit starting from its smallest point
    std::vector<double> cycle;
    cycle.reserve(orbit.period);
    double t = orbit.points.front();
    for (int i = 0; i < orbit.period; ++i) {
        cycle.push_back(t);
        t = eval(F.base, t);
    }

    // fiber return map over one period: z -> lambda^p z + c
    double scale = 1.0;
    std::complex<double> c{0.0, 0.0};
    for (double tk : cycle) {
        c = F.lambda * c + 0.5 * unit_phase(tk);
        scale *= F.lambda;
    }
    std::complex<double> z = c / (1.0 - scale);

    LiftedOrbit lifted;
    lifted.base = orbit;
    lifted.period = orbit.period;
    TorusPoint p{cycle.front(), z};
    for (int i = 0; i < orbit.period; ++i) {
        lifted.points.push_back(p);
        p = apply(F, p);
    }
    return lifted;
}

bool nw_projection_check(const SkewConfig& F, const std::vector<LiftedOrbit>& lifted) {
    (void)F;
    for (const LiftedOrbit& orb : lifted)
        for (const TorusPoint& p : orb.points) {
            double best = 1.0;
            for (double b : orb.base.points) best = std::min(best, circle_dist(p.t, b));
            if (best > 1e-9) return false;
        }
    return true;
}

}  // namespace solenoid
