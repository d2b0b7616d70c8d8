#include "solenoid/sweep.hpp"

#include <algorithm>

namespace solenoid {

CircleMapConfig base_for_mu(const SweepConfig& cfg, double mu) {
    if (mu < 0.0 || mu > 1.0) throw ConfigError("sweep parameter mu must lie in [0,1]");
    if (mu == 0.0) return CircleMapConfig::linear(cfg.degree);
    return CircleMapConfig::bump(cfg.degree, 0.5 * mu, 0.2 * mu);
}

RegimeReport regime_detect(const SkewConfig& F, int max_period, int gap_depth) {
    RegimeReport rep;
    NWReport nw = classify_nw(F.base, max_period, gap_depth);
    rep.n_attracting_orbits = static_cast<int>(nw.attracting_orbits.size());
    rep.gap_measure = nw.gap_measure;
    if (nw.kind == NWKind::whole_circle) {
        rep.regime = Regime::expanding_attractor;
        return rep;
    }
    rep.regime = Regime::zero_dim_plus_periodic;
    const PeriodicOrbitRecord* first = &nw.attracting_orbits.front();
    for (const PeriodicOrbitRecord& rec : nw.attracting_orbits)
        if (rec.period < first->period) first = &rec;
    rep.sink = lift_periodic_orbit(F, *first).points.front();
    return rep;
}

std::vector<RegimeReport> run_sweep(const SweepConfig& cfg) {
    if (cfg.mu_grid.empty()) throw ConfigError("sweep grid must be nonempty");
    if (!std::is_sorted(cfg.mu_grid.begin(), cfg.mu_grid.end()))
        throw ConfigError("sweep grid must be ascending");
    std::vector<RegimeReport> out;
    out.reserve(cfg.mu_grid.size());
    for (double mu : cfg.mu_grid) {
        RegimeReport rep;
        rep.mu = mu;
        try {
            SkewConfig F{base_for_mu(cfg, mu), cfg.lambda};
            rep = regime_detect(F, cfg.max_period, cfg.gap_depth);
            rep.mu = mu;
        } catch (const Error& e) {
            rep.error = e.what();
        }
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<SinkRow> sink_trace(const SweepConfig& cfg) {
    std::vector<SinkRow> rows;
    for (const RegimeReport& rep : run_sweep(cfg)) {
        if (rep.mu <= 0.0 || !rep.sink) continue;
        rows.push_back({rep.mu, *rep.sink});
    }
    return rows;
}

}  // namespace solenoid
