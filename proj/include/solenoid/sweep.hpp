#pragma once

#include <optional>
#include <string>

#include "solenoid/nonwandering.hpp"

namespace solenoid {

// One-parameter family of skew maps along the path eps(mu) = mu/2,
// delta(mu) = mu/5: mu = 0 is the linear base (solenoid regime), any mu > 0
// switches the base to the bump family.
struct SweepConfig {
    std::vector<double> mu_grid;  // ascending in [0,1]
    int degree = 2;
    double lambda = 0.2;
    int max_period = 4;
    int gap_depth = 8;
};

CircleMapConfig base_for_mu(const SweepConfig& cfg, double mu);

enum class Regime { expanding_attractor, zero_dim_plus_periodic };

struct RegimeReport {
    double mu = 0.0;
    Regime regime = Regime::expanding_attractor;
    int n_attracting_orbits = 0;
    double gap_measure = 0.0;
    std::optional<TorusPoint> sink;  // lowest-period attracting orbit, lifted
    std::string error;               // per-mu failure, recorded not thrown
};

RegimeReport regime_detect(const SkewConfig& F, int max_period, int gap_depth);

// One report per grid value, in grid order. Per-mu failures are recorded in
// the report's error field rather than aborting the sweep.
std::vector<RegimeReport> run_sweep(const SweepConfig& cfg);

struct SinkRow {
    double mu = 0.0;
    TorusPoint sink;
};

// Lifted sink coordinates for every mu > 0 of the grid.
std::vector<SinkRow> sink_trace(const SweepConfig& cfg);

}  // namespace solenoid
