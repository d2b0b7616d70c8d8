#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solenoid/skew.hpp"

namespace solenoid {

// One fiber-image disk F^n(N_{t_n}) seen in the cross-section over `fiber_t`.
// The itinerary (t_1,...,t_n) is the preimage branch: g(t_1) = fiber_t and
// g(t_{i+1}) = t_i. Center is the geometric series
//   sum_{k=1..n} lambda^{k-1} (1/2) e^{2 pi i t_k},
// radius lambda^n.
struct DiskRecord {
    double fiber_t = 0.0;
    std::complex<double> center{0.0, 0.0};
    double radius = 1.0;
    int depth = 0;
    std::vector<double> itinerary;
};

struct CrossSection {
    double fiber_t = 0.0;
    int depth = 0;
    std::vector<DiskRecord> disks;  // lexicographic itinerary order, d^depth entries
};

// Enumerates the depth-n preimage tree of t. Depth 0 is the full fiber disk.
// Throws BudgetExceeded when d^n > 1e7 or n > 20.
CrossSection cross_section(const SkewConfig& F, double t, int n);

// Forward-orbit tail: iterate apply from p0, discard n_transient points, keep
// the next n_keep.
std::vector<TorusPoint> attractor_sample(const SkewConfig& F, const TorusPoint& p0,
                                         int n_transient, int n_keep);

// Binary raster over [-1,1]^2, row-major, origin top-left; 0 background,
// 255 inside some disk (pixel classified by its center point).
struct Raster {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;
};

Raster render_cross_section(const CrossSection& section, int resolution);

// Serializes with the exact header "P5\n<w> <h>\n255\n" followed by the
// pixel bytes.
std::string raster_to_p5(const Raster& r);

}  // namespace solenoid
