#include "solenoid/attractor.hpp"

#include <algorithm>
#include <cmath>

namespace solenoid {

namespace {

void enumerate_branches(const SkewConfig& F, double parent_t, int remaining,
                        std::vector<double>& branch, std::complex<double> center, double weight,
                        CrossSection& out) {
    if (remaining == 0) {
        DiskRecord rec;
        rec.fiber_t = out.fiber_t;
        rec.center = center;
        rec.radius = std::pow(F.lambda, out.depth);
        rec.depth = out.depth;
        rec.itinerary = branch;
        out.disks.push_back(std::move(rec));
        return;
    }
    for (double ti : preimages(F.base, parent_t)) {
        branch.push_back(ti);
        enumerate_branches(F, ti, remaining - 1, branch, center + weight * 0.5 * unit_phase(ti),
                           weight * F.lambda, out);
        branch.pop_back();
    }
}

}  // namespace

CrossSection cross_section(const SkewConfig& F, double t, int n) {
    if (n < 0) throw ConfigError("cross-section depth must be nonnegative");
    if (n > 20 || std::pow(static_cast<double>(F.degree()), n) > 1e7)
        throw BudgetExceeded("cross-section tree exceeds the work budget");
    CrossSection out;
    out.fiber_t = wrap_unit(t);
    out.depth = n;
    std::vector<double> branch;
    branch.reserve(n);
    enumerate_branches(F, out.fiber_t, n, branch, {0.0, 0.0}, 1.0, out);
    return out;
}

std::vector<TorusPoint> attractor_sample(const SkewConfig& F, const TorusPoint& p0,
                                         int n_transient, int n_keep) {
    if (n_transient < 1) throw ConfigError("attractor sampling needs n_transient >= 1");
    if (n_keep < 0) throw ConfigError("n_keep must be nonnegative");
    TorusPoint p = p0;
    for (int i = 0; i < n_transient; ++i) p = apply(F, p);
    std::vector<TorusPoint> kept;
    kept.reserve(n_keep);
    for (int i = 0; i < n_keep; ++i) {
        kept.push_back(p);
        p = apply(F, p);
    }
    return kept;
}

Raster render_cross_section(const CrossSection& section, int resolution) {
    if (resolution < 64 || resolution > 4096)
        throw ConfigError("raster resolution must lie in [64, 4096]");
    Raster r;
    r.width = r.height = resolution;
    r.pixels.assign(static_cast<std::size_t>(resolution) * resolution, 0);

    double step = 2.0 / resolution;
    for (const DiskRecord& d : section.disks) {
        double cx = d.center.real(), cy = d.center.imag(), rad = d.radius;
        // pixel (row, col) center: x = -1 + (col+0.5) step, y = 1 - (row+0.5) step
        int col_lo = std::max(0, static_cast<int>(std::floor((cx - rad + 1.0) / step - 0.5)));
        int col_hi = std::min(resolution - 1, static_cast<int>(std::ceil((cx + rad + 1.0) / step - 0.5)));
        int row_lo = std::max(0, static_cast<int>(std::floor((1.0 - cy - rad) / step - 0.5)));
        int row_hi = std::min(resolution - 1, static_cast<int>(std::ceil((1.0 - cy + rad) / step - 0.5)));
        for (int row = row_lo; row <= row_hi; ++row) {
            double y = 1.0 - (row + 0.5) * step;
            for (int col = col_lo; col <= col_hi; ++col) {
                double x = -1.0 + (col + 0.5) * step;
                double dx = x - cx, dy = y - cy;
                if (dx * dx + dy * dy <= rad * rad)
                    r.pixels[static_cast<std::size_t>(row) * resolution + col] = 255;
            }
        }
    }
    return r;
}

std::string raster_to_p5(const Raster& r) {
    std::string out = "P5\n" + std::to_string(r.width) + " " + std::to_string(r.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(r.pixels.data()), r.pixels.size());
    return out;
}

}  // namespace solenoid
