#include "solenoid/coding.hpp"

#include <cmath>

namespace solenoid {

namespace {
constexpr double kCompatTol = 1e-9;
constexpr double kCoordTol = 1e-8;
}  // namespace

void validate_itinerary(const CircleMapConfig& map, const Itinerary& itin) {
    if (itin.coords.empty()) throw IncompatibleItinerary("itinerary must hold at least t_0");
    for (std::size_t i = 0; i + 1 < itin.coords.size(); ++i)
        if (circle_dist(eval(map, itin.coords[i + 1]), itin.coords[i]) > kCompatTol)
            throw IncompatibleItinerary("consecutive coordinates are not g-compatible");
}

Itinerary encode(const SkewConfig& F, const TorusPoint& p, int r) {
    if (r < 0) throw ConfigError("encode depth must be nonnegative");
    Itinerary itin;
    itin.coords.reserve(r + 1);
    itin.coords.push_back(wrap_unit(p.t));
    TorusPoint q = p;
    for (int i = 1; i <= r; ++i) {
        try {
            q = preimage(F, q);
        } catch (const NotInImage&) {
            throw NotInImage("point leaves the forward image", i);
        }
        itin.coords.push_back(q.t);
    }
    return itin;
}

TorusPoint decode(const Itinerary& itin, const SkewConfig& F) {
    validate_itinerary(F.base, itin);
    // Horner form of sum_{k=1..r} lambda^{k-1} (1/2) e^{2 pi i t_k}, deepest first.
    std::complex<double> z{0.0, 0.0};
    for (std::size_t k = itin.coords.size() - 1; k >= 1; --k)
        z = F.lambda * z + 0.5 * unit_phase(itin.coords[k]);
    return {itin.coords.front(), z};
}

Itinerary shift_itinerary(const CircleMapConfig& map, const Itinerary& itin) {
    if (itin.coords.empty()) throw IncompatibleItinerary("itinerary must hold at least t_0");
    Itinerary out;
    out.coords.reserve(itin.coords.size() + 1);
    out.coords.push_back(eval(map, itin.coords.front()));
    out.coords.insert(out.coords.end(), itin.coords.begin(), itin.coords.end());
    return out;
}

bool conjugacy_check(const SkewConfig& F, const TorusPoint& p, int depth) {
    if (depth < 1) throw ConfigError("conjugacy check needs depth >= 1");
    Itinerary lhs = encode(F, apply(F, p), depth);
    Itinerary rhs = shift_itinerary(F.base, encode(F, p, depth - 1));
    for (std::size_t i = 0; i < lhs.coords.size(); ++i)
        if (circle_dist(lhs.coords[i], rhs.coords[i]) > kCoordTol) return false;
    return true;
}

double product_distance(const ProductMetric& metric, const Itinerary& a, const Itinerary& b) {
    if (a.coords.size() != b.coords.size())
        throw LengthMismatch("itineraries must have equal length");
    double sum = 0.0;
    double w = 1.0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        sum += w * circle_dist(a.coords[i], b.coords[i]);
        w *= metric.weight;
    }
    return sum;
}

}  // namespace solenoid
