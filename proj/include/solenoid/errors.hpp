#pragma once

#include <stdexcept>
#include <string>

namespace solenoid {

// Base class for every failure this library reports. Callers that only want
// "did it work" can catch this; callers that care which contract broke catch
// the specific type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A map or run configuration violates a documented bound.
struct ConfigError : Error {
    using Error::Error;
};

// Monotone-branch inversion failed to converge; the map is misconfigured.
struct RootNotBracketed : Error {
    using Error::Error;
};

// Basin operations on a map whose sink basin is empty (eps or delta is zero).
struct NoBasin : Error {
    using Error::Error;
};

// A periodic orbit with |multiplier| within 1e-8 of 1; the configuration is
// outside the hyperbolic regime and stability cannot be classified.
struct NeutralOrbit : Error {
    using Error::Error;
};

// An enumeration would exceed the hard work budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// A point is not in the forward image F^step of the solid torus. `step` is
// the first backward step at which membership failed.
struct NotInImage : Error {
    int step;
    explicit NotInImage(const std::string& what, int step_ = 0)
        : Error(what), step(step_) {}
};

// Two preimage candidates both land in the fiber disk. Impossible under the
// contraction bound; reachable only with a relaxed-mode configuration.
struct InjectivityViolation : Error {
    using Error::Error;
};

// An itinerary whose consecutive coordinates are not g-compatible.
struct IncompatibleItinerary : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

// Aperture computation outside the expanding regime (Dg_min <= lambda).
struct InvalidRegime : Error {
    using Error::Error;
};

}  // namespace solenoid
