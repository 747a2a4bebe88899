#pragma once

#include <stdexcept>
#include <string>

namespace nsk {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A negative fractional power was requested on a field with nonzero mean.
struct NegativePowerOnMean : Error {
    using Error::Error;
};

/// An operation requiring a zero-mean field received one with nonzero mean.
struct NonZeroMean : Error {
    using Error::Error;
};

/// A constitutive law was evaluated at a density <= 0.
struct NonPositiveDensity : Error {
    using Error::Error;
};

/// A viscosity-model constraint failed; the message names the bound.
struct ConstraintViolated : Error {
    using Error::Error;
};

/// The density dropped below the configured floor during integration.
struct VacuumApproached : Error {
    VacuumApproached(double time, double rho_min, double floor)
        : Error("density " + std::to_string(rho_min) + " fell below floor " +
                std::to_string(floor) + " at t=" + std::to_string(time)),
          time(time), rho_min(rho_min), floor(floor) {}
    double time;
    double rho_min;
    double floor;
};

/// The regularity parameter s lies outside the admissible range.
struct SRangeViolation : Error {
    using Error::Error;
};

/// A partition-of-unity radius does not fit the requested region.
struct RadiusTooLarge : Error {
    using Error::Error;
};

/// A configuration file could not be parsed; the message carries position/key.
struct ParseError : Error {
    using Error::Error;
};

/// A configuration violates a stated invariant; the message names it.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace nsk
