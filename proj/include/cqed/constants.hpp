#pragma once

#include <numbers>

#include "cqed/errors.hpp"

namespace cqed {

// Fundamental constants used by every builder.  The default preset is
// Hartree atomic units; individual entries may be overridden in tests.
struct PhysicalConstants {
    double hbar = 1.0;                   // reduced Planck constant
    double m = 1.0;                      // electron mass
    double e = 1.0;                      // elementary charge
    double c = 137.035999;               // speed of light
    double eps0 = 1.0 / (4.0 * std::numbers::pi);  // vacuum permittivity

    void validate() const {
        if (hbar <= 0 || m <= 0 || e <= 0 || c <= 0 || eps0 <= 0)
            throw config_error("PhysicalConstants: all constants must be strictly positive");
    }
};

inline PhysicalConstants atomic_units() { return PhysicalConstants{}; }

}  // namespace cqed
