#pragma once

#include <optional>
#include <vector>

#include "cqed/constants.hpp"
#include "cqed/errors.hpp"

namespace cqed {

// One photon mode, polarized along the 1D electron axis.  The coupling
// lambda is the primary input; when a quantization volume is supplied the
// relation lambda = sqrt(omega) * e * C / c with C = sqrt(hbar c^2 / (eps0 L^3))
// must hold for every stored mode.
struct Mode {
    double omega = 1.0;    // angular frequency (Ha/hbar)
    double lambda = 0.0;   // coupling strength (Ha/bohr), sign allowed
    int epsilon_sign = 1;  // orientation of the polarization along the axis

    // lambda with the polarization orientation folded in
    double signed_lambda() const { return lambda * epsilon_sign; }

    void validate() const {
        if (omega <= 0) throw config_error("Mode: omega must be > 0");
        if (epsilon_sign != 1 && epsilon_sign != -1)
            throw config_error("Mode: epsilon_sign must be +1 or -1");
    }
};

struct ModeSet {
    std::vector<Mode> modes;
    std::optional<double> quantization_volume;  // L^3 in bohr^3

    int size() const { return static_cast<int>(modes.size()); }
    const Mode& operator[](int i) const { return modes[i]; }

    // Mode-function amplitude C = sqrt(hbar c^2 / (eps0 L^3)); requires the volume.
    double mode_amplitude(const PhysicalConstants& pc) const;

    // lambda implied by the quantization volume for frequency omega.
    static double lambda_from_volume(double omega, double volume, const PhysicalConstants& pc);

    static ModeSet from_volume(const std::vector<double>& omegas, double volume,
                               const PhysicalConstants& pc);

    void validate(const PhysicalConstants& pc) const;
};

}  // namespace cqed
