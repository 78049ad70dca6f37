#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "cqed/constants.hpp"
#include "cqed/modes.hpp"

namespace cqed {

// Quadratic content of the coupled system at v_ext = 0 in the coordinates
// (x, p_1..p_M).  N electrons enter through the normalized center of mass:
// coordinate sqrt(N)*X keeps the mass at m and scales the coupling to
// sqrt(N)*lambda.  `kinetic` holds the coefficients of the conjugate
// momentum squares (1/2m for x, hbar*w/2 for the dimensionless photon
// pairs); `potential` is the symmetric matrix V with energy u^T V u / 2.
struct QuadraticForm {
    std::vector<std::string> labels;
    Eigen::VectorXd kinetic;
    Eigen::MatrixXd potential;
    int n_electrons = 1;

    int size() const { return static_cast<int>(kinetic.size()); }
};

QuadraticForm assemble_quadratic(const ModeSet& modes, int n_electrons, bool include_dip,
                                 const PhysicalConstants& pc);

// Classical small-oscillation analysis.  Unstable directions are reported
// as negative nu^2 entries rather than complex frequencies.
struct NormalModeResult {
    Eigen::VectorXd nu_squared;  // ascending
    Eigen::MatrixXd modes;       // columns are coordinate-space mode shapes
    bool stable = true;

    // sqrt of the non-negative part; negative nu^2 entries map to 0 here
    Eigen::VectorXd frequencies() const;
};

NormalModeResult normal_modes(const QuadraticForm& qf, const PhysicalConstants& pc);

// Matter contribution to the shifted field frequencies, per mode.
// Reduced form N lambda^2/(m hbar w) always; the density form n e^2/(m eps0)
// is computed as well when a quantization volume is supplied and the two are
// required to agree to 1e-12 relative.
std::vector<double> plasma_frequency(const ModeSet& modes, int n_electrons,
                                     const PhysicalConstants& pc,
                                     std::optional<double> volume = std::nullopt);

// Coefficient-level check of the field equations of motion at v_ext = 0.
// Works on the exact linear generator of the phase-space dynamics
// z = (x, p_1..p_M, px, pi_1..pi_M), so residuals are free of truncation
// noise.  Field operators are linear forms over z.
struct MaxwellEomReport {
    int n_modes = 0;
    int n_electrons = 1;
    bool include_dip = true;
    double plasma_sq_total = 0.0;  // sum over modes of N lambda^2/(m hbar w)

    // second time derivative of E against the two candidate right-hand
    // sides: shifted bare frequencies acting on E, or the bare frequencies
    // plus a displacement-field source
    double residual_efield_shifted = 0.0;
    double residual_efield_displacement = 0.0;

    // vector-potential equation: the derived inhomogeneity must be a pure
    // multiple of the total electron momentum
    double residual_vector_potential = 0.0;
    double derived_current_coefficient = 0.0;

    // || D - eps0 E - P || as linear forms
    double residual_displacement_identity = 0.0;

    Eigen::VectorXd efield_coeffs, dfield_coeffs, pfield_coeffs;
};

MaxwellEomReport maxwell_eom_check(const ModeSet& modes, int n_electrons, bool include_dip,
                                   const PhysicalConstants& pc);

}  // namespace cqed
