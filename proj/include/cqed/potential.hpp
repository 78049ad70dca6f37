#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cqed/constants.hpp"
#include "cqed/errors.hpp"
#include "cqed/grid.hpp"

namespace cqed {

// External binding potential for the electron.  The analytic kinds are
// even functions of the coordinate and double as radial profiles v(|r|)
// for the 3D trial-state integrals; `tabulated` is tied to a grid.
struct ExternalPotential {
    enum class Kind { zero, harmonic, gaussian_well, soft_coulomb, tabulated };

    Kind kind = Kind::zero;
    double omega = 1.0;      // harmonic: v = m omega^2 x^2 / 2
    double depth = 1.0;      // gaussian_well: v = -depth * exp(-x^2 / (2 width^2)), depth >= 0
    double width = 1.0;
    double charge = 1.0;     // soft_coulomb: v = -charge / sqrt(x^2 + softening^2)
    double softening = 1.0;
    std::vector<double> table;

    static ExternalPotential zero() { return {}; }
    static ExternalPotential harmonic_well(double omega_);
    static ExternalPotential gaussian(double depth_, double width_);
    static ExternalPotential soft_coulomb_well(double charge_, double softening_);
    static ExternalPotential tabulated_values(std::vector<double> values);

    bool is_radial() const { return kind != Kind::tabulated; }

    // signed 1D coordinate; mass enters only for the harmonic kind
    double eval(double x, const PhysicalConstants& pc) const;

    // radial profile v(r), r >= 0, for the trial-state quadratures
    double radial(double r, const PhysicalConstants& pc) const;

    Eigen::VectorXd sample(const GridSpec& grid, const PhysicalConstants& pc) const;

    void validate() const;
    std::string describe() const;
};

}  // namespace cqed
