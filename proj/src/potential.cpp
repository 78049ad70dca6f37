#include "cqed/potential.hpp"

#include <cmath>

namespace cqed {

ExternalPotential ExternalPotential::harmonic_well(double omega_) {
    ExternalPotential v;
    v.kind = Kind::harmonic;
    v.omega = omega_;
    v.validate();
    return v;
}

ExternalPotential ExternalPotential::gaussian(double depth_, double width_) {
    ExternalPotential v;
    v.kind = Kind::gaussian_well;
    v.depth = depth_;
    v.width = width_;
    v.validate();
    return v;
}

ExternalPotential ExternalPotential::soft_coulomb_well(double charge_, double softening_) {
    ExternalPotential v;
    v.kind = Kind::soft_coulomb;
    v.charge = charge_;
    v.softening = softening_;
    v.validate();
    return v;
}

ExternalPotential ExternalPotential::tabulated_values(std::vector<double> values) {
    ExternalPotential v;
    v.kind = Kind::tabulated;
    v.table = std::move(values);
    return v;
}

double ExternalPotential::eval(double x, const PhysicalConstants& pc) const {
    switch (kind) {
        case Kind::zero:
            return 0.0;
        case Kind::harmonic:
            return 0.5 * pc.m * omega * omega * x * x;
        case Kind::gaussian_well:
            return -depth * std::exp(-x * x / (2.0 * width * width));
        case Kind::soft_coulomb:
            return -charge / std::sqrt(x * x + softening * softening);
        case Kind::tabulated:
            throw config_error("tabulated potential must be sampled through its grid");
    }
    return 0.0;
}

double ExternalPotential::radial(double r, const PhysicalConstants& pc) const {
    if (!is_radial())
        throw config_error("tabulated potential has no radial profile");
    return eval(r, pc);
}

Eigen::VectorXd ExternalPotential::sample(const GridSpec& grid, const PhysicalConstants& pc) const {
    grid.validate();
    Eigen::VectorXd v(grid.n_points);
    if (kind == Kind::tabulated) {
        if (static_cast<int>(table.size()) != grid.n_points)
            throw config_error("tabulated potential has " + std::to_string(table.size()) +
                               " values but the grid has " + std::to_string(grid.n_points) +
                               " points");
        for (int i = 0; i < grid.n_points; ++i) v[i] = table[i];
        return v;
    }
    for (int i = 0; i < grid.n_points; ++i) v[i] = eval(grid.point(i), pc);
    return v;
}

void ExternalPotential::validate() const {
    switch (kind) {
        case Kind::harmonic:
            if (omega <= 0) throw config_error("harmonic potential: omega must be > 0");
            break;
        case Kind::gaussian_well:
            if (depth < 0) throw config_error("gaussian well: depth must be >= 0");
            if (width <= 0) throw config_error("gaussian well: width must be > 0");
            break;
        case Kind::soft_coulomb:
            if (softening <= 0) throw config_error("soft coulomb: softening must be > 0");
            break;
        default:
            break;
    }
}

std::string ExternalPotential::describe() const {
    switch (kind) {
        case Kind::zero:
            return "zero";
        case Kind::harmonic:
            return "harmonic(omega=" + std::to_string(omega) + ")";
        case Kind::gaussian_well:
            return "gaussian_well(depth=" + std::to_string(depth) + ",width=" + std::to_string(width) + ")";
        case Kind::soft_coulomb:
            return "soft_coulomb(charge=" + std::to_string(charge) +
                   ",softening=" + std::to_string(softening) + ")";
        case Kind::tabulated:
            return "tabulated(" + std::to_string(table.size()) + " points)";
    }
    return "?";
}

}  // namespace cqed
