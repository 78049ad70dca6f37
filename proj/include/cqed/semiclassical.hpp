#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cqed/constants.hpp"
#include "cqed/modes.hpp"
#include "cqed/operators.hpp"
#include "cqed/potential.hpp"

namespace cqed {

// Electron-only Hamiltonian with the photon field treated before the
// frame change: T_e + V_ext - e E x.  For E != 0 this has no box-size
// independent ground state; it only makes sense on a finite box.
HermitianOperator build_standard_semiclassical(const GridSpec& grid,
                                               const ExternalPotential& v_ext,
                                               const PhysicalConstants& pc, double field);

// Electron-only Hamiltonian at prescribed per-mode displacement fields:
// T_e + V_ext - (e/eps0) x sum_a D_a + sum_a (lambda_a x)^2/(2 hbar w_a).
// Bounded below for any lambda != 0 thanks to the harmonic confinement.
HermitianOperator build_fixed_displacement(const GridSpec& grid, const ExternalPotential& v_ext,
                                           const ModeSet& modes, const std::vector<double>& displacement,
                                           const PhysicalConstants& pc);

// Convenience overload: one total displacement over all modes.
HermitianOperator build_fixed_displacement(const GridSpec& grid, const ExternalPotential& v_ext,
                                           const ModeSet& modes, double total_displacement,
                                           const PhysicalConstants& pc);

struct ScfConfig {
    double mixing = 0.7;   // linear-mixing weight in (0, 1]
    double tol = 1e-10;    // |<x>_new - <x>_old| convergence threshold (bohr)
    int max_iter = 200;

    void validate() const {
        if (mixing <= 0 || mixing > 1) throw config_error("ScfConfig: mixing must be in (0, 1]");
        if (tol <= 0) throw config_error("ScfConfig: tol must be > 0");
        if (max_iter < 1) throw config_error("ScfConfig: max_iter must be >= 1");
    }
};

struct ScfResult {
    Eigen::VectorXcd state;
    double energy = 0.0;       // photon-relaxed total, <T+V+eps_dip-eEx> - kappa <x>^2/2
    double eigenvalue = 0.0;   // eigenvalue of the converged effective Hamiltonian
    double x_mean = 0.0;
    double polarization = 0.0;        // P = eps0 kappa <x> / e
    double displacement_total = 0.0;  // D = eps0 E + P
    std::vector<double> mode_displacements;  // per-mode D_a; feeding these into
                                             // build_fixed_displacement recovers the state
    int iterations = 0;
    std::vector<double> residual_history;
};

// Fixed point of psi -> ground state of
//   T_e + V_ext - e E x - (e/eps0) x P[psi] + eps_dip,
// with P[psi] = (eps0/e) sum_a (lambda_a^2/(hbar w_a)) <x>.  Linear mixing
// on <x>; seeded from the zero-field ground state with the tie-break
// toward non-negative <x> for degenerate wells.  Throws convergence_error
// (carrying the residual history) when max_iter is exhausted.
ScfResult scf_ground_state(const GridSpec& grid, const ExternalPotential& v_ext,
                           const ModeSet& modes, double field, const ScfConfig& scf,
                           const PhysicalConstants& pc);

struct StarkResult {
    std::vector<double> fields;
    std::vector<double> energies;      // ground energy per field point
    std::vector<bool> solved;          // false marks a failed point
    double alpha = 0.0;                // from the quadratic fit of E0(field)
    double alpha_perturbative = 0.0;   // sum over states on the field-free operator
    double relative_agreement = 0.0;   // |alpha - alpha_pt| / |alpha_pt|
};

// Ground energy against the applied static field.  Each point solves the
// bounded fixed-displacement problem at D = eps0 * field (the total field
// prescribed up front); the polarizability comes from an even polynomial
// fit E0 = c0 + c2 E^2 + c4 E^4 with alpha = -2 c2, and is checked against
// second-order perturbation theory on the same discretized field-free
// Hamiltonian.
StarkResult stark_scan(const GridSpec& grid, const ExternalPotential& v_ext, const ModeSet& modes,
                       const std::vector<double>& fields, const PhysicalConstants& pc);

// Static dipole polarizability of an electron-only Hamiltonian by the
// sum-over-states formula, using every eigenpair of the dense spectrum.
double sum_over_states_polarizability(const HermitianOperator& h, const GridSpec& grid,
                                      const PhysicalConstants& pc);

// Coefficient kappa = sum_a lambda_a^2 / (hbar w_a), the curvature of the
// harmonic confinement term and the strength of the polarization feedback.
double polarization_curvature(const ModeSet& modes, const PhysicalConstants& pc);

}  // namespace cqed
