#pragma once

#include <Eigen/Dense>
#include <variant>
#include <vector>

#include "cqed/constants.hpp"
#include "cqed/modes.hpp"
#include "cqed/potential.hpp"

namespace cqed {

// Movable compactly supported trial orbital: the smooth bump
// N * exp(-1/(1 - |r - a*kappa|^2)) on the open unit ball around a*kappa,
// zero outside, all derivatives vanishing on the boundary.
struct MollifierConfig {
    double a = 0.0;                              // center parameter (bohr)
    Eigen::Vector3d kappa{1.0, 0.0, 0.0};        // direction, possibly non-unit

    Eigen::Vector3d center() const { return a * kappa; }
};

// N orbitals on a line of centers [a + spacing*(i-1)] * kappa.  Supports
// are pairwise disjoint whenever spacing * |kappa| >= 2.
struct SlaterMollifierConfig {
    int n_electrons = 2;
    double a = 0.0;
    Eigen::Vector3d kappa{1.0, 0.0, 0.0};
    double spacing = 3.0;

    Eigen::Vector3d center(int i) const { return (a + spacing * i) * kappa; }
    bool supports_disjoint() const { return spacing * kappa.norm() >= 2.0; }
    void validate() const;
};

// Per-mode photon trial state as amplitudes over the oscillator ladder;
// the default puts equal weight on the two lowest states, which carries a
// nonzero mean displacement <p>.
struct PhotonTrialState {
    std::vector<Eigen::VectorXd> weights;

    static PhotonTrialState two_lowest(int n_modes);

    double mean_coordinate(int mode) const;  // <p_a> under the (a+a^dag)/sqrt(2) convention
    double mean_coordinate_squared(int mode) const;
    double energy(const ModeSet& modes, const PhysicalConstants& pc) const;
    void validate(int n_modes) const;
};

// Scale-free integrals of the unit mollifier, evaluated once by adaptive
// radial quadrature (all integrands are spherically symmetric).
struct MollifierMoments {
    double norm_sq_raw;      // integral of exp(-2/(1-r^2)) over the ball = 1/N^2
    double norm_const;       // N
    double kinetic;          // (hbar^2/2m) * N^2 * int |grad f|^2, at m = hbar = 1
    double kinetic_laplacian;  // same number through -int f lap f, as a cross-check
    double second_moment;    // N^2 * int r^2 f^2
};

const MollifierMoments& mollifier_moments();

// (N, T): normalization and kinetic energy, independent of the center.
std::pair<double, double> mollifier_norm_and_kinetic(const PhysicalConstants& pc);

struct DipoleMoment {
    Eigen::Vector3d value;   // equals a*kappa by symmetry
    double residual;         // quadrature size of the centered first moment
};

DipoleMoment dipole_moment(const MollifierConfig& config);

struct EnergyBreakdown {
    double kinetic = 0.0;
    double photon = 0.0;
    double potential = 0.0;  // <V_ext>, negative for attractive wells
    double coulomb = 0.0;    // electron pairs, zero for one electron
    double bilinear = 0.0;   // <V_int>
    double dip = 0.0;        // harmonic confinement term when included
    double total = 0.0;
    bool dip_included = false;
};

EnergyBreakdown trial_energy(const MollifierConfig& config, const PhotonTrialState& photon,
                             const ModeSet& modes, const ExternalPotential& v_ext,
                             const PhysicalConstants& pc, bool include_dip);

EnergyBreakdown trial_energy(const SlaterMollifierConfig& config, const PhotonTrialState& photon,
                             const ModeSet& modes, const ExternalPotential& v_ext,
                             const PhysicalConstants& pc, bool include_dip);

// Coulomb energy of the disjoint orbital line both ways: the exact
// point-charge reduction of spherically symmetric non-overlapping charges,
// and raw nested quadrature of the pair integrals.
double coulomb_point_charge(const SlaterMollifierConfig& config, const PhysicalConstants& pc);
double coulomb_quadrature(const SlaterMollifierConfig& config, const PhysicalConstants& pc,
                          double rel_tol = 1e-9);

struct TrialScanResult {
    std::vector<double> a_values;
    std::vector<EnergyBreakdown> energies;
    double fitted_slope = 0.0;     // least squares over the tail
    double predicted_slope = 0.0;  // -<p> N sum_a lambda_a . kappa
    std::vector<int> tail_indices;
};

// Energy of the trial family over a grid of center parameters.  The tail
// (where the external potential contribution is negligible) is fitted with
// a straight line and compared against the analytic slope.
TrialScanResult unboundedness_scan(const std::vector<double>& a_values, int n_electrons,
                                   const Eigen::Vector3d& kappa, const PhotonTrialState& photon,
                                   const ModeSet& modes, const ExternalPotential& v_ext,
                                   const PhysicalConstants& pc, bool include_dip);

// Default trial direction: lambda/|lambda|^2 for a single mode, the
// normalized coupling sum otherwise (modes are polarized along x).
Eigen::Vector3d default_kappa(const ModeSet& modes);

}  // namespace cqed
