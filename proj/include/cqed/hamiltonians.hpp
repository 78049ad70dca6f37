#pragma once

#include <Eigen/Dense>

#include "cqed/basis.hpp"
#include "cqed/constants.hpp"
#include "cqed/modes.hpp"
#include "cqed/operators.hpp"
#include "cqed/potential.hpp"

namespace cqed {

// Dipole-limit Hamiltonian in the displacement-coordinate representation,
//
//   H = T_e + V_ext + sum_a [ hbar w_a (n_a + 1/2) - lambda_a x p_a ]
//       [ + sum_a (lambda_a x)^2 / (2 hbar w_a) ]
//
// with p_a = (a + a^dag)/sqrt(2).  The coupling pieces are exposed
// individually; `dipole_self_energy` is the zero operator when excluded.
struct LengthGaugeOperator {
    HermitianOperator total;
    HermitianOperator electron;            // T_e + V_ext
    HermitianOperator photon;              // sum_a hbar w_a (n_a + 1/2)
    HermitianOperator bilinear;            // -sum_a lambda_a x p_a
    HermitianOperator dipole_self_energy;  // harmonic x^2 confinement per mode
    bool includes_dipole_self_energy = true;
};

// Bare electron Hamiltonian T_e + V_ext on the grid alone.
SpMatC electron_grid_hamiltonian(const GridSpec& grid, const ExternalPotential& v_ext,
                                 const PhysicalConstants& pc);

LengthGaugeOperator build_length_gauge(const CompositeBasis& basis, const ModeSet& modes,
                                       const ExternalPotential& v_ext,
                                       const PhysicalConstants& pc, bool include_dip);

// Minimal-coupling form with a uniform vector potential,
//
//   H = (i hbar d/dx + (e/c) A)^2 / 2m + V_ext + sum_a hbar w_a (n_a + 1/2),
//   (e/c) A = sum_a (lambda_a / w_a) q_a,  q_a = (a + a^dag)/sqrt(2).
//
// lambda fixes the coupling completely; no quantization volume is needed.
// With subtract_dip the harmonic x^2 term is removed from the equivalent
// displacement-coordinate form, i.e. -sum_a (lambda_a x)^2/(2 hbar w_a) is
// added here.  Periodic grids are the natural habitat (the momentum
// operator is exactly translation covariant there); Dirichlet grids work
// for states that vanish at the walls.
HermitianOperator build_velocity_gauge(const CompositeBasis& basis, const ModeSet& modes,
                                       const ExternalPotential& v_ext,
                                       const PhysicalConstants& pc, bool subtract_dip);

// Joint translation of the electron by `shift` and of every displacement
// coordinate by lambda_a * shift / (hbar w_a).  Requires a periodic grid
// and a shift that is an integer multiple of the spacing.  Unitary.
SpMatC polaritonic_translation(const CompositeBasis& basis, const ModeSet& modes,
                               const PhysicalConstants& pc, double shift);

// Single-mode field energy evaluated two ways.  `from_field_squares` is
// (eps0/2) integral of (E^2 + c^2 B^2) with the mode functions replaced by
// constants; it comes out as a multiple of -(a - a^dag)^2 and so carries
// Delta n = +-2 entries on top of the number ladder.  `number_form` is
// hbar w (a^dag a + 1/2).  The derived prefactor of
// (a a^dag + a^dag a - a^2 - a^dag^2) is reported next to the commonly
// quoted hbar*w so the factor discrepancy is visible rather than assumed.
struct FieldEnergyDemo {
    HermitianOperator from_field_squares;
    HermitianOperator number_form;
    HermitianOperator quoted_form;  // hbar*w * (a a^dag + a^dag a - a^2 - a^dag^2)
    double derived_prefactor = 0.0;
    double quoted_prefactor = 0.0;
    double vacuum_from_field_squares = 0.0;
    double vacuum_number_form = 0.0;
    double vacuum_quoted_form = 0.0;
    bool prefactor_discrepancy = false;
};

FieldEnergyDemo dipole_field_energy_demo(const Mode& mode, const FockSpec& fock,
                                         const PhysicalConstants& pc);

// Two lowest eigenstates of a bare electron Hamiltonian reduced to a
// resonant two-level system.  The vanishing matrix elements
// <g|x|g> = <e|x|e> = <g|x^2|e> = 0 are checked, not assumed; violations
// beyond 1e-8 set `parity_warning` instead of failing.
struct TwoLevelReduction {
    double E_g = 0.0;
    double E_e = 0.0;
    double d_ge = 0.0;     // |<g| x |e>| (bohr)
    double Omega_R = 0.0;  // Rabi frequency, sqrt(2) lambda d_ge / hbar
    double G = 0.0;        // harmonic-confinement offset over {g, e}
    bool parity_warning = false;
    double parity_residual = 0.0;
};

TwoLevelReduction two_level_reduction(const SpMatC& electron_hamiltonian, const GridSpec& grid,
                                      const Mode& mode, const PhysicalConstants& pc);

// Two-level + single mode model zoo on the (2 or 2j+1) x (n_max+1) space,
// matter index slowest.
HermitianOperator build_rabi(const TwoLevelReduction& red, const Mode& mode, const FockSpec& fock,
                             const PhysicalConstants& pc, bool with_offset);

HermitianOperator build_jaynes_cummings(const TwoLevelReduction& red, const Mode& mode,
                                        const FockSpec& fock, const PhysicalConstants& pc);

HermitianOperator build_dicke(const TwoLevelReduction& red, const Mode& mode, const FockSpec& fock,
                              int n_atoms, const PhysicalConstants& pc);

// Conserved excitation number of the rotating-wave models:
// a^dag a + J_z + j for the spin-j sector (j = n_atoms/2).
HermitianOperator excitation_number(const FockSpec& fock, int n_atoms);

}  // namespace cqed
