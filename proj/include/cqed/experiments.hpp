#pragma once

#include <string>
#include <vector>

#include "cqed/config.hpp"
#include "cqed/csv.hpp"
#include "cqed/hamiltonians.hpp"
#include "cqed/spectra.hpp"

namespace cqed {

// Runs the named experiment and returns the populated table (not yet
// written to disk).  Unknown names raise config_error.
ResultTable run_experiment(const ExperimentConfig& cfg);

std::vector<std::pair<std::string, std::string>> experiment_catalog();

// Photon-branch excitation gap of the coupled system at v_ext = 0 by
// exact diagonalization on a periodic grid.  On a ring the dipole-limit
// Hamiltonian is built in its translation-covariant minimal-coupling form
// (the displacement-coordinate form needs a single-valued x operator and
// does not exist globally on a torus).  The photon-branch state is the
// lowest excitation whose photon occupation exceeds the ground state's by
// more than one half.
struct PhotonGapResult {
    double gap = 0.0;
    double expected = 0.0;  // sqrt(w^2 + wp^2)
    double relative_error = 0.0;
    int state_index = -1;
    double n_ph_ground = 0.0;
    double n_ph_state = 0.0;
};

PhotonGapResult depolarization_gap_exact_diag(const GridSpec& grid, const FockSpec& fock,
                                              const Mode& mode, const PhysicalConstants& pc,
                                              int k = 12, double tol = 1e-9);

}  // namespace cqed
