#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cqed/basis.hpp"
#include "cqed/operators.hpp"

namespace cqed {

struct EigenRequest {
    int k = 1;
    double tol = 1e-9;       // residual tolerance ||Hv - Ev||
    int max_subspace = 80;   // block-iteration cap
    std::uint64_t seed = 7;  // deterministic starting block
};

struct EigenResult {
    Eigen::VectorXd values;    // ascending
    Eigen::MatrixXcd vectors;  // columns
    Eigen::VectorXd residuals;
    int iterations = 0;
    bool dense_path = false;
};

// k smallest eigenpairs of a Hermitian operator.  Small or nearly full
// problems go through a dense solve; everything else through shift-invert
// block Lanczos with full reorthogonalization, the shift chosen below the
// Gershgorin lower bound so the factorization is positive definite.
// Throws convergence_error (carrying the best residuals) when the
// iteration cap is hit.
EigenResult lowest_eigenpairs(const HermitianOperator& op, const EigenRequest& req);

enum class Verdict { converged, diverging, undecided };

std::string to_string(Verdict v);

struct ScanStep {
    double axis = 0.0;               // n_max or box length
    Eigen::VectorXd values;          // k lowest eigenvalues
    double density_centroid = 0.0;   // <x> of the ground electron density
    double edge_distance = 0.0;      // centroid distance to the nearer wall
};

struct ConvergenceReport {
    std::vector<ScanStep> steps;
    Verdict verdict = Verdict::undecided;
    double last_change = 0.0;          // max |Delta E_i| over the final step
    std::vector<double> decrements;    // ground-energy drops between steps
};

// Eigenvalue trajectories under Fock-truncation doubling.  Converged when
// the final doubling moves every tracked eigenvalue by less than tol;
// diverging when the ground energy falls monotonically over >= 3 steps
// with non-shrinking decrements.
ConvergenceReport truncation_scan(const std::function<HermitianOperator(int)>& builder,
                                  const std::vector<int>& n_max_values, int k, double tol,
                                  const EigenRequest& solver = {});

// Same verdict logic over a sequence of box lengths at fixed spacing; also
// records where the ground-state electron density sits in each box.
ConvergenceReport box_growth_scan(
    const std::function<std::pair<HermitianOperator, CompositeBasis>(double)>& builder,
    const std::vector<double>& lengths, int k, double tol, const EigenRequest& solver = {});

}  // namespace cqed
