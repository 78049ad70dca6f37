#pragma once

#include <Eigen/Dense>

#include "cqed/errors.hpp"

namespace cqed {

// Truncated single-mode oscillator space spanned by |0..n_max>.
struct FockSpec {
    int n_max = 8;

    int dim() const { return n_max + 1; }
    void validate() const {
        if (n_max < 1) throw config_error("FockSpec: n_max must be >= 1");
    }
};

// Annihilation operator: sqrt(n) at (n-1, n).
Eigen::MatrixXd fock_lower(const FockSpec& fock);

// Creation operator, the transpose of fock_lower.
Eigen::MatrixXd fock_raise(const FockSpec& fock);

// Displacement coordinate p = (a + a^dag)/sqrt(2).
Eigen::MatrixXd fock_coordinate(const FockSpec& fock);

// Conjugate derivative d/dp = (a - a^dag)/sqrt(2); antisymmetric, so that
// i*d/dp is Hermitian.
Eigen::MatrixXd fock_coordinate_derivative(const FockSpec& fock);

// Number operator a^dag a.
Eigen::MatrixXd fock_number(const FockSpec& fock);

}  // namespace cqed
