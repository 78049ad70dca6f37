#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <string>

#include "cqed/errors.hpp"

namespace cqed {

enum class Boundary { dirichlet, periodic };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

// Uniform 1D real-space grid for the electron coordinate.
//
// Dirichlet grids store the interior points of [x_min, x_max] endpoints
// included, spacing (x_max - x_min)/(n_points - 1); the wavefunction is
// implicitly zero outside.  Periodic grids tile [x_min, x_max) with spacing
// (x_max - x_min)/n_points.
struct GridSpec {
    double x_min = -10.0;
    double x_max = 10.0;
    int n_points = 201;
    Boundary boundary = Boundary::dirichlet;
    int stencil_order = 4;  // 2 or 4

    double length() const { return x_max - x_min; }
    double spacing() const {
        return boundary == Boundary::dirichlet ? length() / (n_points - 1)
                                               : length() / n_points;
    }
    double point(int i) const { return x_min + i * spacing(); }
    Eigen::VectorXd points() const;

    void validate() const;
};

// Finite-difference second derivative d^2/dx^2 at the requested stencil
// order and boundary condition.  Symmetric by construction.
Eigen::SparseMatrix<double> grid_laplacian(const GridSpec& grid);

// Central-difference first derivative d/dx; antisymmetric, so that
// i*hbar*d/dx is Hermitian.
Eigen::SparseMatrix<double> grid_first_derivative(const GridSpec& grid);

}  // namespace cqed
