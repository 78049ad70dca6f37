#include "cqed/grid.hpp"

#include <array>
#include <vector>

namespace cqed {

std::string to_string(Boundary b) {
    return b == Boundary::dirichlet ? "dirichlet" : "periodic";
}

Boundary boundary_from_string(const std::string& s) {
    if (s == "dirichlet") return Boundary::dirichlet;
    if (s == "periodic") return Boundary::periodic;
    throw config_error("unknown boundary condition '" + s + "' (expected dirichlet|periodic)");
}

Eigen::VectorXd GridSpec::points() const {
    Eigen::VectorXd x(n_points);
    for (int i = 0; i < n_points; ++i) x[i] = point(i);
    return x;
}

void GridSpec::validate() const {
    if (x_max <= x_min) throw config_error("GridSpec: x_max must exceed x_min");
    if (n_points < 3) throw config_error("GridSpec: n_points must be >= 3");
    if (stencil_order != 2 && stencil_order != 4)
        throw config_error("GridSpec: stencil_order must be 2 or 4");
}

namespace {

struct Stencil {
    std::vector<int> offsets;
    std::vector<double> weights;
};

Stencil laplacian_stencil(int order) {
    if (order == 2) return {{-1, 0, 1}, {1.0, -2.0, 1.0}};
    return {{-2, -1, 0, 1, 2}, {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12}};
}

Stencil derivative_stencil(int order) {
    if (order == 2) return {{-1, 1}, {-0.5, 0.5}};
    return {{-2, -1, 1, 2}, {1.0 / 12, -2.0 / 3, 2.0 / 3, -1.0 / 12}};
}

Eigen::SparseMatrix<double> assemble(const GridSpec& grid, const Stencil& st, double scale) {
    grid.validate();
    const int n = grid.n_points;
    const int width = 2 * (grid.stencil_order / 2) + 1;
    if (n < width)
        throw config_error("grid stencil of width " + std::to_string(width) +
                           " does not fit on " + std::to_string(n) + " points");

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(n) * st.offsets.size());
    for (int i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < st.offsets.size(); ++k) {
            int j = i + st.offsets[k];
            if (grid.boundary == Boundary::periodic) {
                j = ((j % n) + n) % n;
            } else if (j < 0 || j >= n) {
                continue;  // implicit zero outside the box
            }
            trips.emplace_back(i, j, st.weights[k] * scale);
        }
    }
    Eigen::SparseMatrix<double> mat(n, n);
    mat.setFromTriplets(trips.begin(), trips.end());
    mat.makeCompressed();
    return mat;
}

}  // namespace

Eigen::SparseMatrix<double> grid_laplacian(const GridSpec& grid) {
    const double h = grid.spacing();
    return assemble(grid, laplacian_stencil(grid.stencil_order), 1.0 / (h * h));
}

Eigen::SparseMatrix<double> grid_first_derivative(const GridSpec& grid) {
    const double h = grid.spacing();
    return assemble(grid, derivative_stencil(grid.stencil_order), 1.0 / h);
}

}  // namespace cqed
