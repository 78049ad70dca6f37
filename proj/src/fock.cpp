#include "cqed/fock.hpp"

#include <cmath>

namespace cqed {

Eigen::MatrixXd fock_lower(const FockSpec& fock) {
    fock.validate();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(fock.dim(), fock.dim());
    for (int n = 1; n <= fock.n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Eigen::MatrixXd fock_raise(const FockSpec& fock) {
    return fock_lower(fock).transpose();
}

Eigen::MatrixXd fock_coordinate(const FockSpec& fock) {
    const Eigen::MatrixXd a = fock_lower(fock);
    return (a + a.transpose()) / std::sqrt(2.0);
}

Eigen::MatrixXd fock_coordinate_derivative(const FockSpec& fock) {
    const Eigen::MatrixXd a = fock_lower(fock);
    return (a - a.transpose()) / std::sqrt(2.0);
}

Eigen::MatrixXd fock_number(const FockSpec& fock) {
    fock.validate();
    Eigen::MatrixXd n = Eigen::MatrixXd::Zero(fock.dim(), fock.dim());
    for (int k = 0; k <= fock.n_max; ++k) n(k, k) = k;
    return n;
}

}  // namespace cqed
