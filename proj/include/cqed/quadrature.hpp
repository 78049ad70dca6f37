#pragma once

#include <functional>

namespace cqed {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
};

// Adaptive Gauss-Kronrod (G7, K15) integration on [a, b].  Splits the
// worst interval until the summed error estimate meets
// max(abs_tol, rel_tol * |value|); throws convergence_error when the
// interval budget runs out first.
QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol = 1e-12, double rel_tol = 1e-12,
                                    int max_intervals = 4000);

}  // namespace cqed
