#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cqed {

// Bad user-supplied parameters or configuration files.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// An iterative method ran out of budget.  Carries the residual history so
// callers can report how close it got.
struct convergence_error : std::runtime_error {
    std::vector<double> residuals;
    convergence_error(const std::string& what, std::vector<double> res = {})
        : std::runtime_error(what), residuals(std::move(res)) {}
};

// A structural guarantee (Hermiticity, dimension bookkeeping, ...) failed.
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cqed
