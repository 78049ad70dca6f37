#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <map>

#include "cqed/basis.hpp"
#include "cqed/errors.hpp"

namespace cqed {

using cplx = std::complex<double>;
using SpMatC = Eigen::SparseMatrix<cplx>;

// Sparse Hermitian matrix with deterministic (column-major, sorted) storage.
// Construction verifies entry(i,j) == conj(entry(j,i)) exactly, so operator
// equality is testable bit for bit.
class HermitianOperator {
  public:
    HermitianOperator() = default;
    explicit HermitianOperator(SpMatC mat);

    long dim() const { return mat_.rows(); }
    const SpMatC& matrix() const { return mat_; }

    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return mat_ * v; }
    double expectation(const Eigen::VectorXcd& v) const;

    HermitianOperator& operator+=(const HermitianOperator& other);
    HermitianOperator& operator-=(const HermitianOperator& other);
    friend HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
    friend HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
    friend HermitianOperator operator*(double s, HermitianOperator a) {
        a.mat_ *= s;
        return a;
    }

  private:
    SpMatC mat_;
};

bool is_hermitian(const SpMatC& mat);

// Removes explicit zeros (and only those) from the stored pattern.
SpMatC drop_exact_zeros(SpMatC mat);

// Bit-exact comparison of compressed sparse matrices (same pattern, same values).
bool exactly_equal(const SpMatC& a, const SpMatC& b);

double frobenius_norm(const SpMatC& mat);

SpMatC sparse_identity(long dim);
SpMatC to_sparse(const Eigen::MatrixXcd& dense, double drop_tol = 0.0);
SpMatC to_sparse_real(const Eigen::MatrixXd& dense, double drop_tol = 0.0);

// Embed `op` into the composite space, acting as the identity on every
// other slot.  Linear and multiplicative: embed(A*B) = embed(A)*embed(B).
SpMatC embed_factor(const SpMatC& op, int slot, const CompositeBasis& basis);

// Product over slots, identity where a slot is absent:
// tensor_term(basis, {{0, X}, {1, P}}) = X (x) P (x) 1 (x) ...
SpMatC tensor_term(const CompositeBasis& basis, const std::map<int, SpMatC>& factors);

// Spec-level embed with Hermiticity enforcement on the result.
HermitianOperator tensor_embed(const Eigen::MatrixXcd& op, int slot, const CompositeBasis& basis);

struct StateVector {
    CompositeBasis basis;
    Eigen::VectorXcd amplitudes;

    double norm() const { return amplitudes.norm(); }
    void normalize();

    // Electron marginal density summed over all Fock indices, one value per
    // grid point (grid is the slowest index, so blocks are contiguous).
    Eigen::VectorXd electron_density() const;
};

}  // namespace cqed
