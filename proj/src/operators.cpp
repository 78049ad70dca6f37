#include "cqed/operators.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace cqed {

HermitianOperator::HermitianOperator(SpMatC mat) : mat_(std::move(mat)) {
    mat_.makeCompressed();
    if (mat_.rows() != mat_.cols())
        throw invariant_error("HermitianOperator: matrix is not square");
    if (!is_hermitian(mat_))
        throw invariant_error("HermitianOperator: matrix is not exactly Hermitian");
}

double HermitianOperator::expectation(const Eigen::VectorXcd& v) const {
    return (v.adjoint() * (mat_ * v)).value().real();
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
    if (dim() != other.dim()) throw invariant_error("HermitianOperator: dimension mismatch in sum");
    mat_ = drop_exact_zeros(mat_ + other.mat_);
    return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& other) {
    if (dim() != other.dim()) throw invariant_error("HermitianOperator: dimension mismatch in difference");
    mat_ = drop_exact_zeros(mat_ - other.mat_);
    return *this;
}

SpMatC drop_exact_zeros(SpMatC mat) {
    mat.prune([](const SpMatC::StorageIndex&, const SpMatC::StorageIndex&, const cplx& v) {
        return v != cplx(0.0);
    });
    mat.makeCompressed();
    return mat;
}

bool is_hermitian(const SpMatC& mat) {
    SpMatC adj = SpMatC(mat.adjoint());
    adj.makeCompressed();
    SpMatC m = mat;
    m.makeCompressed();
    return exactly_equal(m, adj);
}

bool exactly_equal(const SpMatC& a, const SpMatC& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    SpMatC ca = drop_exact_zeros(a), cb = drop_exact_zeros(b);
    if (ca.nonZeros() != cb.nonZeros()) return false;
    for (int k = 0; k < ca.outerSize(); ++k) {
        SpMatC::InnerIterator ia(ca, k), ib(cb, k);
        for (; ia && ib; ++ia, ++ib) {
            if (ia.row() != ib.row() || ia.value() != ib.value()) return false;
        }
        if (ia || ib) return false;
    }
    return true;
}

double frobenius_norm(const SpMatC& mat) {
    double s = 0.0;
    for (int k = 0; k < mat.outerSize(); ++k)
        for (SpMatC::InnerIterator it(mat, k); it; ++it) s += std::norm(it.value());
    return std::sqrt(s);
}

SpMatC sparse_identity(long dim) {
    SpMatC id(dim, dim);
    id.setIdentity();
    return id;
}

SpMatC to_sparse(const Eigen::MatrixXcd& dense, double drop_tol) {
    return dense.sparseView(1.0, drop_tol);
}

SpMatC to_sparse_real(const Eigen::MatrixXd& dense, double drop_tol) {
    return to_sparse(dense.cast<cplx>(), drop_tol);
}

SpMatC embed_factor(const SpMatC& op, int slot, const CompositeBasis& basis) {
    if (slot < 0 || slot >= basis.n_slots())
        throw config_error("embed_factor: slot out of range");
    if (op.rows() != basis.slot_dim(slot) || op.cols() != basis.slot_dim(slot))
        throw config_error("embed_factor: operator dimension does not match slot");
    return tensor_term(basis, {{slot, op}});
}

SpMatC tensor_term(const CompositeBasis& basis, const std::map<int, SpMatC>& factors) {
    basis.validate();
    for (const auto& [slot, op] : factors) {
        if (slot < 0 || slot >= basis.n_slots()) throw config_error("tensor_term: slot out of range");
        if (op.rows() != basis.slot_dim(slot) || op.cols() != basis.slot_dim(slot))
            throw config_error("tensor_term: operator dimension does not match slot");
    }
    SpMatC acc;
    for (int s = 0; s < basis.n_slots(); ++s) {
        auto it = factors.find(s);
        const SpMatC& f = (it != factors.end()) ? it->second : sparse_identity(basis.slot_dim(s));
        if (s == 0) {
            acc = f;
        } else {
            acc = Eigen::kroneckerProduct(acc, f).eval();
        }
    }
    acc.makeCompressed();
    return acc;
}

HermitianOperator tensor_embed(const Eigen::MatrixXcd& op, int slot, const CompositeBasis& basis) {
    return HermitianOperator(embed_factor(to_sparse(op), slot, basis));
}

void StateVector::normalize() {
    const double n = norm();
    if (n == 0.0) throw invariant_error("StateVector: cannot normalize the zero vector");
    amplitudes /= n;
}

Eigen::VectorXd StateVector::electron_density() const {
    const long n_grid = basis.grid.n_points;
    const long block = basis.dim() / n_grid;
    Eigen::VectorXd rho(n_grid);
    for (long i = 0; i < n_grid; ++i) rho[i] = amplitudes.segment(i * block, block).squaredNorm();
    return rho;
}

}  // namespace cqed
