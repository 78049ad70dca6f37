#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

#include "cqed/hamiltonians.hpp"

namespace cqed {

namespace {

// spin-j ladder and projection matrices, m = -j..j ascending
struct SpinSector {
    Eigen::MatrixXd jp, jm, jz;
    int dim;
    double j;
};

SpinSector spin_sector(int n_atoms) {
    if (n_atoms < 1) throw config_error("spin sector: n_atoms must be >= 1");
    const double j = n_atoms / 2.0;
    const int dim = n_atoms + 1;
    SpinSector s{Eigen::MatrixXd::Zero(dim, dim), Eigen::MatrixXd::Zero(dim, dim),
                 Eigen::MatrixXd::Zero(dim, dim), dim, j};
    for (int i = 0; i < dim; ++i) {
        const double m = -j + i;
        s.jz(i, i) = m;
        if (i + 1 < dim) s.jp(i + 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
        if (i - 1 >= 0) s.jm(i - 1, i) = std::sqrt(j * (j + 1) - m * (m - 1));
    }
    return s;
}

// matter (x) photon product, matter index slowest
SpMatC kron2(const Eigen::MatrixXd& matter, const Eigen::MatrixXd& photon) {
    const SpMatC a = to_sparse_real(matter);
    const SpMatC b = to_sparse_real(photon);
    SpMatC out = Eigen::kroneckerProduct(a, b).eval();
    out.makeCompressed();
    return out;
}

}  // namespace

TwoLevelReduction two_level_reduction(const SpMatC& electron_hamiltonian, const GridSpec& grid,
                                      const Mode& mode, const PhysicalConstants& pc) {
    grid.validate();
    mode.validate();
    if (electron_hamiltonian.rows() != grid.n_points)
        throw config_error("two_level_reduction: Hamiltonian does not match the grid");
    if (!is_hermitian(electron_hamiltonian))
        throw invariant_error("two_level_reduction: electron Hamiltonian is not Hermitian");

    Eigen::MatrixXd dense = Eigen::MatrixXd(electron_hamiltonian.real());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
    const Eigen::VectorXd g = es.eigenvectors().col(0);
    const Eigen::VectorXd e = es.eigenvectors().col(1);
    const Eigen::VectorXd x = grid.points();

    TwoLevelReduction red;
    red.E_g = es.eigenvalues()[0];
    red.E_e = es.eigenvalues()[1];

    const double xgg = g.dot(x.cwiseProduct(g));
    const double xee = e.dot(x.cwiseProduct(e));
    const double x2ge = g.dot(x.cwiseProduct(x.cwiseProduct(e)));
    red.parity_residual = std::max({std::abs(xgg), std::abs(xee), std::abs(x2ge)});
    red.parity_warning = red.parity_residual > 1e-8;

    red.d_ge = std::abs(g.dot(x.cwiseProduct(e)));
    red.Omega_R = std::sqrt(2.0) * std::abs(mode.lambda) * red.d_ge / pc.hbar;

    const double x2gg = g.dot(x.cwiseProduct(x.cwiseProduct(g)));
    const double x2ee = e.dot(x.cwiseProduct(x.cwiseProduct(e)));
    red.G = mode.lambda * mode.lambda / (2.0 * pc.hbar * mode.omega) * (x2gg + x2ee);
    return red;
}

HermitianOperator build_rabi(const TwoLevelReduction& red, const Mode& mode, const FockSpec& fock,
                             const PhysicalConstants& pc, bool with_offset) {
    mode.validate();
    fock.validate();
    Eigen::MatrixXd sz(2, 2), sx(2, 2), id2 = Eigen::MatrixXd::Identity(2, 2);
    sz << -1, 0, 0, 1;  // |g> first
    sx << 0, 1, 1, 0;

    const double hw = pc.hbar * mode.omega;
    const Eigen::MatrixXd a = fock_lower(fock);
    const Eigen::MatrixXd idf = Eigen::MatrixXd::Identity(fock.dim(), fock.dim());

    SpMatC h = kron2(0.5 * hw * sz, idf) + kron2(id2, hw * fock_number(fock)) +
               (-0.5 * pc.hbar * red.Omega_R) * kron2(sx, a + a.transpose());
    if (with_offset) h += red.G * sparse_identity(2 * fock.dim());
    h.makeCompressed();
    return HermitianOperator(h);
}

HermitianOperator build_jaynes_cummings(const TwoLevelReduction& red, const Mode& mode,
                                        const FockSpec& fock, const PhysicalConstants& pc) {
    mode.validate();
    fock.validate();
    Eigen::MatrixXd sz(2, 2), sp(2, 2), sm(2, 2), id2 = Eigen::MatrixXd::Identity(2, 2);
    sz << -1, 0, 0, 1;  // |g> first
    sp << 0, 0, 1, 0;   // sigma_+ = |e><g|
    sm << 0, 1, 0, 0;

    const double hw = pc.hbar * mode.omega;
    const Eigen::MatrixXd a = fock_lower(fock);
    const Eigen::MatrixXd idf = Eigen::MatrixXd::Identity(fock.dim(), fock.dim());

    SpMatC h = kron2(0.5 * hw * sz, idf) + kron2(id2, hw * fock_number(fock));
    const double g = -0.5 * pc.hbar * red.Omega_R;
    h += g * kron2(sp, a);
    h += g * kron2(sm, a.transpose());
    h.makeCompressed();
    return HermitianOperator(h);
}

HermitianOperator build_dicke(const TwoLevelReduction& red, const Mode& mode, const FockSpec& fock,
                              int n_atoms, const PhysicalConstants& pc) {
    mode.validate();
    fock.validate();
    const SpinSector s = spin_sector(n_atoms);
    const double hw = pc.hbar * mode.omega;
    const Eigen::MatrixXd a = fock_lower(fock);
    const Eigen::MatrixXd idf = Eigen::MatrixXd::Identity(fock.dim(), fock.dim());
    const Eigen::MatrixXd idm = Eigen::MatrixXd::Identity(s.dim, s.dim);

    // (hbar w/2) S_z with S_z = sum_i sigma_z^(i) = 2 J_z
    SpMatC h = kron2(idm, hw * fock_number(fock)) + kron2(hw * s.jz, idf);
    const double g = -0.5 * pc.hbar * red.Omega_R;
    h += g * kron2(s.jp, a);
    h += g * kron2(s.jm, a.transpose());
    h.makeCompressed();
    return HermitianOperator(h);
}

HermitianOperator excitation_number(const FockSpec& fock, int n_atoms) {
    fock.validate();
    const SpinSector s = spin_sector(n_atoms);
    const Eigen::MatrixXd idf = Eigen::MatrixXd::Identity(fock.dim(), fock.dim());
    const Eigen::MatrixXd idm = Eigen::MatrixXd::Identity(s.dim, s.dim);
    SpMatC n = kron2(idm, fock_number(fock)) +
               kron2(s.jz + s.j * Eigen::MatrixXd::Identity(s.dim, s.dim), idf);
    n.makeCompressed();
    return HermitianOperator(n);
}

}  // namespace cqed
