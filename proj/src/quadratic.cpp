#include "cqed/quadratic.hpp"

#include <cmath>

#include "cqed/errors.hpp"

namespace cqed {

QuadraticForm assemble_quadratic(const ModeSet& modes, int n_electrons, bool include_dip,
                                 const PhysicalConstants& pc) {
    modes.validate(pc);
    if (n_electrons < 1) throw config_error("assemble_quadratic: n_electrons must be >= 1");

    const int M = modes.size();
    QuadraticForm qf;
    qf.n_electrons = n_electrons;
    qf.labels.push_back("x");
    qf.kinetic = Eigen::VectorXd(M + 1);
    qf.potential = Eigen::MatrixXd::Zero(M + 1, M + 1);

    qf.kinetic[0] = 1.0 / (2.0 * pc.m);
    const double rootN = std::sqrt(static_cast<double>(n_electrons));
    for (int a = 0; a < M; ++a) {
        qf.labels.push_back("p_" + std::to_string(a + 1));
        qf.kinetic[a + 1] = pc.hbar * modes[a].omega / 2.0;
        qf.potential(a + 1, a + 1) = pc.hbar * modes[a].omega;
        qf.potential(0, a + 1) = -modes[a].signed_lambda() * rootN;
        qf.potential(a + 1, 0) = qf.potential(0, a + 1);
        if (include_dip)
            qf.potential(0, 0) += modes[a].lambda * modes[a].lambda * n_electrons /
                                  (pc.hbar * modes[a].omega);
    }
    return qf;
}

Eigen::VectorXd NormalModeResult::frequencies() const {
    Eigen::VectorXd f(nu_squared.size());
    for (int i = 0; i < f.size(); ++i) f[i] = nu_squared[i] > 0 ? std::sqrt(nu_squared[i]) : 0.0;
    return f;
}

NormalModeResult normal_modes(const QuadraticForm& qf, const PhysicalConstants& pc) {
    const int n = qf.size();
    // Heisenberg equations give u'' = -G V u with G = diag(1/m, w_a/hbar):
    // the dimensionless photon pairs satisfy [p, pi] = i, which shifts one
    // power of hbar relative to the (x, px) pair.  2K reproduces 1/m for
    // the electron entry and hbar*w for the photons, hence G = 2K scaled
    // by 1/hbar^2 on the photon block.
    Eigen::VectorXd g(n);
    g[0] = 2.0 * qf.kinetic[0];
    for (int i = 1; i < n; ++i) g[i] = 2.0 * qf.kinetic[i] / (pc.hbar * pc.hbar);

    Eigen::VectorXd s = g.cwiseSqrt();
    Eigen::MatrixXd sym = s.asDiagonal() * qf.potential * s.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);

    NormalModeResult out;
    out.nu_squared = es.eigenvalues();
    out.modes = s.asDiagonal() * es.eigenvectors();
    out.stable = (out.nu_squared.array() >= -1e-12).all();
    return out;
}

std::vector<double> plasma_frequency(const ModeSet& modes, int n_electrons,
                                     const PhysicalConstants& pc,
                                     std::optional<double> volume) {
    modes.validate(pc);
    if (n_electrons < 1) throw config_error("plasma_frequency: n_electrons must be >= 1");
    if (!volume) volume = modes.quantization_volume;

    std::vector<double> out;
    out.reserve(modes.size());
    for (int a = 0; a < modes.size(); ++a) {
        const double reduced =
            n_electrons * modes[a].lambda * modes[a].lambda / (pc.m * pc.hbar * modes[a].omega);
        if (volume) {
            const double density = n_electrons / *volume;
            const double from_density = density * pc.e * pc.e / (pc.m * pc.eps0);
            const double scale = std::max(std::abs(from_density), 1e-300);
            if (std::abs(reduced - from_density) > 1e-12 * scale)
                throw invariant_error(
                    "plasma_frequency: reduced and density forms disagree; lambda is "
                    "inconsistent with the quantization volume");
        }
        out.push_back(std::sqrt(reduced));
    }
    return out;
}

namespace {

// phase-space layout: z = (x, p_1..p_M, px, pi_1..pi_M)
struct PhaseSpace {
    int M;
    int dim() const { return 2 * (M + 1); }
    int x() const { return 0; }
    int p(int a) const { return 1 + a; }
    int px() const { return M + 1; }
    int pi(int a) const { return M + 2 + a; }
};

}  // namespace

MaxwellEomReport maxwell_eom_check(const ModeSet& modes, int n_electrons, bool include_dip,
                                   const PhysicalConstants& pc) {
    modes.validate(pc);
    const PhaseSpace ps{modes.size()};
    const int M = ps.M;
    const double rootN = std::sqrt(static_cast<double>(n_electrons));

    // exact linear generator of the Heisenberg dynamics, z' = L z
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(ps.dim(), ps.dim());
    L(ps.x(), ps.px()) = 1.0 / pc.m;
    double dip_curvature = 0.0;  // coefficient of x in -dV/dx
    for (int a = 0; a < M; ++a)
        dip_curvature += modes[a].lambda * modes[a].lambda * n_electrons /
                         (pc.hbar * modes[a].omega);
    for (int a = 0; a < M; ++a) {
        const double w = modes[a].omega;
        const double lam = modes[a].signed_lambda();
        L(ps.p(a), ps.pi(a)) = w;
        L(ps.px(), ps.p(a)) = lam * rootN;
        L(ps.pi(a), ps.p(a)) = -w;
        L(ps.pi(a), ps.x()) = lam * rootN / pc.hbar;
    }
    if (include_dip) L(ps.px(), ps.x()) = -dip_curvature;

    const Eigen::MatrixXd Lt = L.transpose();
    auto second_derivative = [&](const Eigen::VectorXd& w) { return (Lt * (Lt * w)).eval(); };

    // field operators as linear forms over z; chi_a = sqrt(N) lambda_a /(hbar w_a)
    std::vector<Eigen::VectorXd> wE(M);
    Eigen::VectorXd wEtot = Eigen::VectorXd::Zero(ps.dim());
    Eigen::VectorXd wD = Eigen::VectorXd::Zero(ps.dim());
    Eigen::VectorXd wP = Eigen::VectorXd::Zero(ps.dim());
    Eigen::VectorXd wA = Eigen::VectorXd::Zero(ps.dim());
    std::vector<Eigen::VectorXd> wAa(M);
    for (int a = 0; a < M; ++a) {
        const double lam = modes[a].signed_lambda();
        const double chi = rootN * lam / (pc.hbar * modes[a].omega);
        wE[a] = Eigen::VectorXd::Zero(ps.dim());
        wE[a][ps.p(a)] = lam / pc.e;
        wE[a][ps.x()] = (lam / pc.e) * (-chi);
        wEtot += wE[a];
        wD[ps.p(a)] += pc.eps0 * (lam / pc.e);
        wP[ps.x()] += pc.eps0 * ((lam / pc.e) * chi);
        wAa[a] = Eigen::VectorXd::Zero(ps.dim());
        wAa[a][ps.pi(a)] = lam * pc.c / (pc.e * modes[a].omega);
        wA += wAa[a];
    }

    MaxwellEomReport rep;
    rep.n_modes = M;
    rep.n_electrons = n_electrons;
    rep.include_dip = include_dip;
    rep.plasma_sq_total = dip_curvature / pc.m;
    rep.efield_coeffs = wEtot;
    rep.dfield_coeffs = wD;
    rep.pfield_coeffs = wP;

    // E'' + sum_a w_a^2 E_a + wp^2 E = 0 (holds with the harmonic x^2 term)
    Eigen::VectorXd res = second_derivative(wEtot) + rep.plasma_sq_total * wEtot;
    for (int a = 0; a < M; ++a) res += modes[a].omega * modes[a].omega * wE[a];
    rep.residual_efield_shifted = res.norm();

    // E'' + sum_a w_a^2 E_a + (wp^2/eps0) D = 0 (holds without it)
    res = second_derivative(wEtot) + (rep.plasma_sq_total / pc.eps0) * wD;
    for (int a = 0; a < M; ++a) res += modes[a].omega * modes[a].omega * wE[a];
    rep.residual_efield_displacement = res.norm();

    // A'' + sum_a w_a^2 A_a must be a pure multiple of the electron
    // momentum; the coefficient is read off, not assumed
    Eigen::VectorXd va = second_derivative(wA);
    for (int a = 0; a < M; ++a) va += modes[a].omega * modes[a].omega * wAa[a];
    rep.derived_current_coefficient = va[ps.px()];
    va[ps.px()] = 0.0;
    rep.residual_vector_potential = va.norm();

    rep.residual_displacement_identity = (wD - pc.eps0 * wEtot - wP).norm();
    return rep;
}

}  // namespace cqed
