#include "cqed/semiclassical.hpp"

#include <cmath>

#include "cqed/hamiltonians.hpp"
#include "cqed/spectra.hpp"

namespace cqed {

namespace {

SpMatC electron_base(const GridSpec& grid, const ExternalPotential& v_ext,
                     const PhysicalConstants& pc) {
    return electron_grid_hamiltonian(grid, v_ext, pc);
}

SpMatC linear_term(const GridSpec& grid, double coeff_x, double coeff_x2) {
    SpMatC d(grid.n_points, grid.n_points);
    for (int i = 0; i < grid.n_points; ++i) {
        const double x = grid.point(i);
        d.insert(i, i) = coeff_x * x + coeff_x2 * x * x;
    }
    d.makeCompressed();
    return d;
}

}  // namespace

double polarization_curvature(const ModeSet& modes, const PhysicalConstants& pc) {
    double kappa = 0.0;
    for (const auto& m : modes.modes) kappa += m.lambda * m.lambda / (pc.hbar * m.omega);
    return kappa;
}

HermitianOperator build_standard_semiclassical(const GridSpec& grid,
                                               const ExternalPotential& v_ext,
                                               const PhysicalConstants& pc, double field) {
    return HermitianOperator(electron_base(grid, v_ext, pc) +
                             linear_term(grid, -pc.e * field, 0.0));
}

HermitianOperator build_fixed_displacement(const GridSpec& grid, const ExternalPotential& v_ext,
                                           const ModeSet& modes,
                                           const std::vector<double>& displacement,
                                           const PhysicalConstants& pc) {
    modes.validate(pc);
    if (displacement.size() != static_cast<std::size_t>(modes.size()))
        throw config_error("build_fixed_displacement: one displacement per mode required");
    double d_total = 0.0;
    for (double d : displacement) d_total += d;
    const double kappa = polarization_curvature(modes, pc);
    return HermitianOperator(electron_base(grid, v_ext, pc) +
                             linear_term(grid, -pc.e / pc.eps0 * d_total, 0.5 * kappa));
}

HermitianOperator build_fixed_displacement(const GridSpec& grid, const ExternalPotential& v_ext,
                                           const ModeSet& modes, double total_displacement,
                                           const PhysicalConstants& pc) {
    std::vector<double> d(modes.size(), 0.0);
    d[0] = total_displacement;
    return build_fixed_displacement(grid, v_ext, modes, d, pc);
}

namespace {

struct GroundState {
    Eigen::VectorXcd psi;
    double energy;
    double x_mean;
    double gap;
};

GroundState solve_ground(const SpMatC& h, const Eigen::VectorXd& x) {
    HermitianOperator op(h);
    EigenRequest req;
    req.k = std::min<long>(2, op.dim());
    req.tol = 1e-11;
    EigenResult r = lowest_eigenpairs(op, req);
    GroundState g;
    g.psi = r.vectors.col(0);
    g.energy = r.values[0];
    g.gap = r.values.size() > 1 ? r.values[1] - r.values[0] : 1.0;
    double xm = 0.0;
    for (int i = 0; i < x.size(); ++i) xm += std::norm(g.psi[i]) * x[i];
    g.x_mean = xm;
    return g;
}

}  // namespace

ScfResult scf_ground_state(const GridSpec& grid, const ExternalPotential& v_ext,
                           const ModeSet& modes, double field, const ScfConfig& scf,
                           const PhysicalConstants& pc) {
    scf.validate();
    modes.validate(pc);
    const Eigen::VectorXd x = grid.points();
    const double kappa = polarization_curvature(modes, pc);

    // base = T + V + eps_dip - e E x; the feedback term -kappa <x> x is
    // the only piece that changes between iterations
    const SpMatC base = electron_base(grid, v_ext, pc) +
                        linear_term(grid, -pc.e * field, 0.5 * kappa);

    // seed from the zero-field problem, oriented toward non-negative <x>
    // when the well is degenerate
    GroundState seed = solve_ground(electron_base(grid, v_ext, pc) + linear_term(grid, 0.0, 0.5 * kappa), x);
    double x_bar = seed.x_mean;
    if (seed.gap < 1e-9 && x_bar < 0.0) x_bar = -x_bar;

    ScfResult out;
    bool converged = false;
    for (int it = 0; it < scf.max_iter; ++it) {
        GroundState g = solve_ground(base + linear_term(grid, -kappa * x_bar, 0.0), x);
        const double residual = std::abs(g.x_mean - x_bar);
        out.residual_history.push_back(residual);
        out.iterations = it + 1;
        const double x_new = (1.0 - scf.mixing) * x_bar + scf.mixing * g.x_mean;
        if (residual < scf.tol) {
            x_bar = g.x_mean;
            out.state = g.psi;
            out.eigenvalue = g.energy;
            converged = true;
            break;
        }
        x_bar = x_new;
    }
    if (!converged)
        throw convergence_error("scf_ground_state: no self-consistency within max_iter",
                                out.residual_history);

    out.x_mean = x_bar;
    // remove the double-counted induced interaction: the eigenvalue of the
    // effective Hamiltonian contains -kappa <x>^2, the energy only half
    out.energy = out.eigenvalue + 0.5 * kappa * x_bar * x_bar;
    out.polarization = pc.eps0 * kappa * x_bar / pc.e;
    out.displacement_total = pc.eps0 * field + out.polarization;
    // per-mode split of the total displacement; only the sum enters the
    // fixed-displacement Hamiltonian
    for (int a = 0; a < modes.size(); ++a) {
        const double lam2 = modes[a].lambda * modes[a].lambda;
        const double w = modes[a].omega;
        double d_a = kappa > 0.0
                         ? pc.eps0 * lam2 * (x_bar + pc.e * field / kappa) / (pc.e * pc.hbar * w)
                         : pc.eps0 * field / modes.size();
        out.mode_displacements.push_back(d_a);
    }
    return out;
}

StarkResult stark_scan(const GridSpec& grid, const ExternalPotential& v_ext, const ModeSet& modes,
                       const std::vector<double>& fields, const PhysicalConstants& pc) {
    if (fields.size() < 3) throw config_error("stark_scan: need at least three field points");
    StarkResult out;
    out.fields = fields;
    for (double E : fields) {
        try {
            HermitianOperator h =
                build_fixed_displacement(grid, v_ext, modes, pc.eps0 * E, pc);
            EigenRequest req;
            req.k = 1;
            req.tol = 1e-11;
            out.energies.push_back(lowest_eigenpairs(h, req).values[0]);
            out.solved.push_back(true);
        } catch (const convergence_error&) {
            out.energies.push_back(0.0);
            out.solved.push_back(false);
        }
    }

    // even polynomial fit over the solved points
    std::vector<int> ok;
    for (std::size_t i = 0; i < fields.size(); ++i)
        if (out.solved[i]) ok.push_back(static_cast<int>(i));
    if (ok.size() >= 3) {
        Eigen::MatrixXd A(ok.size(), 3);
        Eigen::VectorXd b(ok.size());
        for (std::size_t r = 0; r < ok.size(); ++r) {
            const double E = fields[ok[r]];
            A(r, 0) = 1.0;
            A(r, 1) = E * E;
            A(r, 2) = E * E * E * E;
            b[r] = out.energies[ok[r]];
        }
        Eigen::Vector3d c = (A.transpose() * A).ldlt().solve(A.transpose() * b);
        out.alpha = -2.0 * c[1];
    }

    HermitianOperator h0 = build_fixed_displacement(grid, v_ext, modes, 0.0, pc);
    out.alpha_perturbative = sum_over_states_polarizability(h0, grid, pc);
    const double scale = std::max(std::abs(out.alpha_perturbative), 1e-300);
    out.relative_agreement = std::abs(out.alpha - out.alpha_perturbative) / scale;
    return out;
}

double sum_over_states_polarizability(const HermitianOperator& h, const GridSpec& grid,
                                      const PhysicalConstants& pc) {
    Eigen::MatrixXd dense = Eigen::MatrixXd(h.matrix().real());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
    const Eigen::VectorXd x = grid.points();
    const Eigen::VectorXd ground = es.eigenvectors().col(0);
    double alpha = 0.0;
    for (int n = 1; n < es.eigenvalues().size(); ++n) {
        const double me = es.eigenvectors().col(n).dot(x.cwiseProduct(ground));
        alpha += 2.0 * pc.e * pc.e * me * me / (es.eigenvalues()[n] - es.eigenvalues()[0]);
    }
    return alpha;
}

}  // namespace cqed
