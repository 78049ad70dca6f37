#include "cqed/spectra.hpp"

#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <random>

#include "cqed/errors.hpp"

namespace cqed {

namespace {

bool matrix_is_real(const SpMatC& m) {
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMatC::InnerIterator it(m, k); it; ++it)
            if (it.value().imag() != 0.0) return false;
    return true;
}

EigenResult dense_solve(const HermitianOperator& op, int k) {
    const long n = op.dim();
    EigenResult out;
    out.dense_path = true;
    if (matrix_is_real(op.matrix())) {
        Eigen::MatrixXd dense = Eigen::MatrixXd(op.matrix().real());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
        out.values = es.eigenvalues().head(k);
        out.vectors = es.eigenvectors().leftCols(k).cast<cplx>();
    } else {
        Eigen::MatrixXcd dense = Eigen::MatrixXcd(op.matrix());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense);
        out.values = es.eigenvalues().head(k);
        out.vectors = es.eigenvectors().leftCols(k);
    }
    out.residuals = Eigen::VectorXd(k);
    for (int i = 0; i < k; ++i)
        out.residuals[i] =
            (op.matrix() * out.vectors.col(i) - out.values[i] * out.vectors.col(i)).norm();
    (void)n;
    return out;
}

double gershgorin_lower_bound(const SpMatC& m) {
    Eigen::VectorXd lb = Eigen::VectorXd::Zero(m.rows());
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMatC::InnerIterator it(m, k); it; ++it) {
            if (it.row() == it.col())
                lb[it.row()] += it.value().real();
            else
                lb[it.row()] -= std::abs(it.value());
        }
    return lb.minCoeff();
}

// Orthonormalize the columns of w against s and internally; drops columns
// that become numerically dependent.
Eigen::MatrixXcd orthonormalize(const Eigen::MatrixXcd& s, Eigen::MatrixXcd w) {
    for (int pass = 0; pass < 2; ++pass)
        if (s.cols() > 0) w -= s * (s.adjoint() * w);
    Eigen::MatrixXcd q(w.rows(), w.cols());
    int kept = 0;
    for (int j = 0; j < w.cols(); ++j) {
        Eigen::VectorXcd v = w.col(j);
        for (int pass = 0; pass < 2; ++pass) {
            if (kept > 0) v -= q.leftCols(kept) * (q.leftCols(kept).adjoint() * v);
        }
        const double nrm = v.norm();
        if (nrm > 1e-10) q.col(kept++) = v / nrm;
    }
    return q.leftCols(kept);
}

EigenResult shift_invert_lanczos(const HermitianOperator& op, const EigenRequest& req) {
    const long n = op.dim();
    const int k = req.k;
    const SpMatC& h = op.matrix();

    const double lb = gershgorin_lower_bound(h);
    const double sigma = lb - std::max(1.0, 1e-3 * std::abs(lb));
    SpMatC shifted = h;
    for (long i = 0; i < n; ++i) shifted.coeffRef(i, i) -= sigma;
    shifted.makeCompressed();
    Eigen::SimplicialLLT<SpMatC, Eigen::Lower> llt(shifted);
    if (llt.info() != Eigen::Success)
        throw convergence_error("lowest_eigenpairs: Cholesky factorization of the shifted operator failed");

    const int block = std::min<long>(k + 2, n);
    std::mt19937_64 rng(req.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd start(n, block);
    for (long i = 0; i < n; ++i)
        for (int j = 0; j < block; ++j) start(i, j) = cplx(gauss(rng), gauss(rng));

    Eigen::MatrixXcd basis(n, 0), h_basis(n, 0);
    Eigen::MatrixXcd current = orthonormalize(basis, start);

    EigenResult out;
    for (int iter = 0; iter < req.max_subspace; ++iter) {
        if (current.cols() == 0) break;
        const long m0 = basis.cols();
        basis.conservativeResize(Eigen::NoChange, m0 + current.cols());
        basis.rightCols(current.cols()) = current;
        h_basis.conservativeResize(Eigen::NoChange, m0 + current.cols());
        h_basis.rightCols(current.cols()) = h * current;

        Eigen::MatrixXcd g = basis.adjoint() * h_basis;
        g = 0.5 * (g + g.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);

        const int avail = std::min<long>(k, basis.cols());
        Eigen::MatrixXcd ritz_vec = basis * es.eigenvectors().leftCols(avail);
        Eigen::MatrixXcd ritz_hv = h_basis * es.eigenvectors().leftCols(avail);
        Eigen::VectorXd res(avail);
        for (int i = 0; i < avail; ++i)
            res[i] = (ritz_hv.col(i) - es.eigenvalues()[i] * ritz_vec.col(i)).norm();

        out.values = es.eigenvalues().head(avail);
        out.vectors = ritz_vec;
        out.residuals = res;
        out.iterations = iter + 1;
        if (avail == k && (res.array() < req.tol).all()) return out;

        // expand with (H - sigma)^{-1} applied to the newest block
        current = orthonormalize(basis, llt.solve(current));
    }
    throw convergence_error("lowest_eigenpairs: no convergence within the subspace cap",
                            std::vector<double>(out.residuals.data(),
                                                out.residuals.data() + out.residuals.size()));
}

}  // namespace

EigenResult lowest_eigenpairs(const HermitianOperator& op, const EigenRequest& req) {
    const long n = op.dim();
    if (req.k < 1 || req.k > n) throw config_error("lowest_eigenpairs: k out of range");
    if (req.tol <= 0) throw config_error("lowest_eigenpairs: tol must be > 0");
    if (n <= 600 || req.k > n / 3) return dense_solve(op, req.k);
    try {
        return shift_invert_lanczos(op, req);
    } catch (const convergence_error&) {
        if (n < 4000) return dense_solve(op, req.k);
        throw;
    }
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::converged: return "converged";
        case Verdict::diverging: return "diverging";
        default: return "undecided";
    }
}

namespace {

void assign_verdict(ConvergenceReport& rep, double tol) {
    const auto& s = rep.steps;
    if (s.size() < 2) {
        rep.verdict = Verdict::undecided;
        return;
    }
    rep.last_change =
        (s[s.size() - 1].values - s[s.size() - 2].values).cwiseAbs().maxCoeff();
    rep.decrements.clear();
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        rep.decrements.push_back(s[i].values[0] - s[i + 1].values[0]);

    if (rep.last_change < tol) {
        rep.verdict = Verdict::converged;
        return;
    }
    if (rep.decrements.size() >= 3) {
        bool monotone = true, non_shrinking = true;
        for (std::size_t i = 0; i < rep.decrements.size(); ++i) {
            if (rep.decrements[i] <= 0) monotone = false;
            if (i > 0 && rep.decrements[i] < 0.95 * rep.decrements[i - 1]) non_shrinking = false;
        }
        if (monotone && non_shrinking && rep.decrements.back() > tol) {
            rep.verdict = Verdict::diverging;
            return;
        }
    }
    rep.verdict = Verdict::undecided;
}

}  // namespace

ConvergenceReport truncation_scan(const std::function<HermitianOperator(int)>& builder,
                                  const std::vector<int>& n_max_values, int k, double tol,
                                  const EigenRequest& solver) {
    ConvergenceReport rep;
    for (int n : n_max_values) {
        HermitianOperator h = builder(n);
        EigenRequest req = solver;
        req.k = k;
        EigenResult r = lowest_eigenpairs(h, req);
        rep.steps.push_back({static_cast<double>(n), r.values, 0.0, 0.0});
    }
    assign_verdict(rep, tol);
    return rep;
}

ConvergenceReport box_growth_scan(
    const std::function<std::pair<HermitianOperator, CompositeBasis>(double)>& builder,
    const std::vector<double>& lengths, int k, double tol, const EigenRequest& solver) {
    ConvergenceReport rep;
    for (double L : lengths) {
        auto [h, basis] = builder(L);
        EigenRequest req = solver;
        req.k = k;
        EigenResult r = lowest_eigenpairs(h, req);

        StateVector ground{basis, r.vectors.col(0)};
        const Eigen::VectorXd rho = ground.electron_density();
        const Eigen::VectorXd x = basis.grid.points();
        const double centroid = rho.dot(x) / rho.sum();
        const double edge = std::min(centroid - basis.grid.x_min, basis.grid.x_max - centroid);
        rep.steps.push_back({L, r.values, centroid, edge});
    }
    assign_verdict(rep, tol);
    return rep;
}

}  // namespace cqed
