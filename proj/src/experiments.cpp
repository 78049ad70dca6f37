#include "cqed/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "cqed/parallel.hpp"
#include "cqed/quadratic.hpp"
#include "cqed/semiclassical.hpp"
#include "cqed/variational.hpp"

namespace cqed {

namespace {

using RunnerFn = ResultTable (*)(const ExperimentConfig&);

std::string fmt(double v) { return ResultTable::format_number(v); }

void base_metadata(ResultTable& t, const ExperimentConfig& cfg) {
    t.add_metadata("experiment", cfg.experiment);
    t.add_metadata("seed", static_cast<double>(cfg.seed));
    t.add_metadata("potential", cfg.potential.describe());
    t.add_metadata("include_dip", cfg.include_dip ? "true" : "false");
    std::ostringstream ms;
    for (int a = 0; a < cfg.modes.size(); ++a)
        ms << (a ? ";" : "") << "omega=" << cfg.modes[a].omega << ",lambda=" << cfg.modes[a].lambda;
    t.add_metadata("modes", ms.str());
    t.add_metadata("grid", std::to_string(cfg.grid.n_points) + " pts on [" +
                               fmt(cfg.grid.x_min) + "," + fmt(cfg.grid.x_max) + "] " +
                               to_string(cfg.grid.boundary));
}

GridSpec resized_box(const GridSpec& base, double length) {
    GridSpec g = base;
    const double h = base.spacing();
    g.x_min = -0.5 * length;
    g.x_max = 0.5 * length;
    g.n_points = static_cast<int>(std::lround(length / h)) + (base.boundary == Boundary::dirichlet ? 1 : 0);
    return g;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

// ---------------------------------------------------------------- gauge
ResultTable run_gauge_equivalence(const ExperimentConfig& cfg) {
    const std::vector<int> n_values = cfg.scan.value("n_max_values", std::vector<int>{2, 4, 8, 16});
    const int k = cfg.scan.value("k", 5);
    const double tol = cfg.scan.value("tol", 1e-6);

    ResultTable t;
    base_metadata(t, cfg);
    t.columns = {"n_max"};
    for (int i = 0; i < k; ++i) t.columns.push_back("E" + std::to_string(i) + "_length");
    for (int i = 0; i < k; ++i) t.columns.push_back("E" + std::to_string(i) + "_velocity");
    t.columns.push_back("max_gap");

    std::vector<double> gaps(n_values.size());
    std::vector<std::vector<double>> rows(n_values.size());
    parallel_for(static_cast<int>(n_values.size()), cfg.jobs, [&](int i) {
        CompositeBasis basis = cfg.basis();
        for (auto& f : basis.focks) f.n_max = n_values[i];
        const auto hl = build_length_gauge(basis, cfg.modes, cfg.potential, cfg.constants, true);
        const auto hv = build_velocity_gauge(basis, cfg.modes, cfg.potential, cfg.constants, false);
        EigenRequest req;
        req.k = k;
        req.tol = 1e-10;
        req.seed = cfg.seed;
        const auto el = lowest_eigenpairs(hl.total, req);
        const auto ev = lowest_eigenpairs(hv, req);
        std::vector<double> row{static_cast<double>(n_values[i])};
        for (int q = 0; q < k; ++q) row.push_back(el.values[q]);
        for (int q = 0; q < k; ++q) row.push_back(ev.values[q]);
        const double gap = (el.values - ev.values).cwiseAbs().maxCoeff();
        row.push_back(gap);
        rows[i] = row;
        gaps[i] = gap;
    });
    for (const auto& row : rows) t.add_row(row);

    bool monotone = true;
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
        if (gaps[i] < tol) break;  // converged; the floor may wiggle
        if (gaps[i + 1] > gaps[i]) monotone = false;
    }
    t.add_metadata("final_gap", gaps.back());
    if (gaps.back() <= tol && monotone)
        t.pass("gauge spectra agree: final max gap " + fmt(gaps.back()) + " <= " + fmt(tol));
    else
        t.fail("gauge gap " + fmt(gaps.back()) + " (tol " + fmt(tol) +
               (monotone ? ")" : "), non-monotone approach"));
    return t;
}

// ------------------------------------------------------------ trial scans
ResultTable run_trial_scan(const ExperimentConfig& cfg, int default_electrons) {
    const double a_min = cfg.scan.value("a_min", 5.0);
    const double a_max = cfg.scan.value("a_max", 50.0);
    const int a_points = cfg.scan.value("a_points", 10);
    const int n_el = cfg.scan.value("n_electrons", default_electrons);
    const double slope_tol = cfg.scan.value("slope_rel_tol", 1e-8);
    const bool shell_check = cfg.scan.value("shell_check", default_electrons > 1);
    const double shell_tol = cfg.scan.value("shell_rel_tol", 1e-6);

    Eigen::Vector3d kappa = default_kappa(cfg.modes);
    if (cfg.scan.contains("kappa")) {
        const auto kv = cfg.scan["kappa"].get<std::vector<double>>();
        if (kv.size() != 3) throw config_error("scan.kappa: expected three components");
        kappa = Eigen::Vector3d(kv[0], kv[1], kv[2]);
    }

    const PhotonTrialState photon = PhotonTrialState::two_lowest(cfg.modes.size());
    const auto scan = unboundedness_scan(linspace(a_min, a_max, a_points), n_el, kappa, photon,
                                         cfg.modes, cfg.potential, cfg.constants, cfg.include_dip);

    ResultTable t;
    base_metadata(t, cfg);
    t.add_metadata("n_electrons", static_cast<double>(n_el));
    t.add_metadata("kappa", fmt(kappa.x()) + "," + fmt(kappa.y()) + "," + fmt(kappa.z()));
    t.columns = {"a", "kinetic", "photon", "potential", "coulomb", "bilinear", "dip", "total"};
    for (std::size_t i = 0; i < scan.a_values.size(); ++i) {
        const EnergyBreakdown& e = scan.energies[i];
        t.add_row({scan.a_values[i], e.kinetic, e.photon, e.potential, e.coulomb, e.bilinear,
                   e.dip, e.total});
    }
    t.add_metadata("fitted_slope", scan.fitted_slope);
    t.add_metadata("predicted_slope", scan.predicted_slope);

    if (!cfg.include_dip) {
        const double rel = std::abs(scan.fitted_slope - scan.predicted_slope) /
                           std::max(std::abs(scan.predicted_slope), 1e-300);
        t.add_metadata("slope_rel_err", rel);
        if (rel <= slope_tol)
            t.pass("tail slope matches -<p> N sum(lambda.kappa) to " + fmt(rel));
        else
            t.fail("tail slope off by " + fmt(rel) + " (tol " + fmt(slope_tol) + ")");
    } else {
        // with the harmonic confinement the scan must be coercive
        const auto& e = scan.energies;
        const std::size_t arg_min =
            std::min_element(e.begin(), e.end(),
                             [](const auto& l, const auto& r) { return l.total < r.total; }) -
            e.begin();
        const bool coercive = e.back().total > e.front().total && arg_min + 1 < e.size();
        if (coercive)
            t.pass("energy is coercive: minimum at a=" + fmt(scan.a_values[arg_min]) +
                   ", E(a_max) > E(a_min)");
        else
            t.fail("energy not coercive over the scan");
    }

    if (shell_check && n_el > 1) {
        SlaterMollifierConfig sc;
        sc.n_electrons = n_el;
        sc.a = a_min;
        sc.kappa = kappa;
        const double w_exact = coulomb_point_charge(sc, cfg.constants);
        const double w_quad = coulomb_quadrature(sc, cfg.constants, 1e-9);
        const double rel = std::abs(w_quad - w_exact) / std::max(std::abs(w_exact), 1e-300);
        t.add_metadata("coulomb_point_charge", w_exact);
        t.add_metadata("coulomb_quadrature", w_quad);
        if (rel <= shell_tol)
            t.pass("pair energies: quadrature vs point charges agree to " + fmt(rel));
        else
            t.fail("pair energies disagree by " + fmt(rel) + " (tol " + fmt(shell_tol) + ")");
    }
    return t;
}

ResultTable run_unboundedness(const ExperimentConfig& cfg) { return run_trial_scan(cfg, 1); }
ResultTable run_slater(const ExperimentConfig& cfg) { return run_trial_scan(cfg, 3); }

// --------------------------------------------------------- depolarization
ResultTable run_depolarization(const ExperimentConfig& cfg) {
    nlohmann::json triples = cfg.scan.value("triples", nlohmann::json::array());
    if (triples.empty()) {
        for (auto [w, lam, n] : {std::tuple{1.0, 0.1, 1},
                                 {1.0, 0.3, 1},
                                 {0.5, 0.2, 2},
                                 {2.0, 0.4, 3},
                                 {1.5, 0.05, 5}})
            triples.push_back({{"omega", w}, {"lambda", lam}, {"n_electrons", n}});
    }
    const double rel_tol = cfg.scan.value("rel_tol", 1e-12);
    const bool grid_check = cfg.scan.value("grid_check", true);
    const double gap_tol = cfg.scan.value("gap_rel_tol", 1e-3);

    ResultTable t;
    base_metadata(t, cfg);
    t.columns = {"omega", "lambda", "n_electrons", "nu_free", "nu_polariton",
                 "omega_tilde_expected", "rel_err"};
    double worst = 0.0;
    for (const auto& tri : triples) {
        const double w = tri.value("omega", 1.0);
        const double lam = tri.value("lambda", 0.1);
        const int n = tri.value("n_electrons", 1);
        ModeSet ms;
        ms.modes.push_back({w, lam, 1});
        const auto qf = assemble_quadratic(ms, n, true, cfg.constants);
        const auto nm = normal_modes(qf, cfg.constants);
        const double wp2 = n * lam * lam / (cfg.constants.m * cfg.constants.hbar * w);
        const double expected = std::sqrt(w * w + wp2);
        const double nu_hi = nm.frequencies().maxCoeff();
        const double nu_lo = std::abs(nm.nu_squared.minCoeff());
        const double rel = std::abs(nu_hi - expected) / expected;
        worst = std::max({worst, rel, nu_lo});
        t.add_row({w, lam, static_cast<double>(n), nu_lo, nu_hi, expected, rel});
    }
    if (worst <= rel_tol)
        t.pass("normal modes reproduce {0, sqrt(w^2+wp^2)} to " + fmt(worst));
    else
        t.fail("normal-mode frequencies off by " + fmt(worst));

    if (grid_check) {
        GridSpec grid = cfg.grid;
        grid.boundary = Boundary::periodic;
        const FockSpec fock{cfg.fock_n_max[0]};
        const auto gap = depolarization_gap_exact_diag(grid, fock, cfg.modes[0], cfg.constants);
        t.add_metadata("grid_gap", gap.gap);
        t.add_metadata("grid_gap_expected", gap.expected);
        t.add_metadata("grid_gap_rel_err", gap.relative_error);
        if (gap.relative_error <= gap_tol)
            t.pass("exact diagonalization reproduces the polariton gap to " +
                   fmt(gap.relative_error));
        else
            t.fail("polariton gap off by " + fmt(gap.relative_error));
    }
    return t;
}

// ------------------------------------------------------------ maxwell eom
ResultTable run_maxwell(const ExperimentConfig& cfg) {
    const int n_el = cfg.scan.value("n_electrons", 1);
    const double tol = cfg.scan.value("tol", 1e-12);

    ResultTable t;
    base_metadata(t, cfg);
    t.columns = {"include_dip",        "residual_shifted", "residual_displacement",
                 "residual_vecpot",    "current_coeff",    "residual_identity",
                 "plasma_sq_total"};
    MaxwellEomReport with = maxwell_eom_check(cfg.modes, n_el, true, cfg.constants);
    MaxwellEomReport without = maxwell_eom_check(cfg.modes, n_el, false, cfg.constants);
    for (const auto* r : {&with, &without})
        t.add_row({r->include_dip ? 1.0 : 0.0, r->residual_efield_shifted,
                   r->residual_efield_displacement, r->residual_vector_potential,
                   r->derived_current_coefficient, r->residual_displacement_identity,
                   r->plasma_sq_total});

    const double floor = 0.5 * without.plasma_sq_total * without.pfield_coeffs.norm() /
                         cfg.constants.eps0;
    const bool ok = with.residual_efield_shifted <= tol &&
                    without.residual_efield_displacement <= tol &&
                    without.residual_efield_shifted >= floor &&
                    with.residual_displacement_identity <= tol &&
                    without.residual_displacement_identity <= tol &&
                    with.residual_vector_potential <= tol;
    if (ok)
        t.pass("field equations: shifted form holds with the x^2 term (" +
               fmt(with.residual_efield_shifted) + "), displacement form without (" +
               fmt(without.residual_efield_displacement) + ")");
    else
        t.fail("field equation residuals out of tolerance");
    return t;
}

// --------------------------------------------------------- box instability
ResultTable run_box_instability(const ExperimentConfig& cfg) {
    const std::string variant = cfg.scan.value("variant", "coupled");
    const double field = cfg.scan.value("field", 0.05);
    const int doublings = cfg.scan.value("doublings", 3);
    const int k = cfg.scan.value("k", 1);
    const double cauchy_tol = cfg.scan.value("cauchy_tol", 1e-8);
    const double edge_margin = cfg.scan.value("edge_margin", 4.0);

    std::string expect = cfg.scan.value("expect", "");
    if (expect.empty()) {
        if (variant == "coupled")
            expect = cfg.include_dip ? "converged" : "diverging";
        else if (variant == "static-field")
            expect = field != 0.0 ? "diverging" : "converged";
        else
            expect = "converged";
    }

    std::vector<double> lengths;
    double L = cfg.scan.value("L0", cfg.grid.length());
    for (int i = 0; i <= doublings; ++i, L *= 2.0) lengths.push_back(L);

    EigenRequest solver;
    solver.seed = cfg.seed;
    solver.tol = std::min(1e-9, 0.1 * cauchy_tol);

    auto builder = [&](double length) -> std::pair<HermitianOperator, CompositeBasis> {
        GridSpec g = resized_box(cfg.grid, length);
        if (variant == "coupled") {
            CompositeBasis basis = cfg.basis();
            basis.grid = g;
            return {build_length_gauge(basis, cfg.modes, cfg.potential, cfg.constants,
                                       cfg.include_dip)
                        .total,
                    basis};
        }
        CompositeBasis bare{g, {}};
        if (variant == "static-field")
            return {build_standard_semiclassical(g, cfg.potential, cfg.constants, field), bare};
        if (variant == "fixed-displacement")
            return {build_fixed_displacement(g, cfg.potential, cfg.modes,
                                             cfg.constants.eps0 * field, cfg.constants),
                    bare};
        throw config_error("box-instability: unknown variant '" + variant + "'");
    };

    const auto report = box_growth_scan(builder, lengths, k, cauchy_tol, solver);

    ResultTable t;
    base_metadata(t, cfg);
    t.add_metadata("variant", variant);
    t.add_metadata("expect", expect);
    t.columns = {"L", "E0", "centroid", "edge_distance", "decrement"};
    for (std::size_t i = 0; i < report.steps.size(); ++i) {
        const auto& s = report.steps[i];
        t.add_row({s.axis, s.values[0], s.density_centroid, s.edge_distance,
                   i == 0 ? 0.0 : report.decrements[i - 1]});
    }
    t.add_metadata("verdict_raw", to_string(report.verdict));
    t.add_metadata("last_change", report.last_change);

    bool ok = to_string(report.verdict) == expect;
    std::string detail = "ground-energy trend is " + to_string(report.verdict);
    if (ok && expect == "diverging") {
        const double edge = report.steps.back().edge_distance;
        ok = edge <= edge_margin;
        detail += ", density centroid " + fmt(edge) + " bohr from the wall";
    }
    if (ok && expect == "converged")
        detail += ", Cauchy within " + fmt(report.last_change);
    if (ok)
        t.pass(detail);
    else
        t.fail(detail + " (expected " + expect + ")");
    return t;
}

// --------------------------------------------------------------- model zoo
ResultTable run_model_zoo(const ExperimentConfig& cfg) {
    const int n_atoms = cfg.scan.value("n_atoms", 3);
    const double tol = cfg.scan.value("tol", 1e-12);

    const auto red =
        two_level_reduction(electron_grid_hamiltonian(cfg.grid, cfg.potential, cfg.constants),
                            cfg.grid, cfg.modes[0], cfg.constants);

    ResultTable t;
    base_metadata(t, cfg);
    t.columns = {"check", "value", "threshold", "pass"};
    auto check = [&](const std::string& name, double value, double threshold) {
        const bool ok = value <= threshold;
        t.add_row({name, fmt(value), fmt(threshold), ok ? "1" : "0"});
        return ok;
    };

    const FockSpec fock{cfg.fock_n_max[0]};
    const Mode& mode = cfg.modes[0];
    const auto& pc = cfg.constants;

    bool ok = true;
    // constant shift: spectra with and without the confinement offset
    {
        const auto with = lowest_eigenpairs(build_rabi(red, mode, fock, pc, true),
                                            {2 * fock.dim(), 1e-12, 80, cfg.seed});
        const auto without = lowest_eigenpairs(build_rabi(red, mode, fock, pc, false),
                                               {2 * fock.dim(), 1e-12, 80, cfg.seed});
        const double dev =
            (with.values - without.values -
             Eigen::VectorXd::Constant(with.values.size(), red.G))
                .cwiseAbs()
                .maxCoeff();
        ok &= check("rabi_offset_shift", dev, tol);
    }
    // rotating-wave conservation law
    {
        const auto jc = build_jaynes_cummings(red, mode, fock, pc);
        const auto nex = excitation_number(fock, 1);
        const SpMatC comm = jc.matrix() * nex.matrix() - nex.matrix() * jc.matrix();
        ok &= check("jc_excitation_commutator", frobenius_norm(comm), 0.0);
    }
    // spin-1/2 collective model reduces to the two-level one
    {
        const auto jc = build_jaynes_cummings(red, mode, fock, pc);
        const auto dicke1 = build_dicke(red, mode, fock, 1, pc);
        ok &= check("dicke1_equals_jc", exactly_equal(jc.matrix(), dicke1.matrix()) ? 0.0 : 1.0,
                    0.0);
    }
    // collective conservation law
    {
        const auto dicke = build_dicke(red, mode, fock, n_atoms, pc);
        const auto nex = excitation_number(fock, n_atoms);
        const SpMatC comm = dicke.matrix() * nex.matrix() - nex.matrix() * dicke.matrix();
        ok &= check("dicke_excitation_commutator", frobenius_norm(comm), 0.0);
    }
    // weak-coupling ground energy against second-order perturbation theory
    {
        TwoLevelReduction weak = red;
        weak.Omega_R = 1e-3 * mode.omega;
        const auto rabi = build_rabi(weak, mode, fock, pc, false);
        const auto e0 = lowest_eigenpairs(rabi, {1, 1e-13, 80, cfg.seed}).values[0];
        const double hw = pc.hbar * mode.omega;
        const double predicted =
            -0.5 * hw - std::pow(0.5 * pc.hbar * weak.Omega_R, 2) / (2.0 * hw);
        ok &= check("rabi_weak_coupling_pt2", std::abs(e0 - predicted), 1e-10);
    }

    if (ok)
        t.pass("model zoo identities hold (offset shift, conservation laws, spin-1/2 reduction)");
    else
        t.fail("a model identity failed; see the table");
    return t;
}

// -------------------------------------------------------------------- stark
ResultTable run_stark(const ExperimentConfig& cfg) {
    const double field_max = cfg.scan.value("field_max", 2e-3);
    const int field_points = cfg.scan.value("field_points", 9);
    const double pt_tol = cfg.scan.value("pt_rel_tol", 0.01);
    const double cf_tol = cfg.scan.value("closed_form_rel_tol", 1e-6);

    const auto fields = linspace(-field_max, field_max, field_points);
    const auto res = stark_scan(cfg.grid, cfg.potential, cfg.modes, fields, cfg.constants);

    ResultTable t;
    base_metadata(t, cfg);
    t.columns = {"field", "E0", "solved"};
    for (std::size_t i = 0; i < fields.size(); ++i)
        t.add_row({fields[i], res.energies[i], res.solved[i] ? 1.0 : 0.0});
    t.add_metadata("alpha", res.alpha);
    t.add_metadata("alpha_perturbative", res.alpha_perturbative);
    t.add_metadata("rel_agreement", res.relative_agreement);

    if (res.relative_agreement <= pt_tol)
        t.pass("polarizability matches sum-over-states to " + fmt(res.relative_agreement));
    else
        t.fail("polarizability off sum-over-states by " + fmt(res.relative_agreement));

    if (cfg.potential.kind == ExternalPotential::Kind::harmonic) {
        const double kappa = polarization_curvature(cfg.modes, cfg.constants);
        const double om_eff_sq =
            cfg.potential.omega * cfg.potential.omega + kappa / cfg.constants.m;
        const double closed = cfg.constants.e * cfg.constants.e / (cfg.constants.m * om_eff_sq);
        const double rel = std::abs(res.alpha - closed) / closed;
        t.add_metadata("alpha_closed_form", closed);
        if (rel <= cf_tol)
            t.pass("harmonic closed form alpha = e^2/(m w_eff^2) matches to " + fmt(rel));
        else
            t.fail("harmonic closed form off by " + fmt(rel));
    }
    return t;
}

// --------------------------------------------------------- field-energy demo
ResultTable run_field_energy_demo(const ExperimentConfig& cfg) {
    const FockSpec fock{cfg.fock_n_max[0]};
    const auto demo = dipole_field_energy_demo(cfg.modes[0], fock, cfg.constants);
    const double hw = cfg.constants.hbar * cfg.modes[0].omega;

    ResultTable t;
    base_metadata(t, cfg);
    t.columns = {"quantity", "value"};
    t.add_row({std::string("derived_prefactor"), fmt(demo.derived_prefactor)});
    t.add_row({std::string("quoted_prefactor"), fmt(demo.quoted_prefactor)});
    t.add_row({std::string("prefactor_ratio"),
               fmt(demo.quoted_prefactor / demo.derived_prefactor)});
    t.add_row({std::string("vacuum_from_field_squares"), fmt(demo.vacuum_from_field_squares)});
    t.add_row({std::string("vacuum_number_form"), fmt(demo.vacuum_number_form)});
    t.add_row({std::string("vacuum_quoted_form"), fmt(demo.vacuum_quoted_form)});

    // off-diagonal structure: only |dn| = 2 entries allowed
    bool only_two = true, has_two = false;
    for (int kk = 0; kk < demo.from_field_squares.matrix().outerSize(); ++kk)
        for (SpMatC::InnerIterator it(demo.from_field_squares.matrix(), kk); it; ++it) {
            const long d = std::labs(it.row() - it.col());
            if (d == 2) has_two = true;
            if (d != 0 && d != 2) only_two = false;
        }
    if (has_two && only_two)
        t.pass("uniform-field form carries squeezing entries at dn = +-2 only");
    else
        t.fail("unexpected off-diagonal structure in the uniform-field form");

    if (std::abs(demo.vacuum_quoted_form - 0.5 * hw) > 1e-12 * hw)
        t.pass("quoted form vacuum expectation " + fmt(demo.vacuum_quoted_form) +
               " differs from hbar*w/2");
    else
        t.fail("quoted form vacuum expectation equals hbar*w/2");

    if (demo.prefactor_discrepancy)
        t.pass("prefactor discrepancy flagged: derived " + fmt(demo.derived_prefactor) +
               " vs quoted " + fmt(demo.quoted_prefactor) +
               "; derived-form vacuum expectation stays at hbar*w/2");
    else
        t.fail("no prefactor discrepancy detected");
    return t;
}

// -------------------------------------------------------- translation check
ResultTable run_translation_check(const ExperimentConfig& cfg) {
    if (cfg.potential.kind != ExternalPotential::Kind::zero)
        throw config_error("translation-check: requires the zero external potential");
    if (cfg.grid.boundary != Boundary::periodic)
        throw config_error("translation-check: requires a periodic grid");
    const std::vector<int> n_values =
        cfg.scan.value("n_max_values", std::vector<int>{4, 8, 16, 32});
    const int steps = cfg.scan.value("shift_steps", 1);
    const int k = cfg.scan.value("k", 2);

    ResultTable t;
    base_metadata(t, cfg);
    t.add_metadata("shift", steps * cfg.grid.spacing());
    t.columns = {"n_max", "commutator_norm"};

    std::vector<double> norms(n_values.size());
    parallel_for(static_cast<int>(n_values.size()), cfg.jobs, [&](int i) {
        CompositeBasis basis = cfg.basis();
        for (auto& f : basis.focks) f.n_max = n_values[i];
        const auto h =
            build_length_gauge(basis, cfg.modes, cfg.potential, cfg.constants, true).total;
        const SpMatC tr = polaritonic_translation(basis, cfg.modes, cfg.constants,
                                                  steps * cfg.grid.spacing());
        EigenRequest req;
        req.k = k;
        req.tol = 1e-10;
        req.seed = cfg.seed;
        const auto eig = lowest_eigenpairs(h, req);
        double worst = 0.0;
        for (int q = 0; q < k; ++q) {
            const Eigen::VectorXcd v = eig.vectors.col(q);
            worst = std::max(worst,
                             (h.matrix() * (tr * v) - tr * (h.matrix() * v)).norm());
        }
        norms[i] = worst;
    });
    for (std::size_t i = 0; i < n_values.size(); ++i)
        t.add_row({static_cast<double>(n_values[i]), norms[i]});

    bool shrinking = true;
    for (std::size_t i = 0; i + 1 < norms.size(); ++i)
        if (norms[i + 1] >= norms[i]) shrinking = false;
    if (shrinking)
        t.pass("commutator norm on the low eigenspace shrinks with n_max, " + fmt(norms.front()) +
               " -> " + fmt(norms.back()));
    else
        t.fail("commutator norm does not shrink monotonically");
    return t;
}

const std::map<std::string, RunnerFn>& runners() {
    static const std::map<std::string, RunnerFn> map = {
        {"gauge-equivalence", &run_gauge_equivalence},
        {"unboundedness-scan", &run_unboundedness},
        {"slater-scan", &run_slater},
        {"depolarization", &run_depolarization},
        {"maxwell-eom", &run_maxwell},
        {"box-instability", &run_box_instability},
        {"model-zoo", &run_model_zoo},
        {"stark", &run_stark},
        {"field-energy-demo", &run_field_energy_demo},
        {"translation-check", &run_translation_check},
    };
    return map;
}

}  // namespace

ResultTable run_experiment(const ExperimentConfig& cfg) {
    const auto it = runners().find(cfg.experiment);
    if (it == runners().end())
        throw config_error("unknown experiment '" + cfg.experiment + "'");
    return it->second(cfg);
}

std::vector<std::pair<std::string, std::string>> experiment_catalog() {
    return {
        {"gauge-equivalence", "lowest eigenvalues of both gauge forms under Fock doubling"},
        {"unboundedness-scan", "trial-state energy slope without the harmonic x^2 term"},
        {"slater-scan", "the N-electron determinant variant of the trial-state scan"},
        {"depolarization", "normal-mode frequencies and the polariton gap on a ring"},
        {"maxwell-eom", "coefficient-level field equations with and without the x^2 term"},
        {"box-instability", "ground energy and density location under box doubling"},
        {"model-zoo", "two-level model identities: offset, conservation, spin-1/2 reduction"},
        {"stark", "ground energy versus static field; polarizability two ways"},
        {"field-energy-demo", "uniform-field energy expression versus the number form"},
        {"translation-check", "joint matter-photon translation versus truncation"},
    };
}

PhotonGapResult depolarization_gap_exact_diag(const GridSpec& grid, const FockSpec& fock,
                                              const Mode& mode, const PhysicalConstants& pc,
                                              int k, double tol) {
    GridSpec g = grid;
    g.boundary = Boundary::periodic;
    CompositeBasis basis{g, {fock}};
    ModeSet ms;
    ms.modes.push_back(mode);
    const auto h = build_velocity_gauge(basis, ms, ExternalPotential::zero(), pc, false);

    EigenRequest req;
    req.k = k;
    req.tol = tol;
    const auto eig = lowest_eigenpairs(h, req);

    const SpMatC nph = embed_factor(to_sparse_real(fock_number(fock)), 1, basis);
    auto occupation = [&](int i) {
        const Eigen::VectorXcd v = eig.vectors.col(i);
        return (v.adjoint() * (nph * v)).value().real();
    };

    PhotonGapResult out;
    const double wp2 = mode.lambda * mode.lambda / (pc.m * pc.hbar * mode.omega);
    out.expected = std::sqrt(mode.omega * mode.omega + wp2);
    out.n_ph_ground = occupation(0);
    for (int i = 1; i < k; ++i) {
        const double n = occupation(i);
        if (n > out.n_ph_ground + 0.5) {
            out.state_index = i;
            out.n_ph_state = n;
            out.gap = eig.values[i] - eig.values[0];
            break;
        }
    }
    if (out.state_index < 0)
        throw convergence_error(
            "depolarization_gap_exact_diag: no photon-branch state among the lowest " +
            std::to_string(k) + " eigenpairs; increase k");
    out.relative_error = std::abs(out.gap - out.expected) / out.expected;
    return out;
}

}  // namespace cqed
